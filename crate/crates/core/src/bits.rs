//! Point-set masks: bit `i` set means point `i` belongs to the set.

pub type Mask = u64;

/// Mask with the first `n` points set.
pub fn full(n: usize) -> Mask {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

pub fn singleton(i: usize) -> Mask {
    1u64 << i
}

pub fn contains(mask: Mask, i: usize) -> bool {
    (mask >> i) & 1 == 1
}

pub fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

/// Indices of the set bits, ascending.
pub fn members(mask: Mask) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

pub fn from_members<I: IntoIterator<Item = usize>>(points: I) -> Mask {
    points.into_iter().fold(0, |m, i| m | singleton(i))
}

pub fn to_vec(mask: Mask) -> Vec<usize> {
    members(mask).collect()
}

/// All submasks of `mask`, ascending.
pub fn submasks(mask: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some(((cur | !mask).wrapping_add(1)) & mask)
        };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submasks_ascending_and_complete() {
        let subs: Vec<_> = submasks(0b1010).collect();
        assert_eq!(subs, vec![0b0000, 0b0010, 0b1000, 0b1010]);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(submasks(full(5)).count(), 32);
    }

    #[test]
    fn members_roundtrip() {
        assert_eq!(to_vec(0b10110), vec![1, 2, 4]);
        assert_eq!(from_members([4, 1, 2]), 0b10110);
        assert_eq!(full(64), u64::MAX);
    }
}
