//! Continuous maps between finite spaces.

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::space::FiniteSpace;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ContinuousMap {
    dom: FiniteSpace,
    cod: FiniteSpace,
    map: Vec<usize>,
}

impl ContinuousMap {
    /// Checks that `map` is a function `dom → cod` and that the preimage of
    /// every open of `cod` is open in `dom`.
    pub fn new(dom: FiniteSpace, cod: FiniteSpace, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.len() {
            return Err(Error::InvalidInput(format!(
                "map has {} entries, domain has {} points",
                map.len(),
                dom.len()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= cod.len()) {
            return Err(Error::InvalidInput(format!(
                "map value {bad} out of range for a {}-point codomain",
                cod.len()
            )));
        }
        for &open in cod.opens() {
            let preimage = preimage_of(&map, open);
            if !dom.is_open(preimage) {
                return Err(Error::NotContinuous { open, preimage });
            }
        }
        Ok(ContinuousMap { dom, cod, map })
    }

    /// Used by fault injection, which deliberately produces non-continuous
    /// or non-lawful components.
    pub(crate) fn new_unchecked(dom: FiniteSpace, cod: FiniteSpace, map: Vec<usize>) -> Self {
        debug_assert_eq!(map.len(), dom.len());
        ContinuousMap { dom, cod, map }
    }

    pub fn identity(space: &FiniteSpace) -> Self {
        ContinuousMap {
            dom: space.clone(),
            cod: space.clone(),
            map: (0..space.len()).collect(),
        }
    }

    pub fn constant(dom: &FiniteSpace, cod: &FiniteSpace, value: usize) -> Result<Self> {
        Self::new(dom.clone(), cod.clone(), vec![value; dom.len()])
    }

    pub fn dom(&self) -> &FiniteSpace {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteSpace {
        &self.cod
    }

    pub fn values(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self` followed by `next`, i.e. `next ∘ self`.
    pub fn then(&self, next: &ContinuousMap) -> Result<ContinuousMap> {
        if self.cod != next.dom {
            return Err(Error::DomainMismatch);
        }
        Ok(ContinuousMap {
            dom: self.dom.clone(),
            cod: next.cod.clone(),
            map: self.map.iter().map(|&y| next.map[y]).collect(),
        })
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ContinuousMap) -> Result<ContinuousMap> {
        first.then(self)
    }

    pub fn preimage(&self, b: Mask) -> Mask {
        preimage_of(&self.map, b)
    }

    pub fn image(&self, a: Mask) -> Mask {
        bits::members(a).fold(0, |acc, x| acc | bits::singleton(self.map[x]))
    }

    pub fn is_injective(&self) -> bool {
        let mut seen: Mask = 0;
        for &y in &self.map {
            if bits::contains(seen, y) {
                return false;
            }
            seen |= bits::singleton(y);
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.dom.full()) == self.cod.full()
    }

    /// Bijective, continuous and open.
    pub fn is_homeomorphism(&self) -> bool {
        self.is_injective()
            && self.is_surjective()
            && self.dom.opens().iter().all(|&o| self.cod.is_open(self.image(o)))
    }

    /// Two-sided inverse of a homeomorphism.
    pub fn inverse(&self) -> Option<ContinuousMap> {
        if !self.is_homeomorphism() {
            return None;
        }
        let mut inv = vec![0; self.cod.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        ContinuousMap::new(self.cod.clone(), self.dom.clone(), inv).ok()
    }

    /// Injective and initial: every open of the domain is a preimage of an
    /// open of the codomain.
    pub fn is_embedding(&self) -> bool {
        self.is_injective()
            && self
                .dom
                .opens()
                .iter()
                .all(|&o| self.cod.opens().iter().any(|&u| self.preimage(u) == o))
    }

    /// Preimages of compact saturated sets of the codomain are compact.
    pub fn is_proper(&self) -> bool {
        self.cod
            .compact_saturated_sets()
            .into_iter()
            .all(|k| self.dom.is_compact(self.preimage(k)))
    }
}

fn preimage_of(map: &[usize], b: Mask) -> Mask {
    map.iter()
        .enumerate()
        .filter(|&(_, &y)| bits::contains(b, y))
        .fold(0, |acc, (x, _)| acc | bits::singleton(x))
}

/// Continuity of a raw function `dom → cod`, tested on the minimal
/// neighbourhoods of `cod`; they generate every open under union and
/// preimages commute with unions.
pub(crate) fn is_continuous_raw(dom: &FiniteSpace, minimal_cod: &[Mask], map: &[usize]) -> bool {
    minimal_cod.iter().all(|&u| dom.is_open(preimage_of(map, u)))
}

/// Every continuous function `dom → cod` whose value at `x` equals
/// `fixed[x]` wherever that is `Some`, in lexicographic order of the value
/// array. `visit` returns false to stop early.
pub(crate) fn for_each_continuous(
    dom: &FiniteSpace,
    cod: &FiniteSpace,
    fixed: &[Option<usize>],
    mut visit: impl FnMut(&[usize]) -> bool,
) {
    let n = dom.len();
    let m = cod.len();
    debug_assert_eq!(fixed.len(), n);
    let minimal = cod.minimal_neighbourhoods();
    let mut values: Vec<usize> = fixed.iter().map(|f| f.unwrap_or(0)).collect();
    if fixed.iter().any(|f| matches!(f, Some(v) if *v >= m)) {
        return;
    }
    loop {
        if is_continuous_raw(dom, &minimal, &values) && !visit(&values) {
            return;
        }
        // Odometer with position 0 most significant, skipping fixed slots.
        let mut pos = n;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if fixed[pos].is_some() {
                continue;
            }
            if values[pos] + 1 < m {
                values[pos] += 1;
                break;
            }
            values[pos] = 0;
        }
    }
}

/// All continuous maps `dom → cod`, lexicographic in the value array.
pub fn enumerate_continuous_maps(dom: &FiniteSpace, cod: &FiniteSpace) -> Vec<ContinuousMap> {
    let mut out = Vec::new();
    for_each_continuous(dom, cod, &vec![None; dom.len()], |values| {
        out.push(ContinuousMap::new_unchecked(dom.clone(), cod.clone(), values.to_vec()));
        true
    });
    out
}

/// First homeomorphism `x → y` in lexicographic order of the bijection.
pub fn find_homeomorphism(x: &FiniteSpace, y: &FiniteSpace) -> Option<ContinuousMap> {
    if x.len() != y.len() || x.opens().len() != y.opens().len() {
        return None;
    }
    let mut perm: Vec<usize> = (0..x.len()).collect();
    loop {
        if x.opens().iter().all(|&o| y.is_open(image_of(&perm, o)))
            && y.opens().iter().all(|&u| x.is_open(preimage_of(&perm, u)))
        {
            return Some(ContinuousMap::new_unchecked(x.clone(), y.clone(), perm));
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

pub fn are_homeomorphic(x: &FiniteSpace, y: &FiniteSpace) -> bool {
    find_homeomorphism(x, y).is_some()
}

fn image_of(map: &[usize], a: Mask) -> Mask {
    bits::members(a).fold(0, |acc, x| acc | bits::singleton(map[x]))
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e1() -> FiniteSpace {
        FiniteSpace::from_generators(3, &[0b001]).unwrap()
    }

    #[test]
    fn rejects_discontinuous_maps() {
        let s = FiniteSpace::sierpinski();
        // Swapping the two points pulls {1} back to {0}, not open.
        let err = ContinuousMap::new(s.clone(), s.clone(), vec![1, 0]).unwrap_err();
        assert_eq!(err, Error::NotContinuous { open: 0b10, preimage: 0b01 });
        assert!(ContinuousMap::new(s.clone(), s.clone(), vec![0]).is_err());
        assert!(ContinuousMap::new(s.clone(), s, vec![0, 2]).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let s = FiniteSpace::sierpinski();
        let maps = enumerate_continuous_maps(&s, &s);
        let values: Vec<_> = maps.iter().map(|m| m.values().to_vec()).collect();
        assert_eq!(values, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(enumerate_continuous_maps(&e1(), &FiniteSpace::point()).len(), 1);
        assert_eq!(enumerate_continuous_maps(&FiniteSpace::point(), &e1()).len(), 3);
    }

    #[test]
    fn homeomorphism_search() {
        let x = e1();
        assert_eq!(find_homeomorphism(&x, &x), Some(ContinuousMap::identity(&x)));
        assert_eq!(find_homeomorphism(&x, &FiniteSpace::sierpinski()), None);
        let relabeled = FiniteSpace::from_generators(3, &[0b100]).unwrap();
        let h = find_homeomorphism(&x, &relabeled).unwrap();
        assert_eq!(h.values(), &[2, 0, 1]);
        assert!(h.is_homeomorphism());
    }

    #[test]
    fn identity_is_proper_and_embedding() {
        let x = e1();
        let id = ContinuousMap::identity(&x);
        assert!(id.is_proper() && id.is_embedding() && id.is_homeomorphism());
    }

    #[test]
    fn compose_checks_domains() {
        let s = FiniteSpace::sierpinski();
        let id = ContinuousMap::identity(&s);
        assert_eq!(id.then(&ContinuousMap::identity(&e1())), Err(Error::DomainMismatch));
        assert_eq!(id.then(&id).unwrap(), id);
    }
}
