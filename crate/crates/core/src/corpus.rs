//! Exhaustive corpora of finite spaces and of the continuous maps between them.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::map::{are_homeomorphic, enumerate_continuous_maps, ContinuousMap};
use crate::space::FiniteSpace;

/// Largest point count `enumerate_spaces` accepts.
pub const MAX_CORPUS_POINTS: usize = 5;

/// All topologies on `n` labeled points in canonical order, optionally
/// reduced to the first representative of each homeomorphism class.
pub fn enumerate_spaces(n: usize, up_to_homeo: bool) -> Result<Vec<FiniteSpace>> {
    if n == 0 {
        return Err(Error::InvalidInput("spaces need at least one point".into()));
    }
    if n > MAX_CORPUS_POINTS {
        return Err(Error::BoundExceeded(format!(
            "corpus of {n}-point spaces (max {MAX_CORPUS_POINTS})"
        )));
    }
    let mut minimal = vec![0 as Mask; n];
    let mut out = Vec::new();
    assign_neighbourhoods(n, 0, &mut minimal, &mut out);
    out.sort();
    Ok(if up_to_homeo { homeomorphism_classes(&out) } else { out })
}

/// A finite topology is determined by the minimal neighbourhood `U_x` of
/// each point; the assignment is consistent when `y ∈ U_x ⇒ U_y ⊆ U_x`.
fn assign_neighbourhoods(n: usize, k: usize, minimal: &mut Vec<Mask>, out: &mut Vec<FiniteSpace>) {
    if k == n {
        out.push(FiniteSpace::from_minimal_neighbourhoods(n, minimal));
        return;
    }
    let others = bits::full(n) & !bits::singleton(k);
    for rest in bits::submasks(others) {
        let u = rest | bits::singleton(k);
        let consistent = (0..k).all(|j| {
            (!bits::contains(minimal[j], k) || bits::is_subset(u, minimal[j]))
                && (!bits::contains(u, j) || bits::is_subset(minimal[j], u))
        }) && bits::members(u).filter(|&j| j < k).all(|j| bits::is_subset(minimal[j], u));
        if consistent {
            minimal[k] = u;
            assign_neighbourhoods(n, k + 1, minimal, out);
        }
    }
}

/// First member of each homeomorphism class, in input order.
pub fn homeomorphism_classes(spaces: &[FiniteSpace]) -> Vec<FiniteSpace> {
    let key = |x: &FiniteSpace| {
        let mut sizes: Vec<u32> = x.minimal_neighbourhoods().iter().map(|m| m.count_ones()).collect();
        sizes.sort_unstable();
        (x.len(), x.opens().len(), sizes)
    };
    let mut buckets: HashMap<_, Vec<usize>> = HashMap::new();
    let mut reps: Vec<FiniteSpace> = Vec::new();
    for x in spaces {
        let bucket = buckets.entry(key(x)).or_default();
        if !bucket.iter().any(|&i| are_homeomorphic(&reps[i], x)) {
            bucket.push(reps.len());
            reps.push(x.clone());
        }
    }
    reps
}

/// Spaces of every size `1..=max_points`.
pub fn enumerate_spaces_up_to(max_points: usize, up_to_homeo: bool) -> Result<Vec<FiniteSpace>> {
    let mut out = Vec::new();
    for n in 1..=max_points {
        out.extend(enumerate_spaces(n, up_to_homeo)?);
    }
    Ok(out)
}

/// Largest point count the set-family recount accepts.
pub const MAX_RECOUNT_POINTS: usize = 4;

/// Topologies on `n` labeled points found by testing every family of
/// subsets for the open-set axioms, returned as sorted open lists.
pub fn recount_topologies(n: usize) -> Result<Vec<Vec<Mask>>> {
    if n == 0 || n > MAX_RECOUNT_POINTS {
        return Err(Error::BoundExceeded(format!("set-family recount for {n} points")));
    }
    let full = bits::full(n);
    let middle: Vec<Mask> = (1..full).collect();
    let mut out = Vec::new();
    for choice in 0u64..(1u64 << middle.len()) {
        let mut family = vec![0];
        family.extend(bits::members(choice).map(|i| middle[i]));
        family.push(full);
        let closed = family.iter().all(|&a| {
            family.iter().all(|&b| family.contains(&(a | b)) && family.contains(&(a & b)))
        });
        if closed {
            out.push(family);
        }
    }
    Ok(out)
}

/// Homeomorphism classes among `recount_topologies(n)`, by the least
/// relabelling of each open family.
pub fn recount_classes(n: usize) -> Result<usize> {
    let mut canonical = std::collections::HashSet::new();
    for family in recount_topologies(n)? {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<Mask>> = None;
        loop {
            let mut relabelled: Vec<Mask> = family
                .iter()
                .map(|&o| bits::members(o).fold(0, |acc, x| acc | bits::singleton(perm[x])))
                .collect();
            relabelled.sort_unstable();
            if best.as_ref().is_none_or(|b| relabelled < *b) {
                best = Some(relabelled);
            }
            if !crate::map::next_permutation(&mut perm) {
                break;
            }
        }
        canonical.insert(best.expect("one permutation"));
    }
    Ok(canonical.len())
}

/// A bounded universe of spaces and maps that checks quantify over.
#[derive(Clone, Debug)]
pub struct Corpus {
    descriptor: String,
    spaces: Vec<FiniteSpace>,
    maps: Vec<ContinuousMap>,
}

impl Corpus {
    pub fn new(descriptor: impl Into<String>, spaces: Vec<FiniteSpace>, maps: Vec<ContinuousMap>) -> Self {
        Corpus { descriptor: descriptor.into(), spaces, maps }
    }

    /// Homeomorphism-class representatives (or all labeled spaces) with at
    /// most `max_points` points, plus every continuous map between those
    /// with at most `map_points` points.
    pub fn build(max_points: usize, map_points: usize, up_to_homeo: bool) -> Result<Self> {
        let spaces = enumerate_spaces_up_to(max_points, up_to_homeo)?;
        let small: Vec<&FiniteSpace> = spaces.iter().filter(|x| x.len() <= map_points).collect();
        let maps: Vec<ContinuousMap> = small
            .par_iter()
            .flat_map_iter(|x| small.iter().flat_map(move |y| enumerate_continuous_maps(x, y)))
            .collect();
        let descriptor = format!(
            "spaces n<={max_points} {} ({}), maps between n<={map_points} ({})",
            if up_to_homeo { "up to homeomorphism" } else { "labeled" },
            spaces.len(),
            maps.len()
        );
        Ok(Corpus { descriptor, spaces, maps })
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn spaces(&self) -> &[FiniteSpace] {
        &self.spaces
    }

    pub fn maps(&self) -> &[ContinuousMap] {
        &self.maps
    }

    /// Sub-corpus of spaces (and maps) with at most `max_points` points.
    pub fn restrict(&self, max_points: usize) -> Corpus {
        let spaces: Vec<FiniteSpace> = self.spaces.iter().filter(|x| x.len() <= max_points).cloned().collect();
        let maps: Vec<ContinuousMap> = self
            .maps
            .iter()
            .filter(|f| f.dom().len() <= max_points && f.cod().len() <= max_points)
            .cloned()
            .collect();
        Corpus {
            descriptor: format!("{} restricted to n<={max_points} ({} spaces, {} maps)", self.descriptor, spaces.len(), maps.len()),
            spaces,
            maps,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_spaces(1, false).unwrap().len(), 1);
        assert_eq!(enumerate_spaces(2, false).unwrap().len(), 4);
        assert_eq!(enumerate_spaces(3, false).unwrap().len(), 29);
        assert_eq!(enumerate_spaces(3, true).unwrap().len(), 9);
        assert_eq!(enumerate_spaces(2, true).unwrap().len(), 3);
    }

    #[test]
    fn bounds() {
        assert!(matches!(enumerate_spaces(6, false), Err(Error::BoundExceeded(_))));
        assert!(matches!(enumerate_spaces(0, false), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn canonical_order() {
        let spaces = enumerate_spaces(3, false).unwrap();
        assert!(spaces.windows(2).all(|w| w[0] < w[1]));
        let reps = enumerate_spaces(3, true).unwrap();
        assert_eq!(reps[0], FiniteSpace::discrete(3).unwrap());
        assert_eq!(reps.last(), Some(&FiniteSpace::indiscrete(3).unwrap()));
    }

    #[test]
    fn corpus_restrict() {
        let c = Corpus::build(2, 2, true).unwrap();
        assert_eq!(c.spaces().len(), 4);
        // 1→1:1, 1→X:|X|, X→1:1, plus maps among the three 2-point spaces.
        let r = c.restrict(1);
        assert_eq!(r.spaces().len(), 1);
        assert_eq!(r.maps().len(), 1);
    }
}
