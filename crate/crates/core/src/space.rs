//! Finite topological spaces and the predicates of stably compact topology.
//!
//! A space on `n` points is stored as its full list of open sets, each a
//! point-set [`Mask`], sorted ascending and deduplicated. Canonical storage
//! makes structural equality coincide with equality of topologies.

use std::sync::Arc;

use serde::Serialize;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};

/// Largest point count accepted by constructors.
pub const MAX_POINTS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteSpace {
    n: usize,
    opens: Arc<[Mask]>,
}

impl FiniteSpace {
    /// Validates a family of opens and stores it canonically.
    pub fn new(n: usize, mut opens: Vec<Mask>) -> Result<Self> {
        check_point_count(n)?;
        let full = bits::full(n);
        if let Some(&bad) = opens.iter().find(|&&o| !bits::is_subset(o, full)) {
            return Err(Error::InvalidInput(format!(
                "open {bad:#b} mentions points outside 0..{n}"
            )));
        }
        opens.sort_unstable();
        opens.dedup();
        if opens.binary_search(&0).is_err() {
            return Err(Error::InvalidInput("opens must contain the empty set".into()));
        }
        if opens.binary_search(&full).is_err() {
            return Err(Error::InvalidInput("opens must contain the whole space".into()));
        }
        for (i, &a) in opens.iter().enumerate() {
            for &b in &opens[i + 1..] {
                if opens.binary_search(&(a | b)).is_err() {
                    return Err(Error::InvalidInput(format!(
                        "opens not closed under union: {a:#b} | {b:#b}"
                    )));
                }
                if opens.binary_search(&(a & b)).is_err() {
                    return Err(Error::InvalidInput(format!(
                        "opens not closed under intersection: {a:#b} & {b:#b}"
                    )));
                }
            }
        }
        Ok(FiniteSpace { n, opens: opens.into() })
    }

    /// Smallest topology on `n` points containing every generator.
    pub fn from_generators(n: usize, generators: &[Mask]) -> Result<Self> {
        check_point_count(n)?;
        let full = bits::full(n);
        if let Some(&bad) = generators.iter().find(|&&g| !bits::is_subset(g, full)) {
            return Err(Error::InvalidInput(format!(
                "generator {bad:#b} mentions points outside 0..{n}"
            )));
        }
        // Minimal neighbourhood of x: intersection of the generators containing x.
        let minimal: Vec<Mask> = (0..n)
            .map(|x| {
                generators
                    .iter()
                    .filter(|&&g| bits::contains(g, x))
                    .fold(full, |acc, &g| acc & g)
            })
            .collect();
        Ok(Self::from_minimal_neighbourhoods(n, &minimal))
    }

    /// Opens are exactly the sets containing the minimal neighbourhood of each
    /// of their points. `minimal[x]` must contain `x` and be consistent.
    pub(crate) fn from_minimal_neighbourhoods(n: usize, minimal: &[Mask]) -> Self {
        let opens: Vec<Mask> = bits::submasks(bits::full(n))
            .filter(|&s| bits::members(s).all(|x| bits::is_subset(minimal[x], s)))
            .collect();
        FiniteSpace { n, opens: opens.into() }
    }

    pub fn discrete(n: usize) -> Result<Self> {
        let gens: Vec<Mask> = (0..n).map(bits::singleton).collect();
        Self::from_generators(n, &gens)
    }

    pub fn indiscrete(n: usize) -> Result<Self> {
        Self::from_generators(n, &[])
    }

    pub fn point() -> Self {
        Self::indiscrete(1).expect("one point space")
    }

    /// Two points with opens ∅, {1}, {0,1}.
    pub fn sierpinski() -> Self {
        Self::from_generators(2, &[0b10]).expect("sierpinski space")
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn full(&self) -> Mask {
        bits::full(self.n)
    }

    pub fn opens(&self) -> &[Mask] {
        &self.opens
    }

    pub fn is_open(&self, mask: Mask) -> bool {
        self.opens.binary_search(&mask).is_ok()
    }

    pub fn is_closed(&self, mask: Mask) -> bool {
        bits::is_subset(mask, self.full()) && self.is_open(self.full() & !mask)
    }

    /// Closed sets, ascending by mask.
    pub fn closeds(&self) -> Vec<Mask> {
        let full = self.full();
        let mut c: Vec<Mask> = self.opens.iter().map(|&o| full & !o).collect();
        c.sort_unstable();
        c
    }

    /// Intersection of all opens containing `x`.
    pub fn minimal_neighbourhood(&self, x: usize) -> Mask {
        self.opens
            .iter()
            .filter(|&&o| bits::contains(o, x))
            .fold(self.full(), |acc, &o| acc & o)
    }

    pub fn minimal_neighbourhoods(&self) -> Vec<Mask> {
        (0..self.n).map(|x| self.minimal_neighbourhood(x)).collect()
    }

    pub fn closure(&self, a: Mask) -> Mask {
        let full = self.full();
        self.opens
            .iter()
            .map(|&o| full & !o)
            .filter(|&c| bits::is_subset(a, c))
            .fold(full, |acc, c| acc & c)
    }

    pub fn interior(&self, a: Mask) -> Mask {
        self.opens
            .iter()
            .filter(|&&o| bits::is_subset(o, a))
            .fold(0, |acc, &o| acc | o)
    }

    /// Intersection of the opens containing `a`.
    pub fn saturation(&self, a: Mask) -> Mask {
        self.opens
            .iter()
            .filter(|&&o| bits::is_subset(a, o))
            .fold(self.full(), |acc, &o| acc & o)
    }

    pub fn is_saturated(&self, a: Mask) -> bool {
        self.saturation(a) == a
    }

    /// Every family of opens covering `by` has a finite subfamily covering
    /// `covered`.
    ///
    /// Restricting the quantifier to families of at most `|by|` opens that meet
    /// `by` loses nothing: every cover contains such a subcover, and a finite
    /// subfamily of the subcover is a finite subfamily of the cover.
    pub fn finitely_covers(&self, covered: Mask, by: Mask) -> bool {
        let candidates: Vec<Mask> = self.opens.iter().copied().filter(|&o| o & by != 0).collect();
        let max_size = by.count_ones() as usize;
        let mut chosen = Vec::with_capacity(max_size);
        every_cover(&candidates, 0, &mut chosen, max_size, by, &mut |family| {
            has_finite_subcover(family, covered)
        })
    }

    /// Relative compactness `O ≪ U` of opens, evaluated by definition.
    pub fn way_below_open(&self, o: Mask, u: Mask) -> Result<bool> {
        for m in [o, u] {
            if !self.is_open(m) {
                return Err(Error::NotOpen { mask: m });
            }
        }
        Ok(self.finitely_covers(o, u))
    }

    /// The finite-space shortcut `O ≪ U ⇔ O ⊆ U`.
    pub fn way_below_open_shortcut(&self, o: Mask, u: Mask) -> Result<bool> {
        for m in [o, u] {
            if !self.is_open(m) {
                return Err(Error::NotOpen { mask: m });
            }
        }
        Ok(bits::is_subset(o, u))
    }

    pub fn is_compact(&self, a: Mask) -> bool {
        self.finitely_covers(a, a)
    }

    /// Subsets that are both compact and saturated, ascending.
    pub fn compact_saturated_sets(&self) -> Vec<Mask> {
        bits::submasks(self.full())
            .filter(|&a| self.is_saturated(a) && self.is_compact(a))
            .collect()
    }

    pub fn specialization(&self) -> PreorderMatrix {
        let minimal = self.minimal_neighbourhoods();
        let n = self.n;
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                // x ∈ cl{y} iff every open containing x contains y.
                leq[x * n + y] = bits::contains(minimal[x], y);
            }
        }
        PreorderMatrix { n, leq }
    }

    pub fn is_t0(&self) -> bool {
        let minimal = self.minimal_neighbourhoods();
        (0..self.n).all(|x| (x + 1..self.n).all(|y| minimal[x] != minimal[y]))
    }

    pub fn is_hausdorff(&self) -> bool {
        let minimal = self.minimal_neighbourhoods();
        (0..self.n).all(|x| (x + 1..self.n).all(|y| minimal[x] & minimal[y] == 0))
    }

    /// Nonempty closed sets `G` with `G ⊆ F₁ ∪ F₂ ⇒ G ⊆ F₁ or G ⊆ F₂`.
    pub fn irreducible_closed_sets(&self) -> Vec<Mask> {
        let closeds = self.closeds();
        closeds
            .iter()
            .copied()
            .filter(|&g| g != 0)
            .filter(|&g| {
                closeds.iter().all(|&f1| {
                    closeds.iter().all(|&f2| {
                        !bits::is_subset(g, f1 | f2)
                            || bits::is_subset(g, f1)
                            || bits::is_subset(g, f2)
                    })
                })
            })
            .collect()
    }

    /// Whether every irreducible closed set is a point closure, and whether
    /// each such point is unique.
    fn sobriety(&self) -> (bool, bool) {
        let closures: Vec<Mask> = (0..self.n).map(|x| self.closure(bits::singleton(x))).collect();
        let mut weak = true;
        let mut unique = true;
        for g in self.irreducible_closed_sets() {
            match closures.iter().filter(|&&c| c == g).count() {
                0 => weak = false,
                1 => {}
                _ => unique = false,
            }
        }
        (weak, weak && unique)
    }

    pub fn is_weakly_sober(&self) -> bool {
        self.sobriety().0
    }

    pub fn is_sober(&self) -> bool {
        self.sobriety().1
    }

    /// `≪` on opens, indexed by position in [`FiniteSpace::opens`].
    fn way_below_table(&self) -> Vec<Vec<bool>> {
        self.opens
            .iter()
            .map(|&o| self.opens.iter().map(|&u| self.finitely_covers(o, u)).collect())
            .collect()
    }

    fn open_index(&self, mask: Mask) -> usize {
        self.opens.binary_search(&mask).expect("open set")
    }

    /// `X ≪ X`, and `O ≪ U`, `W ≪ V` imply `O ∩ W ≪ U ∩ V`.
    pub fn is_stable(&self) -> bool {
        let table = self.way_below_table();
        let top = self.open_index(self.full());
        if !table[top][top] {
            return false;
        }
        let pairs: Vec<(Mask, Mask)> = self
            .opens
            .iter()
            .enumerate()
            .flat_map(|(i, &o)| {
                let table = &table;
                self.opens
                    .iter()
                    .enumerate()
                    .filter(move |&(j, _)| table[i][j])
                    .map(move |(_, &u)| (o, u))
            })
            .collect();
        pairs.iter().all(|&(o, u)| {
            pairs.iter().all(|&(w, v)| {
                table[self.open_index(o & w)][self.open_index(u & v)]
            })
        })
    }

    /// Compact neighbourhoods form a base at every point.
    pub fn is_locally_compact(&self) -> bool {
        (0..self.n).all(|x| {
            self.opens.iter().filter(|&&u| bits::contains(u, x)).all(|&u| {
                bits::submasks(u).any(|k| {
                    bits::contains(k, x)
                        && bits::contains(self.interior(k), x)
                        && self.is_compact(k)
                })
            })
        })
    }

    pub fn classify(&self) -> Classification {
        let (is_weakly_sober, is_sober) = self.sobriety();
        let is_t0 = self.is_t0();
        let is_stable = self.is_stable();
        let is_locally_compact = self.is_locally_compact();
        let is_salbany = is_locally_compact && is_stable && is_weakly_sober;
        Classification {
            is_t0,
            is_weakly_sober,
            is_sober,
            is_stable,
            is_locally_compact,
            is_salbany,
            is_stably_compact: is_t0 && is_salbany,
            is_hausdorff: self.is_hausdorff(),
            irreducible_closed_sets: self.irreducible_closed_sets(),
        }
    }

    pub fn is_stably_compact(&self) -> bool {
        self.is_t0() && self.is_weakly_sober() && self.is_stable() && self.is_locally_compact()
    }

    /// Join of the topology with the one having the compact saturated sets
    /// as (sub)basic closed sets.
    pub fn patch_topology(&self) -> FiniteSpace {
        let full = self.full();
        let mut generators: Vec<Mask> = self.opens.to_vec();
        generators.extend(self.compact_saturated_sets().into_iter().map(|k| full & !k));
        Self::from_generators(self.n, &generators).expect("patch of a valid space")
    }
}

fn check_point_count(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("a space needs at least one point".into()));
    }
    if n > MAX_POINTS {
        return Err(Error::BoundExceeded(format!("{n} points (max {MAX_POINTS})")));
    }
    Ok(())
}

/// Calls `check` on every family of at most `max_size` candidates whose union
/// contains `target`; true when every call returns true.
fn every_cover(
    candidates: &[Mask],
    start: usize,
    chosen: &mut Vec<Mask>,
    max_size: usize,
    target: Mask,
    check: &mut impl FnMut(&[Mask]) -> bool,
) -> bool {
    let union = chosen.iter().fold(0, |acc, &m| acc | m);
    if bits::is_subset(target, union) && !check(chosen) {
        return false;
    }
    if chosen.len() == max_size {
        return true;
    }
    for i in start..candidates.len() {
        chosen.push(candidates[i]);
        let ok = every_cover(candidates, i + 1, chosen, max_size, target, check);
        chosen.pop();
        if !ok {
            return false;
        }
    }
    true
}

fn has_finite_subcover(family: &[Mask], covered: Mask) -> bool {
    let k = family.len();
    (0u64..1 << k).any(|pick| {
        let union = bits::members(pick).fold(0, |acc, i| acc | family[i]);
        bits::is_subset(covered, union)
    })
}

/// Specialization preorder: `le(x, y)` iff `x ∈ cl{y}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreorderMatrix {
    n: usize,
    leq: Vec<bool>,
}

impl PreorderMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|x| self.le(x, x))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| !self.le(x, y) || (0..n).all(|z| !self.le(y, z) || self.le(x, z)))
        })
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| x == y || !(self.le(x, y) && self.le(y, x))))
    }

    /// Pairs `(x, y)` with `x < y` strictly and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let lt = |a: usize, b: usize| self.le(a, b) && !self.le(b, a);
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if lt(x, y) && !(0..n).any(|z| lt(x, z) && lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// Result of [`FiniteSpace::classify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_t0: bool,
    pub is_weakly_sober: bool,
    pub is_sober: bool,
    pub is_stable: bool,
    pub is_locally_compact: bool,
    pub is_salbany: bool,
    pub is_stably_compact: bool,
    pub is_hausdorff: bool,
    pub irreducible_closed_sets: Vec<Mask>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e1() -> FiniteSpace {
        FiniteSpace::from_generators(3, &[0b001]).unwrap()
    }

    #[test]
    fn build_space_examples() {
        assert_eq!(e1().opens(), &[0b000, 0b001, 0b111]);
        assert_eq!(FiniteSpace::indiscrete(2).unwrap().opens(), &[0, 0b11]);
        assert_eq!(FiniteSpace::discrete(2).unwrap().opens().len(), 4);
        assert!(matches!(FiniteSpace::from_generators(0, &[]), Err(Error::InvalidInput(_))));
        assert!(matches!(FiniteSpace::from_generators(2, &[0b100]), Err(Error::InvalidInput(_))));
        assert!(matches!(FiniteSpace::indiscrete(MAX_POINTS + 1), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn new_rejects_non_topologies() {
        assert!(FiniteSpace::new(2, vec![0, 0b01, 0b10, 0b11]).is_ok());
        assert!(FiniteSpace::new(2, vec![0b01, 0b11]).is_err());
        assert!(FiniteSpace::new(2, vec![0, 0b01]).is_err());
        assert!(FiniteSpace::new(3, vec![0, 0b011, 0b110, 0b111]).is_err());
    }

    #[test]
    fn specialization_examples() {
        let s = FiniteSpace::sierpinski().specialization();
        assert!(s.le(0, 1));
        assert!(!s.le(1, 0));

        let e = e1().specialization();
        assert!(e.le(1, 0) && e.le(2, 0));
        assert!(e.le(1, 2) && e.le(2, 1));
        assert!(!e.le(0, 1));

        let d = FiniteSpace::discrete(3).unwrap().specialization();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(d.le(x, y), x == y);
            }
        }
    }

    #[test]
    fn classify_salbany_example() {
        let c = e1().classify();
        assert!(c.is_stable && c.is_locally_compact && c.is_weakly_sober && c.is_salbany);
        assert!(!c.is_t0 && !c.is_sober && !c.is_stably_compact);
        assert_eq!(c.irreducible_closed_sets, vec![0b110, 0b111]);
    }

    #[test]
    fn sierpinski_is_stably_compact() {
        let c = FiniteSpace::sierpinski().classify();
        assert!(c.is_t0 && c.is_salbany && c.is_stably_compact && c.is_sober);
        assert!(!c.is_hausdorff);
    }

    #[test]
    fn way_below_examples() {
        let x = e1();
        assert!(x.way_below_open(0, 0b001).unwrap());
        assert!(x.way_below_open(0b001, 0b111).unwrap());
        assert!(!x.way_below_open(0b111, 0b001).unwrap());
        assert_eq!(x.way_below_open(0b010, 0b111), Err(Error::NotOpen { mask: 0b010 }));
    }

    #[test]
    fn patch_examples() {
        let d2 = FiniteSpace::discrete(2).unwrap();
        assert_eq!(FiniteSpace::sierpinski().patch_topology(), d2);
        assert_eq!(d2.patch_topology(), d2);
        // Not stably compact: patch stays non-Hausdorff.
        assert!(!e1().patch_topology().is_hausdorff());
    }

    #[test]
    fn closure_and_saturation() {
        let x = e1();
        assert_eq!(x.closure(0b010), 0b110);
        assert_eq!(x.closure(0b001), 0b111);
        assert_eq!(x.saturation(0b010), 0b111);
        assert_eq!(x.interior(0b011), 0b001);
        assert_eq!(x.closeds(), vec![0b000, 0b110, 0b111]);
    }
}
