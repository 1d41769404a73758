//! Filter-space monads: ultrafilters `𝔘`, prime open filters `Σ` and prime
//! closed filters `𝔓`.
//!
//! A filter lives in an ambient lattice of point sets (all subsets, the
//! opens, or the closed sets). Lifted spaces list their filters ascending by
//! generator mask, so every construction here is deterministic.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::map::ContinuousMap;
use crate::space::FiniteSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FilterKind {
    Ultra,
    OpenPrime,
    ClosedPrime,
}

impl FilterKind {
    pub const ALL: [FilterKind; 3] = [FilterKind::Ultra, FilterKind::OpenPrime, FilterKind::ClosedPrime];

    /// Short name used on the command line.
    pub fn monad_name(self) -> &'static str {
        match self {
            FilterKind::Ultra => "ultra",
            FilterKind::OpenPrime => "sigma",
            FilterKind::ClosedPrime => "pcf",
        }
    }

    /// The point sets a filter of this kind is drawn from, ascending.
    pub fn ambient_lattice(self, x: &FiniteSpace) -> Vec<Mask> {
        match self {
            FilterKind::Ultra => bits::submasks(x.full()).collect(),
            FilterKind::OpenPrime => x.opens().to_vec(),
            FilterKind::ClosedPrime => x.closeds(),
        }
    }
}

impl fmt::Display for FilterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.monad_name())
    }
}

impl FromStr for FilterKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ultra" => Ok(FilterKind::Ultra),
            "sigma" | "open-prime" => Ok(FilterKind::OpenPrime),
            "pcf" | "closed-prime" => Ok(FilterKind::ClosedPrime),
            other => Err(Error::InvalidInput(format!("unknown monad `{other}`"))),
        }
    }
}

/// A proper filter of the ambient lattice, stored both as its element set
/// and its principal generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FilterPoint {
    kind: FilterKind,
    elements: Vec<Mask>,
    generator: Mask,
}

impl FilterPoint {
    /// Validates every filter invariant for `kind` against `lattice`.
    pub fn from_elements(kind: FilterKind, lattice: &[Mask], mut elements: Vec<Mask>) -> Result<Self> {
        let bad = |msg: String| Err(Error::FilterNotWellFormed(msg));
        elements.sort_unstable();
        elements.dedup();
        let has = |a: Mask| elements.binary_search(&a).is_ok();
        let top = *lattice.last().expect("nonempty lattice");
        if let Some(&e) = elements.iter().find(|&&e| lattice.binary_search(&e).is_err()) {
            return bad(format!("{e:#b} is not in the ambient lattice"));
        }
        if has(0) {
            return bad("contains the empty set".into());
        }
        if !has(top) {
            return bad("does not contain the whole space".into());
        }
        for &e in &elements {
            if let Some(&l) = lattice.iter().find(|&&l| bits::is_subset(e, l) && !has(l)) {
                return bad(format!("not upward closed: {e:#b} in, {l:#b} out"));
            }
            if let Some(&f) = elements.iter().find(|&&f| !has(e & f)) {
                return bad(format!("not closed under meets: {e:#b} & {f:#b}"));
            }
        }
        match kind {
            FilterKind::Ultra => {
                if let Some(&a) = lattice.iter().find(|&&a| has(a) == has(top & !a)) {
                    return bad(format!("not ultra at {a:#b}"));
                }
            }
            FilterKind::OpenPrime | FilterKind::ClosedPrime => {
                for &a in lattice {
                    for &b in lattice {
                        if has(a | b) && !has(a) && !has(b) {
                            return bad(format!("not prime: {a:#b} | {b:#b}"));
                        }
                    }
                }
            }
        }
        let generator = elements.iter().fold(top, |acc, &e| acc & e);
        let up: Vec<Mask> = lattice.iter().copied().filter(|&l| bits::is_subset(generator, l)).collect();
        if up != elements {
            return bad(format!("elements differ from the up-set of {generator:#b}"));
        }
        Ok(FilterPoint { kind, elements, generator })
    }

    pub fn kind(&self) -> FilterKind {
        self.kind
    }

    pub fn elements(&self) -> &[Mask] {
        &self.elements
    }

    pub fn generator(&self) -> Mask {
        self.generator
    }

    pub fn contains(&self, a: Mask) -> bool {
        self.elements.binary_search(&a).is_ok()
    }
}

/// All filters of `kind` on `x`.
///
/// Every filter of a finite lattice contains the meet of its members, so
/// the up-sets of lattice elements exhaust the candidates; each one is then
/// tested against the full set of filter invariants.
pub fn enumerate_filters(kind: FilterKind, x: &FiniteSpace) -> Vec<FilterPoint> {
    let lattice = kind.ambient_lattice(x);
    lattice
        .iter()
        .filter_map(|&g| {
            let up: Vec<Mask> = lattice.iter().copied().filter(|&l| bits::is_subset(g, l)).collect();
            FilterPoint::from_elements(kind, &lattice, up).ok()
        })
        .collect()
}

/// `𝔘X`, `ΣX` or `𝔓X` together with the filter behind each point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedSpace {
    base: FiniteSpace,
    kind: FilterKind,
    lattice: Vec<Mask>,
    points: Vec<FilterPoint>,
    space: FiniteSpace,
}

impl LiftedSpace {
    pub fn base(&self) -> &FiniteSpace {
        &self.base
    }

    pub fn kind(&self) -> FilterKind {
        self.kind
    }

    pub fn points(&self) -> &[FilterPoint] {
        &self.points
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn lattice(&self) -> &[Mask] {
        &self.lattice
    }

    /// `A^⋆`: the points whose filter contains `a`.
    pub fn star(&self, a: Mask) -> Mask {
        self.points
            .iter()
            .enumerate()
            .filter(|(_, p)| p.contains(a))
            .fold(0, |acc, (i, _)| acc | bits::singleton(i))
    }

    /// Index of the point carrying `elements`, after validating them.
    pub fn locate(&self, elements: Vec<Mask>) -> Result<usize> {
        let filter = FilterPoint::from_elements(self.kind, &self.lattice, elements)?;
        self.points
            .binary_search_by_key(&filter.generator, |p| p.generator)
            .map_err(|_| {
                Error::FilterNotWellFormed(format!(
                    "filter generated by {:#b} is not a point of the lifted space",
                    filter.generator
                ))
            })
    }
}

pub fn lift_space(kind: FilterKind, x: &FiniteSpace) -> Result<LiftedSpace> {
    let lattice = kind.ambient_lattice(x);
    let points = enumerate_filters(kind, x);
    let mut lifted = LiftedSpace {
        base: x.clone(),
        kind,
        lattice,
        points,
        space: FiniteSpace::point(),
    };
    let n = lifted.points.len();
    let full = bits::full(n);
    let generators: Vec<Mask> = match kind {
        FilterKind::Ultra | FilterKind::OpenPrime => {
            x.opens().iter().map(|&o| lifted.star(o)).collect()
        }
        // Basic closed sets H^×; the topology is the one they generate as
        // closed sets.
        FilterKind::ClosedPrime => x.closeds().iter().map(|&h| full & !lifted.star(h)).collect(),
    };
    lifted.space = FiniteSpace::from_generators(n, &generators)?;
    Ok(lifted)
}

/// Functor action between already-lifted spaces: `F ↦ {B : f⁻¹(B) ∈ F}`.
pub fn lift_map_between(lx: &LiftedSpace, ly: &LiftedSpace, f: &ContinuousMap) -> Result<ContinuousMap> {
    if lx.base() != f.dom() || ly.base() != f.cod() || lx.kind != ly.kind {
        return Err(Error::DomainMismatch);
    }
    let values = lx
        .points
        .iter()
        .map(|p| {
            let image: Vec<Mask> = ly.lattice.iter().copied().filter(|&b| p.contains(f.preimage(b))).collect();
            ly.locate(image)
        })
        .collect::<Result<Vec<_>>>()?;
    ContinuousMap::new(lx.space.clone(), ly.space.clone(), values)
}

pub fn lift_map(kind: FilterKind, f: &ContinuousMap) -> Result<ContinuousMap> {
    lift_map_between(&lift_space(kind, f.dom())?, &lift_space(kind, f.cod())?, f)
}

/// `x ↦ {A : x ∈ A}`.
pub fn unit_into(lx: &LiftedSpace) -> Result<ContinuousMap> {
    let values = (0..lx.base.len())
        .map(|x| {
            let elements: Vec<Mask> = lx.lattice.iter().copied().filter(|&a| bits::contains(a, x)).collect();
            lx.locate(elements)
        })
        .collect::<Result<Vec<_>>>()?;
    ContinuousMap::new(lx.base.clone(), lx.space.clone(), values)
}

pub fn unit(kind: FilterKind, x: &FiniteSpace) -> Result<ContinuousMap> {
    unit_into(&lift_space(kind, x)?)
}

/// `𝔛 ↦ {A : A^⋆ ∈ 𝔛}` from the double lift to the single lift. For closed
/// prime filters the empty set is excluded explicitly.
pub fn mult_between(lx: &LiftedSpace, llx: &LiftedSpace) -> Result<ContinuousMap> {
    if llx.base() != lx.space() || llx.kind != lx.kind {
        return Err(Error::DomainMismatch);
    }
    let values = llx
        .points
        .iter()
        .map(|outer| {
            let elements: Vec<Mask> = lx
                .lattice
                .iter()
                .copied()
                .filter(|&a| !(lx.kind == FilterKind::ClosedPrime && a == 0))
                .filter(|&a| outer.contains(lx.star(a)))
                .collect();
            lx.locate(elements)
        })
        .collect::<Result<Vec<_>>>()?;
    ContinuousMap::new(llx.space.clone(), lx.space.clone(), values)
}

pub fn mult(kind: FilterKind, x: &FiniteSpace) -> Result<ContinuousMap> {
    let lx = lift_space(kind, x)?;
    let llx = lift_space(kind, lx.space())?;
    mult_between(&lx, &llx)
}

/// `𝔘X → ΣX` or `𝔘X → 𝔓X`, intersecting an ultrafilter with the target lattice.
pub fn alpha_between(ux: &LiftedSpace, target: &LiftedSpace) -> Result<ContinuousMap> {
    if ux.kind != FilterKind::Ultra || target.kind == FilterKind::Ultra || ux.base != target.base {
        return Err(Error::DomainMismatch);
    }
    let values = ux
        .points
        .iter()
        .map(|p| {
            let elements: Vec<Mask> = target.lattice.iter().copied().filter(|&a| p.contains(a)).collect();
            target.locate(elements)
        })
        .collect::<Result<Vec<_>>>()?;
    ContinuousMap::new(ux.space.clone(), target.space.clone(), values)
}

pub fn alpha(target: FilterKind, x: &FiniteSpace) -> Result<ContinuousMap> {
    alpha_between(&lift_space(FilterKind::Ultra, x)?, &lift_space(target, x)?)
}

/// Write-once memo of lifted spaces keyed by kind and canonical space.
#[derive(Debug, Default)]
pub struct LiftCache {
    table: RwLock<HashMap<(FilterKind, FiniteSpace), Arc<LiftedSpace>>>,
}

impl LiftCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, kind: FilterKind, x: &FiniteSpace) -> Result<Arc<LiftedSpace>> {
        let key = (kind, x.clone());
        if let Some(hit) = self.table.read().expect("lift cache").get(&key) {
            return Ok(hit.clone());
        }
        let lifted = Arc::new(lift_space(kind, x)?);
        Ok(self
            .table
            .write()
            .expect("lift cache")
            .entry(key)
            .or_insert(lifted)
            .clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::find_homeomorphism;

    fn e1() -> FiniteSpace {
        FiniteSpace::from_generators(3, &[0b001]).unwrap()
    }

    fn gens(l: &LiftedSpace) -> Vec<Mask> {
        l.points().iter().map(|p| p.generator()).collect()
    }

    #[test]
    fn lifted_examples_on_the_salbany_example() {
        let s = FiniteSpace::sierpinski();
        let sig = lift_space(FilterKind::OpenPrime, &e1()).unwrap();
        assert_eq!(gens(&sig), vec![0b001, 0b111]);
        assert!(find_homeomorphism(sig.space(), &s).is_some());

        let pcf = lift_space(FilterKind::ClosedPrime, &e1()).unwrap();
        assert_eq!(gens(&pcf), vec![0b110, 0b111]);
        assert!(find_homeomorphism(pcf.space(), &s).is_some());
    }

    #[test]
    fn ultrafilters_on_a_discrete_space_are_principal() {
        let d = FiniteSpace::discrete(3).unwrap();
        let u = lift_space(FilterKind::Ultra, &d).unwrap();
        assert_eq!(gens(&u), vec![0b001, 0b010, 0b100]);
        assert_eq!(u.space(), &d);
    }

    #[test]
    fn unit_on_the_salbany_example() {
        let e = unit(FilterKind::OpenPrime, &e1()).unwrap();
        assert_eq!(e.values(), &[0, 1, 1]);
        let u = unit(FilterKind::Ultra, &e1()).unwrap();
        assert_eq!(u.values(), &[0, 1, 2]);
    }

    #[test]
    fn sigma_functor_on_a_map_to_sierpinski() {
        let f = ContinuousMap::new(e1(), FiniteSpace::sierpinski(), vec![1, 0, 0]).unwrap();
        let sf = lift_map(FilterKind::OpenPrime, &f).unwrap();
        let target = lift_space(FilterKind::OpenPrime, &FiniteSpace::sierpinski()).unwrap();
        assert_eq!(gens(&target), vec![0b10, 0b11]);
        assert_eq!(sf.values(), &[0, 1]);
    }

    #[test]
    fn mult_on_the_salbany_example() {
        let lx = lift_space(FilterKind::OpenPrime, &e1()).unwrap();
        let llx = lift_space(FilterKind::OpenPrime, lx.space()).unwrap();
        assert_eq!(llx.points().len(), 2);
        // ↑({0}^×) is generated by the mask of point 0 of ΣE1.
        assert_eq!(gens(&llx), vec![0b01, 0b11]);
        let m = mult_between(&lx, &llx).unwrap();
        assert_eq!(m.values(), &[0, 1]);
    }

    #[test]
    fn alpha_on_the_salbany_example() {
        let a = alpha(FilterKind::OpenPrime, &e1()).unwrap();
        assert_eq!(a.values(), &[0, 1, 1]);
        assert!(a.is_surjective());
        let b = alpha(FilterKind::ClosedPrime, &e1()).unwrap();
        assert!(b.is_surjective());
    }

    #[test]
    fn malformed_filters_are_rejected() {
        let x = e1();
        let lattice = FilterKind::OpenPrime.ambient_lattice(&x);
        assert!(FilterPoint::from_elements(FilterKind::OpenPrime, &lattice, vec![0b001]).is_err());
        assert!(FilterPoint::from_elements(FilterKind::OpenPrime, &lattice, vec![0, 0b001, 0b111]).is_err());
        let all = FilterKind::Ultra.ambient_lattice(&FiniteSpace::indiscrete(2).unwrap());
        // ↑∅ minus ∅ is not ultra: neither {0} nor {1} is forced.
        assert!(FilterPoint::from_elements(FilterKind::Ultra, &all, vec![0b11]).is_err());
    }

    #[test]
    fn lift_cache_returns_equal_values() {
        let cache = LiftCache::new();
        let a = cache.get(FilterKind::Ultra, &e1()).unwrap();
        let b = cache.get(FilterKind::Ultra, &e1()).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(*a, lift_space(FilterKind::Ultra, &e1()).unwrap());
    }
}
