//! T0, sober and Hausdorff reflections, factorization through a reflection,
//! and the patch coreflection of stably compact spaces.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::map::{enumerate_continuous_maps, for_each_continuous, ContinuousMap};
use crate::space::FiniteSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReflectorKind {
    T0,
    Sober,
    Hausdorff,
}

impl ReflectorKind {
    pub const ALL: [ReflectorKind; 3] = [ReflectorKind::T0, ReflectorKind::Sober, ReflectorKind::Hausdorff];

    pub fn name(self) -> &'static str {
        match self {
            ReflectorKind::T0 => "t0",
            ReflectorKind::Sober => "sober",
            ReflectorKind::Hausdorff => "hausdorff",
        }
    }

    /// Membership in the reflective subcategory.
    pub fn admits(self, x: &FiniteSpace) -> bool {
        match self {
            ReflectorKind::T0 => x.is_t0(),
            ReflectorKind::Sober => x.is_sober(),
            ReflectorKind::Hausdorff => x.is_hausdorff(),
        }
    }

    pub fn reflect(self, x: &FiniteSpace) -> Reflection {
        match self {
            ReflectorKind::T0 => t0_reflect(x),
            ReflectorKind::Sober => sobrify(x),
            ReflectorKind::Hausdorff => hausdorff_reflect(x),
        }
    }
}

impl fmt::Display for ReflectorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReflectorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "t0" => Ok(ReflectorKind::T0),
            "sober" => Ok(ReflectorKind::Sober),
            "hausdorff" => Ok(ReflectorKind::Hausdorff),
            other => Err(Error::InvalidInput(format!("unknown reflector `{other}`"))),
        }
    }
}

/// A reflected space with its unit `X → RX`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reflection {
    pub space: FiniteSpace,
    pub unit: ContinuousMap,
}

/// Quotient of `x` by the partition `class_of`, whose classes are numbered
/// by first appearance. Opens of the quotient are the images of saturated
/// opens.
fn quotient(x: &FiniteSpace, class_of: &[usize], discrete: bool) -> Reflection {
    let classes = class_of.iter().copied().max().map_or(0, |m| m + 1);
    let image = |o: Mask| bits::members(o).fold(0, |acc, p| acc | bits::singleton(class_of[p]));
    let space = if discrete {
        FiniteSpace::discrete(classes).expect("quotient size")
    } else {
        let opens: Vec<Mask> = x
            .opens()
            .iter()
            .filter(|&&o| {
                // Saturated with respect to the partition.
                (0..x.len()).all(|p| bits::contains(o, p) == bits::contains(image(o), class_of[p]))
            })
            .map(|&o| image(o))
            .collect();
        FiniteSpace::new(classes, opens).expect("quotient topology")
    };
    let unit = ContinuousMap::new(x.clone(), space.clone(), class_of.to_vec()).expect("quotient map");
    Reflection { space, unit }
}

/// Numbers the blocks of an equivalence by smallest member.
fn number_classes(n: usize, same: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut class_of = vec![usize::MAX; n];
    let mut next = 0;
    for x in 0..n {
        if class_of[x] == usize::MAX {
            for y in x..n {
                if class_of[y] == usize::MAX && same(x, y) {
                    class_of[y] = next;
                }
            }
            next += 1;
        }
    }
    class_of
}

/// Quotient by topological indistinguishability.
pub fn t0_reflect(x: &FiniteSpace) -> Reflection {
    let minimal = x.minimal_neighbourhoods();
    let class_of = number_classes(x.len(), |a, b| minimal[a] == minimal[b]);
    quotient(x, &class_of, false)
}

/// Points are the irreducible closed sets; `Õ = {C : C ∩ O ≠ ∅}`.
pub fn sobrify(x: &FiniteSpace) -> Reflection {
    let irreducible = x.irreducible_closed_sets();
    let n = irreducible.len();
    let opens: Vec<Mask> = x
        .opens()
        .iter()
        .map(|&o| {
            irreducible
                .iter()
                .enumerate()
                .filter(|(_, &c)| c & o != 0)
                .fold(0, |acc, (i, _)| acc | bits::singleton(i))
        })
        .collect();
    let space = FiniteSpace::new(n, opens).expect("sobrification topology");
    let values: Vec<usize> = (0..x.len())
        .map(|p| {
            let c = x.closure(bits::singleton(p));
            irreducible.binary_search(&c).expect("point closures are irreducible")
        })
        .collect();
    let unit = ContinuousMap::new(x.clone(), space.clone(), values).expect("sobrification unit");
    Reflection { space, unit }
}

/// Discrete space of connected components of the specialization graph.
pub fn hausdorff_reflect(x: &FiniteSpace) -> Reflection {
    let n = x.len();
    let spec = x.specialization();
    let mut component: Vec<usize> = (0..n).collect();
    // Label propagation to a fixpoint: smallest index reachable.
    loop {
        let mut changed = false;
        for a in 0..n {
            for b in 0..n {
                if (spec.le(a, b) || spec.le(b, a)) && component[b] < component[a] {
                    component[a] = component[b];
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let class_of = number_classes(n, |a, b| component[a] == component[b]);
    quotient(x, &class_of, true)
}

/// The unique `φ : RX → Z` with `φ ∘ r = f`, read off the fibres of `r`.
pub fn factor_through_reflection(
    f: &ContinuousMap,
    r: &ContinuousMap,
    class: ReflectorKind,
) -> Result<ContinuousMap> {
    if !class.admits(f.cod()) {
        return Err(Error::NotInSubcategory(class.name().into()));
    }
    factor_through(f, r)
}

/// Factors `f` through a surjection `r` with the same domain, without
/// checking the codomain's class.
pub fn factor_through(f: &ContinuousMap, r: &ContinuousMap) -> Result<ContinuousMap> {
    if f.dom() != r.dom() {
        return Err(Error::DomainMismatch);
    }
    let mut values: Vec<Option<usize>> = vec![None; r.cod().len()];
    for x in 0..f.dom().len() {
        let slot = &mut values[r.apply(x)];
        match *slot {
            None => *slot = Some(f.apply(x)),
            Some(v) if v != f.apply(x) => return Err(Error::NotWellDefined { point: r.apply(x) }),
            Some(_) => {}
        }
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(point, v)| v.ok_or(Error::NotWellDefined { point }))
        .collect::<Result<Vec<_>>>()?;
    ContinuousMap::new(r.cod().clone(), f.cod().clone(), values)
}

/// Patch space of a stably compact `x` with the identity-on-points counit
/// `KX → X`.
pub fn patch_coreflect(x: &FiniteSpace) -> Result<(FiniteSpace, ContinuousMap)> {
    if !x.is_stably_compact() {
        return Err(Error::NotStablyCompact);
    }
    let patch = x.patch_topology();
    let counit = ContinuousMap::new(patch.clone(), x.clone(), (0..x.len()).collect())?;
    Ok((patch, counit))
}

/// Unique mediating maps for a reflection: for every `x` and every
/// continuous `f : x → z` with `z` among `targets` there is exactly one
/// continuous `φ : RX → z` with `φ ∘ r = f`. Returns the first violation.
pub fn reflector_universality(
    reflect: &(dyn Fn(&FiniteSpace) -> Reflection + Sync),
    spaces: &[FiniteSpace],
    targets: &[FiniteSpace],
) -> Result<(), String> {
    use rayon::prelude::*;
    spaces
        .par_iter()
        .map(|x| {
            let refl = reflect(x);
            for z in targets {
                let mut counts: std::collections::HashMap<Vec<usize>, usize> = Default::default();
                for_each_continuous(&refl.space, z, &vec![None; refl.space.len()], |phi| {
                    let composite: Vec<usize> = refl.unit.values().iter().map(|&p| phi[p]).collect();
                    *counts.entry(composite).or_default() += 1;
                    true
                });
                for f in enumerate_continuous_maps(x, z) {
                    let found = counts.get(f.values()).copied().unwrap_or(0);
                    if found != 1 {
                        return Err(format!(
                            "space {} -> target {}: map {:?} has {found} mediating maps",
                            crate::io::space_to_json(x),
                            crate::io::space_to_json(z),
                            f.values()
                        ));
                    }
                }
            }
            Ok(())
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// Couniversality of the patch counit: for every source `c` (compact
/// Hausdorff) and every proper `g : c → X` there is exactly one continuous
/// `ψ : c → KX` with `k ∘ ψ = g`.
pub fn patch_couniversality(spaces: &[FiniteSpace], sources: &[FiniteSpace]) -> Result<(), String> {
    for x in spaces.iter().filter(|x| x.is_stably_compact()) {
        let (patch, counit) = patch_coreflect(x).map_err(|e| e.to_string())?;
        for c in sources {
            if !(c.is_hausdorff() && c.is_compact(c.full())) {
                return Err(format!("source {} is not compact Hausdorff", crate::io::space_to_json(c)));
            }
            let lifts = enumerate_continuous_maps(c, &patch);
            for g in enumerate_continuous_maps(c, x).into_iter().filter(|g| g.is_proper()) {
                let count = lifts
                    .iter()
                    .filter(|psi| psi.then(&counit).map(|k| k == g).unwrap_or(false))
                    .count();
                if count != 1 {
                    return Err(format!(
                        "space {} source {}: map {:?} has {count} lifts",
                        crate::io::space_to_json(x),
                        crate::io::space_to_json(c),
                        g.values()
                    ));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::find_homeomorphism;

    fn e1() -> FiniteSpace {
        FiniteSpace::from_generators(3, &[0b001]).unwrap()
    }

    #[test]
    fn t0_examples() {
        let r = t0_reflect(&e1());
        assert_eq!(r.unit.values(), &[0, 1, 1]);
        // Open point 0 maps to class 0; relabeled Sierpiński.
        assert!(find_homeomorphism(&r.space, &FiniteSpace::sierpinski()).is_some());
        let s = FiniteSpace::sierpinski();
        assert_eq!(t0_reflect(&s).unit, ContinuousMap::identity(&s));
    }

    #[test]
    fn sobrification_examples() {
        let r = sobrify(&e1());
        assert_eq!(r.space.len(), 2);
        assert!(find_homeomorphism(&r.space, &FiniteSpace::sierpinski()).is_some());
        assert!(r.space.is_sober());
        let s = FiniteSpace::sierpinski();
        assert!(sobrify(&s).unit.is_homeomorphism());
    }

    #[test]
    fn hausdorff_examples() {
        assert_eq!(hausdorff_reflect(&FiniteSpace::sierpinski()).space.len(), 1);
        assert_eq!(hausdorff_reflect(&e1()).space.len(), 1);
        let d = FiniteSpace::discrete(3).unwrap();
        assert_eq!(hausdorff_reflect(&d).unit, ContinuousMap::identity(&d));
        // Two Sierpiński components.
        let two = FiniteSpace::from_generators(4, &[0b0010, 0b0011, 0b1000, 0b1100]).unwrap();
        assert_eq!(hausdorff_reflect(&two).unit.values(), &[0, 0, 1, 1]);
    }

    #[test]
    fn factorization_examples() {
        let x = e1();
        let s = FiniteSpace::sierpinski();
        let r = t0_reflect(&x);
        // Point 0 of RX is the open class; S has its open point at 1.
        let f = ContinuousMap::new(x.clone(), s.clone(), vec![1, 0, 0]).unwrap();
        let phi = factor_through_reflection(&f, &r.unit, ReflectorKind::T0).unwrap();
        assert_eq!(phi.after(&r.unit).unwrap(), f);
        assert!(phi.is_homeomorphism());

        let back = factor_through_reflection(&r.unit, &r.unit, ReflectorKind::T0).unwrap();
        assert_eq!(back, ContinuousMap::identity(&r.space));

        // f into a non-T0 target distinguishing indistinguishable points.
        let g = ContinuousMap::identity(&x);
        assert_eq!(
            factor_through_reflection(&g, &r.unit, ReflectorKind::T0),
            Err(Error::NotInSubcategory("t0".into()))
        );
        assert_eq!(factor_through(&g, &r.unit), Err(Error::NotWellDefined { point: 1 }));
    }

    #[test]
    fn patch_coreflection_examples() {
        let (k, counit) = patch_coreflect(&FiniteSpace::sierpinski()).unwrap();
        assert_eq!(k, FiniteSpace::discrete(2).unwrap());
        assert_eq!(counit.values(), &[0, 1]);
        assert!(counit.is_proper());
        assert_eq!(patch_coreflect(&e1()), Err(Error::NotStablyCompact));
    }
}
