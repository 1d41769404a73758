use std::sync::Arc;

use super::checks::find_splitting;
use super::functor::{Composite, FilterFunctor, Functor, Identity, Reflector};
use super::nat::NatTrans;
use crate::error::{Error, Result};
use crate::filters::{alpha_between, mult_between, unit_into, FilterKind, LiftCache};
use crate::io::space_to_json;
use crate::map::ContinuousMap;
use crate::space::FiniteSpace;

/// A monad `(T, η, μ)` on finite spaces.
#[derive(Clone, Debug)]
pub struct MonadSpec {
    pub name: String,
    pub functor: Functor,
    pub unit: NatTrans,
    pub mult: NatTrans,
}

pub fn identity_monad() -> MonadSpec {
    let id: Functor = Arc::new(Identity);
    MonadSpec {
        name: "id".into(),
        functor: id.clone(),
        unit: NatTrans::identity(&id).renamed("η[id]"),
        mult: NatTrans::identity(&id).renamed("μ[id]"),
    }
}

/// `𝔘`, `Σ` or `𝔓` with its unit and multiplication.
pub fn filter_monad(kind: FilterKind, cache: &Arc<LiftCache>) -> MonadSpec {
    let functor: Functor = Arc::new(FilterFunctor { kind, cache: cache.clone() });
    let name = kind.monad_name();
    let c = cache.clone();
    let unit = NatTrans::from_identity(format!("η[{name}]"), functor.clone(), move |x| {
        unit_into(&*c.get(kind, x)?)
    });
    let c = cache.clone();
    let mult = NatTrans::new(
        format!("μ[{name}]"),
        Composite::of(&functor, &functor),
        functor.clone(),
        move |x| {
            let lx = c.get(kind, x)?;
            let llx = c.get(kind, lx.space())?;
            mult_between(&lx, &llx)
        },
    );
    MonadSpec { name: name.into(), functor, unit, mult }
}

/// `α : 𝔘 → Σ` or `α : 𝔘 → 𝔓`.
pub fn alpha_transformation(target: FilterKind, cache: &Arc<LiftCache>) -> NatTrans {
    let source: Functor = Arc::new(FilterFunctor { kind: FilterKind::Ultra, cache: cache.clone() });
    let tgt: Functor = Arc::new(FilterFunctor { kind: target, cache: cache.clone() });
    let c = cache.clone();
    NatTrans::new(format!("α[{}]", target.monad_name()), source, tgt, move |x| {
        alpha_between(&*c.get(FilterKind::Ultra, x)?, &*c.get(target, x)?)
    })
}

/// Structure map `b : TRY → RY` lifted from a `T`-algebra `a : TY → Y`,
/// as `Ra · β · TRη_Y` with `β` a continuous left inverse of `η_{RTY}`.
pub fn lift_algebra(r: &Reflector, t: &MonadSpec, y: &FiniteSpace, a: &ContinuousMap) -> Result<ContinuousMap> {
    let rf = r.functor();
    let eta_y = t.unit.at(y)?;
    let tr_eta = t.functor.morphism(&rf.morphism(&eta_y)?)?;
    let rty = rf.object(&t.functor.object(y)?)?;
    let eta_rty = t.unit.at(&rty)?;
    let beta = find_splitting(&eta_rty).ok_or_else(|| {
        Error::NoSplitting(format!("η at {} has no continuous left inverse", space_to_json(&rty)))
    })?;
    let ra = rf.morphism(a)?;
    tr_eta.then(&beta)?.then(&ra)
}

/// The composite monad `R∘T` with unit `r∘η` and multiplication obtained by
/// factoring the lifted free-algebra structure through `r_{TRTX}`.
pub fn compose_reflector_monad(r: &Reflector, t: &MonadSpec) -> MonadSpec {
    let rf = r.functor();
    let functor = Composite::of(&rf, &t.functor);
    let unit = NatTrans::horizontal(&r.unit(), &t.unit).renamed(format!("η[{}∘{}]", r.name(), t.name));
    let (rr, tt) = (r.clone(), t.clone());
    let mult = NatTrans::new(
        format!("μ[{}∘{}]", r.name(), t.name),
        Composite::of(&functor, &functor),
        functor.clone(),
        move |x| {
            let tx = tt.functor.object(x)?;
            let b = lift_algebra(&rr, &tt, &tx, &tt.mult.at(x)?)?;
            rr.factor(&b)
        },
    );
    MonadSpec { name: format!("{}∘{}", r.name(), t.name), functor, unit, mult }
}

/// Fault: exchanges the images of the first two points of `TTX` that
/// `μ_X` separates.
pub fn swap_mult(m: &MonadSpec) -> MonadSpec {
    let inner = m.mult.clone();
    let mult = NatTrans::new(
        format!("{}-swapped", m.mult.name()),
        m.mult.source().clone(),
        m.mult.target().clone(),
        move |x| {
            let mu = inner.at(x)?;
            let mut values = mu.values().to_vec();
            'outer: for i in 0..values.len() {
                for j in i + 1..values.len() {
                    if values[i] != values[j] {
                        values.swap(i, j);
                        break 'outer;
                    }
                }
            }
            Ok(ContinuousMap::new_unchecked(mu.dom().clone(), mu.cod().clone(), values))
        },
    );
    MonadSpec { name: format!("{}-swapped", m.name), mult, ..m.clone() }
}

/// Fault: constant multiplication onto the first point of `TX`.
pub fn collapse_mult(m: &MonadSpec) -> MonadSpec {
    let inner = m.mult.clone();
    let mult = NatTrans::new(
        format!("{}-collapsed", m.mult.name()),
        m.mult.source().clone(),
        m.mult.target().clone(),
        move |x| {
            let mu = inner.at(x)?;
            ContinuousMap::constant(mu.dom(), mu.cod(), 0)
        },
    );
    MonadSpec { name: format!("{}-collapsed", m.name), mult, ..m.clone() }
}
