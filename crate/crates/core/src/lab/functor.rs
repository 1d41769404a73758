use std::sync::Arc;

use super::nat::NatTrans;
use super::Memo;
use crate::error::Result;
use crate::filters::{lift_map_between, FilterKind, LiftCache};
use crate::map::ContinuousMap;
use crate::reflect::{factor_through_reflection, Reflection, ReflectorKind};
use crate::space::FiniteSpace;

/// An endofunctor of finite spaces, evaluated on demand.
pub trait Endofunctor: Send + Sync {
    fn name(&self) -> String;
    fn object(&self, x: &FiniteSpace) -> Result<FiniteSpace>;
    fn morphism(&self, f: &ContinuousMap) -> Result<ContinuousMap>;
}

pub type Functor = Arc<dyn Endofunctor>;

impl std::fmt::Debug for dyn Endofunctor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name())
    }
}

pub struct Identity;

impl Endofunctor for Identity {
    fn name(&self) -> String {
        "id".into()
    }

    fn object(&self, x: &FiniteSpace) -> Result<FiniteSpace> {
        Ok(x.clone())
    }

    fn morphism(&self, f: &ContinuousMap) -> Result<ContinuousMap> {
        Ok(f.clone())
    }
}

/// `𝔘`, `Σ` or `𝔓` on objects and maps.
pub struct FilterFunctor {
    pub kind: FilterKind,
    pub cache: Arc<LiftCache>,
}

impl Endofunctor for FilterFunctor {
    fn name(&self) -> String {
        self.kind.monad_name().into()
    }

    fn object(&self, x: &FiniteSpace) -> Result<FiniteSpace> {
        Ok(self.cache.get(self.kind, x)?.space().clone())
    }

    fn morphism(&self, f: &ContinuousMap) -> Result<ContinuousMap> {
        let lx = self.cache.get(self.kind, f.dom())?;
        let ly = self.cache.get(self.kind, f.cod())?;
        lift_map_between(&lx, &ly, f)
    }
}

/// `outer ∘ inner`.
pub struct Composite {
    pub outer: Functor,
    pub inner: Functor,
}

impl Composite {
    pub fn of(outer: &Functor, inner: &Functor) -> Functor {
        Arc::new(Composite { outer: outer.clone(), inner: inner.clone() })
    }
}

impl Endofunctor for Composite {
    fn name(&self) -> String {
        format!("{}∘{}", self.outer.name(), self.inner.name())
    }

    fn object(&self, x: &FiniteSpace) -> Result<FiniteSpace> {
        self.outer.object(&self.inner.object(x)?)
    }

    fn morphism(&self, f: &ContinuousMap) -> Result<ContinuousMap> {
        self.outer.morphism(&self.inner.morphism(f)?)
    }
}

type ReflectFn = dyn Fn(&FiniteSpace) -> Reflection + Send + Sync;

/// A reflector into one of the separation classes, with memoized units.
#[derive(Clone)]
pub struct Reflector {
    name: String,
    class: ReflectorKind,
    reflect: Arc<ReflectFn>,
    memo: Arc<Memo<FiniteSpace, Arc<Reflection>>>,
}

impl Reflector {
    pub fn standard(kind: ReflectorKind) -> Self {
        Self::custom(kind.name(), kind, move |x| kind.reflect(x))
    }

    /// Any construction whose values are claimed to lie in `class`.
    pub fn custom(
        name: impl Into<String>,
        class: ReflectorKind,
        reflect: impl Fn(&FiniteSpace) -> Reflection + Send + Sync + 'static,
    ) -> Self {
        Reflector { name: name.into(), class, reflect: Arc::new(reflect), memo: Arc::default() }
    }

    /// Collapses every space to a point: lands in every class but is not
    /// universal.
    pub fn coarsened(kind: ReflectorKind) -> Self {
        Self::custom(format!("{}-coarse", kind.name()), kind, |x| {
            let point = FiniteSpace::point();
            let unit = ContinuousMap::constant(x, &point, 0).expect("maps to a point are continuous");
            Reflection { space: point, unit }
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn class(&self) -> ReflectorKind {
        self.class
    }

    pub fn reflection(&self, x: &FiniteSpace) -> Arc<Reflection> {
        self.memo
            .get_or_try::<()>(x, || Ok(Arc::new((self.reflect)(x))))
            .expect("infallible")
    }

    pub fn functor(&self) -> Functor {
        Arc::new(ReflectorFunctor(self.clone()))
    }

    /// `r : Id → R`.
    pub fn unit(&self) -> NatTrans {
        let this = self.clone();
        NatTrans::new(
            format!("r[{}]", self.name),
            Arc::new(Identity),
            self.functor(),
            move |x| Ok(this.reflection(x).unit.clone()),
        )
    }

    /// The unique `φ : RX → Z` with `φ ∘ r_X = f`.
    pub fn factor(&self, f: &ContinuousMap) -> Result<ContinuousMap> {
        factor_through_reflection(f, &self.reflection(f.dom()).unit, self.class)
    }
}

/// `R(f)` is the factorization of `r_Y ∘ f` through `r_X`.
struct ReflectorFunctor(Reflector);

impl Endofunctor for ReflectorFunctor {
    fn name(&self) -> String {
        self.0.name.clone()
    }

    fn object(&self, x: &FiniteSpace) -> Result<FiniteSpace> {
        Ok(self.0.reflection(x).space.clone())
    }

    fn morphism(&self, f: &ContinuousMap) -> Result<ContinuousMap> {
        let ry = self.0.reflection(f.cod());
        self.0.factor(&f.then(&ry.unit)?)
    }
}
