use std::fmt;
use std::sync::Arc;

use super::functor::{Composite, Functor, Identity};
use super::Memo;
use crate::error::Result;
use crate::map::ContinuousMap;
use crate::space::FiniteSpace;

type ComponentFn = dyn Fn(&FiniteSpace) -> Result<ContinuousMap> + Send + Sync;

/// A natural transformation `source → target`, given by its components.
#[derive(Clone)]
pub struct NatTrans {
    name: String,
    source: Functor,
    target: Functor,
    component: Arc<ComponentFn>,
    memo: Arc<Memo<FiniteSpace, ContinuousMap>>,
}

impl fmt::Debug for NatTrans {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} → {}", self.name, self.source.name(), self.target.name())
    }
}

impl NatTrans {
    pub fn new(
        name: impl Into<String>,
        source: Functor,
        target: Functor,
        component: impl Fn(&FiniteSpace) -> Result<ContinuousMap> + Send + Sync + 'static,
    ) -> Self {
        NatTrans {
            name: name.into(),
            source,
            target,
            component: Arc::new(component),
            memo: Arc::default(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Functor {
        &self.source
    }

    pub fn target(&self) -> &Functor {
        &self.target
    }

    /// The component at `x`, computed once.
    pub fn at(&self, x: &FiniteSpace) -> Result<ContinuousMap> {
        self.memo.get_or_try(x, || (self.component)(x))
    }

    pub fn identity(f: &Functor) -> Self {
        let g = f.clone();
        NatTrans::new(format!("1[{}]", f.name()), f.clone(), f.clone(), move |x| {
            Ok(ContinuousMap::identity(&g.object(x)?))
        })
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        NatTrans { name: name.into(), ..self.clone() }
    }

    /// `self · first`, componentwise composition.
    pub fn vertical(&self, first: &NatTrans) -> NatTrans {
        let (a, b) = (first.clone(), self.clone());
        NatTrans::new(
            format!("{}·{}", self.name, first.name),
            first.source.clone(),
            self.target.clone(),
            move |x| a.at(x)?.then(&b.at(x)?),
        )
    }

    /// `Fα`, with components `F(α_X)`.
    pub fn whisker_left(f: &Functor, alpha: &NatTrans) -> NatTrans {
        let (g, a) = (f.clone(), alpha.clone());
        NatTrans::new(
            format!("{}{}", f.name(), alpha.name),
            Composite::of(f, &alpha.source),
            Composite::of(f, &alpha.target),
            move |x| g.morphism(&a.at(x)?),
        )
    }

    /// `αF`, with components `α_{FX}`.
    pub fn whisker_right(alpha: &NatTrans, f: &Functor) -> NatTrans {
        let (g, a) = (f.clone(), alpha.clone());
        NatTrans::new(
            format!("{}{}", alpha.name, f.name()),
            Composite::of(&alpha.source, f),
            Composite::of(&alpha.target, f),
            move |x| a.at(&g.object(x)?),
        )
    }

    /// `β∘α : HF → KG` for `α : F → G`, `β : H → K`, as `βG · Hα`.
    pub fn horizontal(beta: &NatTrans, alpha: &NatTrans) -> NatTrans {
        NatTrans::whisker_right(beta, &alpha.target)
            .vertical(&NatTrans::whisker_left(&beta.source, alpha))
            .with_ends(beta, alpha, "∘")
    }

    /// The same composite as `Kα · βF`.
    pub fn horizontal_alt(beta: &NatTrans, alpha: &NatTrans) -> NatTrans {
        NatTrans::whisker_left(&beta.target, alpha)
            .vertical(&NatTrans::whisker_right(beta, &alpha.source))
            .with_ends(beta, alpha, "∘'")
    }

    fn with_ends(self, beta: &NatTrans, alpha: &NatTrans, op: &str) -> NatTrans {
        NatTrans {
            name: format!("{}{op}{}", beta.name, alpha.name),
            source: Composite::of(&beta.source, &alpha.source),
            target: Composite::of(&beta.target, &alpha.target),
            ..self
        }
    }

    /// A transformation out of the identity functor.
    pub fn from_identity(
        name: impl Into<String>,
        target: Functor,
        component: impl Fn(&FiniteSpace) -> Result<ContinuousMap> + Send + Sync + 'static,
    ) -> Self {
        NatTrans::new(name, Arc::new(Identity), target, component)
    }
}
