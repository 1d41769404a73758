//! Finite topological spaces, the ultrafilter and prime filter monads on
//! them, separation reflectors, composite monads built from a reflector and
//! a monad, and finite frames with the ideal comonad.
//!
//! Spaces have at most [`space::MAX_POINTS`] points; subsets are `u64`
//! masks. Everything is exhaustive over bounded corpora, so each check
//! reports the corpus it quantified over.

pub mod bits;
pub mod corpus;
pub mod error;
pub mod filters;
pub mod frame;
pub mod io;
pub mod lab;
pub mod lattice_checks;
pub mod map;
pub mod reflect;
pub mod space;
pub mod suite;

pub use corpus::{enumerate_spaces, Corpus};
pub use error::{Error, Result};
pub use filters::{FilterKind, LiftCache, LiftedSpace};
pub use frame::{FiniteFrame, FrameMap};
pub use lab::{CheckReport, MonadSpec, NatTrans, Reflector, Status};
pub use map::ContinuousMap;
pub use reflect::{Reflection, ReflectorKind};
pub use space::FiniteSpace;
pub use suite::{run_suite, Fault, SuiteConfig, SUITES};
