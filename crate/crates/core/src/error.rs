use thiserror::Error;

/// Errors raised by the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("mask {mask:#b} is not an open set")]
    NotOpen { mask: u64 },
    #[error("map is not continuous: preimage of {open:#b} is {preimage:#b}, which is not open")]
    NotContinuous { open: u64, preimage: u64 },
    #[error("cannot compose: codomain of the first map is not the domain of the second")]
    DomainMismatch,
    #[error("filter not well formed: {0}")]
    FilterNotWellFormed(String),
    #[error("factorization not well defined at point {point} of the reflection")]
    NotWellDefined { point: usize },
    #[error("space is not in the target subcategory ({0})")]
    NotInSubcategory(String),
    #[error("space is not stably compact")]
    NotStablyCompact,
    #[error("no continuous left inverse exists for {0}")]
    NoSplitting(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("not a frame: {0}")]
    NotAFrame(String),
    #[error("not a frame homomorphism: {0}")]
    NotAFrameMap(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown fault `{0}`")]
    UnknownFault(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
