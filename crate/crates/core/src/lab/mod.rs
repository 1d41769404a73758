//! Extensional functors, natural transformations and monads on finite
//! spaces, with executable law checks.

mod checks;
mod functor;
mod monad;
mod nat;
mod report;

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::RwLock;

pub use checks::*;
pub use functor::{Composite, Endofunctor, FilterFunctor, Functor, Identity, Reflector};
pub use monad::{
    alpha_transformation, collapse_mult, compose_reflector_monad, filter_monad, identity_monad,
    lift_algebra, swap_mult, MonadSpec,
};
pub use nat::NatTrans;
pub use report::{CheckReport, Status, Verdict};

/// Write-once table shared across threads.
#[derive(Debug)]
pub(crate) struct Memo<K, V> {
    table: RwLock<HashMap<K, V>>,
}

impl<K, V> Default for Memo<K, V> {
    fn default() -> Self {
        Memo { table: RwLock::new(HashMap::new()) }
    }
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub(crate) fn get_or_try<E>(&self, key: &K, compute: impl FnOnce() -> Result<V, E>) -> Result<V, E> {
        if let Some(hit) = self.table.read().expect("memo").get(key) {
            return Ok(hit.clone());
        }
        let value = compute()?;
        Ok(self
            .table
            .write()
            .expect("memo")
            .entry(key.clone())
            .or_insert(value)
            .clone())
    }
}
