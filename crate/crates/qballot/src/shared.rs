use std::sync::{Arc, RwLock};

use qballot_core::{BallotCache, BallotTable, QLaurent};

/// A ballot memo shared between worker threads. Clones are handles to the
/// same table; reads of finished entries take the read lock only.
#[derive(Clone, Debug, Default)]
pub struct SharedBallotTable {
    inner: Arc<RwLock<BallotTable>>,
}

impl SharedBallotTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_table(t: BallotTable) -> Self {
        SharedBallotTable { inner: Arc::new(RwLock::new(t)) }
    }

    /// A copy of the current table.
    pub fn snapshot(&self) -> BallotTable {
        self.inner.read().expect("memo lock poisoned").clone()
    }

    pub fn len(&self) -> usize {
        self.inner.read().expect("memo lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl BallotCache for SharedBallotTable {
    fn qballot(&mut self, n: u32, k: u32) -> QLaurent {
        if let Some(v) = self.inner.read().expect("memo lock poisoned").get(n, k) {
            return v.clone();
        }
        self.inner.write().expect("memo lock poisoned").qballot(n, k)
    }
}
