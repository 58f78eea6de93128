use alloc::vec::Vec;

use super::GridPosition;
use crate::dyadic::Dyadic;
use crate::game::{CanonicalForm, GameStore};
use crate::sync::ShardedMap;
use crate::thermography::ThermographMethod;

/// Values of already evaluated components, keyed by
/// [`GridPosition::normalize`]. Safe to share between threads.
pub struct TranspositionTable {
    map: ShardedMap<GridPosition, CanonicalForm>,
}

impl Default for TranspositionTable {
    fn default() -> Self {
        Self::new()
    }
}

impl TranspositionTable {
    pub fn new() -> Self {
        Self { map: ShardedMap::new() }
    }

    pub fn get(&self, key: &GridPosition) -> Option<CanonicalForm> {
        self.map.get(key)
    }

    pub fn insert(&self, key: GridPosition, value: CanonicalForm) -> CanonicalForm {
        self.map.insert(key, value)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Canonical value of `p`: the sum of its components' values.
pub fn evaluate(store: &GameStore, table: &TranspositionTable, p: &GridPosition) -> CanonicalForm {
    let mut parts = p.decompose();
    if let [single] = parts.as_slice() {
        return component_value(store, table, single);
    }
    parts.sort_by_key(|c| c.empty_count());
    let values: Vec<CanonicalForm> = parts.iter().map(|c| component_value(store, table, c)).collect();
    store.sum(values)
}

fn component_value(store: &GameStore, table: &TranspositionTable, c: &GridPosition) -> CanonicalForm {
    if c.empty_count() <= 1 {
        return store.zero();
    }
    let key = c.normalize();
    if let Some(v) = table.get(&key) {
        return v;
    }
    let left: Vec<_> = key.left_moves().iter().map(|m| evaluate(store, table, m)).collect();
    let right: Vec<_> = key.right_moves().iter().map(|m| evaluate(store, table, m)).collect();
    let value = store.construct(&left, &right);
    table.insert(key, value)
}

pub fn grid_temperature(
    store: &GameStore,
    table: &TranspositionTable,
    p: &GridPosition,
    method: ThermographMethod,
) -> Dyadic {
    store.temperature_with(evaluate(store, table, p), method)
}
