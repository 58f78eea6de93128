use cgt_core::domineering::{evaluate, grid_temperature};
use cgt_core::{CanonicalForm, Dyadic, GameStore, GridPosition, ThermographMethod, TranspositionTable};

use crate::records::SearchRecord;

/// A game store and transposition table shared by every evaluation.
#[derive(Default)]
pub struct Engine {
    pub store: GameStore,
    pub table: TranspositionTable,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn evaluate(&self, p: &GridPosition) -> CanonicalForm {
        evaluate(&self.store, &self.table, p)
    }

    pub fn temperature(&self, p: &GridPosition, method: ThermographMethod) -> Dyadic {
        grid_temperature(&self.store, &self.table, p, method)
    }

    pub fn record(&self, p: &GridPosition, method: ThermographMethod) -> SearchRecord {
        let value = self.evaluate(p);
        SearchRecord {
            position: *p,
            value: self.store.display(value),
            temperature: self.store.temperature_with(value, method),
        }
    }

    /// `(transposition table entries, canonical forms)`.
    pub fn cache_sizes(&self) -> (usize, usize) {
        (self.table.len(), self.store.len())
    }
}
