//! Exhaustive enumeration of every filled-cell mask of a board.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::thread;

use cgt_core::{Dyadic, GridPosition, ThermographMethod};
use thiserror::Error;

use crate::engine::Engine;
use crate::records::SearchRecord;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub width: usize,
    pub height: usize,
    /// Records with a lower temperature are dropped.
    pub min_temperature: Dyadic,
    pub max_empty_tiles: Option<u32>,
    pub allow_decomposable: bool,
    /// Empty cells must touch all four edges.
    pub require_spanning: bool,
    /// Keep one position per symmetry class.
    pub dedup_symmetry: bool,
    pub worker_count: usize,
    pub thermograph_method: ThermographMethod,
}

impl SearchConfig {
    pub fn new(width: usize, height: usize) -> Self {
        Self {
            width,
            height,
            min_temperature: Dyadic::MINUS_ONE,
            max_empty_tiles: None,
            allow_decomposable: false,
            require_spanning: true,
            dedup_symmetry: true,
            worker_count: 1,
            thermograph_method: ThermographMethod::Scaffold,
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        GridPosition::empty(self.width, self.height).map_err(|e| SearchError::Config(e.to_string()))?;
        if self.worker_count == 0 {
            return Err(SearchError::Config("worker count must be positive".into()));
        }
        Ok(())
    }

    /// True if `p` passes every filter that does not need its value.
    pub fn admits(&self, p: &GridPosition) -> bool {
        if self.max_empty_tiles.is_some_and(|m| p.empty_count() > m) {
            return false;
        }
        if self.require_spanning && !p.is_spanning() {
            return false;
        }
        if !self.allow_decomposable && p.component_count(1) != 1 {
            return false;
        }
        !self.dedup_symmetry || p.is_class_representative()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("invalid search configuration: {0}")]
    Config(String),
    #[error("search cancelled")]
    Cancelled,
}

/// Counters for one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub masks: u64,
    pub evaluated: u64,
    pub kept: u64,
}

/// Highest temperature first, then by grid string.
pub fn sort_records(records: &mut [SearchRecord]) {
    records.sort_by_cached_key(|r| (std::cmp::Reverse(r.temperature), r.position.to_string()));
}

pub fn exhaustive_search(cfg: &SearchConfig) -> Result<Vec<SearchRecord>, SearchError> {
    let engine = Engine::new();
    exhaustive_search_with(cfg, &engine, &AtomicBool::new(false)).map(|(records, _)| records)
}

const CHUNK_BITS: usize = 14;

/// Runs the search on a shared engine. Setting `cancel` stops every worker
/// at its next chunk; caches stay usable.
pub fn exhaustive_search_with(
    cfg: &SearchConfig,
    engine: &Engine,
    cancel: &AtomicBool,
) -> Result<(Vec<SearchRecord>, SearchStats), SearchError> {
    cfg.validate()?;
    let cells = cfg.width * cfg.height;
    let chunk_bits = CHUNK_BITS.min(cells);
    let chunks: u64 = 1 << (cells - chunk_bits);
    let next = AtomicU64::new(0);
    let merged = Mutex::new((Vec::new(), SearchStats::default()));

    let worker = || {
        let mut found = Vec::new();
        let mut stats = SearchStats::default();
        loop {
            if cancel.load(Ordering::Relaxed) {
                break;
            }
            let chunk = next.fetch_add(1, Ordering::Relaxed);
            if chunk >= chunks {
                break;
            }
            let base = chunk << chunk_bits;
            for low in 0..1u64 << chunk_bits {
                let p = GridPosition::new(cfg.width, cfg.height, base | low).expect("validated");
                stats.masks += 1;
                if !cfg.admits(&p) {
                    continue;
                }
                stats.evaluated += 1;
                let t = engine.temperature(&p, cfg.thermograph_method);
                if t >= cfg.min_temperature {
                    stats.kept += 1;
                    found.push(engine.record(&p, cfg.thermograph_method));
                }
            }
        }
        let mut all = merged.lock().unwrap();
        all.0.append(&mut found);
        all.1.masks += stats.masks;
        all.1.evaluated += stats.evaluated;
        all.1.kept += stats.kept;
    };

    thread::scope(|scope| {
        for _ in 1..cfg.worker_count {
            scope.spawn(worker);
        }
        worker();
    });
    if cancel.load(Ordering::Relaxed) {
        return Err(SearchError::Cancelled);
    }
    let (mut records, stats) = merged.into_inner().unwrap();
    sort_records(&mut records);
    Ok((records, stats))
}
