//! Mutation search inside a fixed frame, starting from known hot positions.
//!
//! Each generation breeds children by toggling a few random cells of random
//! parents. Children that reach the configured temperature go to an archive
//! kept one per symmetry class; the population keeps the hottest distinct
//! individuals.

use std::collections::{BTreeMap, HashSet};

use cgt_core::{Dyadic, GridPosition};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::engine::Engine;
use crate::records::SearchRecord;
use crate::search::{sort_records, SearchConfig};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneticConfig {
    pub generations: u64,
    /// Each child toggles between 1 and this many cells.
    pub max_mutations: u32,
    pub population_cap: usize,
    /// Children bred per generation.
    pub brood_size: usize,
    pub rng_seed: u64,
}

impl Default for GeneticConfig {
    fn default() -> Self {
        Self { generations: 10_000, max_mutations: 3, population_cap: 64, brood_size: 64, rng_seed: 0 }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneticError {
    #[error("no seed positions")]
    NoSeeds,
    #[error("seed {index} is {found_width}x{found_height}, expected {width}x{height}")]
    DimensionMismatch { index: usize, width: usize, height: usize, found_width: usize, found_height: usize },
    #[error("invalid genetic configuration: {0}")]
    Config(String),
}

/// Structural filters of `cfg`. Spanning is not required here: a frame
/// larger than the pattern is the usual starting point.
fn viable(cfg: &SearchConfig, p: &GridPosition) -> bool {
    !cfg.max_empty_tiles.is_some_and(|m| p.empty_count() > m)
        && p.empty_count() > 0
        && (cfg.allow_decomposable || p.component_count(1) == 1)
}

pub fn genetic_search(
    cfg: &SearchConfig,
    gcfg: &GeneticConfig,
    seeds: &[GridPosition],
    engine: &Engine,
) -> Result<Vec<SearchRecord>, GeneticError> {
    let first = seeds.first().ok_or(GeneticError::NoSeeds)?;
    let (width, height) = (first.width(), first.height());
    for (index, s) in seeds.iter().enumerate() {
        if (s.width(), s.height()) != (width, height) {
            return Err(GeneticError::DimensionMismatch {
                index,
                width,
                height,
                found_width: s.width(),
                found_height: s.height(),
            });
        }
    }
    if gcfg.max_mutations == 0 || gcfg.population_cap == 0 {
        return Err(GeneticError::Config("mutations and population cap must be positive".into()));
    }
    let cells = width * height;
    let method = cfg.thermograph_method;
    let mut rng = ChaCha8Rng::seed_from_u64(gcfg.rng_seed);
    let mut archive: BTreeMap<GridPosition, SearchRecord> = BTreeMap::new();
    let mut seen: HashSet<GridPosition> = HashSet::new();

    let mut consider = |p: GridPosition, archive: &mut BTreeMap<_, _>| -> Option<(GridPosition, Dyadic)> {
        let rep = p.representative();
        if !seen.insert(rep) {
            return None;
        }
        let t = engine.temperature(&rep, method);
        if t >= cfg.min_temperature {
            archive.insert(rep, engine.record(&rep, method));
        }
        Some((rep, t))
    };

    let mut population: Vec<(GridPosition, Dyadic)> =
        seeds.iter().filter_map(|&s| consider(s, &mut archive)).collect();
    for _ in 0..gcfg.generations {
        if population.is_empty() {
            break;
        }
        let mut brood = Vec::with_capacity(gcfg.brood_size);
        for _ in 0..gcfg.brood_size {
            let parent = population[rng.random_range(0..population.len())].0;
            let k = rng.random_range(1..=gcfg.max_mutations as usize).min(cells);
            let flips = sample(&mut rng, cells, k).into_iter().fold(0u64, |m, i| m | 1 << i);
            let child = GridPosition::new(width, height, parent.filled() ^ flips).expect("same frame");
            if viable(cfg, &child) {
                brood.extend(consider(child, &mut archive));
            }
        }
        population.extend(brood);
        population.sort_by_cached_key(|(p, t)| (std::cmp::Reverse(*t), p.to_string()));
        population.truncate(gcfg.population_cap);
    }

    let mut records: Vec<_> = archive.into_values().collect();
    sort_records(&mut records);
    Ok(records)
}
