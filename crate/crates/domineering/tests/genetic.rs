use cgt_core::families::fixtures::DRUMMOND_COLE;
use cgt_core::{Dyadic, GridPosition, ThermographMethod};
use cgt_domineering::{genetic_search, Engine, GeneticConfig, GeneticError, SearchConfig};

fn grid(s: &str) -> GridPosition {
    s.parse().unwrap()
}

fn hot(width: usize, height: usize) -> SearchConfig {
    SearchConfig { min_temperature: Dyadic::integer(2), ..SearchConfig::new(width, height) }
}

fn small(generations: u64, rng_seed: u64) -> GeneticConfig {
    GeneticConfig { generations, brood_size: 12, population_cap: 16, rng_seed, ..GeneticConfig::default() }
}

#[test]
fn qualifying_seed_is_archived() {
    let engine = Engine::new();
    let seed = grid(DRUMMOND_COLE);
    for generations in [0, 5] {
        let archive = genetic_search(&hot(5, 5), &small(generations, 1), &[seed], &engine).unwrap();
        assert!(archive.iter().any(|r| r.position == seed.representative()));
    }
}

#[test]
fn zero_generations_keeps_qualifying_seeds_only() {
    let engine = Engine::new();
    let cold = grid("..#..|.....|#...#|.....|..#..");
    let archive = genetic_search(&hot(5, 5), &small(0, 1), &[cold, grid(DRUMMOND_COLE)], &engine).unwrap();
    assert_eq!(archive.len(), 1);
    assert_eq!(archive[0].temperature, Dyadic::integer(2));
}

#[test]
fn chain_in_a_larger_frame_stays_hot() {
    let engine = Engine::new();
    // the five-wide, six-tall chain with one filled row below
    let seed = grid("##.#.|##...|....#|#...#|..#..|###.#|#####");
    let archive = genetic_search(&hot(5, 7), &small(4, 3), &[seed], &engine).unwrap();
    assert!(!archive.is_empty());
    let fresh = Engine::new();
    for r in &archive {
        let t = fresh.temperature(&r.position, ThermographMethod::Scaffold);
        assert_eq!(t, r.temperature);
        assert!(t >= Dyadic::integer(2), "{}", r.position);
    }
}

#[test]
fn fixed_seed_is_deterministic() {
    let seed = grid(DRUMMOND_COLE);
    let cfg = SearchConfig { min_temperature: Dyadic::new(3, 1), ..SearchConfig::new(5, 5) };
    let a = genetic_search(&cfg, &small(6, 42), &[seed], &Engine::new()).unwrap();
    let b = genetic_search(&cfg, &small(6, 42), &[seed], &Engine::new()).unwrap();
    assert_eq!(a, b);
    assert!(a.len() > 1);
}

#[test]
fn seed_errors() {
    let engine = Engine::new();
    assert_eq!(genetic_search(&hot(5, 5), &small(1, 0), &[], &engine), Err(GeneticError::NoSeeds));
    let err = genetic_search(&hot(5, 5), &small(1, 0), &[grid(DRUMMOND_COLE), grid("..|..")], &engine);
    assert!(matches!(err, Err(GeneticError::DimensionMismatch { index: 1, .. })));
}
