use std::collections::HashSet;
use std::sync::atomic::AtomicBool;

use cgt_core::{Dyadic, GridPosition, ThermographMethod};
use cgt_domineering::records::format_records;
use cgt_domineering::search::{exhaustive_search_with, SearchStats};
use cgt_domineering::{exhaustive_search, Engine, SearchConfig, SearchError};

#[test]
fn two_by_two_keeps_the_empty_board_and_the_corner() {
    let records = exhaustive_search(&SearchConfig::new(2, 2)).unwrap();
    let found: Vec<_> = records.iter().map(|r| (r.position.to_string(), r.value.as_str())).collect();
    // Spanning, connected masks: the empty board and the four one-cell
    // fills, which are a single class.
    assert_eq!(found, [("..|..".to_string(), "±1"), ("#.|..".to_string(), "*")]);
    assert_eq!(records[0].temperature, Dyadic::ONE);
    assert_eq!(records[1].temperature, Dyadic::ZERO);
}

#[test]
fn no_empty_tiles_leaves_nothing() {
    let cfg = SearchConfig { max_empty_tiles: Some(0), ..SearchConfig::new(3, 3) };
    assert!(exhaustive_search(&cfg).unwrap().is_empty());
}

#[test]
fn invalid_configurations() {
    assert!(matches!(exhaustive_search(&SearchConfig::new(9, 2)), Err(SearchError::Config(_))));
    assert!(matches!(exhaustive_search(&SearchConfig::new(0, 2)), Err(SearchError::Config(_))));
    let cfg = SearchConfig { worker_count: 0, ..SearchConfig::new(2, 2) };
    assert!(matches!(exhaustive_search(&cfg), Err(SearchError::Config(_))));
}

#[test]
fn worker_count_does_not_change_output() {
    let run = |workers| {
        let cfg = SearchConfig { worker_count: workers, ..SearchConfig::new(4, 3) };
        format_records(4, 3, &exhaustive_search(&cfg).unwrap())
    };
    let one = run(1);
    assert_eq!(one, run(3));
    assert_eq!(one, run(8));
}

#[test]
fn records_are_consistent_deduplicated_and_sorted() {
    let cfg = SearchConfig { allow_decomposable: true, ..SearchConfig::new(4, 4) };
    let records = exhaustive_search(&cfg).unwrap();
    let fresh = Engine::new();
    let mut classes = HashSet::new();
    for r in &records {
        assert_eq!(fresh.record(&r.position, ThermographMethod::Scaffold), *r);
        assert!(r.position.is_class_representative());
        assert!(classes.insert(r.position.symmetry_class()), "{}", r.position);
        assert!(r.position.is_spanning());
    }
    for pair in records.windows(2) {
        let key =
            |r: &cgt_domineering::SearchRecord| (std::cmp::Reverse(r.temperature), r.position.to_string());
        assert!(key(&pair[0]) < key(&pair[1]));
    }
}

#[test]
fn raising_the_threshold_gives_a_subset() {
    let at = |t: Dyadic| {
        let cfg = SearchConfig { min_temperature: t, ..SearchConfig::new(4, 4) };
        exhaustive_search(&cfg).unwrap()
    };
    let all = at(Dyadic::MINUS_ONE);
    let hot = at(Dyadic::ONE);
    assert!(hot.len() < all.len());
    assert!(hot.iter().all(|r| all.contains(r) && r.temperature >= Dyadic::ONE));
    assert_eq!(hot.len(), all.iter().filter(|r| r.temperature >= Dyadic::ONE).count());
}

#[test]
fn filters_compose() {
    let base = SearchConfig::new(3, 3);
    let strict = exhaustive_search(&base).unwrap();
    let loose = exhaustive_search(&SearchConfig {
        allow_decomposable: true,
        require_spanning: false,
        dedup_symmetry: false,
        ..base.clone()
    })
    .unwrap();
    assert!(strict.iter().all(|r| loose.contains(r)));
    // without any filter every mask is evaluated
    assert_eq!(loose.len(), 512);
    let capped = exhaustive_search(&SearchConfig { max_empty_tiles: Some(4), ..base }).unwrap();
    assert!(capped.iter().all(|r| r.position.empty_count() <= 4));
    assert!(capped.iter().all(|r| strict.contains(r)));
}

#[test]
fn stats_count_masks() {
    let engine = Engine::new();
    let (records, stats) =
        exhaustive_search_with(&SearchConfig::new(3, 3), &engine, &AtomicBool::new(false)).unwrap();
    assert_eq!(stats.masks, 512);
    assert_eq!(stats.kept as usize, records.len());
    assert!(stats.evaluated >= stats.kept);
    assert_ne!(stats, SearchStats::default());
}

#[test]
fn cancellation_leaves_caches_usable() {
    let engine = Engine::new();
    let cancel = AtomicBool::new(true);
    let cfg = SearchConfig::new(4, 4);
    assert_eq!(exhaustive_search_with(&cfg, &engine, &cancel), Err(SearchError::Cancelled));
    let (records, _) = exhaustive_search_with(&cfg, &engine, &AtomicBool::new(false)).unwrap();
    assert_eq!(records, exhaustive_search(&cfg).unwrap());
    let p: GridPosition = "##.#.|##...|....#|#...#|..###".parse().unwrap();
    assert_eq!(engine.temperature(&p, ThermographMethod::Direct), Dyadic::integer(2));
}
