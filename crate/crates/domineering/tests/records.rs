use cgt_core::{Dyadic, GameStore, GridPosition};
use cgt_domineering::records::{format_records, parse_records};
use cgt_domineering::{read_records, write_records, Engine, RecordsError, SearchRecord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DC: &str = "##.#.|##...|....#|#...#|..###";

#[test]
fn drummond_cole_line() {
    let engine = Engine::new();
    let r = engine.record(&DC.parse().unwrap(), Default::default());
    let text = format_records(5, 5, &[r]);
    assert_eq!(text, "#cgt-search v1 5x5\n##.#.|##...|....#|#...#|..###\t±(2*)\t2\n");
}

#[test]
fn empty_list_is_header_only() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.txt");
    write_records(&path, 3, 4, &[]).unwrap();
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "#cgt-search v1 3x4\n");
    assert_eq!(read_records(&path).unwrap(), ((3, 4), vec![]));
}

#[test]
fn hundred_random_records_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let engine = Engine::new();
    let store = GameStore::new();
    let records: Vec<SearchRecord> = (0..100)
        .map(|_| {
            let p = GridPosition::new(4, 3, rng.random()).unwrap();
            let r = engine.record(&p, Default::default());
            // the stored value re-parses to the same game
            let g = store.parse(&r.value).unwrap();
            assert_eq!(store.temperature(g), r.temperature);
            r
        })
        .collect();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("round.txt");
    write_records(&path, 4, 3, &records).unwrap();
    assert_eq!(read_records(&path).unwrap(), ((4, 3), records));
}

fn format_line(text: &str) -> usize {
    match parse_records(text) {
        Err(RecordsError::Format { line, .. }) => line,
        other => panic!("expected a format error, got {other:?}"),
    }
}

#[test]
fn malformed_input_names_the_line() {
    assert_eq!(format_line(""), 1);
    assert_eq!(format_line("cgt 5x5\n"), 1);
    assert_eq!(format_line("#cgt-search v1 2x1\n..\t-1\t-1\n..\t-1\n"), 3);
    assert_eq!(format_line("#cgt-search v1 2x1\n.x\t-1\t-1\n"), 2);
    assert_eq!(format_line("#cgt-search v1 2x1\n...\t-1\t-1\n"), 2);
    assert_eq!(format_line("#cgt-search v1 2x1\n..\t{1|\t-1\n"), 2);
    assert_eq!(format_line("#cgt-search v1 2x1\n..\t-1\t1/3\n"), 2);
    let ok = parse_records("#cgt-search v1 2x1\n..\t-1\t-1\n").unwrap();
    assert_eq!(ok.1[0].temperature, Dyadic::MINUS_ONE);
}

#[test]
fn missing_file_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    assert!(matches!(read_records(&dir.path().join("nope")), Err(RecordsError::Io { .. })));
}
