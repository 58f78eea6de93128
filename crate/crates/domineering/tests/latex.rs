use cgt_core::{Dyadic, GridPosition};
use cgt_domineering::latex::{emit_table, tikz_picture, TableOptions, PACKAGES_COMMENT};
use cgt_domineering::Engine;
use cgt_domineering::SearchRecord;

const REFERENCE_5X5: &str = include_str!("fixtures/table_5x5_reference.tex");

fn record(engine: &Engine, grid: &str) -> SearchRecord {
    let p: GridPosition = grid.parse().unwrap();
    engine.record(&p, Default::default())
}

#[test]
fn reproduces_the_reference_five_by_five_table() {
    let engine = Engine::new();
    // Orientation as drawn in the reference table.
    let records: Vec<_> =
        ["##.#.|##...|....#|#...#|..###", "##.#.|##...|....#|#...#|..#..", "##.#.|##...|....#|#....|..##."]
            .iter()
            .map(|g| record(&engine, g))
            .collect();
    let temps: Vec<_> = records.iter().map(|r| r.temperature.to_string()).collect();
    assert_eq!(temps, ["2", "15/8", "15/8"]);
    let opts = TableOptions { include_header: false, ..TableOptions::default() };
    assert_eq!(emit_table(&records, &opts), REFERENCE_5X5);
}

#[test]
fn header_comment_names_packages() {
    let out = emit_table(&[], &TableOptions::default());
    assert!(out.starts_with(PACKAGES_COMMENT));
    for pkg in ["tabu", "tikz", "longtable"] {
        assert!(PACKAGES_COMMENT.contains(&format!("\\usepackage{{{pkg}}}")));
    }
}

#[test]
fn empty_list_gives_header_only_environment() {
    let opts = TableOptions { include_header: false, ..TableOptions::default() };
    let out = emit_table(&[], &opts);
    assert_eq!(out.lines().count(), 3);
    assert!(out.starts_with("\\begin{longtabu}"));
    assert!(
        out.contains("\\hline Position & Temp. & Position & Temp. & Position & Temp. \\\\ \\hline \\endhead")
    );
    assert!(out.ends_with("\\end{longtabu}\n"));
}

#[test]
fn last_row_is_padded() {
    let engine = Engine::new();
    let records: Vec<_> = [".|.", "..", "..|..", "."].iter().map(|g| record(&engine, g)).collect();
    let out = emit_table(&records, &TableOptions::default());
    let rows: Vec<_> = out.lines().filter(|l| l.starts_with("\\begin{tikzpicture}")).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[1].ends_with("$-1$ &  &  &  &  \\\\"), "{}", rows[1]);

    let two = TableOptions { columns: 2, ..TableOptions::default() };
    let out = emit_table(&records[..3], &two);
    assert_eq!(out.lines().filter(|l| l.starts_with("\\begin{tikzpicture}")).count(), 2);
    assert!(out.contains("{m{0.8cm} m{1cm}|m{0.8cm} m{1cm}}"));
}

#[test]
fn one_fill_per_filled_cell() {
    for mask in [0u64, 1, 0b1010_0101, u64::MAX] {
        let p = GridPosition::new(4, 3, mask).unwrap();
        let pic = tikz_picture(&p, 0.5);
        assert_eq!(pic.matches("\\fill").count() as u32, p.filled_count());
        assert!(pic.contains("[scale=0.5]"));
        assert!(pic.contains("grid (4, 3)"));
    }
    // bottom-left origin: the top-left cell is drawn at y = height - 1
    let pic = tikz_picture(&"#.|..".parse().unwrap(), 1.0);
    assert!(pic.contains("(0,1) rectangle (1,2)"));
}

#[test]
fn temperatures_render_as_math() {
    let p: GridPosition = "..".parse().unwrap();
    let r = SearchRecord { position: p, value: "-1".into(), temperature: Dyadic::new(-3, 4) };
    assert!(emit_table(&[r], &TableOptions::default()).contains("& $-3/16$ &"));
}
