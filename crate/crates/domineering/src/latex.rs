//! `longtabu` tables of search records with one TikZ drawing per position.

use std::fmt::Write as _;

use cgt_core::GridPosition;

use crate::records::SearchRecord;

#[derive(Debug, Clone, PartialEq)]
pub struct TableOptions {
    /// Position/temperature pairs per row.
    pub columns: usize,
    pub tikz_scale: f64,
    /// The `% Requires ...` comment above the table.
    pub include_header: bool,
}

impl Default for TableOptions {
    fn default() -> Self {
        Self { columns: 3, tikz_scale: 0.4, include_header: true }
    }
}

pub const PACKAGES_COMMENT: &str = "% Requires \\usepackage{tabu}, \\usepackage{tikz} and \
\\usepackage{longtable} \\tabulinesep=1.2mm\n";

/// Shortest decimal rendering: `2`, `2.4`, `0.4`.
fn decimal(x: f64) -> String {
    let s = format!("{:.4}", x);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s.is_empty() || s == "-" {
        "0".into()
    } else {
        s.into()
    }
}

/// TikZ drawing of a board, origin at the bottom-left cell.
pub fn tikz_picture(p: &GridPosition, scale: f64) -> String {
    let (w, h) = (p.width(), p.height());
    let mut out = format!("\\begin{{tikzpicture}}[scale={}] ", decimal(scale));
    for y in 0..h {
        for x in 0..w {
            if p.is_filled(x, h - 1 - y) {
                let _ = write!(out, "\\fill[fill=gray] ({x},{y}) rectangle ({},{}); ", x + 1, y + 1);
            }
        }
    }
    let _ = write!(out, "\\draw[step=1cm,black] (0,0) grid ({w}, {h}); \\end{{tikzpicture}}");
    out
}

fn is_value_text(s: &str) -> bool {
    s.chars().all(|c| c.is_ascii_digit() || "-/*±{}|,() ".contains(c))
}

/// Renders the records row-major, padding the last row with empty cells.
pub fn emit_table(records: &[SearchRecord], opts: &TableOptions) -> String {
    assert!(opts.columns >= 1, "at least one column");
    let cell_width =
        records.iter().map(|r| r.position.width()).max().map_or(2.0, |w| w as f64 * opts.tikz_scale);
    let mut out = String::new();
    if opts.include_header {
        out.push_str(PACKAGES_COMMENT);
    }
    let pair = format!("m{{{}cm}} m{{1cm}}", decimal(cell_width));
    let spec = vec![pair; opts.columns].join("|");
    let _ = writeln!(out, "\\begin{{longtabu}}{{{spec}}} ");
    let header = vec!["Position & Temp."; opts.columns].join(" & ");
    let _ = writeln!(out, "\\hline {header} \\\\ \\hline \\endhead");
    for row in records.chunks(opts.columns) {
        let mut cells = Vec::with_capacity(2 * opts.columns);
        for r in row {
            assert!(is_value_text(&r.value), "unexpected characters in value {:?}", r.value);
            cells.push(tikz_picture(&r.position, opts.tikz_scale));
            cells.push(format!("${}$", r.temperature));
        }
        cells.resize(2 * opts.columns, String::new());
        let _ = writeln!(out, "{} \\\\", cells.join(" & "));
    }
    out.push_str("\\end{longtabu}\n");
    out
}
