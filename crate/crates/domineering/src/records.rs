//! The results file: a header line `#cgt-search v1 <width>x<height>` and
//! one `<grid>\t<value>\t<temperature>` line per record.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use cgt_core::{Dyadic, GameStore, GridPosition};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SearchRecord {
    pub position: GridPosition,
    /// Canonical value in the value notation.
    pub value: String,
    pub temperature: Dyadic,
}

#[derive(Debug, Error)]
pub enum RecordsError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

fn format_error(line: usize, message: impl Into<String>) -> RecordsError {
    RecordsError::Format { line, message: message.into() }
}

pub const HEADER_PREFIX: &str = "#cgt-search v1 ";

pub fn format_records(width: usize, height: usize, records: &[SearchRecord]) -> String {
    let mut out = format!("{HEADER_PREFIX}{width}x{height}\n");
    for r in records {
        let _ = writeln!(out, "{}\t{}\t{}", r.position, r.value, r.temperature);
    }
    out
}

/// Parses a results file. Returns the grid dimensions and the records.
pub fn parse_records(text: &str) -> Result<((usize, usize), Vec<SearchRecord>), RecordsError> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| format_error(1, "missing header"))?;
    let dims = header
        .strip_prefix(HEADER_PREFIX)
        .and_then(|d| d.split_once('x'))
        .and_then(|(w, h)| Some((w.parse::<usize>().ok()?, h.parse::<usize>().ok()?)))
        .ok_or_else(|| format_error(1, format!("expected `{HEADER_PREFIX}<width>x<height>`")))?;
    let store = GameStore::new();
    let mut records = Vec::new();
    for (i, line) in lines.enumerate() {
        let n = i + 2;
        let fields: Vec<&str> = line.split('\t').collect();
        let [grid, value, temperature] = fields[..] else {
            return Err(format_error(n, format!("expected 3 tab-separated fields, found {}", fields.len())));
        };
        let position: GridPosition = grid.parse().map_err(|e| format_error(n, format!("bad grid: {e}")))?;
        if (position.width(), position.height()) != dims {
            return Err(format_error(
                n,
                format!(
                    "grid is {}x{}, header says {}x{}",
                    position.width(),
                    position.height(),
                    dims.0,
                    dims.1
                ),
            ));
        }
        store.parse(value).map_err(|e| format_error(n, format!("bad value: {e}")))?;
        let temperature: Dyadic =
            temperature.parse().map_err(|e| format_error(n, format!("bad temperature: {e}")))?;
        records.push(SearchRecord { position, value: value.to_string(), temperature });
    }
    Ok((dims, records))
}

pub fn write_records(
    path: &Path,
    width: usize,
    height: usize,
    records: &[SearchRecord],
) -> Result<(), RecordsError> {
    fs::write(path, format_records(width, height, records))
        .map_err(|source| RecordsError::Io { path: path.to_path_buf(), source })
}

pub fn read_records(path: &Path) -> Result<((usize, usize), Vec<SearchRecord>), RecordsError> {
    let text =
        fs::read_to_string(path).map_err(|source| RecordsError::Io { path: path.to_path_buf(), source })?;
    parse_records(&text)
}
