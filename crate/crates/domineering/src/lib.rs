//! Searches over Domineering boards, the results file format, LaTeX tables
//! and the `cgt-cli` command line.

pub mod cli;
pub mod engine;
pub mod genetic;
pub mod latex;
pub mod records;
pub mod search;

pub use engine::Engine;
pub use genetic::{genetic_search, GeneticConfig, GeneticError};
pub use records::{read_records, write_records, RecordsError, SearchRecord};
pub use search::{exhaustive_search, SearchConfig, SearchError};
