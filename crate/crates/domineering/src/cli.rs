//! `cgt-cli`: exit code 0 on success, 1 on domain errors (bad files, bad
//! grids, failed checks), 2 on usage errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::sync::atomic::AtomicBool;

use cgt_core::families::{check_family, FamilyKind};
use cgt_core::{Dyadic, GridPosition, ThermographMethod};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::engine::Engine;
use crate::genetic::{genetic_search, GeneticConfig};
use crate::latex::{emit_table, TableOptions};
use crate::records::{read_records, write_records, HEADER_PREFIX};
use crate::search::{exhaustive_search_with, SearchConfig};

#[derive(Debug, Parser)]
#[command(name = "cgt-cli", version, about = "Combinatorial game values and Domineering searches")]
pub struct Cli {
    #[command(subcommand)]
    command: Top,
}

#[derive(Debug, Subcommand)]
enum Top {
    /// Domineering evaluation, searches and tables.
    #[command(subcommand)]
    Domineering(Command),
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate every position of a board and keep the hot ones.
    ExhaustiveSearch(ExhaustiveArgs),
    /// Render a results file as a LaTeX longtabu table.
    LatexTable(LatexArgs),
    /// Print the value and temperature of positions.
    Evaluate(EvaluateArgs),
    /// Check the claimed values of a family of positions.
    FamilyCheck(FamilyArgs),
    /// Mutate seed positions, keeping those that stay hot.
    GeneticSearch(GeneticArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Scaffold,
    Direct,
}

impl From<Method> for ThermographMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Scaffold => ThermographMethod::Scaffold,
            Method::Direct => ThermographMethod::Direct,
        }
    }
}

fn side(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if (1..=cgt_core::domineering::MAX_SIDE).contains(&n) => Ok(n),
        Ok(_) => Err(format!("must be between 1 and {}", cgt_core::domineering::MAX_SIDE)),
        Err(e) => Err(e.to_string()),
    }
}

fn fraction(s: &str) -> Result<Dyadic, String> {
    s.parse::<Dyadic>().map_err(|e| e.to_string())
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// Filters shared by both searches.
#[derive(Debug, Args)]
struct FilterArgs {
    /// Keep positions at least this hot (`p/q`, q a power of two).
    #[arg(long, value_parser = fraction, default_value = "-1", allow_hyphen_values = true)]
    min_temperature: Dyadic,
    /// Skip positions with more empty cells.
    #[arg(long)]
    max_empty_tiles: Option<u32>,
    /// Also evaluate positions made of several separate regions.
    #[arg(long)]
    include_decompositions: bool,
    #[arg(long, value_enum, default_value = "scaffold")]
    thermograph_method: Method,
}

#[derive(Debug, Args)]
struct ExhaustiveArgs {
    #[arg(long, value_parser = side)]
    width: usize,
    #[arg(long, value_parser = side)]
    height: usize,
    #[arg(long)]
    output_path: PathBuf,
    #[command(flatten)]
    filters: FilterArgs,
    /// Keep positions whose empty cells miss an edge of the board.
    #[arg(long)]
    no_spanning: bool,
    /// Keep every orientation instead of one per symmetry class.
    #[arg(long)]
    no_symmetry_dedup: bool,
    #[arg(long, value_parser = positive, default_value = "1")]
    workers: usize,
    /// Also report how many results contain the hook pattern.
    #[arg(long)]
    contains_hook: bool,
}

#[derive(Debug, Args)]
struct LatexArgs {
    #[arg(long)]
    in_file: PathBuf,
    #[arg(long)]
    out_file: PathBuf,
    /// Position/temperature pairs per row.
    #[arg(long, value_parser = positive, default_value = "3")]
    columns: usize,
    /// TikZ scale of each drawing.
    #[arg(long, default_value = "0.4")]
    scale: f64,
    /// Leave out the comment listing required packages.
    #[arg(long)]
    no_header: bool,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("input").required(true))]
struct EvaluateArgs {
    /// Rows top to bottom, separated by `|`: `.` empty, `#` filled.
    #[arg(long, group = "input")]
    grid: Option<String>,
    /// Read one grid per line from standard input.
    #[arg(long, group = "input")]
    stdin: bool,
    #[arg(long, value_enum, default_value = "scaffold")]
    thermograph_method: Method,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    /// One of L, L+, L-, Lcup, DCL.
    #[arg(long, allow_hyphen_values = true)]
    family: String,
    #[arg(long, value_parser = positive)]
    n_max: usize,
}

#[derive(Debug, Args)]
struct GeneticArgs {
    /// One grid per line. Blank lines, `//` comments and a results-file
    /// header are skipped, and only the first tab-separated field is read,
    /// so a results file works too.
    #[arg(long)]
    seeds_file: PathBuf,
    #[arg(long, default_value = "10000")]
    generations: u64,
    #[arg(long, default_value = "0")]
    rng_seed: u64,
    #[arg(long)]
    output_path: PathBuf,
    #[command(flatten)]
    filters: FilterArgs,
    /// Each child toggles between 1 and this many cells.
    #[arg(long, value_parser = positive, default_value = "3")]
    mutations_per_child: usize,
    #[arg(long, value_parser = positive, default_value = "64")]
    population_cap: usize,
}

/// A failed command: message for standard error and the exit code.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Runs the command line against the given streams and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let Top::Domineering(command) = cli.command;
    let result = match command {
        Command::ExhaustiveSearch(a) => exhaustive(a, out),
        Command::LatexTable(a) => latex(a),
        Command::Evaluate(a) => evaluate(a, out),
        Command::FamilyCheck(a) => family(a, out),
        Command::GeneticSearch(a) => genetic(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(Failure(message)) => {
            let _ = writeln!(err, "error: {message}");
            1
        }
    }
}

fn search_config(width: usize, height: usize, f: &FilterArgs) -> SearchConfig {
    SearchConfig {
        min_temperature: f.min_temperature,
        max_empty_tiles: f.max_empty_tiles,
        allow_decomposable: f.include_decompositions,
        thermograph_method: f.thermograph_method.into(),
        ..SearchConfig::new(width, height)
    }
}

fn exhaustive(a: ExhaustiveArgs, out: &mut dyn Write) -> Outcome {
    let cfg = SearchConfig {
        require_spanning: !a.no_spanning,
        dedup_symmetry: !a.no_symmetry_dedup,
        worker_count: a.workers,
        ..search_config(a.width, a.height, &a.filters)
    };
    let engine = Engine::new();
    let (records, _) = exhaustive_search_with(&cfg, &engine, &AtomicBool::new(false))?;
    write_records(&a.output_path, a.width, a.height, &records)?;
    writeln!(out, "found {} positions >= {}", records.len(), cfg.min_temperature)?;
    if a.contains_hook {
        let hooked = records.iter().filter(|r| r.position.contains_hook()).count();
        writeln!(out, "{hooked} of {} positions contain the hook", records.len())?;
    }
    Ok(())
}

fn latex(a: LatexArgs) -> Outcome {
    if !(a.scale.is_finite() && a.scale > 0.0) {
        return Err(Failure(format!("scale must be positive, got {}", a.scale)));
    }
    let (_, records) = read_records(&a.in_file)?;
    let opts = TableOptions { columns: a.columns, tikz_scale: a.scale, include_header: !a.no_header };
    fs::write(&a.out_file, emit_table(&records, &opts))
        .map_err(|e| Failure(format!("{}: {e}", a.out_file.display())))
}

fn evaluate(a: EvaluateArgs, out: &mut dyn Write) -> Outcome {
    let engine = Engine::new();
    let method = a.thermograph_method.into();
    let grids: Vec<String> = match a.grid {
        Some(g) => vec![g],
        None => io::stdin()
            .lock()
            .lines()
            .collect::<io::Result<Vec<_>>>()?
            .into_iter()
            .map(|l| l.trim().to_string())
            .filter(|l| !l.is_empty())
            .collect(),
    };
    for g in grids {
        let p: GridPosition = g.parse().map_err(|e| Failure(format!("{g:?}: {e}")))?;
        let r = engine.record(&p, method);
        writeln!(out, "value={}\ttemperature={}", r.value, r.temperature)?;
        let parts = p.decompose();
        if parts.len() > 1 {
            for (i, c) in parts.iter().enumerate() {
                let r = engine.record(c, method);
                writeln!(
                    out,
                    "  component {}\t{}\tvalue={}\ttemperature={}",
                    i + 1,
                    c,
                    r.value,
                    r.temperature
                )?;
            }
        }
    }
    Ok(())
}

fn family(a: FamilyArgs, out: &mut dyn Write) -> Outcome {
    let kind: FamilyKind = a.family.parse()?;
    let engine = Engine::new();
    let checks = check_family(&engine.store, &engine.table, kind, a.n_max)?;
    let mut failed = 0;
    for c in &checks {
        let status = if c.passed() { "ok" } else { "MISMATCH" };
        failed += usize::from(!c.passed());
        writeln!(
            out,
            "{}_{}\t{}\texpected={}\tcomputed={}\ttemperature={}\t{status}",
            c.kind, c.n, c.grid, c.expected, c.computed, c.temperature
        )?;
    }
    if failed > 0 {
        return Err(Failure(format!("{failed} of {} checks failed", checks.len())));
    }
    Ok(())
}

fn read_seeds(path: &PathBuf) -> Result<Vec<GridPosition>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with("//") && !l.starts_with(HEADER_PREFIX))
        .map(|(i, l)| {
            let grid = l.split('\t').next().unwrap_or_default().trim();
            grid.parse().map_err(|e| Failure(format!("{}: line {}: {e}", path.display(), i + 1)))
        })
        .collect()
}

fn genetic(a: GeneticArgs, out: &mut dyn Write) -> Outcome {
    let seeds = read_seeds(&a.seeds_file)?;
    let (width, height) = seeds.first().map_or((1, 1), |s| (s.width(), s.height()));
    let cfg = search_config(width, height, &a.filters);
    let gcfg = GeneticConfig {
        generations: a.generations,
        max_mutations: a.mutations_per_child as u32,
        population_cap: a.population_cap,
        brood_size: a.population_cap,
        rng_seed: a.rng_seed,
    };
    let engine = Engine::new();
    let records = genetic_search(&cfg, &gcfg, &seeds, &engine)?;
    write_records(&a.output_path, width, height, &records)?;
    writeln!(out, "found {} positions >= {}", records.len(), cfg.min_temperature)?;
    Ok(())
}
