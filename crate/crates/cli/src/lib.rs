//! The `drinfeld` command-line front end over `drinfeld-core`.
//!
//! Exit codes: 0 on success, 1 when a verification finds a nonzero residual or an
//! irreducible cycle, 2 on usage or input errors.

pub mod json;

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use drinfeld_core::drinfeld::{DrinfeldKind, DrinfeldSet, RelationFamily};
use drinfeld_core::quiver::{
    build_window, cyclic_dimension_probe, reduce_cycle, solve_module, EdgeKind, Move, PathWord, QuiverError, SpanningTree,
};
use drinfeld_core::{Tableau, TableauError};
use thiserror::Error;

use json::{
    ClassificationJson, CycleJson, FamilyJson, GammaEntry, GeneratorJson, OrbitJson, ProbeJson, SolveJson, TableauJson,
    VerifyJson, WindowJson,
};

pub const SEED_VAR: &str = "GT_SEED";
pub const MAX_VERIFY_RANK: usize = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Failed(_) => 1,
            Self::Usage(_) | Self::Input(_) => 2,
        }
    }
}

impl From<TableauError> for CliError {
    fn from(e: TableauError) -> Self {
        Self::Input(e.to_string())
    }
}

impl From<QuiverError> for CliError {
    fn from(e: QuiverError) -> Self {
        match e {
            QuiverError::InconsistentConstraints { .. }
            | QuiverError::Irreducible { .. }
            | QuiverError::Underdetermined { .. } => Self::Failed(e.to_string()),
            QuiverError::NonGenericWindow { ref sites } => {
                let list: Vec<String> = sites.iter().map(|s| format!("{}@{}", s.mv, s.vertex)).collect();
                Self::Input(format!("{e}: {}", list.join(", ")))
            }
            _ => Self::Input(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "drinfeld", version, about = "Exact Drinfeld generators, Gelfand-Tsetlin tableaux and quiver windows for gl_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for random choices; falls back to $GT_SEED, then 0.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Tree {
    Bfs,
    Dfs,
    Random,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generic, singular or critical, with the singular pairs.
    Classify {
        /// Tableau JSON; stdin when absent.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Values of the Gelfand-Tsetlin characters gamma_mk.
    Gamma {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, requires = "k")]
        m: Option<usize>,
        #[arg(long, requires = "m")]
        k: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Coefficients of the Drinfeld generator polynomials.
    Gens {
        #[arg(long)]
        n: usize,
        /// One of a, b, c, d; all when absent.
        #[arg(long)]
        kind: Option<char>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Checks the commutation relations between the Drinfeld generators.
    Verify {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Vertices, edges and loop values of a quiver window.
    Window {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        radius: u32,
    },
    /// The one-dimensional module on a window.
    Solve {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        radius: u32,
        #[arg(long, value_enum, default_value = "bfs")]
        tree: Tree,
    },
    /// Reduces a cycle at the root to a scalar, or probes random cycles.
    Reduce {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        radius: u32,
        /// Arrows applied left to right, e.g. "b1.1 c1.1".
        #[arg(long, conflicts_with = "samples")]
        word: Option<String>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Whether two tableaux give the same module orbit.
    Orbit {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        other: PathBuf,
    },
}

/// Text produced by a successful or failed-verification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
    pub written_to: Option<PathBuf>,
}

/// Parses `argv` (program name first), runs, prints, and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(outcome) => {
            if outcome.written_to.is_none() {
                // a closed pipe downstream is not an error
                let mut out = std::io::stdout().lock();
                let _ = writeln!(out, "{}", outcome.text).and_then(|()| out.flush());
            }
            outcome.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Like [`run`] but returns the output instead of printing it.
pub fn run_captured<I, T>(argv: I) -> Result<Outcome, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError::Usage(e.to_string()))?;
    execute(cli)
}

fn execute(cli: Cli) -> Result<Outcome, CliError> {
    let seed = match cli.seed {
        Some(s) => s,
        None => match std::env::var(SEED_VAR) {
            Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("${SEED_VAR} is not an unsigned integer: {v:?}")))?,
            Err(_) => 0,
        },
    };
    let (text, code) = match cli.command {
        Command::Classify { input } => (classify(&read_tableau(input.as_ref())?)?, 0),
        Command::Gamma { input, m, k, format } => (gamma(&read_tableau(input.as_ref())?, m.zip(k), format)?, 0),
        Command::Gens { n, kind, m } => (gens(n, kind, m)?, 0),
        Command::Verify { n } => verify(n)?,
        Command::Window { input, radius } => {
            let w = build_window(&read_tableau(input.as_ref())?, radius)?;
            (to_json(&WindowJson::new(&w, None))?, 0)
        }
        Command::Solve { input, radius, tree } => (solve(&read_tableau(input.as_ref())?, radius, tree, seed)?, 0),
        Command::Reduce { input, radius, word, samples, max_len } => {
            reduce(&read_tableau(input.as_ref())?, radius, word.as_deref(), samples, max_len, seed)?
        }
        Command::Orbit { input, other } => {
            let a = read_tableau(input.as_ref())?;
            let b = read_tableau(Some(&other))?;
            (to_json(&OrbitJson { equivalent: a.module_orbit_equivalent(&b)? })?, 0)
        }
    };
    if let Some(path) = &cli.out {
        fs::write(path, format!("{text}\n")).map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(Outcome { text, code, written_to: cli.out })
}

fn read_tableau(path: Option<&PathBuf>) -> Result<Tableau, CliError> {
    let text = match path {
        Some(p) => fs::read_to_string(p).map_err(|e| CliError::Input(format!("cannot read {}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    let parsed: TableauJson = serde_json::from_str(&text).map_err(|e| CliError::Input(format!("malformed tableau JSON: {e}")))?;
    parsed.to_tableau()
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map_err(|e| CliError::Failed(e.to_string()))
}

fn classify(t: &Tableau) -> Result<String, CliError> {
    let c = t.classify();
    let kind = c.kind.label().to_string();
    serde_json::to_string(&ClassificationJson { kind, pairs: c.singular_pairs.iter().map(|&(m, i, j)| [m, i, j]).collect() })
        .map_err(|e| CliError::Failed(e.to_string()))
}

fn gamma(t: &Tableau, single: Option<(usize, u32)>, format: Format) -> Result<String, CliError> {
    let wanted: Vec<(usize, u32)> = match single {
        Some(mk) => vec![mk],
        None => (1..=t.rank()).flat_map(|m| (1..=m as u32).map(move |k| (m, k))).collect(),
    };
    let mut entries = Vec::new();
    for (m, k) in wanted {
        if m == 0 || m > t.rank() || k == 0 {
            return Err(CliError::Usage(format!("need 1 <= m <= {} and k >= 1", t.rank())));
        }
        let value = t.gamma_value(m, k).map_err(|e| CliError::Input(format!("gamma_{m}{k} is undefined: {e}")))?;
        entries.push(GammaEntry { m, k, value: json::show(&value) });
    }
    match (format, single) {
        (Format::Json, Some(_)) => to_json(&entries[0].value),
        (Format::Json, None) => to_json(&entries),
        (Format::Csv, _) => {
            let mut s = String::from("m,k,value");
            for e in &entries {
                s.push_str(&format!("\n{},{},{}", e.m, e.k, e.value));
            }
            Ok(s)
        }
    }
}

fn gens(n: usize, kind: Option<char>, m: Option<usize>) -> Result<String, CliError> {
    if n == 0 || n > MAX_VERIFY_RANK {
        return Err(CliError::Usage(format!("--n must be between 1 and {MAX_VERIFY_RANK}")));
    }
    let kinds: Vec<DrinfeldKind> = match kind {
        Some(c) => vec![DrinfeldKind::from_letter(c).ok_or_else(|| CliError::Usage(format!("unknown generator kind {c:?}")))?],
        None => DrinfeldKind::ALL.to_vec(),
    };
    let set = DrinfeldSet::new(n).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut out = Vec::new();
    for kind in kinds {
        let top = if kind == DrinfeldKind::A { n } else { n - 1 };
        let range: Vec<usize> = match m {
            Some(m) if m >= 1 && m <= top => vec![m],
            Some(m) => return Err(CliError::Usage(format!("{}_{m} is not defined for n = {n}", kind.letter()))),
            None => (1..=top).collect(),
        };
        for m in range {
            let p = set.get(kind, m).map_err(|e| CliError::Usage(e.to_string()))?;
            out.push(GeneratorJson {
                kind: kind.letter().to_string(),
                m,
                coefficients: p.coefficients().iter().map(|c| c.to_string()).collect(),
            });
        }
    }
    to_json(&out)
}

fn verify(n: usize) -> Result<(String, i32), CliError> {
    if !(2..=MAX_VERIFY_RANK).contains(&n) {
        return Err(CliError::Usage(format!("--n must be between 2 and {MAX_VERIFY_RANK}")));
    }
    let mut set = DrinfeldSet::new(n).map_err(|e| CliError::Usage(e.to_string()))?;
    let report = set.verify_relations().map_err(|e| CliError::Failed(e.to_string()))?;
    let families: Vec<FamilyJson> = RelationFamily::ALL
        .iter()
        .map(|&f| {
            let instances = report.family(f).count();
            let failures = report.family(f).filter(|i| !i.passes()).count();
            FamilyJson { family: f.label().to_string(), instances, failures, pass: failures == 0 }
        })
        .collect();
    let all_pass = report.all_pass();
    Ok((to_json(&VerifyJson { n, families, all_pass })?, if all_pass { 0 } else { 1 }))
}

fn solve(t: &Tableau, radius: u32, tree: Tree, seed: u64) -> Result<String, CliError> {
    let w = build_window(t, radius)?;
    let strategy = match tree {
        Tree::Bfs => SpanningTree::BreadthFirst,
        Tree::Dfs => SpanningTree::DepthFirst,
        Tree::Random => SpanningTree::Random(seed),
    };
    let rep = solve_module(&w, strategy)?;
    let tree = match strategy {
        SpanningTree::Random(s) => format!("random:{s}"),
        SpanningTree::BreadthFirst => "bfs".to_string(),
        SpanningTree::DepthFirst => "dfs".to_string(),
    };
    to_json(&SolveJson { tree, verified: true, window: WindowJson::new(&w, Some(&rep)) })
}

/// Parses arrows like `b2.1` (kind, row, position) separated by spaces or commas.
pub fn parse_word(text: &str) -> Result<Vec<Move>, CliError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|tok| {
            let bad = || CliError::Input(format!("bad arrow {tok:?}; expected e.g. b2.1 or c1.1"));
            let mut chars = tok.chars();
            let kind = match chars.next() {
                Some('b') => EdgeKind::B,
                Some('c') => EdgeKind::C,
                _ => return Err(bad()),
            };
            let (row, pos) = chars.as_str().split_once('.').ok_or_else(bad)?;
            Ok(Move::new(kind, row.parse().map_err(|_| bad())?, pos.parse().map_err(|_| bad())?))
        })
        .collect()
}

fn show_word(moves: &[Move]) -> String {
    moves.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ")
}

fn reduce(
    t: &Tableau,
    radius: u32,
    word: Option<&str>,
    samples: Option<usize>,
    max_len: usize,
    seed: u64,
) -> Result<(String, i32), CliError> {
    let w = build_window(t, radius)?;
    match (word, samples) {
        (Some(text), _) => {
            let moves = parse_word(text)?;
            let scalar = reduce_cycle(&w, &PathWord::new(w.root_index(), moves.clone()))?;
            let out = CycleJson { word: show_word(&moves), scalar: Some(json::show(&scalar)), error: None };
            Ok((to_json(&out)?, 0))
        }
        (None, Some(count)) => {
            let report = cyclic_dimension_probe(&w, w.root_index(), count, max_len, seed)?;
            let cycles: Vec<CycleJson> = report
                .samples
                .iter()
                .map(|(word, r)| match r {
                    Ok(s) => CycleJson { word: show_word(&word.moves), scalar: Some(json::show(s)), error: None },
                    Err(e) => CycleJson { word: show_word(&word.moves), scalar: None, error: Some(e.to_string()) },
                })
                .collect();
            let out = ProbeJson {
                seed,
                vertex: report.vertex,
                max_len,
                samples: cycles.len(),
                failures: report.failures(),
                pass: report.passes(),
                cycles,
            };
            Ok((to_json(&out)?, if out.pass { 0 } else { 1 }))
        }
        (None, None) => Err(CliError::Usage("reduce needs --word or --samples".to_string())),
    }
}
