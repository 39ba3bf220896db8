//! Command-line options, the optional TOML config file, and their merge into
//! a validated [`RunConfig`]. Flags take precedence over the config file.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use oddcrit::factors::{DEFAULT_CAP, MAX_CAP};
use oddcrit::{MatrixKind, TheoremId, Tolerances};
use serde::Deserialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Gprime,
    G2,
    G3,
    Gstar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Full enumeration with the definitional cross-check.
    Exact,
    /// Bounded search for a violating set only.
    WitnessOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Perturb {
    Add,
    Delete,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Json,
    Csv,
}

fn parse_matrix(s: &str) -> std::result::Result<MatrixKind, String> {
    s.parse().map_err(|e: oddcrit::Error| e.to_string())
}

fn parse_theorem(s: &str) -> std::result::Result<TheoremId, String> {
    s.parse().map_err(|e: oddcrit::Error| e.to_string())
}

/// Flags shared by every command.
#[derive(Debug, Clone, Default, Args)]
pub struct Options {
    /// TOML file with default values for any of the flags below
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Graph file (graph6 lines or an edge list)
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Odd upper bound on factor degrees
    #[arg(long, global = true)]
    pub b: Option<usize>,
    /// Number of deleted vertices in the criticality test
    #[arg(long, global = true)]
    pub k: Option<usize>,
    /// Minimum-degree parameter of the extremal graph
    #[arg(long, global = true)]
    pub delta: Option<usize>,
    /// Join size of the proof graphs
    #[arg(long, global = true)]
    pub s: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub variant: Option<Variant>,
    /// adjacency, signless-laplacian, distance or distance-signless-laplacian
    #[arg(long, global = true, value_parser = parse_matrix)]
    pub matrix: Option<MatrixKind>,
    /// Condition to evaluate: 1.1 to 1.6
    #[arg(long, global = true, value_parser = parse_theorem)]
    pub theorem: Option<TheoremId>,
    #[arg(long, global = true, value_enum)]
    pub mode: Option<Mode>,
    /// Single-edge perturbations generated by `sweep`
    #[arg(long, global = true, value_enum)]
    pub perturb: Option<Perturb>,
    /// Largest order accepted by exact subset enumeration
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Subsets examined before a witness-only search gives up
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Equality tolerance for spectral comparisons
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    /// Report file; for `extremal`, the graph6 output file
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Machine-readable format; also replaces the table on standard output
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct ConfigFile {
    input: Option<PathBuf>,
    n: Option<usize>,
    b: Option<usize>,
    k: Option<usize>,
    delta: Option<usize>,
    s: Option<usize>,
    variant: Option<Variant>,
    matrix: Option<String>,
    theorem: Option<String>,
    mode: Option<Mode>,
    perturb: Option<Perturb>,
    cap: Option<usize>,
    budget: Option<u64>,
    tolerance: Option<f64>,
    out: Option<PathBuf>,
    format: Option<Format>,
}

fn load_config(path: &Path) -> Result<ConfigFile> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Fully resolved and validated parameters.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub input: Option<PathBuf>,
    pub n: Option<usize>,
    pub b: Option<usize>,
    pub k: Option<usize>,
    pub delta: Option<usize>,
    pub s: Option<usize>,
    pub variant: Variant,
    pub matrix: MatrixKind,
    pub theorem: Option<TheoremId>,
    pub mode: Mode,
    pub perturb: Perturb,
    pub cap: usize,
    pub budget: u64,
    pub tolerances: Tolerances,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
}

impl RunConfig {
    pub fn resolve(opts: &Options) -> Result<Self> {
        let file = match &opts.config {
            Some(path) => load_config(path)?,
            None => ConfigFile::default(),
        };
        let matrix = match (opts.matrix, &file.matrix) {
            (Some(m), _) => m,
            (None, Some(m)) => m.parse()?,
            (None, None) => MatrixKind::Distance,
        };
        let theorem = match (opts.theorem, &file.theorem) {
            (Some(t), _) => Some(t),
            (None, Some(t)) => Some(t.parse()?),
            (None, None) => None,
        };
        let cap = opts.cap.or(file.cap).unwrap_or(DEFAULT_CAP);
        if cap == 0 || cap > MAX_CAP {
            bail!("--cap must lie in 1..={MAX_CAP}, got {cap}");
        }
        let mut tolerances = Tolerances::default();
        if let Some(t) = opts.tolerance.or(file.tolerance) {
            if !(t.is_finite() && t > 0.0) {
                bail!("--tolerance must be a positive number, got {t}");
            }
            tolerances = tolerances.with_equality(t);
        }
        Ok(RunConfig {
            input: opts.input.clone().or(file.input),
            n: opts.n.or(file.n),
            b: opts.b.or(file.b),
            k: opts.k.or(file.k),
            delta: opts.delta.or(file.delta),
            s: opts.s.or(file.s),
            variant: opts.variant.or(file.variant).unwrap_or(Variant::Gprime),
            matrix,
            theorem,
            mode: opts.mode.or(file.mode).unwrap_or(Mode::Exact),
            perturb: opts.perturb.or(file.perturb).unwrap_or(Perturb::Add),
            cap,
            budget: opts.budget.or(file.budget).unwrap_or(10_000_000),
            tolerances,
            out: opts.out.clone().or(file.out),
            format: opts.format.or(file.format),
        })
    }
}

/// Unwraps a required parameter with a message naming its flag.
pub fn required<T: Copy>(value: Option<T>, flag: &str) -> Result<T> {
    value.with_context(|| format!("missing required parameter --{flag}"))
}
