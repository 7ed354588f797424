//! Command-line front end.
//!
//! Exit codes: 0 on success or a passing check, 1 when a check fails,
//! 2 on bad parameters.

use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::coloring::EdgeColoring;
use crate::combined::Construction;
use crate::enumerator::{annotate, enumerate, render_listing};
use crate::error::{Error, Result};
use crate::patterns::PatternSet;
use crate::soundness;
use crate::verifier::{binomial, lower_bound_56, recursion_bound, verify_with, VerifyOptions};

/// Clique counts above this need `--long-run`.
pub const LONG_RUN_CLIQUES: u128 = 500_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "ramsey56",
    version,
    about = "Explicit (5,6)-colorings of K_{q^2} and their verification"
)]
pub struct Cli {
    /// Worker threads (defaults to available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the coloring of K_{q^2} and write the edge export and color dictionary.
    Build(BuildArgs),
    /// Check that every p-clique spans at least `min-colors` colors.
    Verify(VerifyArgs),
    /// List colorings of K_n avoiding the forbidden patterns, up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Print the f(n,5,6) lower bound and the neighborhood recursion size.
    Bounds(BoundsArgs),
    /// Pattern-set utilities.
    #[command(subcommand)]
    Patterns(PatternsCommand),
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long)]
    pub q: u32,
    /// Directory for output files.
    #[arg(long, env = "RAMSEY56_OUT_DIR", default_value = ".")]
    pub out_dir: PathBuf,
    /// Edge export path (default: <out-dir>/coloring_q<q>.txt).
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Color dictionary path (default: <out-dir>/colors_q<q>.txt).
    #[arg(long)]
    pub dictionary: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Build the construction for this q.
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    pub q: Option<u32>,
    /// Load an edge export instead of building.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 5)]
    pub p: usize,
    #[arg(long = "min-colors", default_value_t = 6)]
    pub min_colors: usize,
    /// Allow runs above 5·10^8 cliques (q = 13 and up).
    #[arg(long)]
    pub long_run: bool,
    /// Write a JSON summary here.
    #[arg(long)]
    pub summary: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, default_value_t = 5)]
    pub n: usize,
    /// Color budget.
    #[arg(long, default_value_t = 5)]
    pub m: usize,
    /// Pattern file (default: the shipped set).
    #[arg(long)]
    pub patterns: Option<PathBuf>,
    /// Comma-separated pattern names left out of the filter; output rows are
    /// annotated with the ones they contain.
    #[arg(long, value_delimiter = ',')]
    pub exclude: Vec<String>,
    /// Write the listing here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub n: u64,
    /// Colors t for the recursion (default: the lower-bound ceiling).
    #[arg(long)]
    pub t: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum PatternsCommand {
    /// Scan random 5-subsets of built constructions for shipped patterns.
    Validate(ValidateArgs),
    /// Print the shipped pattern file.
    Export,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long, value_delimiter = ',', default_values_t = vec![7u32, 11])]
    pub q: Vec<u32>,
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    #[arg(long)]
    pub patterns: Option<PathBuf>,
    /// Check every 5-subset instead of sampling.
    #[arg(long)]
    pub exhaustive: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Failure,
}

pub fn run(cli: Cli) -> ExitCode {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match execute(&cli, &mut out) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Failure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) | Error::Json(_) | Error::Parse { .. } => 1,
        _ => 2,
    }
}

fn load_patterns(path: Option<&Path>) -> Result<PatternSet> {
    match path {
        Some(p) => PatternSet::load(p),
        None => Ok(PatternSet::default_set()),
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    let threads = cli.threads;
    if threads == Some(0) {
        return Err(Error::InvalidParameter("--threads must be positive".into()));
    }
    match &cli.command {
        Command::Build(a) => build(a, out),
        Command::Verify(a) => verify_cmd(a, threads, out),
        Command::Enumerate(a) => buffered(threads, out, |buf| enumerate_cmd(a, buf)),
        Command::Bounds(a) => bounds(a, out),
        Command::Patterns(PatternsCommand::Validate(a)) => {
            buffered(threads, out, |buf| validate(a, buf))
        }
        Command::Patterns(PatternsCommand::Export) => {
            out.write_all(PatternSet::default_json().as_bytes())?;
            Ok(Outcome::Success)
        }
    }
}

fn buffered(
    threads: Option<usize>,
    out: &mut dyn Write,
    f: impl FnOnce(&mut Vec<u8>) -> Result<Outcome> + Send,
) -> Result<Outcome> {
    let mut buf = Vec::new();
    let r = with_threads(threads, || f(&mut buf));
    out.write_all(&buf)?;
    r
}

fn with_threads<T: Send>(
    threads: Option<usize>,
    f: impl FnOnce() -> Result<T> + Send,
) -> Result<T> {
    match threads {
        None => f(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .install(f),
    }
}

fn build(a: &BuildArgs, out: &mut dyn Write) -> Result<Outcome> {
    let c = Construction::build(a.q)?;
    let export = a
        .output
        .clone()
        .unwrap_or_else(|| a.out_dir.join(format!("coloring_q{}.txt", a.q)));
    let dict = a
        .dictionary
        .clone()
        .unwrap_or_else(|| a.out_dir.join(format!("colors_q{}.txt", a.q)));
    for path in [&export, &dict] {
        if let Some(parent) = path.parent() {
            if !parent.as_os_str().is_empty() {
                fs::create_dir_all(parent)?;
            }
        }
    }
    c.write_export(fs::File::create(&export)?)?;
    c.write_dictionary(fs::File::create(&dict)?)?;
    writeln!(out, "{}", c.header())?;
    writeln!(out, "upper_bound={}", c.upper_bound())?;
    writeln!(out, "export={}", export.display())?;
    writeln!(out, "dictionary={}", dict.display())?;
    Ok(Outcome::Success)
}

fn verify_cmd(a: &VerifyArgs, threads: Option<usize>, out: &mut dyn Write) -> Result<Outcome> {
    let coloring = match (&a.input, a.q) {
        (Some(path), _) => EdgeColoring::read_export(BufReader::new(fs::File::open(path)?))?,
        (None, Some(q)) => Construction::build(q)?.coloring().clone(),
        (None, None) => return Err(Error::InvalidParameter("need --q or --input".into())),
    };
    if a.p > coloring.n() {
        return Err(Error::CliqueTooLarge {
            p: a.p,
            n: coloring.n(),
        });
    }
    let cliques = binomial(coloring.n() as u64, a.p as u64);
    if cliques > LONG_RUN_CLIQUES && !a.long_run {
        return Err(Error::InvalidParameter(format!(
            "{cliques} cliques to check; pass --long-run to proceed"
        )));
    }
    let report = verify_with(&coloring, a.p, a.min_colors, VerifyOptions { threads })?;
    out.write_all(report.render().as_bytes())?;
    writeln!(out, "elapsed_seconds={:.3}", report.elapsed)?;
    if let Some(path) = &a.summary {
        let mut json = serde_json::to_string_pretty(&report)?;
        json.push('\n');
        fs::write(path, json)?;
    }
    Ok(if report.passed() {
        Outcome::Success
    } else {
        Outcome::Failure
    })
}

fn enumerate_cmd(a: &EnumerateArgs, out: &mut dyn Write) -> Result<Outcome> {
    let all = load_patterns(a.patterns.as_deref())?;
    let (forbidden, residual) = all.partition_names(&a.exclude)?;
    let found = enumerate(a.n, a.m, &forbidden)?;
    let rows = annotate(&found, &residual);
    let text = render_listing(a.n, a.m, forbidden.len(), &rows);
    match &a.output {
        Some(path) => {
            fs::write(path, &text)?;
            writeln!(out, "colorings={}", rows.len())?;
            writeln!(out, "output={}", path.display())?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(Outcome::Success)
}

fn bounds(a: &BoundsArgs, out: &mut dyn Write) -> Result<Outcome> {
    let (real, ceiling) = lower_bound_56(a.n)?;
    let t = a.t.unwrap_or(ceiling);
    writeln!(out, "n={}", a.n)?;
    writeln!(out, "lower_bound={real:.4}")?;
    writeln!(out, "ceiling={ceiling}")?;
    writeln!(out, "recursion_t={t}")?;
    writeln!(out, "recursion_order={}", recursion_bound(a.n, t)?)?;
    Ok(Outcome::Success)
}

fn validate(a: &ValidateArgs, out: &mut dyn Write) -> Result<Outcome> {
    let patterns = load_patterns(a.patterns.as_deref())?;
    let mut ok = true;
    for &q in &a.q {
        let c = Construction::build(q)?;
        let report = if a.exhaustive {
            if c.n() > 49 {
                return Err(Error::InvalidParameter(format!(
                    "exhaustive validation is limited to q <= 7 (got {q})"
                )));
            }
            soundness::exhaustive(&c, &patterns)
        } else {
            soundness::sampled(&c, &patterns, a.samples, a.seed)
        };
        writeln!(
            out,
            "q={} subsets={} patterns={} firings={} {}",
            q,
            report.subsets_checked,
            report.patterns_checked,
            report.firings.len(),
            if report.passed() { "PASS" } else { "FAIL" }
        )?;
        for f in report.firings.iter().take(20) {
            writeln!(out, "  {} on {} at {:?}", f.pattern, f.projection, f.subset)?;
        }
        ok &= report.passed();
    }
    Ok(if ok {
        Outcome::Success
    } else {
        Outcome::Failure
    })
}
