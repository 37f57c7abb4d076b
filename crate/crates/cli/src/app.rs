//! Argument parsing and the four subcommands.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fraclap_core::adaptive::{
    auto_digits_matrix, digit_scan_with, CriterionKind, EscalationConfig, StepMode, EPSILON,
};
use fraclap_core::kernels::{Alpha, Family};
use fraclap_core::opmatrix::{build_matrix, make_nodes};
use fraclap_core::{Error as CoreError, PrecisionContext};
use thiserror::Error;

use crate::bench::{run_bench, sanity, write_bench_csv};
use crate::format::{sidecar_path, write_matrix, write_scan_csv, MatrixSidecar, ScanSidecar};
use crate::verify::{render_table, run_all, Suite, VerifyOptions};

/// Environment variable that sets the worker-thread count when `--threads` is absent.
pub const THREADS_ENV: &str = "FRACLAP_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("no convergence below the ceiling of {0} digits")]
    Ceiling(u32),
    #[error("{0}")]
    Io(String),
    #[error("verification failed: {0}")]
    Verify(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verify(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Ceiling(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::EscalationCeiling { ceiling } => CliError::Ceiling(ceiling),
            CoreError::Domain(msg) => CliError::Usage(msg.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

#[derive(Debug, Parser)]
#[command(name = "fraclap", version, about = "Fractional Laplacian of rational Chebyshev bases in multiprecision")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build an operator matrix and write it with a JSON sidecar.
    Build(BuildArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
    /// Digits needed as a function of N.
    Scan(ScanArgs),
    /// Time the fast assembly against the per-entry build.
    Bench(BenchArgs),
}

#[derive(Debug, Args, Clone)]
pub struct EngineArgs {
    /// Convergence threshold; defaults to 2^-52.
    #[arg(long)]
    pub eps: Option<f64>,
    /// Largest digit count tried before giving up.
    #[arg(long, default_value_t = 2500)]
    pub ceiling: u32,
    /// Probe every STEP digits, then refine the last gap.
    #[arg(long, value_name = "STEP")]
    pub coarse: Option<u32>,
    /// Worker threads (0: one per core); falls back to FRACLAP_THREADS.
    #[arg(long)]
    pub threads: Option<usize>,
}

impl EngineArgs {
    fn config(&self) -> Result<EscalationConfig, CliError> {
        let epsilon = self.eps.unwrap_or(EPSILON);
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(CliError::Usage(format!("--eps must lie in (0, 1), got {epsilon}")));
        }
        Ok(EscalationConfig {
            ceiling: self.ceiling,
            epsilon,
            step: match self.coarse {
                Some(s) => StepMode::Coarse(s.max(1)),
                None => StepMode::Fine,
            },
            ..Default::default()
        })
    }
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long, default_value = "higgins")]
    pub family: String,
    /// α in [0,2]: decimal, ratio p/q, `pi` or `sqrt(k)`.
    #[arg(long)]
    pub alpha: String,
    /// Number of collocation nodes M.
    #[arg(long)]
    pub rows: usize,
    /// Number of basis functions N; defaults to M.
    #[arg(long)]
    pub cols: Option<usize>,
    /// `auto` or a fixed digit count of at least 16.
    #[arg(long, default_value = "auto")]
    pub digits: String,
    #[arg(long, default_value = "matrix.csv")]
    pub out: PathBuf,
    #[command(flatten)]
    pub engine: EngineArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run only the named suites.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<Suite>,
    /// Perturb the named suites' results (self-test of the harness).
    #[arg(long, value_delimiter = ',')]
    pub inject: Vec<Suite>,
    /// Seed for the randomized cross-form samples.
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanKind {
    Scalar,
    Matrix,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, value_enum, default_value_t = ScanKind::Scalar)]
    pub kind: ScanKind,
    #[arg(long, default_value = "sqrt(3)")]
    pub alpha: String,
    #[arg(long)]
    pub nmax: usize,
    #[arg(long, default_value = "scan.csv")]
    pub out: PathBuf,
    /// Print each N as it finishes.
    #[arg(long)]
    pub progress: bool,
    #[command(flatten)]
    pub engine: EngineArgs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "50,100,200")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value = "sqrt(3)")]
    pub alpha: String,
    #[arg(long, default_value = "bench.csv")]
    pub out: PathBuf,
    /// Worker threads for both methods (default 1).
    #[arg(long)]
    pub threads: Option<usize>,
}

/// Thread count from the flag, then the environment, then `fallback`.
pub fn thread_width(flag: Option<usize>, fallback: usize) -> Result<usize, CliError> {
    if let Some(w) = flag {
        return Ok(w);
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{THREADS_ENV}={v} is not a thread count"))),
        Err(_) => Ok(fallback),
    }
}

fn with_threads<T>(width: usize, f: impl FnOnce() -> T + Send) -> Result<T, CliError>
where
    T: Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(width)
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

fn parse_alpha(token: &str) -> Result<Alpha, CliError> {
    Ok(Alpha::parse(token)?)
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| io_err(path, e))
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| io_err(path, e))?;
    text.push('\n');
    write_file(path, &text)
}

pub fn cmd_build(args: &BuildArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let family: Family = args.family.parse()?;
    let alpha = parse_alpha(&args.alpha)?;
    let rows = args.rows;
    let cols = args.cols.unwrap_or(rows);
    if rows == 0 || cols == 0 {
        return Err(CliError::Usage("--rows and --cols must be at least 1".into()));
    }
    let cfg = args.engine.config()?;
    let fixed = match args.digits.as_str() {
        "auto" => None,
        d => Some(
            d.parse::<u32>()
                .map_err(|_| CliError::Usage(format!("--digits expects `auto` or an integer, got `{d}`")))?,
        ),
    };
    let width = thread_width(args.engine.threads, 0)?;
    let t0 = Instant::now();
    let (matrix, discrepancy) = with_threads(width, || -> Result<_, CliError> {
        match fixed {
            None => {
                let r = auto_digits_matrix(family, rows, cols, &alpha, &cfg, cfg.floor)?;
                Ok((r.matrix, Some(r.discrepancy)))
            }
            Some(k) => {
                let ctx = PrecisionContext::new(k)?;
                Ok((build_matrix(family, &alpha, &make_nodes(rows, &ctx), cols, &ctx)?, None))
            }
        }
    })??;
    let seconds = t0.elapsed().as_secs_f64();
    write_file(&args.out, &write_matrix(&matrix))?;
    let side = sidecar_path(&args.out);
    write_json(&side, &MatrixSidecar::new(&matrix, fixed.is_none(), cfg.epsilon, discrepancy, seconds))?;
    let _ = writeln!(
        out,
        "{}: {} {}x{} alpha={} at {} digits ({seconds:.3}s){}",
        args.out.display(),
        family,
        rows,
        cols,
        alpha.token(),
        matrix.meta.digits,
        if matrix.meta.overflow > 0 {
            format!(", {} entries overflow double", matrix.meta.overflow)
        } else {
            String::new()
        }
    );
    Ok(())
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let opts = VerifyOptions {
        only: args.only.clone(),
        inject: args.inject.clone(),
        seed: args.seed,
    };
    let width = thread_width(args.threads, 0)?;
    let reports = with_threads(width, || run_all(&opts))?;
    let _ = write!(out, "{}", render_table(&reports));
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.suite.name()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verify(failed.join(", ")))
    }
}

pub fn cmd_scan(args: &ScanArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let alpha = parse_alpha(&args.alpha)?;
    if args.nmax < 2 {
        return Err(CliError::Usage("--nmax must be at least 2".into()));
    }
    let cfg = args.engine.config()?;
    let kind = match args.kind {
        ScanKind::Scalar => CriterionKind::ScalarAtZero,
        ScanKind::Matrix => CriterionKind::FullMatrix,
    };
    let width = thread_width(args.engine.threads, 0)?;
    let t0 = Instant::now();
    let progress = args.progress;
    let mut lines = Vec::new();
    let report = with_threads(width, || {
        digit_scan_with(args.nmax, &alpha, kind, &cfg, |r| {
            if progress {
                lines.push(format!("N={} digits={}", r.n, r.digits));
            }
        })
    })??;
    for l in lines {
        let _ = writeln!(err, "{l}");
    }
    let seconds = t0.elapsed().as_secs_f64();
    write_file(&args.out, &write_scan_csv(&report))?;
    write_json(&sidecar_path(&args.out), &ScanSidecar::new(&report, seconds))?;
    let _ = writeln!(
        out,
        "{}: {} scan alpha={} N=1..{}: digits ~ {:.5} N + {:.4} ({seconds:.1}s)",
        args.out.display(),
        kind.name(),
        alpha.token(),
        args.nmax,
        report.slope,
        report.intercept
    );
    Ok(())
}

pub fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let alpha = parse_alpha(&args.alpha)?;
    if args.sizes.contains(&0) {
        return Err(CliError::Usage("--sizes must be positive".into()));
    }
    let width = thread_width(args.threads, 1)?;
    let rows = with_threads(width, || run_bench(&args.sizes, &alpha))??;
    let csv = write_bench_csv(&rows);
    write_file(&args.out, &csv)?;
    let _ = write!(out, "{csv}");
    for (what, ok) in sanity(&rows) {
        let _ = writeln!(out, "{} {what}", if ok { "PASS" } else { "FAIL" });
    }
    Ok(())
}

/// Parses `args` and runs the chosen subcommand; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{}", e.render());
                return 0;
            }
            let _ = write!(err, "{}", e.render());
            return 2;
        }
    };
    let result = match &cli.command {
        Command::Build(a) => cmd_build(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Scan(a) => cmd_scan(a, out, err),
        Command::Bench(a) => cmd_bench(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
