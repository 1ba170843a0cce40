//! `gridpath`: LCS length and generalized edit distance from the command
//! line, with selectable solvers, metered runs, and a benchmark mode.
//!
//! Exit codes: 0 on success, 2 on usage or I/O errors, 3 when an internal
//! invariant fails (space-accounting imbalance or a sentinel-contaminated
//! result).

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use gridpath::runner::{run_edit_distance, run_lcs, Algorithm, RunError, RunOptions};
use gridpath::strings::{CostTable, SymbolString};
use gridpath::Report;

/// JSON metrics schema, stable across runs: `algo`, `m`, `n`, `m_hat`,
/// `block`, `result`, `peak_aux_bits`, `leaf_count`, `inner_count`,
/// `max_depth`, `elapsed_ms`. Every field except `elapsed_ms` is
/// deterministic given the inputs.
#[derive(Debug, Serialize)]
struct MetricsRecord {
    algo: &'static str,
    #[serde(flatten)]
    report: Report,
}

#[derive(Debug, Parser)]
#[command(
    name = "gridpath",
    version,
    about = "String similarity via longest paths on weighted grid DAGs",
    long_about = "Computes the length of a longest common subsequence or a \
generalized edit distance. The default solver uses sublinear auxiliary \
space and reports exactly how many bits it kept live.\n\n\
Metrics JSON keys: algo, m, n, m_hat, block, result, peak_aux_bits, \
leaf_count, inner_count, max_depth, elapsed_ms.\n\
Bench CSV columns: n, algo, B, result, peak_aux_bits, leaf_count, \
max_depth, elapsed_ms.\n\n\
Exit codes: 0 success, 2 usage or I/O error, 3 internal invariant failure."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Length of a longest common subsequence of two inputs.
    Lcs(LcsArgs),
    /// Edit distance between two inputs with configurable costs.
    Editdist(EditArgs),
    /// Sweep input sizes and emit one CSV row per (size, solver).
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// First input file; `-` reads stdin.
    file_a: PathBuf,
    /// Second input file; `-` reads stdin (at most one input may be `-`).
    file_b: PathBuf,
    /// Keep a trailing newline instead of stripping one.
    #[arg(long)]
    raw: bool,
    /// Compare Unicode scalar values instead of bytes (inputs must be UTF-8).
    #[arg(long)]
    chars: bool,
}

#[derive(Debug, Args)]
struct SolverArgs {
    /// Solver to run.
    #[arg(long, value_enum, default_value_t = AlgoChoice::Sublinear)]
    algo: AlgoChoice,
    /// Force the recursion block size (sublinear solver only).
    #[arg(long, value_name = "B")]
    block_size: Option<usize>,
    /// Write the run's metrics as JSON to this path.
    #[arg(long, value_name = "PATH")]
    metrics: Option<PathBuf>,
    /// Solve independent slabs concurrently (sublinear solver only).
    #[arg(long)]
    parallel: bool,
}

#[derive(Debug, Args)]
struct LcsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Debug, Args)]
struct EditArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    solver: SolverArgs,
    /// Cost of inserting a symbol.
    #[arg(long, default_value_t = 1)]
    cost_ins: i64,
    /// Cost of deleting a symbol.
    #[arg(long, default_value_t = 1)]
    cost_del: i64,
    /// Cost of substituting one symbol for another.
    #[arg(long, default_value_t = 1)]
    cost_sub: i64,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Smallest input length; must be a power of two.
    #[arg(long)]
    min_n: usize,
    /// Largest input length; must be a power of two.
    #[arg(long)]
    max_n: usize,
    /// Multiply the length by this between steps.
    #[arg(long, default_value_t = 2)]
    factor: usize,
    /// Seed for the random input strings.
    #[arg(long)]
    seed: u64,
    /// Comma-separated subset of {standard, sublinear}.
    #[arg(long, value_delimiter = ',', default_values_t = [AlgoChoice::Standard, AlgoChoice::Sublinear])]
    algos: Vec<AlgoChoice>,
    /// Write CSV here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoChoice {
    Standard,
    Sublinear,
    Table,
}

impl std::fmt::Display for AlgoChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.algorithm().name())
    }
}

impl AlgoChoice {
    fn algorithm(self) -> Algorithm {
        match self {
            AlgoChoice::Standard => Algorithm::Standard,
            AlgoChoice::Sublinear => Algorithm::Sublinear,
            AlgoChoice::Table => Algorithm::Table,
        }
    }
}

enum CliError {
    /// Bad arguments or unreadable inputs: exit 2.
    Usage(String),
    /// Internal invariant failure: exit 3.
    Internal(String),
}

impl From<RunError> for CliError {
    fn from(err: RunError) -> Self {
        match err {
            RunError::TooLarge(e) => CliError::Usage(e.to_string()),
            RunError::MeterImbalance { .. } => CliError::Internal(err.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Lcs(args) => cmd_lcs(args),
        Command::Editdist(args) => cmd_editdist(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("gridpath: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("gridpath: internal invariant failure: {msg}");
            ExitCode::from(3)
        }
    }
}

fn cmd_lcs(args: LcsArgs) -> Result<(), CliError> {
    let (s, t) = read_pair(&args.input)?;
    let options = run_options(&args.solver);
    let report = run_lcs(&s, &t, args.solver.algo.algorithm(), &options)?;
    finish(&args.solver, report)
}

fn cmd_editdist(args: EditArgs) -> Result<(), CliError> {
    for (flag, value) in [
        ("--cost-ins", args.cost_ins),
        ("--cost-del", args.cost_del),
        ("--cost-sub", args.cost_sub),
    ] {
        if value < 0 {
            return Err(CliError::Usage(format!(
                "{flag} must be nonnegative, got {value}"
            )));
        }
    }
    let costs = CostTable::uniform(args.cost_ins, args.cost_del, args.cost_sub);
    let (s, t) = read_pair(&args.input)?;
    let options = run_options(&args.solver);
    let report = run_edit_distance(&s, &t, &costs, args.solver.algo.algorithm(), &options)?;
    finish(&args.solver, report)
}

fn cmd_bench(args: BenchArgs) -> Result<(), CliError> {
    if !args.min_n.is_power_of_two() || !args.max_n.is_power_of_two() {
        return Err(CliError::Usage(format!(
            "--min-n and --max-n must be powers of two, got {} and {}",
            args.min_n, args.max_n
        )));
    }
    if args.min_n > args.max_n {
        return Err(CliError::Usage("--min-n exceeds --max-n".into()));
    }
    if args.factor < 2 {
        return Err(CliError::Usage("--factor must be at least 2".into()));
    }
    if args.algos.contains(&AlgoChoice::Table) {
        return Err(CliError::Usage(
            "bench supports only standard and sublinear".into(),
        ));
    }

    let mut csv = String::from("n,algo,B,result,peak_aux_bits,leaf_count,max_depth,elapsed_ms\n");
    let mut n = args.min_n;
    while n <= args.max_n {
        // One string pair per size, shared by every solver in the row group.
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed.wrapping_add(n as u64));
        let s = random_string(&mut rng, n);
        let t = random_string(&mut rng, n);
        for algo in &args.algos {
            let report = run_lcs(&s, &t, algo.algorithm(), &RunOptions::default())?;
            csv.push_str(&format!(
                "{},{},{},{},{},{},{},{:.3}\n",
                n,
                algo,
                report.block,
                report.result,
                report.peak_aux_bits,
                report.leaf_count,
                report.max_depth,
                report.elapsed_ms,
            ));
        }
        match n.checked_mul(args.factor) {
            Some(next) => n = next,
            None => break,
        }
    }

    match &args.out {
        Some(path) => fs::write(path, csv)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

fn random_string(rng: &mut ChaCha8Rng, len: usize) -> SymbolString {
    let bytes: Vec<u8> = (0..len).map(|_| rng.gen_range(b'a'..=b'z')).collect();
    SymbolString::from_bytes(&bytes)
}

fn run_options(solver: &SolverArgs) -> RunOptions {
    RunOptions {
        block_override: solver.block_size,
        parallel: solver.parallel,
    }
}

fn finish(solver: &SolverArgs, report: Report) -> Result<(), CliError> {
    if let Some(path) = &solver.metrics {
        let record = MetricsRecord {
            algo: solver.algo.algorithm().name(),
            report: report.clone(),
        };
        let json = serde_json::to_string_pretty(&record).expect("metrics are serializable");
        fs::write(path, json + "\n")
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let mut stdout = std::io::stdout().lock();
    writeln!(stdout, "{}", report.result).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(())
}

fn read_pair(input: &InputArgs) -> Result<(SymbolString, SymbolString), CliError> {
    let a_is_stdin = input.file_a.as_os_str() == "-";
    let b_is_stdin = input.file_b.as_os_str() == "-";
    if a_is_stdin && b_is_stdin {
        return Err(CliError::Usage(
            "at most one input may be `-` (stdin)".into(),
        ));
    }
    let a = read_input(&input.file_a, a_is_stdin, input.raw)?;
    let b = read_input(&input.file_b, b_is_stdin, input.raw)?;
    Ok((to_symbols(a, input)?, to_symbols(b, input)?))
}

fn read_input(path: &Path, is_stdin: bool, raw: bool) -> Result<Vec<u8>, CliError> {
    let mut bytes = Vec::new();
    if is_stdin {
        std::io::stdin()
            .read_to_end(&mut bytes)
            .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
    } else {
        bytes = fs::read(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    }
    if !raw {
        // Strip exactly one trailing newline, LF or CRLF.
        if bytes.last() == Some(&b'\n') {
            bytes.pop();
            if bytes.last() == Some(&b'\r') {
                bytes.pop();
            }
        }
    }
    Ok(bytes)
}

fn to_symbols(bytes: Vec<u8>, input: &InputArgs) -> Result<SymbolString, CliError> {
    if input.chars {
        let text = std::str::from_utf8(&bytes)
            .map_err(|e| CliError::Usage(format!("--chars requires UTF-8 input: {e}")))?;
        Ok(SymbolString::from_chars(text))
    } else {
        Ok(SymbolString::from_bytes(&bytes))
    }
}
