//! `dualize` — enumerate irreducible coverings of Boolean matrices and
//! benchmark the statically scheduled parallel enumeration.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification mismatch,
//! 3 resource cap exceeded.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use dualize::estimator::{
    default_r, parse_estimate, sample_eta, validation_csv, validation_experiment, SampleConfig,
    ValidationConfig,
};
use dualize::generate::{generate_matrix, GenSpec};
use dualize::oracle;
use dualize::runcm;
use dualize::runner::{benchmark, BenchConfig};
use dualize::scheduler::{distribute_tasks, distribute_tasks_lpt};
use dualize::{BoolMatrix, Error};

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "dualize",
    about = "Irreducible covering enumeration with statically scheduled parallel execution",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random Boolean matrix in the matrix text format.
    Gen(GenArgs),
    /// Enumerate the irreducible coverings of a matrix file.
    Dualize(DualizeArgs),
    /// Cross-check the enumeration against the brute-force oracle.
    Oracle(OracleArgs),
    /// Estimate relative subtask sizes from random row-submatrices.
    Estimate(EstimateArgs),
    /// Run the estimator validation experiment and emit its CSV.
    Validate(ValidateArgs),
    /// Build a greedy schedule from an estimate dump.
    Schedule(ScheduleArgs),
    /// Benchmark scheduled parallel enumeration and emit CSV reports.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Row count.
    m: usize,
    /// Column count.
    n: usize,
    /// Bernoulli density of unit entries, strictly between 0 and 1.
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    /// RNG seed; a fresh one is drawn and printed when omitted.
    #[arg(long)]
    seed: Option<u64>,
    /// Keep all-zero rows instead of redrawing them.
    #[arg(long)]
    allow_zero_rows: bool,
    /// Output file (stdout when omitted).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DualizeArgs {
    /// Matrix file in the matrix text format.
    matrix: PathBuf,
    /// Enumerate only the coverings whose least column index is this.
    #[arg(long)]
    subtask: Option<usize>,
    /// Print only the number of coverings.
    #[arg(long)]
    count_only: bool,
    /// Output file (stdout when omitted).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    /// Matrix file in the matrix text format.
    matrix: PathBuf,
    /// Column cap for the exhaustive subset search.
    #[arg(long, default_value_t = oracle::DEFAULT_COLUMN_CAP)]
    cap: usize,
}

#[derive(Args)]
struct EstimateArgs {
    /// Matrix file in the matrix text format.
    matrix: PathBuf,
    /// Submatrix row count; defaults to half the rows, rounded up.
    #[arg(long)]
    r: Option<usize>,
    /// Number of random submatrices.
    #[arg(long, default_value_t = 20)]
    t: usize,
    /// Coverings drawn per submatrix.
    #[arg(long, default_value_t = 50)]
    u: usize,
    /// RNG seed; a fresh one is drawn and printed when omitted.
    #[arg(long)]
    seed: Option<u64>,
    /// Output file (stdout when omitted).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    /// Shapes as MxN, comma-separated (e.g. 30x120,40x120).
    #[arg(long, value_delimiter = ',', required = true)]
    shapes: Vec<String>,
    /// Submatrix row counts to test, comma-separated.
    #[arg(long = "r-list", value_delimiter = ',', required = true)]
    r_list: Vec<usize>,
    /// Matrices generated per shape.
    #[arg(long, default_value_t = 20)]
    matrices: usize,
    #[arg(long, default_value_t = 20)]
    t: usize,
    #[arg(long, default_value_t = 50)]
    u: usize,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    /// RNG seed; a fresh one is drawn and printed when omitted.
    #[arg(long)]
    seed: Option<u64>,
    /// Output file (stdout when omitted).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ScheduleArgs {
    /// Estimate dump file ("j f_star_j" lines).
    f_star: PathBuf,
    /// Worker count.
    #[arg(short, long)]
    p: usize,
    /// Process subtasks in descending estimated size instead of index order.
    #[arg(long)]
    lpt: bool,
    /// Output file (stdout when omitted).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Shapes as MxN, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    shapes: Vec<String>,
    /// Worker counts, comma-separated; 1 is always measured.
    #[arg(long = "p-list", value_delimiter = ',', required = true)]
    p_list: Vec<usize>,
    #[arg(long, default_value_t = 20)]
    t: usize,
    #[arg(long, default_value_t = 50)]
    u: usize,
    /// Repetitions per (shape, p) cell; the median is reported.
    #[arg(long, default_value_t = 3)]
    reps: usize,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    /// RNG seed; a fresh one is drawn and printed when omitted.
    #[arg(long)]
    seed: Option<u64>,
    /// Allow worker counts beyond the available cores.
    #[arg(long)]
    oversubscribe: bool,
    /// Directory for bench_summary.csv and bench_workers.csv.
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

/// Resource-cap violations exit with 3, everything else is a usage/input
/// error.
fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::BruteForceCapExceeded { .. }) | Some(Error::Oversubscribed { .. }) => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Dualize(args) => cmd_dualize(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Estimate(args) => cmd_estimate(args),
        Command::Validate(args) => cmd_validate(args),
        Command::Schedule(args) => cmd_schedule(args),
        Command::Bench(args) => cmd_bench(args),
    }
}

/// Resolves the seed, drawing and announcing a fresh one when absent.
fn resolve_seed(seed: Option<u64>) -> u64 {
    match seed {
        Some(s) => s,
        None => {
            let s: u64 = rand::random();
            eprintln!("seed: {s}");
            s
        }
    }
}

fn read_matrix(path: &Path) -> Result<BoolMatrix> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read matrix file {}", path.display()))?;
    let mat = BoolMatrix::parse(&text)
        .map_err(|e| anyhow!(Error::from(e)).context(format!("in {}", path.display())))?;
    Ok(mat)
}

fn write_output(output: Option<&Path>, contents: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, contents)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => io::stdout().write_all(contents.as_bytes())?,
    }
    Ok(())
}

fn parse_shapes(shapes: &[String]) -> Result<Vec<(usize, usize)>> {
    shapes
        .iter()
        .map(|s| {
            let (m, n) = s
                .split_once(['x', 'X'])
                .ok_or_else(|| anyhow!("bad shape {s:?}; expected MxN"))?;
            Ok((
                m.trim().parse().with_context(|| format!("bad shape {s:?}"))?,
                n.trim().parse().with_context(|| format!("bad shape {s:?}"))?,
            ))
        })
        .collect()
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode> {
    let seed = resolve_seed(args.seed);
    let mut spec = GenSpec::new(args.m, args.n, seed).density(args.density);
    if args.allow_zero_rows {
        spec = spec.allow_zero_rows();
    }
    let mat = generate_matrix(&spec)?;
    write_output(args.output.as_deref(), &mat.to_text())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_dualize(args: DualizeArgs) -> Result<ExitCode> {
    let mat = read_matrix(&args.matrix)?;
    let stdout = io::stdout();
    let mut sink: BufWriter<Box<dyn Write>> = BufWriter::new(match &args.output {
        Some(path) => Box::new(
            fs::File::create(path)
                .with_context(|| format!("cannot write {}", path.display()))?,
        ),
        None => Box::new(stdout.lock()),
    });
    let mut count = 0u64;
    let mut io_error: Option<io::Error> = None;
    {
        let mut emit = |cols: &[u32]| -> ControlFlow<()> {
            count += 1;
            if !args.count_only {
                let line = cols
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                if let Err(e) = writeln!(sink, "{line}") {
                    io_error = Some(e);
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        };
        match args.subtask {
            Some(j) => runcm::enumerate_subtask(&mat, j, &mut emit)?,
            None => runcm::enumerate(&mat, &mut emit),
        }
    }
    if let Some(e) = io_error {
        // A closed pipe (e.g. piping into `head`) ends the enumeration, not
        // the program.
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Ok(ExitCode::SUCCESS);
        }
        return Err(e.into());
    }
    if args.count_only {
        writeln!(sink, "{count}")?;
    }
    match sink.flush() {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(ExitCode::SUCCESS),
        other => {
            other?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_oracle(args: OracleArgs) -> Result<ExitCode> {
    let mat = read_matrix(&args.matrix)?;
    let expected = oracle::brute_force_dualize_capped(&mat, args.cap)?;
    let mut got: Vec<_> = runcm::coverings(&mat).collect();
    got.sort();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for covering in &expected {
        writeln!(out, "{covering}")?;
    }
    if got == expected {
        writeln!(out, "MATCH")?;
        out.flush()?;
        Ok(ExitCode::SUCCESS)
    } else {
        writeln!(out, "MISMATCH")?;
        out.flush()?;
        eprintln!(
            "error: enumeration found {} coverings, oracle found {}",
            got.len(),
            expected.len()
        );
        Ok(ExitCode::from(EXIT_MISMATCH))
    }
}

fn cmd_estimate(args: EstimateArgs) -> Result<ExitCode> {
    let mat = read_matrix(&args.matrix)?;
    let seed = resolve_seed(args.seed);
    let r = args.r.unwrap_or_else(|| default_r(mat.row_count()));
    let estimate = sample_eta(&mat, &SampleConfig::new(r, args.t, args.u, seed))?;
    write_output(args.output.as_deref(), &estimate.to_dump())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_validate(args: ValidateArgs) -> Result<ExitCode> {
    let shapes = parse_shapes(&args.shapes)?;
    let seed = resolve_seed(args.seed);
    let rows = validation_experiment(&ValidationConfig {
        shapes,
        r_values: args.r_list.clone(),
        matrices_per_shape: args.matrices,
        t: args.t,
        u: args.u,
        density: args.density,
        seed,
    })?;
    write_output(args.output.as_deref(), &validation_csv(&rows))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_schedule(args: ScheduleArgs) -> Result<ExitCode> {
    let text = fs::read_to_string(&args.f_star)
        .with_context(|| format!("cannot read estimate file {}", args.f_star.display()))?;
    let sizes = parse_estimate(&text)
        .map_err(|e| anyhow!(Error::from(e)).context(format!("in {}", args.f_star.display())))?;
    let schedule = if args.lpt {
        distribute_tasks_lpt(args.p, &sizes)?
    } else {
        distribute_tasks(args.p, &sizes)?
    };
    write_output(args.output.as_deref(), &schedule.to_dump())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(args: BenchArgs) -> Result<ExitCode> {
    let shapes = parse_shapes(&args.shapes)?;
    let seed = resolve_seed(args.seed);
    let mut cfg = BenchConfig::new(shapes, args.p_list.clone(), seed);
    cfg.t = args.t;
    cfg.u = args.u;
    cfg.repetitions = args.reps;
    cfg.density = args.density;
    cfg.allow_oversubscribe = args.oversubscribe;
    let report = benchmark(&cfg)?;
    fs::create_dir_all(&args.out_dir)?;
    let summary = args.out_dir.join("bench_summary.csv");
    let workers = args.out_dir.join("bench_workers.csv");
    fs::write(&summary, report.summary_csv())?;
    fs::write(&workers, report.per_worker_csv())?;
    eprintln!(
        "wrote {} and {}",
        summary.display(),
        workers.display()
    );
    Ok(ExitCode::SUCCESS)
}
