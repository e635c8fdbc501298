//! `neatalg` command-line entry point.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use neatalg::field::Field;
use neatalg::involutions::{AlgebraDoc, AlgebraWithInvolution, AnyAlgebra};
use neatalg_harness::{generate_instance, replay, run_suite, FailureRecord, GridPoint, HarnessError, Status, SuiteConfig};
use serde_json::Value;

#[derive(Debug, Parser)]
#[command(name = "neatalg", version, about = "Verify neat subalgebra constructions on seeded instance grids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the configured suites and report.
    Verify {
        #[arg(long)]
        config: PathBuf,
        /// Overrides the seed in the config.
        #[arg(long)]
        seed: Option<u64>,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Rerun a failure record from a report.
    Replay {
        #[arg(long)]
        failure: PathBuf,
    },
    /// Pretty-print an algebra document or the instance of a failure record.
    Show {
        #[arg(long)]
        instance: PathBuf,
    },
    /// Print the algebra document of one grid point.
    Instance {
        #[arg(long)]
        field: String,
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

const EXIT_FAIL: u8 = 1;
const EXIT_CONFIG: u8 = 2;

fn read(path: &Path) -> Result<String, HarnessError> {
    Ok(std::fs::read_to_string(path)?)
}

fn verify(config: &Path, seed: Option<u64>, out: Option<&Path>) -> Result<ExitCode, HarnessError> {
    let mut cfg = SuiteConfig::parse(&read(config)?)?;
    if let Some(s) = seed {
        cfg.seed = s;
    }
    let report = run_suite(&cfg)?;
    for s in &report.suites {
        println!(
            "{:<13} run {:>4}  pass {:>4}  fail {:>3}  not-found {:>3}  skipped {:>3}  {:>8.2}s",
            s.suite.as_str(),
            s.instances_run,
            s.passes,
            s.failures.len(),
            s.not_found,
            s.skipped,
            s.wall_time_s
        );
        for f in &s.failures {
            println!("  FAIL #{} (seed {}): {}", f.index, f.seed, f.detail);
        }
    }
    if let Some(path) = out {
        std::fs::write(path, report.to_json())?;
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    })
}

fn replay_cmd(path: &Path) -> Result<ExitCode, HarnessError> {
    let rec: FailureRecord = serde_json::from_str(&read(path)?)?;
    let r = replay(&rec)?;
    println!("{} #{}: {:?}: {}", rec.suite, rec.index, r.status, r.detail);
    Ok(if r.status == Status::Fail {
        ExitCode::from(EXIT_FAIL)
    } else {
        ExitCode::SUCCESS
    })
}

fn describe<F: Field>(a: &AlgebraWithInvolution<F>) {
    let f = a.field();
    let c = a.classification();
    println!("field        {}", f.spec().short_name());
    println!("model        {}", a.model().name());
    println!("degree       {}", a.degree());
    println!("kind / type  {:?} / {:?}", c.kind, c.typ);
    println!("capacity     {}", a.capacity());
    println!("dim A        {}", a.dim());
    println!("dim Symm     {}", a.symm().dim());
    println!("dim Skew     {}", a.skew().dim());
    println!("dim Symd     {}", a.symd().dim());
    println!("dim Syms     {}", a.syms().dim());
    println!("Syms basis:");
    for b in a.syms().basis() {
        println!("{}\n", b.display(f));
    }
}

fn show(path: &Path) -> Result<ExitCode, HarnessError> {
    let v: Value = serde_json::from_str(&read(path)?)?;
    let doc_value = v
        .get("subject")
        .and_then(|s| s.get("algebra"))
        .cloned()
        .unwrap_or(v);
    let doc: AlgebraDoc = serde_json::from_value(doc_value)?;
    match AnyAlgebra::from_doc(&doc)? {
        AnyAlgebra::Finite(a) => describe(&a),
        AnyAlgebra::Rational(a) => describe(&a),
    }
    Ok(ExitCode::SUCCESS)
}

fn instance(field: &str, ty: &str, degree: usize, seed: u64) -> Result<ExitCode, HarnessError> {
    let point = GridPoint {
        field: neatalg::field::FieldSpec::parse(field).map_err(|e| HarnessError::Config(e.to_string()))?,
        ty: ty.parse()?,
        degree,
    };
    println!("{}", generate_instance(&point, seed)?.to_json());
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match &cli.command {
        Command::Verify { config, seed, report } => verify(config, *seed, report.as_deref()),
        Command::Replay { failure } => replay_cmd(failure),
        Command::Show { instance: path } => show(path),
        Command::Instance { field, ty, degree, seed } => instance(field, ty, *degree, *seed),
    };
    r.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_CONFIG)
    })
}
