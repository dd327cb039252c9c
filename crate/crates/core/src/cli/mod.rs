//! The `inexp` command line: JSON ideal files in, one JSON report out.

mod input;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::determinacy::{check_regular_sequence, jet_sweep, non_stabilizing, perturbation_trial};
use crate::error::Error;
use crate::hilbert::{hs_function, hs_oracle_table, hs_table_of_diagram, verify_multiplicity_consistency};
use crate::parse::format_polynomial;
use crate::standard_basis::compute_standard_basis;

pub use input::{sha256_hex, IdealFile};

pub const SEED_ENV: &str = "INEXP_SEED";

#[derive(Debug, Parser)]
#[command(name = "inexp", version, about = "Diagrams of initial exponents, Hilbert–Samuel functions and jet determinacy")]
pub struct Cli {
    /// Worker threads for sweeps and trials (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Standard basis and vertices of the diagram.
    Diagram { file: PathBuf },
    /// Hilbert–Samuel table.
    Hs {
        file: PathBuf,
        #[arg(long)]
        eta_max: u32,
        /// Cross-check every value by linear algebra.
        #[arg(long)]
        oracle: bool,
        /// Fit the eventual polynomial for this `k`.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Multiplicity by three routes.
    Mult {
        file: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Diagrams of jet ideals over a range of orders, plus perturbation trials.
    JetSweep {
        file: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        mu_min: u32,
        #[arg(long)]
        mu_max: u32,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 0)]
        trials: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Certify a regular sequence by a normalizing coordinate change.
    CheckRegseq {
        file: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Built-in worked examples.
    Repro {
        #[command(subcommand)]
        example: Example,
    },
}

#[derive(Debug, Subcommand)]
pub enum Example {
    /// Jet ideals whose diagrams never stabilize.
    #[command(name = "ex-5-5")]
    NonStabilizing {
        #[arg(long)]
        mu: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Timings {
    pub elapsed_ms: u64,
}

/// The single JSON document a command prints.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub input_sha256: String,
    pub seed: Option<u64>,
    pub result: Value,
    pub timings: Timings,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Report,
    /// A mathematical assertion checked by the command failed.
    pub falsified: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.falsified {
            2
        } else {
            0
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Falsified(_)) { 2 } else { 1 };
        CliError { code, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> CliError {
    CliError { code: 1, message: message.into() }
}

/// Parse `INEXP_SEED`, if set.
pub fn env_seed() -> Result<Option<u64>, CliError> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| input_error(format!("{SEED_ENV} is not a non-negative integer: {s:?}"))),
        Err(_) => Ok(None),
    }
}

struct Loaded {
    file: IdealFile,
    digest: String,
}

fn load(path: &Path) -> Result<Loaded, CliError> {
    let bytes = std::fs::read(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let text = std::str::from_utf8(&bytes).map_err(|_| input_error(format!("{}: not UTF-8", path.display())))?;
    Ok(Loaded { file: IdealFile::from_json(text)?, digest: sha256_hex(&bytes) })
}

fn resolve_k(flag: Option<usize>, file: &IdealFile) -> Result<usize, CliError> {
    flag.or(file.k).ok_or_else(|| input_error("k is required (flag --k or field \"k\")"))
}

fn resolve_seed(flag: Option<u64>, file: Option<&IdealFile>, env: Option<u64>) -> u64 {
    flag.or(file.and_then(|f| f.seed)).or(env).unwrap_or(0)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn write_csv<I, R>(path: &Path, header: &[&str], rows: I) -> Result<(), CliError>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::Writer::from_path(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let io = |e: csv::Error| input_error(format!("{}: {e}", path.display()));
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(row.into_iter().collect::<Vec<_>>()).map_err(io)?;
    }
    w.flush().map_err(|e| input_error(format!("{}: {e}", path.display())))
}

/// Run a parsed command line. `argv` is echoed into the report.
pub fn run(cli: &Cli, argv: Vec<String>, env_seed: Option<u64>) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let (digest, seed, result, falsified) = match &cli.command {
        Command::Diagram { file } => {
            let l = load(file)?;
            let p = l.file.presentation()?;
            let sb = compute_standard_basis(&p)?;
            let n = sb.diagram();
            let names = p.variables();
            let result = json!({
                "variables": names,
                "basis": sb.basis(),
                "basis_text": sb.basis().iter().map(|g| format_polynomial(g, names)).collect::<Vec<_>>(),
                "vertices": n,
                "finite_complement": n.has_finite_complement(),
                "complement_size": n.complement().ok().map(|c| c.len()),
            });
            (l.digest, None, result, false)
        }
        Command::Hs { file, eta_max, oracle, k, csv } => {
            let l = load(file)?;
            let p = l.file.presentation()?;
            let n = compute_standard_basis(&p)?.diagram().clone();
            let values: Vec<(u64, u64)> =
                (0..=u64::from(*eta_max)).map(|eta| (eta, hs_function(&n, eta))).collect();
            let mut falsified = false;
            let oracle_value = if *oracle {
                let table = hs_oracle_table(&p, *eta_max);
                let agrees = values.iter().zip(&table).all(|((_, h), o)| h == o);
                falsified |= !agrees;
                json!({ "values": table, "agrees": agrees })
            } else {
                Value::Null
            };
            let eventual = match k.or(l.file.k) {
                Some(k) if n.is_in_dk_star(k) => to_value(&hs_table_of_diagram(&n, k)?),
                _ => Value::Null,
            };
            if let Some(path) = csv {
                write_csv(path, &["eta", "H"], values.iter().map(|(e, h)| [e.to_string(), h.to_string()]))?;
            }
            let result = json!({
                "vertices": n,
                "values": values,
                "oracle": oracle_value,
                "eventual": eventual,
            });
            (l.digest, None, result, falsified)
        }
        Command::Mult { file, k, seed } => {
            let l = load(file)?;
            let p = l.file.presentation()?;
            let k = resolve_k(*k, &l.file)?;
            let seed = resolve_seed(*seed, Some(&l.file), env_seed);
            let report = verify_multiplicity_consistency(&p, k, seed)?;
            (l.digest, Some(seed), to_value(&report), !report.consistent)
        }
        Command::JetSweep { file, k, mu_min, mu_max, seed, trials, csv } => {
            let l = load(file)?;
            let p = l.file.presentation()?;
            let k = resolve_k(*k, &l.file)?;
            let seed = resolve_seed(*seed, Some(&l.file), env_seed);
            if mu_min > mu_max {
                return Err(input_error("--mu-min exceeds --mu-max"));
            }
            let sweep = jet_sweep(&p, k, *mu_min..=*mu_max, seed)?;
            let mut falsified = !sweep.falsifications.is_empty();
            let perturbations = match (sweep.certified_mu0, *trials) {
                (_, 0) => Value::Null,
                (Some(mu0), t) => {
                    let report = perturbation_trial(&p, k, mu0, seed, t)?;
                    falsified |= !report.passed_all;
                    to_value(&report)
                }
                (None, _) => json!({ "skipped": "generators not certified regular" }),
            };
            if let Some(path) = csv {
                let mu0 = sweep.certified_mu0.map(|m| m.to_string()).unwrap_or_default();
                let rows = sweep.records.iter().map(|r| {
                    let stabilized = sweep.stabilized_from.is_some_and(|s| r.mu >= s);
                    [r.mu.to_string(), stabilized.to_string(), mu0.clone()]
                });
                write_csv(path, &["mu", "stabilized", "certified_mu0"], rows)?;
            }
            let result = json!({ "sweep": sweep, "perturbations": perturbations });
            (l.digest, Some(seed), result, falsified)
        }
        Command::CheckRegseq { file, k, seed } => {
            let l = load(file)?;
            let p = l.file.presentation()?;
            let k = resolve_k(*k, &l.file)?;
            let seed = resolve_seed(*seed, Some(&l.file), env_seed);
            let cert = check_regular_sequence(&p, k, seed)?;
            (l.digest, Some(seed), to_value(&cert), false)
        }
        Command::Repro { example: Example::NonStabilizing { mu } } => {
            let repro = non_stabilizing::reproduce(*mu)?;
            let digest = sha256_hex(format!("ex-5-5 mu={mu}").as_bytes());
            (digest, None, to_value(&repro), !repro.verified)
        }
    };
    let report = Report {
        command: argv,
        input_sha256: digest,
        seed,
        result,
        timings: Timings { elapsed_ms: start.elapsed().as_millis() as u64 },
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    Ok(Outcome { report, falsified })
}
