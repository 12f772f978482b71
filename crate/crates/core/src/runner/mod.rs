//! The `fock-canon` command line: argument parsing, dispatch, the result
//! cache and output formatting.
//!
//! Exit status: 0 on success, 1 when a verification finds a counterexample,
//! 2 on usage or input errors, 3 on an internal-consistency failure.

mod cache;
mod format;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::canonical::{
    h_vector, mullineux, pstar_contains, verify_suite, CanonicalColumn, LltEngine, VerifyMode,
    VerifyParams, VerifyReport,
};
use crate::error::{Error, Result};
use crate::fock_space::{parse_int, FockVector};
use crate::jantzen::{arrows, block_column, induced_sequence, jantzen_sum, leq_j, leq_p};
use crate::littlewood_richardson::{lr_coefficient, schur_product_oracle, DEFAULT_ORACLE_BOUND};
use crate::partition_core::{e_core, Partition};

pub use cache::{checksum, default_cache_dir, Cache, CacheEntry, CacheKey, CACHE_ENV, VERSION_TAG};
pub use format::{csv_rows, latex_column, render_columns, render_hvector, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "fock-canon", version, about = "Canonical bases of the level-one Fock space")]
pub struct Cli {
    /// Cache directory (default: $FOCK_CANON_CACHE, then the user data directory).
    #[arg(long, global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Relation {
    P,
    J,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// c^λ_{αβ} for `lr λ α β`; with --expand, s_α s_β for `lr --expand α β`.
    Lr {
        #[arg(long)]
        expand: bool,
        #[arg(required = true, num_args = 2..=3)]
        partitions: Vec<Partition>,
    },
    /// Canonical basis columns G(μ) of degree n.
    Canonical {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: Option<Partition>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The closed formula H(μ).
    Hvector {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        core: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Membership of μ in P*_κ.
    Pstar {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        core: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The Mullineux image of an e-regular partition.
    Mullineux {
        #[arg(long)]
        e: usize,
        partition: Partition,
    },
    /// Exhaustive identity checks.
    Verify {
        #[arg(value_parser = parse_mode)]
        mode: VerifyMode,
        #[arg(long)]
        e: usize,
        /// Restrict to these cores (repeatable).
        #[arg(long)]
        core: Vec<Partition>,
        #[arg(long, default_value_t = 5)]
        max_core: usize,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long)]
        max_weight: Option<usize>,
        /// Size bound for canonical-basis oracles in `mull` (default: --max-n).
        #[arg(long)]
        oracle_n: Option<usize>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The induced e-sequence of P on T beads.
    Eseq {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        beads: usize,
        partition: Partition,
    },
    /// All arrows P → τ of the Jantzen relation.
    Arrows {
        #[arg(long)]
        e: usize,
        partition: Partition,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Whether P ≤ Q in the p-order or the Jantzen order.
    Order {
        #[arg(long)]
        e: usize,
        #[arg(value_enum)]
        relation: Relation,
        p: Partition,
        q: Partition,
    },
    /// The Jantzen sum J_{λμ}.
    Jantzen {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        lambda: Partition,
        /// Characteristic: 0 or a prime power base l >= 2.
        #[arg(long, default_value_t = 0)]
        l: u64,
        /// Column of μ at v = 1; computed from the canonical basis when absent (l = 0 only).
        #[arg(long, value_name = "FILE.json")]
        column: Option<PathBuf>,
    },
}

fn parse_mode(s: &str) -> std::result::Result<VerifyMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn check_e(e: usize) -> Result<()> {
    if e < 2 {
        return Err(Error::Parameter(format!("--e must be at least 2, got {e}")));
    }
    Ok(())
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

/// Parse `args` (including the program name) and run, writing data to `out`
/// and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return EXIT_INTERNAL;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn cache_for(cli: &Cli) -> Cache {
    if cli.no_cache {
        return Cache::disabled();
    }
    Cache::new(cli.cache_dir.clone().or_else(default_cache_dir))
}

/// Output text and exit status for a parsed command line.
pub fn execute(cli: &Cli) -> Result<(String, i32)> {
    let ok = |s: String| Ok((s, EXIT_OK));
    match &cli.command {
        Command::Lr { expand, partitions } => {
            if *expand {
                let [alpha, beta] = partitions.as_slice() else {
                    return Err(Error::Parameter("lr --expand takes two partitions α β".into()));
                };
                let product = schur_product_oracle(alpha, beta, DEFAULT_ORACLE_BOUND)?;
                let entries: Vec<Value> = product
                    .iter()
                    .rev()
                    .map(|(lam, c)| json!({ "partition": lam.parts(), "coefficient": c }))
                    .collect();
                ok(format!("{}\n", serde_json::to_string_pretty(&entries)?))
            } else {
                let [lam, alpha, beta] = partitions.as_slice() else {
                    return Err(Error::Parameter("lr takes three partitions λ α β".into()));
                };
                ok(format!("{}\n", lr_coefficient(lam, alpha, beta)))
            }
        }
        Command::Canonical { e, n, mu, format } => {
            check_e(*e)?;
            let cache = cache_for(cli);
            let cols = match mu {
                Some(mu) => {
                    if mu.size() != *n {
                        return Err(Error::Parameter(format!("--mu {mu} is not a partition of {n}")));
                    }
                    let cached = cache
                        .load(&CacheKey::canonical(*e, *n))
                        .and_then(|p| serde_json::from_str::<Vec<CanonicalColumn>>(&p).ok())
                        .and_then(|cols| cols.into_iter().find(|c| &c.mu == mu));
                    match cached {
                        Some(col) => vec![col],
                        None => vec![LltEngine::new(*e).column(mu)?],
                    }
                }
                None => cache.canonical(*n, *e)?,
            };
            ok(render_columns(&cols, *format)?)
        }
        Command::Hvector { e, core, mu, format } => {
            check_e(*e)?;
            pstar_contains(core, *e, mu)?;
            let h = h_vector(mu, *e);
            if !h.in_pstar {
                log::warn!("{mu} is not in P*_{core}; the closed formula need not equal G({mu})");
            }
            ok(render_hvector(&h, *format)?)
        }
        Command::Pstar { e, core, mu, format } => {
            check_e(*e)?;
            let report = pstar_contains(core, *e, mu)?;
            for v in &report.violations {
                log::info!("violation: {v:?}");
            }
            match format {
                Format::Json => ok(format!("{}\n", serde_json::to_string_pretty(&report)?)),
                _ => ok(format!("{}\n", report.member)),
            }
        }
        Command::Mullineux { e, partition } => {
            check_e(*e)?;
            ok(format!("{}\n", mullineux(partition, *e)?))
        }
        Command::Verify { mode, e, core, max_core, max_n, max_weight, oracle_n, jobs, format } => {
            check_e(*e)?;
            let mut params = VerifyParams::new(*e);
            if !core.is_empty() {
                params.cores = Some(core.clone());
            }
            params.max_core = *max_core;
            params.max_n = *max_n;
            params.max_weight = max_weight.unwrap_or(usize::MAX);
            params.oracle_n = *oracle_n;
            if let Some(j) = jobs {
                params.jobs = *j;
            }
            let report = verify_suite(*mode, &params)?;
            let code = verify_exit_code(&report);
            let text = match format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&report)?),
                _ => verify_text(&report),
            };
            Ok((text, code))
        }
        Command::Eseq { e, beads, partition } => {
            check_e(*e)?;
            let s = induced_sequence(partition, *e, *beads)?.values;
            let text = if s.is_empty() {
                "-".to_string()
            } else {
                s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            };
            ok(format!("{text}\n"))
        }
        Command::Arrows { e, partition, format } => {
            check_e(*e)?;
            let list = arrows(partition, *e);
            match format {
                Format::Json => ok(format!("{}\n", serde_json::to_string_pretty(&list)?)),
                _ => ok(list
                    .iter()
                    .map(|a| {
                        format!(
                            "{} -> {} via {} (a={}, b={}, i={}, sign={:+})\n",
                            a.lambda,
                            a.tau,
                            a.sigma,
                            a.a,
                            a.b,
                            a.i,
                            a.sign()
                        )
                    })
                    .collect()),
            }
        }
        Command::Order { e, relation, p, q } => {
            check_e(*e)?;
            let holds = match relation {
                Relation::P => leq_p(p, q, *e),
                Relation::J => leq_j(p, q, *e),
            };
            ok(format!("{holds}\n"))
        }
        Command::Jantzen { e, mu, lambda, l, column } => {
            check_e(*e)?;
            if *l == 1 {
                return Err(Error::Parameter("--l 1 is not a characteristic; use 0 or l >= 2".into()));
            }
            let values = match column {
                Some(path) => read_column(path)?,
                None if *l == 0 => LltEngine::new(*e).column(mu)?.vector.at_one(),
                None => {
                    return Err(Error::Parameter(format!(
                        "--column is required for l = {l}: only l = 0 columns are computed"
                    )))
                }
            };
            if e_core(mu, *e) != e_core(lambda, *e) || mu.size() != lambda.size() {
                return ok("0\n".into());
            }
            let col = block_column(mu, *e, &values);
            ok(format!("{}\n", jantzen_sum(lambda, mu, *e, *l, &col)?))
        }
    }
}

pub fn verify_exit_code(report: &VerifyReport) -> i32 {
    if !report.internal_errors.is_empty() {
        EXIT_INTERNAL
    } else if !report.failures.is_empty() {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    }
}

fn verify_text(report: &VerifyReport) -> String {
    let mut s = format!("{}\n", report.summary());
    if let Some(f) = report.first_failure() {
        let lambda = f.lambda.as_ref().map_or_else(|| "-".to_string(), |l| l.to_string());
        s.push_str(&format!(
            "counterexample [{}] {} lambda={}: expected {}, found {}\n",
            f.identity, f.instance, lambda, f.expected, f.found
        ));
    }
    for e in report.internal_errors.iter().take(1) {
        s.push_str(&format!("internal error: {e}\n"));
    }
    s
}

/// A column at `v = 1`: either a Fock-space vector in the JSON schema, whose
/// coefficients are evaluated at `v = 1`, or an object from partition text to
/// integer.
pub fn read_column(path: &std::path::Path) -> Result<BTreeMap<Partition, BigInt>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| Error::Input(format!("{} is not JSON: {e}", path.display())))?;
    if v.get("entries").is_some() {
        return Ok(FockVector::from_json(&v)?.at_one());
    }
    let Value::Object(map) = v else {
        return Err(Error::Input(format!("{}: expected an object", path.display())));
    };
    map.iter().map(|(k, c)| Ok((k.parse::<Partition>()?, parse_int(c)?))).collect()
}
