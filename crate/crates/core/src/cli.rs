//! The `linperiod` command line.
//!
//! Exit codes: 0 on success or PASS, 1 when a verification fails, 2 on
//! usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::exact_series::ExactScalar;
use crate::group_combinatorics::{
    build_wn, build_wn_prime, exhaustive_split_counterexample, sampled_split_counterexample,
    UnramifiedCharacter,
};
use crate::local_factors::{
    exterior_square_factor, linear_local_factor, standard_factor, verify_macdonald_with,
    weight_sum_integral, ExteriorConvention, DEFAULT_ORDER,
};
use crate::partial_l::{assemble, evaluate, ingest};
use crate::sampling::random_satake_data;
use crate::weights_schur::{enumerate_weights, schur_laurent, DominantWeight, SatakeData};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Seed used by randomized subcommands when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 20_140_101;

/// Environment variable capping the worker threads.
pub const THREADS_ENV: &str = "LINPERIOD_THREADS";

/// Largest exhaustive sweep `split-check` runs without `--samples`.
const MAX_EXHAUSTIVE: u128 = 20_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "linperiod",
    version,
    about = "Exact unramified computations for L(s + α, π) L(2s, Λ², π)"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    W,
    Wprime,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact Schur polynomial value s_λ(z).
    Schur {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Weights with n nonnegative parts summing to a total.
    Weights {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        total: u64,
    },
    /// The interleaving permutation w_n or w'_n.
    Perm {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Which::W)]
        which: Which,
    },
    /// Check the modulus splitting relation on exponent vectors.
    SplitCheck {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        range: i64,
        /// Check this many random vectors instead of the whole box.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Compare the weight sum with the Euler product through a given order.
    VerifyIdentity {
        #[arg(long)]
        n: usize,
        /// Satake parameters; drawn at random from --seed when omitted.
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// Use the exterior-square factor at s instead of 2s.
        #[arg(long)]
        same_argument: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Standard, exterior-square and combined local polynomials.
    LocalFactor {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        u: String,
    },
    /// The unramified integral as a truncated series in t = q^{-s}.
    UnramifiedIntegral {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        u: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Assemble the partial L-function from a Satake table.
    PartialL {
        #[arg(long)]
        input: PathBuf,
        #[arg(long = "X", visible_alias = "x", default_value_t = 10_000)]
        bound: u64,
        /// Complex point `a+bi` at which to evaluate the truncated series.
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<String>,
    },
    /// Re(χ) for the unramified character with χ(ϖ) = u.
    RealPart {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long)]
        q: String,
    },
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn parse_scalars(text: &str) -> Result<Vec<ExactScalar>, UsageError> {
    text.split(',')
        .map(|x| x.trim().parse::<ExactScalar>().map_err(UsageError::from))
        .collect()
}

fn parse_scalar(text: &str) -> Result<ExactScalar, UsageError> {
    Ok(text.trim().parse::<ExactScalar>()?)
}

fn parse_weight(text: &str) -> Result<DominantWeight, UsageError> {
    let parts = text
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| UsageError(format!("bad weight entry {x:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DominantWeight::new(parts)?)
}

fn parse_complex(text: &str) -> Result<Complex64, UsageError> {
    text.trim()
        .parse::<Complex64>()
        .map_err(|_| UsageError(format!("cannot parse {text:?} as a complex number")))
}

fn strings(xs: &[ExactScalar]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("json values serialize")
}

/// Caps the global rayon pool from [`THREADS_ENV`] when it holds a positive
/// integer. Later calls are no-ops.
pub fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
    {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
}

/// Parses `args` (including the program name) and runs one subcommand.
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
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((code, text)) => {
            let _ = writeln!(out, "{text}");
            code
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(i32, String), UsageError> {
    let json_out = cli.format == Format::Json;
    match &cli.command {
        Command::Schur { lambda, z } => {
            let lambda = parse_weight(lambda)?;
            let z = parse_scalars(z)?;
            let value = schur_laurent(&lambda, &z)?;
            let text = if json_out {
                pretty(&json!({ "lambda": lambda.parts(), "value": value.to_string() }))
            } else {
                value.to_string()
            };
            Ok((EXIT_OK, text))
        }
        Command::Weights { n, total } => {
            let weights = enumerate_weights(*n, *total);
            let text = if json_out {
                let parts: Vec<&[i64]> = weights.iter().map(DominantWeight::parts).collect();
                pretty(&json!(parts))
            } else {
                weights
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            Ok((EXIT_OK, text))
        }
        Command::Perm { n, which } => {
            if *n == 0 {
                return Err(UsageError("n must be positive".into()));
            }
            let perm = match which {
                Which::W => build_wn(*n),
                Which::Wprime => build_wn_prime(*n)?,
            };
            let matrix = perm.to_matrix();
            let text = if json_out {
                let rows: Vec<Vec<String>> = (0..*n)
                    .map(|i| (0..*n).map(|j| matrix.get(i, j).to_string()).collect())
                    .collect();
                pretty(&json!({ "n": n, "images": perm.images(), "matrix": rows }))
            } else {
                format!("{perm}\n\n{matrix}")
            };
            Ok((EXIT_OK, text))
        }
        Command::SplitCheck {
            n,
            range,
            samples,
            seed,
        } => {
            if *range < 0 {
                return Err(UsageError("range must be nonnegative".into()));
            }
            let (counterexample, checked) = match samples {
                Some(k) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                    (
                        sampled_split_counterexample(*n, *range, *k, &mut rng),
                        *k as u128,
                    )
                }
                None => {
                    let size = (2 * *range as u128 + 1)
                        .checked_pow(*n as u32)
                        .unwrap_or(u128::MAX);
                    if size > MAX_EXHAUSTIVE {
                        return Err(UsageError(format!(
                            "{size} vectors is too many for an exhaustive sweep; pass --samples"
                        )));
                    }
                    (exhaustive_split_counterexample(*n, *range), size)
                }
            };
            let code = if counterexample.is_some() {
                EXIT_FAIL
            } else {
                EXIT_OK
            };
            let text = if json_out {
                pretty(&json!({
                    "n": n, "range": range, "checked": checked.to_string(),
                    "pass": counterexample.is_none(),
                    "counterexample": counterexample.as_ref().map(|v| v.exps().to_vec()),
                }))
            } else {
                match &counterexample {
                    None => format!("PASS ({checked} vectors, n = {n}, range = {range})"),
                    Some(v) => format!("FAIL: counterexample {:?}", v.exps()),
                }
            };
            Ok((code, text))
        }
        Command::VerifyIdentity {
            n,
            z,
            u,
            order,
            same_argument,
            seed,
        } => {
            let data = match z {
                Some(z) => {
                    let z = parse_scalars(z)?;
                    if z.len() != *n {
                        return Err(UsageError(format!(
                            "--n is {n} but {} Satake parameters were given",
                            z.len()
                        )));
                    }
                    let u = parse_scalar(u.as_deref().unwrap_or("1"))?;
                    SatakeData::new(z, u)?
                }
                None => {
                    if *n == 0 {
                        return Err(UsageError("n must be positive".into()));
                    }
                    let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                    random_satake_data(*n, &mut rng)
                }
            };
            let convention = if *same_argument {
                ExteriorConvention::SameArgument
            } else {
                ExteriorConvention::DoubledArgument
            };
            let report = verify_macdonald_with(&data, *order, convention);
            let code = if report.holds() { EXIT_OK } else { EXIT_FAIL };
            let text = if json_out {
                pretty(&json!({
                    "z": strings(data.z()), "u": data.u().to_string(),
                    "pass": report.holds(), "report": report,
                }))
            } else {
                report.to_string()
            };
            Ok((code, text))
        }
        Command::LocalFactor { z, u } => {
            let data = SatakeData::new(parse_scalars(z)?, parse_scalar(u)?)?;
            let standard = standard_factor(&data);
            let exterior = exterior_square_factor(&data);
            let combined = linear_local_factor(&data);
            let text = if json_out {
                pretty(&json!({
                    "standard": strings(standard.coeffs()),
                    "exterior_square": strings(exterior.coeffs()),
                    "linear": strings(combined.coeffs()),
                }))
            } else {
                format!(
                    "standard: {}\nexterior_square: {}\nlinear: {}",
                    serde_json::to_string(standard.coeffs())?,
                    serde_json::to_string(exterior.coeffs())?,
                    serde_json::to_string(combined.coeffs())?,
                )
            };
            Ok((EXIT_OK, text))
        }
        Command::UnramifiedIntegral { z, u, order } => {
            let data = SatakeData::new(parse_scalars(z)?, parse_scalar(u)?)?;
            let series = weight_sum_integral(&data, *order);
            let text = if json_out {
                pretty(&json!(strings(series.coeffs())))
            } else {
                series
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| format!("t^{k}: {c}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            Ok((EXIT_OK, text))
        }
        Command::PartialL { input, bound, eval } => {
            let table = ingest(input)?;
            let series = assemble(&table, *bound);
            let mut value = serde_json::to_value(series.to_json())?;
            if let Some(s) = eval {
                let s = parse_complex(s)?;
                let e = evaluate(&series, s);
                value["evaluation"] = json!({
                    "s": { "re": s.re, "im": s.im },
                    "re": e.value.re, "im": e.value.im,
                    "tail_bound": if e.tail_bound.is_finite() { json!(e.tail_bound) } else { json!(null) },
                    "convergence_verified": e.convergence_verified,
                });
            }
            Ok((EXIT_OK, pretty(&value)))
        }
        Command::RealPart { u, q } => {
            let chi = UnramifiedCharacter::new(parse_scalar(u)?, parse_scalar(q)?)?;
            let r = chi.real_part();
            let text = if json_out {
                pretty(&json!({ "real_part": r }))
            } else {
                r.to_string()
            };
            Ok((EXIT_OK, text))
        }
    }
}
