//! Command-line front end for `mixvol`.
//!
//! Every command reads one JSON document (from a file, `--inline`, or stdin)
//! and writes either JSON or plain text. Exact rationals are always printed
//! as canonical strings, `"p/q"` or `"k"`.
//!
//! Exit statuses: 0 success, 1 I/O failure, 2 unparsable input, 3 violated
//! precondition, 4 engine failure (no generic lifting found).

mod bench;
mod input;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mixvol::geometry::{convex_hull, Point};
use mixvol::laurent::{bkk_bound, initial_system, kushnirenko_bound, LaurentPolynomial};
use mixvol::reduction::{build_simplices, verify_main_theorem};
use mixvol::{rational, EngineRegistry, Rational};
use serde_json::{json, Value};

pub use input::Entry;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("parse error{}: {message}", position.map(|(l, c)| format!(" at line {l}, column {c}")).unwrap_or_default())]
    Parse {
        message: String,
        position: Option<(usize, usize)>,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("engine failure: {0}")]
    Engine(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse { .. } => 2,
            CliError::Precondition(_) => 3,
            CliError::Engine(_) => 4,
        }
    }
}

impl From<mixvol::Error> for CliError {
    fn from(e: mixvol::Error) -> Self {
        match e {
            mixvol::Error::NonGenericLifting { .. } => CliError::Engine(e.to_string()),
            mixvol::Error::UnknownEngine { .. } | mixvol::Error::ParseRational(_) => CliError::Parse {
                message: e.to_string(),
                position: None,
            },
            other => CliError::Precondition(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Plain,
}

#[derive(Debug, Parser)]
#[command(name = "mixvol", version, about = "Exact normalized volumes, mixed volumes and BKK bounds")]
pub struct Cli {
    /// Mixed-volume engine: ie, cells or segments.
    #[arg(long, global = true, default_value = "ie")]
    pub engine: String,

    /// Seed for randomized engines and benchmark instances.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Source {
    /// JSON input file; stdin when omitted or `-`.
    pub input: Option<PathBuf>,

    /// JSON input given on the command line.
    #[arg(long, conflicts_with = "input")]
    pub inline: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normalized volume of the convex hull of `{"points": [...]}`.
    Volume(Source),
    /// Mixed volume of `{"polytopes": [...]}`.
    MixedVolume(Source),
    /// The simplices Δ(p_i) for `{"points": [...]}`, as a polytope tuple.
    Reduce(Source),
    /// Compares nvol(conv P) with the mixed volume of the reduced simplices.
    Verify(Source),
    /// BKK bound of `{"system": [...]}`.
    Bkk(Source),
    /// Initial system of `{"system": [...], "alpha": [...]}`.
    Initial {
        #[command(flatten)]
        source: Source,
        /// Direction vector, comma separated; overrides the `alpha` key.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// CSV timings for box, reduced-simplex and segment tuples.
    Bench {
        /// Largest dimension benchmarked.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

fn read_source(src: &Source) -> Result<String, CliError> {
    if let Some(text) = &src.inline {
        return Ok(text.clone());
    }
    match &src.input {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display()))),
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Io(format!("cannot read stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn q(v: &Rational) -> Value {
    Value::String(rational::format(v))
}

fn point_json(p: &Point) -> Value {
    Value::Array(p.coords().iter().map(q).collect())
}

fn polynomial_json(f: &LaurentPolynomial) -> Value {
    json!({
        "terms": f.terms().map(|(e, c)| json!({"exp": e, "coef": q(c)})).collect::<Vec<_>>()
    })
}

/// Output of one command in both renderings.
struct Report {
    json: Value,
    plain: String,
}

/// Runs the parsed command and returns the text to emit.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let registry = EngineRegistry::new();
    let report = match &cli.command {
        Command::Volume(src) => {
            let config = input::parse::<input::ConfigurationInput>(&read_source(src)?)?.into_configuration()?;
            let hull = convex_hull(&config);
            let nvol = hull.normalized_volume().clone();
            Report {
                plain: rational::format(&nvol),
                json: json!({
                    "normalized_volume": q(&nvol),
                    "volume": q(&hull.volume()),
                    "dimension": hull.dim(),
                    "vertices": hull.vertices().iter().map(point_json).collect::<Vec<_>>(),
                    "seed": cli.seed,
                }),
            }
        }
        Command::MixedVolume(src) => {
            let engine = registry.get(&cli.engine)?;
            let tuple = input::parse::<input::TupleInput>(&read_source(src)?)?.into_tuple()?;
            let mv = engine.mixed_volume(&tuple, cli.seed)?;
            Report {
                plain: rational::format(&mv),
                json: json!({"mixed_volume": q(&mv), "engine": engine.name(), "seed": cli.seed}),
            }
        }
        Command::Reduce(src) => {
            let config = input::parse::<input::ConfigurationInput>(&read_source(src)?)?.into_configuration()?;
            let reduced = build_simplices(&config)?;
            let polytopes: Vec<Vec<Value>> = reduced
                .simplices
                .iter()
                .map(|s| s.vertices().iter().map(point_json).collect())
                .collect();
            let plain = reduced
                .simplices
                .iter()
                .map(|s| {
                    s.vertices()
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect::<Vec<_>>()
                .join("\n");
            Report {
                plain,
                json: json!({
                    "polytopes": polytopes,
                    "source_dimension": config.ambient_dim(),
                    "dimension": config.len(),
                    "seed": cli.seed,
                }),
            }
        }
        Command::Verify(src) => {
            let engine = registry.get(&cli.engine)?;
            let config = input::parse::<input::ConfigurationInput>(&read_source(src)?)?.into_configuration()?;
            let check = verify_main_theorem(&config, engine, cli.seed)?;
            Report {
                plain: format!(
                    "lhs {}\nrhs {}\nequal {}",
                    rational::format(&check.lhs),
                    rational::format(&check.rhs),
                    check.equal
                ),
                json: json!({
                    "lhs": q(&check.lhs),
                    "rhs": q(&check.rhs),
                    "equal": check.equal,
                    "engine": engine.name(),
                    "seed": cli.seed,
                }),
            }
        }
        Command::Bkk(src) => {
            let engine = registry.get(&cli.engine)?;
            let system = input::parse::<input::SystemInput>(&read_source(src)?)?.to_system()?;
            let bound = bkk_bound(&system, engine, cli.seed)?;
            let kushnirenko = kushnirenko_bound(&system).ok();
            Report {
                plain: rational::format(&bound),
                json: json!({
                    "bkk_bound": q(&bound),
                    "kushnirenko_bound": kushnirenko.as_ref().map(q),
                    "engine": engine.name(),
                    "seed": cli.seed,
                }),
            }
        }
        Command::Initial { source, alpha } => {
            let parsed = input::parse::<input::SystemInput>(&read_source(source)?)?;
            let system = parsed.to_system()?;
            let alpha = match alpha {
                Some(text) => input::parse_alpha(text)?,
                None => parsed.alpha().ok_or_else(|| CliError::Parse {
                    message: "missing direction vector; pass --alpha or an \"alpha\" key".into(),
                    position: None,
                })?,
            };
            let init = initial_system(&system, &alpha)?;
            Report {
                plain: init
                    .polynomials()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n"),
                json: json!({
                    "system": init.polynomials().iter().map(polynomial_json).collect::<Vec<_>>(),
                    "alpha": alpha.0.iter().map(q).collect::<Vec<_>>(),
                    "seed": cli.seed,
                }),
            }
        }
        Command::Bench { max_n } => {
            let engine = registry.get(&cli.engine)?;
            let csv = bench::run(&registry, engine, *max_n, cli.seed)?;
            Report {
                plain: csv.clone(),
                json: Value::String(csv),
            }
        }
    };
    Ok(match (&cli.command, cli.format) {
        // CSV regardless of format.
        (Command::Bench { .. }, _) => report.plain,
        (_, Format::Plain) => report.plain + "\n",
        (_, Format::Json) => {
            serde_json::to_string_pretty(&report.json).expect("JSON values serialize") + "\n"
        }
    })
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Io(format!("cannot write stdout: {e}")))
        }
    }
}

/// Parses `args`, runs the command and returns the process exit status.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(&cli).and_then(|text| emit(&cli, &text)) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
