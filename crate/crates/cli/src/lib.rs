//! Command-line front end for `qschur-core`: weight-set resolution, basis
//! tables, verification suites and JSON dumps.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qschur_core::error::Error as CoreError;
use qschur_core::linalg::Rat;
use serde_json::{json, Value};

pub mod commands;
pub mod dump;
pub mod weights;

use weights::WeightSpec;

#[derive(Debug, Parser)]
#[command(name = "qschur", version, about = "q-Schur algebras of finite Weyl type")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Cartan type such as G2, B2, A3.
    #[arg(long = "type", global = true, default_value = "G2")]
    pub type_label: String,
    /// `g2:n=N` or a JSON file with an array of seed weights.
    #[arg(long, global = true)]
    pub weights: Option<String>,
    /// Shorthand for `--weights g2:n=N`.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Rational values of q besides q = 1, e.g. `2,3/2,-2/5`.
    #[arg(long = "q-samples", global = true, default_value = "2,3/2,-2/5")]
    pub q_samples: String,
    /// Worker threads; 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Refuse Weyl groups with more elements than this.
    #[arg(long, global = true, default_value_t = 1200)]
    pub cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Group and weight-set census.
    Info,
    Hecke {
        #[command(subcommand)]
        cmd: HeckeCmd,
    },
    Tmodule {
        #[command(subcommand)]
        cmd: TmoduleCmd,
    },
    Schur {
        #[command(subcommand)]
        cmd: SchurCmd,
    },
    G2 {
        #[command(subcommand)]
        cmd: G2Cmd,
    },
    /// Weight set, triples and basis tables as JSON.
    Dump {
        /// Also include KL elements, canonical T vectors and all matrices.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum HeckeCmd {
    /// Kazhdan-Lusztig basis `C_w` for every `w`.
    Cbasis,
}

#[derive(Debug, Subcommand)]
pub enum TmoduleCmd {
    /// Canonical basis of `T_f`.
    Cbasis,
    /// Bar involution of every standard vector.
    Bar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Std,
    Canonical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchurSuite {
    Duality,
    Positivity,
    Bar,
}

#[derive(Debug, Subcommand)]
pub enum SchurCmd {
    /// Canonical basis in standard coordinates.
    Cbasis,
    /// Product of two basis elements, expanded in the same basis.
    Compose {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = Basis::Std)]
        basis: Basis,
    },
    /// Matrix entries and standard coordinates of a basis element.
    Coords {
        xi: String,
        #[arg(long, value_enum, default_value_t = Basis::Std)]
        basis: Basis,
    },
    Verify {
        #[arg(long, value_enum)]
        suite: SchurSuite,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum G2Suite {
    A,
    B,
    C,
}

#[derive(Debug, Subcommand)]
pub enum G2Cmd {
    /// Check one formula corpus against the construction.
    Verify {
        #[arg(long, value_enum, ignore_case = true)]
        suite: G2Suite,
    },
}

/// A failure with its exit code: 2 for bad input, 1 for failed checks.
#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    pub fn usage(message: String) -> Self {
        CliError { code: 2, kind: "argument", message }
    }

    pub fn from_core_usage(e: CoreError) -> Self {
        CliError::usage(e.to_string())
    }

    pub fn internal(e: CoreError) -> Self {
        CliError { code: 1, kind: "computation", message: e.to_string() }
    }
}

/// What a command produced: the JSON value, its text rendering, and the
/// offending instances if a check failed.
#[derive(Debug, Clone)]
pub struct Output {
    pub json: Value,
    pub text: String,
    pub failures: Vec<Value>,
}

impl Output {
    pub fn ok(json: Value, text: String) -> Self {
        Output { json, text, failures: Vec::new() }
    }
}

pub fn parse_samples(s: &str) -> Result<Vec<Rat>, CliError> {
    let mut out = vec![Rat::from_integer(1.into())];
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let q: Rat = part.parse().map_err(|_| CliError::usage(format!("bad q sample `{}`", part)))?;
        if q == Rat::from_integer(0.into()) {
            return Err(CliError::usage("q = 0 is not a valid sample".into()));
        }
        if !out.contains(&q) {
            out.push(q);
        }
    }
    Ok(out)
}

impl Global {
    pub fn weight_spec(&self) -> Result<Option<WeightSpec>, CliError> {
        match (&self.weights, self.n) {
            (Some(_), Some(_)) => Err(CliError::usage("give either --weights or --n, not both".into())),
            (Some(w), None) => WeightSpec::parse(w).map(Some),
            (None, Some(0)) => Err(CliError::usage("--n must be at least 1".into())),
            (None, Some(n)) => Ok(Some(WeightSpec::G2Box(n))),
            (None, None) => Ok(None),
        }
    }
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.global.jobs)
        .build()
        .map_err(|e| CliError::usage(format!("cannot start {} workers: {}", cli.global.jobs, e)))?;
    pool.install(|| commands::dispatch(&cli.global, &cli.command))
}

/// Runs the tool on `argv` (including the program name) and returns the exit
/// code. Results go to `out`, failure reports to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{}", text) } else { write!(err, "{}", text) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let body = match cli.global.format {
                Format::Json => serde_json::to_string_pretty(&o.json).expect("serializable") + "\n",
                Format::Text => o.text.clone(),
            };
            let _ = out.write_all(body.as_bytes());
            if o.failures.is_empty() {
                0
            } else {
                let report = json!({ "error": "verification", "failures": o.failures });
                let _ = writeln!(err, "{}", report);
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "{}", json!({ "error": e.kind, "message": e.message }));
            e.code
        }
    }
}
