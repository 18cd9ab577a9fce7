//! The `artin` command line: argument parsing, system loading and rendering
//! of engine results as text or JSON.

pub mod commands;
pub mod system;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use artin_core::CoxeterSystem;

#[derive(Parser, Debug)]
#[command(name = "artin", version, about = "Normal forms, ribbons and normalizers in spherical Artin-Tits groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Preset name (A3, B2, I2(5), I2(inf), ...) or path to a system file.
    #[arg(long, global = true)]
    pub system: Option<String>,
    /// Subset X, e.g. `{s1,s3}` or `s1,s3`.
    #[arg(long = "X", global = true, value_name = "SUBSET")]
    pub x: Option<String>,
    /// Subset Y.
    #[arg(long = "Y", global = true, value_name = "SUBSET")]
    pub y: Option<String>,
    /// Emit a single JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Word length bound (lcm search, oracle ball radius).
    #[arg(long = "max-len", global = true, value_name = "N")]
    pub max_len: Option<usize>,
    /// Seed for commands that sample at random.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Adyan normal form of a positive word.
    Nf { word: String },
    /// ShortLex reduced word of the Coxeter image.
    ReduceW { word: String },
    /// Greatest common divisor of two positive words.
    Gcd {
        a: String,
        b: String,
        /// Right divisors instead of left ones.
        #[arg(long)]
        right: bool,
    },
    /// Least common multiple of two positive words.
    Lcm {
        a: String,
        b: String,
        /// Common left multiple instead of right.
        #[arg(long)]
        right: bool,
    },
    /// Garside element of X (default: all generators).
    Delta,
    /// Ribbon decomposition of a positive conjugator of X.
    Ribbon { word: String },
    /// Whether a positive word conjugates X onto a subset (Y if given).
    Conj { word: String },
    /// Factorization g = y·x when g·Δ_X²·g⁻¹ lies in A_Y.
    PropClef { word: String },
    /// Whether g·A_X·g⁻¹ ⊆ A_Y, with a witness.
    Contains { word: String },
    /// Membership in the normalizer of A_X, with the factorization.
    Normalizer { word: String },
    /// Decomposition of an element of the quasi-centralizer of A_X.
    Qz { word: String },
    /// Coxeter-side quotient G_X modulo the centralizer, lifted to H_X.
    QuotientIso,
    /// Compares the engine with brute-force word classes on a ball.
    OracleCheck {
        /// With `--seed`, the number of sampled pairs.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Nf { .. } => "nf",
            Command::ReduceW { .. } => "reduce-w",
            Command::Gcd { .. } => "gcd",
            Command::Lcm { .. } => "lcm",
            Command::Delta => "delta",
            Command::Ribbon { .. } => "ribbon",
            Command::Conj { .. } => "conj",
            Command::PropClef { .. } => "prop-clef",
            Command::Contains { .. } => "contains",
            Command::Normalizer { .. } => "normalizer",
            Command::Qz { .. } => "qz",
            Command::QuotientIso => "quotient-iso",
            Command::OracleCheck { .. } => "oracle-check",
        }
    }
}

/// What a command produced, before rendering.
#[derive(Debug, Clone, PartialEq)]
pub struct Answer {
    /// `false` for a negative answer (exit status 1).
    pub positive: bool,
    pub text: String,
    pub result: Value,
    pub witness: Value,
}

impl Answer {
    pub fn yes(text: String, result: Value, witness: Value) -> Self {
        Answer { positive: true, text, result, witness }
    }

    pub fn no(reason: impl Into<String>, result: Value) -> Self {
        let reason = reason.into();
        Answer { positive: false, text: format!("no: {reason}"), result, witness: Value::Null }
    }
}

/// Rendered output and exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

fn system_json(label: &str, sys: &CoxeterSystem) -> Value {
    json!({ "name": label, "generators": sys.names() })
}

pub fn run(cli: &Cli) -> Outcome {
    let Some(label) = cli.system.as_deref() else {
        return Outcome::input_error("--system is required");
    };
    let sys = match system::load(label) {
        Ok(sys) => sys,
        Err(e) => return Outcome::input_error(e),
    };
    let (answer, inputs) = match commands::execute(cli, &sys) {
        Ok(pair) => pair,
        Err(e) => return Outcome::input_error(e),
    };
    let code = if answer.positive { 0 } else { 1 };
    let stdout = if cli.json {
        let obj = json!({
            "command": cli.command.name(),
            "system": system_json(label, &sys),
            "inputs": inputs,
            "result": answer.result,
            "witness": answer.witness,
        });
        format!("{}\n", serde_json::to_string_pretty(&obj).expect("JSON values always serialize"))
    } else {
        format!("{}\n", answer.text)
    };
    Outcome { code, stdout, stderr: String::new() }
}
