//! The `valuix` command line: JSON in, JSON out.

pub mod commands;
pub mod json;
pub mod suites;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::valuation::DEFAULT_DEGREE_CAP;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "valuix", version, about = "Exact toric valuative computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Input JSON file, or `-` for stdin.
    #[arg(long, global = true, value_name = "FILE|-")]
    pub input: Option<String>,
    /// Output file, or `-` for stdout.
    #[arg(long, global = true, value_name = "FILE|-", default_value = "-")]
    pub output: String,
    #[arg(long, global = true, value_name = "N", default_value_t = 1)]
    pub seed: u64,
    /// Degree cap for coordinate changes.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_DEGREE_CAP)]
    pub max_degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Log canonical threshold of a monomial ideal.
    Lct,
    /// Generators of L²(c·Z(a)).
    Multiplier,
    /// Generators of L∞(c·Z(a)).
    Linf,
    /// Nef envelope of a PL function on a fan.
    Envelope,
    /// Mixed multiplicity of n primary ideals.
    MixedMult,
    /// Intersection number of n primary ideals.
    Intersection,
    /// Monge-Ampère measure of n−1 primary ideals.
    MongeAmpere,
    /// Lelong number, or generalized Lelong number against `phi`.
    Lelong,
    /// Relative type of a germ at a weight.
    RelativeType,
    /// Value of the transform of a germ at a weight.
    TransformEval,
    /// Homotopy between a valuation and its monomial retraction.
    Homotopy,
    /// Retraction of a valuation onto a fan.
    Retract,
    /// Dual complex of a fan.
    DualComplex,
    /// Run a property suite, or every suite with `--all`.
    Check {
        suite: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

/// Result of one invocation: the document to print and the exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub output: Value,
    pub code: i32,
}

fn parse_input(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Runs a parsed command on the input text. Errors are usage or input errors.
pub fn execute(
    command: &Command,
    input: Option<&str>,
    seed: u64,
    max_degree: u32,
) -> Result<Outcome> {
    if let Command::Check { suite, all } = command {
        let knobs: suites::Knobs = match input {
            Some(text) if !text.trim().is_empty() => {
                serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?
            }
            _ => suites::Knobs::default(),
        };
        let (output, passed) = match (suite, all) {
            (None, true) => {
                let r = suites::run_all(seed, &knobs)?;
                (serde_json::to_value(&r), r.passed)
            }
            (Some(name), false) => {
                let r = suites::run_suite(name, seed, &knobs)?;
                (serde_json::to_value(&r), r.passed)
            }
            _ => {
                return Err(Error::InvalidArgument(
                    "give exactly one of a suite name or --all".into(),
                ))
            }
        };
        let code = if passed {
            EXIT_OK
        } else {
            EXIT_PROPERTY_FAILURE
        };
        return Ok(Outcome {
            output: output.expect("reports serialize"),
            code,
        });
    }
    let input = parse_input(input.ok_or(Error::Empty("input document"))?)?;
    let output = match command {
        Command::Lct => commands::lct_cmd(&input),
        Command::Multiplier => commands::multiplier_cmd(&input),
        Command::Linf => commands::linf_cmd(&input),
        Command::Envelope => commands::envelope_cmd(&input),
        Command::MixedMult => commands::mixed_mult_cmd(&input),
        Command::Intersection => commands::intersection_cmd(&input),
        Command::MongeAmpere => commands::monge_ampere_cmd(&input),
        Command::Lelong => commands::lelong_cmd(&input),
        Command::RelativeType => commands::relative_type_cmd(&input),
        Command::TransformEval => commands::transform_eval_cmd(&input),
        Command::Homotopy => commands::homotopy_cmd(&input, max_degree),
        Command::Retract => commands::retract_cmd(&input, max_degree),
        Command::DualComplex => commands::dual_complex_cmd(&input),
        Command::Check { .. } => unreachable!("handled above"),
    }?;
    Ok(Outcome {
        output,
        code: EXIT_OK,
    })
}

fn read_input(path: Option<&str>, command: &Command) -> std::io::Result<Option<String>> {
    let path = match (path, command) {
        (Some(p), _) => p,
        (None, Command::Check { .. }) => return Ok(None),
        (None, _) => "-",
    };
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(PathBuf::from(path))?;
    }
    Ok(Some(text))
}

fn write_output(path: &str, value: &Value) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("values serialize");
    text.push('\n');
    if path == "-" {
        let mut out = std::io::stdout().lock();
        out.write_all(text.as_bytes())?;
        out.flush()
    } else {
        std::fs::write(path, text)
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let input = match read_input(cli.input.as_deref(), &cli.command) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("valuix: cannot read input: {e}");
            return EXIT_USAGE;
        }
    };
    match execute(&cli.command, input.as_deref(), cli.seed, cli.max_degree) {
        Ok(outcome) => match write_output(&cli.output, &outcome.output) {
            Ok(()) => outcome.code,
            Err(e) => {
                eprintln!("valuix: cannot write output: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            eprintln!("valuix: {e}");
            EXIT_USAGE
        }
    }
}
