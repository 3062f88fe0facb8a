//! `cdt`: generators, colorers, the exact solver and bound checks from the
//! command line. Structured output is JSON; `--pretty` prints tables instead.

mod bounds_cmd;
mod color_cmd;
mod exact_cmd;
mod gen_cmd;
mod io;
mod survey_cmd;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::io::Failure;

#[derive(Parser, Debug)]
#[command(name = "cdt", version, about = "Cyclic interval edge colorings and cyclic deficiency")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a graph of a named family as an edge list plus a role-label sidecar.
    Gen(gen_cmd::GenArgs),
    /// Color a graph with a constructive colorer.
    Color(color_cmd::ColorArgs),
    /// Check a coloring file against a graph.
    Verify(color_cmd::VerifyArgs),
    /// Exact search for def_c, a cyclic t-coloring or W_c.
    Exact(exact_cmd::ExactArgs),
    /// Evaluate every applicable bound on a graph.
    Bounds(bounds_cmd::BoundsArgs),
    /// Exact def_c over all connected graphs up to a given order.
    Survey(survey_cmd::SurveyArgs),
}

/// Output options shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Write JSON here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print a human-readable table instead of JSON.
    #[arg(long)]
    pub pretty: bool,
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen(a) => gen_cmd::run(a),
        Command::Color(a) => color_cmd::run_color(a),
        Command::Verify(a) => color_cmd::run_verify(a),
        Command::Exact(a) => exact_cmd::run(a),
        Command::Bounds(a) => bounds_cmd::run(a),
        Command::Survey(a) => survey_cmd::run(a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("cdt: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
