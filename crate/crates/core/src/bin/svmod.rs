use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use svmod::commands::{self, Exit};
use svmod::{Algebra, Error};

#[derive(Parser)]
#[command(name = "svmod", version, about = "Exact computations in the Schrödinger-Virasoro algebra and W(2,2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Sv,
    W22,
}

#[derive(Subcommand)]
enum Command {
    /// Print the bracket of two generators.
    Bracket {
        #[arg(long, value_enum)]
        alg: AlgebraArg,
        /// Generator JSON, e.g. '{"f":"L","n":2}'.
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Check conditions (I)-(VII) for a quotient parameter file.
    VerifyQ { file: PathBuf },
    /// Reduce the vector of a scenario file to the base module.
    Reduce { file: PathBuf },
    /// Run a property suite, or "all".
    Props {
        #[arg(long)]
        suite: String,
        #[arg(long, env = "SVMOD_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        trials: Option<usize>,
    },
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn run(cmd: Command) -> Result<(Value, bool), Error> {
    match cmd {
        Command::Bracket { alg, g, h } => {
            let algebra = match alg {
                AlgebraArg::Sv => Algebra::Sv,
                AlgebraArg::W22 => Algebra::W22,
            };
            Ok((commands::bracket_json(algebra, &g, &h)?, true))
        }
        Command::VerifyQ { file } => commands::verify_q(&read(&file)?),
        Command::Reduce { file } => Ok((commands::reduce(&read(&file)?)?, true)),
        Command::Props { suite, seed, trials } => commands::props_json(&suite, seed, trials),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exit = match run(cli.command) {
        Ok((out, ok)) => {
            println!("{out}");
            if ok { Exit::Success } else { Exit::Failure }
        }
        Err(e) => {
            eprintln!("error: {e}");
            Exit::of(&e)
        }
    };
    ExitCode::from(exit as u8)
}
