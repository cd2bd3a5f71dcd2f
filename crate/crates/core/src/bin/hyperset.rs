use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hyperset::surface::cli::{self, CliError, Corpus, Emit, Source};

#[derive(Parser)]
#[command(name = "hyperset", version, about = "Finite hypersets, set operators and neural themata")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a set expression and print its canonical form.
    Eval {
        expr: String,
        /// System file whose equation names are in scope.
        #[arg(long)]
        system: Option<PathBuf>,
    },
    /// Print the decoration of every node of a system, graph or network file.
    Decorate {
        file: PathBuf,
        /// Apply node labels (graph files) or weight histograms (network files).
        #[arg(long)]
        labeled: bool,
    },
    /// Run a network and print the thema at each time.
    Simulate {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        steps: usize,
        #[arg(long, default_value = "thema")]
        emit: Emit,
        /// Write one DOT file per time into this directory.
        #[arg(long)]
        dot_dir: Option<PathBuf>,
    },
    /// Print the canonical form of a system's point.
    Canon { file: PathBuf },
    /// Check the four consciousness axioms for an operator expression.
    Axioms {
        op: String,
        /// `small` or a file with one set expression per line.
        #[arg(long, default_value = "small")]
        corpus: String,
    },
    /// Print DOT for a system's point, a graph file or a network state.
    Dot { file: PathBuf },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn execute(command: Command) -> Result<String, CliError> {
    match command {
        Command::Eval { expr, system } => match system {
            Some(path) => {
                let text = read(&path)?;
                cli::eval(&expr, Some(Source::new(&path.to_string_lossy(), &text)))
            }
            None => cli::eval(&expr, None),
        },
        Command::Decorate { file, labeled } => {
            let text = read(&file)?;
            cli::decorate(Source::new(&file.to_string_lossy(), &text), labeled)
        }
        Command::Simulate {
            file,
            steps,
            emit,
            dot_dir,
        } => {
            let text = read(&file)?;
            cli::simulate(
                Source::new(&file.to_string_lossy(), &text),
                steps,
                emit,
                dot_dir.as_deref(),
            )
        }
        Command::Canon { file } => {
            let text = read(&file)?;
            cli::canon(Source::new(&file.to_string_lossy(), &text))
        }
        Command::Axioms { op, corpus } => {
            if corpus == "small" {
                cli::axioms(&op, Corpus::Small)
            } else {
                let path = PathBuf::from(&corpus);
                let text = read(&path)?;
                cli::axioms(&op, Corpus::File(Source::new(&corpus, &text)))
            }
        }
        Command::Dot { file } => {
            let text = read(&file)?;
            cli::dot(Source::new(&file.to_string_lossy(), &text))
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(args.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
