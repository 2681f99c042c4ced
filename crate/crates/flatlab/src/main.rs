use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use flatlab::{bench_text, check_certificate, run_text, CliError, RunOptions};
use flatlab_core::BaseOrder;

#[derive(Parser)]
#[command(
    name = "flatlab",
    version,
    about = "Decide flatness of finitely presented modules over polynomial rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Lex,
    Grevlex,
}

impl From<Order> for BaseOrder {
    fn from(o: Order) -> Self {
        match o {
            Order::Lex => BaseOrder::Lex,
            Order::Grevlex => BaseOrder::GrevLex,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the tasks of a problem file.
    Run {
        file: PathBuf,
        /// One JSON object per task.
        #[arg(long)]
        json: bool,
        /// Monomial order inside each variable block.
        #[arg(long, value_enum, default_value = "grevlex")]
        order: Order,
        /// Also run every audit on every module and pair of modules.
        #[arg(long)]
        all_audits: bool,
        /// Report wall-clock times.
        #[arg(long)]
        timing: bool,
    },
    /// Print tensor-power growth tables as CSV.
    Bench {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "grevlex")]
        order: Order,
    },
    /// Re-check the torsion witness of a certificate.
    CheckCert {
        cert: PathBuf,
        file: PathBuf,
        #[arg(long, value_enum, default_value = "grevlex")]
        order: Order,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {}", path.display(), e)))
}

fn fail(e: CliError) -> ExitCode {
    eprintln!("{}", serde_json::json!({ "error": e.to_json() }));
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            file,
            json,
            order,
            all_audits,
            timing,
        } => {
            let opts = RunOptions {
                json,
                order: order.into(),
                all_audits,
                timing,
            };
            match read(&file).and_then(|t| run_text(&t, &opts)) {
                Ok(out) => {
                    for line in &out.lines {
                        println!("{}", line);
                    }
                    for d in &out.diagnostics {
                        eprintln!("{}", d);
                    }
                    if out.ok {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => fail(e),
            }
        }
        Command::Bench { file, order } => {
            match read(&file).and_then(|t| bench_text(&t, order.into())) {
                Ok(lines) => {
                    for line in lines {
                        println!("{}", line);
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        Command::CheckCert { cert, file, order } => {
            match read(&cert)
                .and_then(|c| read(&file).and_then(|f| check_certificate(&c, &f, order.into())))
            {
                Ok(true) => {
                    println!("valid: witness is nonzero and killed by its annihilator");
                    ExitCode::SUCCESS
                }
                Ok(false) => {
                    println!("invalid: witness does not re-check");
                    ExitCode::from(1)
                }
                Err(e) => fail(e),
            }
        }
    }
}
