//! Problem-file language and runner behind the `flatlab` command.

pub mod dsl;
pub mod error;
pub mod problem;
pub mod runner;

pub use dsl::{parse, ProblemFile, SUPPORTED_PRIMES};
pub use error::CliError;
pub use problem::Problem;
pub use runner::{
    all_audit_tasks, bench_text, check_certificate, run_file, run_text, RunOptions, RunOutput,
};
