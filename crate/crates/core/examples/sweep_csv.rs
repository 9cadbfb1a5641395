//! Writes the `N,value,bound,ratio` table for M(T', N) to stdout through
//! the same code path as `autoseq sweep`.

use std::io;
use std::process::ExitCode;

use autoseq::cli::{execute, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse_from([
        "autoseq", "sweep", "--family", "thue-morse", "--poly", "i^2", "--measure", "moc",
        "--nmin", "1000", "--nmax", "20000", "--step", "1000",
    ]);
    let outcome = execute(&cli, &mut io::stdout(), &mut io::stderr());
    ExitCode::from(outcome.code() as u8)
}
