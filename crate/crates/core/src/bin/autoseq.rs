use std::io;
use std::process::ExitCode;

use autoseq::cli::{execute, Cli, Outcome};
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(Outcome::Usage.code() as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = execute(&cli, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(outcome.code() as u8)
}
