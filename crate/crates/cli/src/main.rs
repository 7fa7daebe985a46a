use std::io::Write;
use std::process::ExitCode;

use cantor_cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(payload) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(payload.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(cantor_cli::error::EXIT_FAILURE);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("cantor: {e}");
            ExitCode::from(e.code)
        }
    }
}
