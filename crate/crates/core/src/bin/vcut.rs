use std::process::ExitCode;

use clap::Parser;
use vcut::cli::{exit_code, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    match run(&cli, &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("vcut: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
