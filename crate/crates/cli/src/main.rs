use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use qutrit_walk_cli::{run, Cli, EXIT_INVALID};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_INVALID as u8,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(output) => {
            match &output.destination {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &output.text) {
                        eprintln!("error: {path}: {e}");
                        return ExitCode::from(EXIT_INVALID as u8);
                    }
                }
                None => print!("{}", output.text),
            }
            ExitCode::from(output.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID as u8)
        }
    }
}
