use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use lieball::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(&cli.command) {
        Ok(outcome) => {
            let written = match cli.command.out() {
                Some(path) => std::fs::write(path, &outcome.body),
                None => std::io::stdout().lock().write_all(outcome.body.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("lieball: {e}");
                return ExitCode::from(lieball::exit::VERIFICATION_FAILED);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("lieball: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
