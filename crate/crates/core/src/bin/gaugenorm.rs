use std::process::ExitCode;

use clap::Parser;
use gaugenorm::cli::{run, Command};

fn main() -> ExitCode {
    let cmd = Command::parse();
    let outcome = run(&cmd);
    if cmd.out.is_none() {
        print!("{}", outcome.report);
    }
    if let Some(msg) = &outcome.message {
        eprintln!("gaugenorm: {msg}");
    }
    ExitCode::from(outcome.code as u8)
}
