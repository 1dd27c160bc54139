use std::io;
use std::process::ExitCode;

use clap::Parser;
use evictlab_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdin = io::stdin().lock();
    let mut out = io::stdout().lock();
    let mut err = io::stderr();
    match run(cli, stdin, &mut out, &mut err) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
