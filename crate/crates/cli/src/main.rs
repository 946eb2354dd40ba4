use std::process::ExitCode;

use clap::Parser;
use hopf_cli::{execute, Args};

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(out) => {
            if args.output.is_none() {
                print!("{}", out.text);
            }
            if out.consistent {
                ExitCode::SUCCESS
            } else {
                eprintln!("hopfcoh: a cross-check failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("hopfcoh: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
