use std::process::ExitCode;

use clap::Parser;
use moncoh_cli::{run, Cli};

fn configure_threads() {
    let Ok(value) = std::env::var("MONCOH_THREADS") else {
        return;
    };
    match value.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            if let Err(e) = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
            {
                eprintln!("warning: could not size the worker pool: {e}");
            }
        }
        _ => eprintln!("warning: ignoring MONCOH_THREADS={value}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(&cli) {
        Ok(outcome) => {
            println!("{}", outcome.stdout);
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code() as u8)
        }
    }
}
