use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use macforge_cli::{run, Cli, EXIT_PARSE};

fn configure_threads() {
    let Ok(value) = std::env::var("MACFORGE_THREADS") else { return };
    match value.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
        _ => eprintln!("warning: ignoring MACFORGE_THREADS={value:?} (expected a positive integer)"),
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_PARSE as u8 } else { 0 });
        }
    };
    let outcome = run(&cli);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
