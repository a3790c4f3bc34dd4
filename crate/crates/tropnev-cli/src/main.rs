use std::panic::AssertUnwindSafe;
use std::process::ExitCode;

use clap::Parser;

use tropnev_cli::cli::{run, Cli};
use tropnev_cli::output::emit;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{e}");
                    ExitCode::from(2)
                }
            };
        }
    };
    let out = cli.common().out.clone();

    // Bad input must map to exit code 2, never to a panic; the hook is
    // silenced and the payload message reported instead.
    std::panic::set_hook(Box::new(|_| {}));
    match std::panic::catch_unwind(AssertUnwindSafe(|| run(&cli))) {
        Ok(Ok(outcome)) => {
            for w in &outcome.warnings {
                eprintln!("warning: {w}");
            }
            if let Err(e) = emit(out.as_deref(), &outcome.output) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            match outcome.check {
                None => ExitCode::SUCCESS,
                Some(why) => {
                    eprintln!("check failed: {why}");
                    ExitCode::from(1)
                }
            }
        }
        Ok(Err(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown".into());
            eprintln!("error: internal failure: {message}");
            ExitCode::from(2)
        }
    }
}
