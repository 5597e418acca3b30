use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use pairstab_cli::{run, Cli};

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", text.trim_end()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let text = if cli.json {
                outcome.report.to_json()
            } else {
                outcome.report.to_text()
            };
            emit(&text);
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            if cli.json {
                let body =
                    serde_json::json!({ "error": e.to_string(), "exit_code": e.exit_code() });
                emit(&serde_json::to_string_pretty(&body).expect("serializes"));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
