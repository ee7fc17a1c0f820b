use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use tightcomp_cli::{output, run, Cli, Format};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = run(&cli.command(), cli.limits());
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&out.value).expect("json") + "\n",
        Format::Text => output::text(&out.value),
    };
    // A closed pipe is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    if out.code != 0 {
        if let Some(e) = out.value.get("error").and_then(|e| e.as_str()) {
            eprintln!("tightcomp: {e}: {}", out.value["detail"].as_str().unwrap_or(""));
        }
    }
    ExitCode::from(out.code as u8)
}
