//! `p1torsor <command> [--input FILE] [--seed N] [--output FILE]`
//!
//! Reads a JSON payload (or a full `{"command", "payload", "seed"}` request)
//! from `--input` or stdin and writes the JSON result to `--output` or stdout.

use std::io::{IsTerminal, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Value};

use p1torsor::task::{self, Command, Outcome, TaskError};

#[derive(Parser)]
#[command(name = "p1torsor", version, about = "Exact vector bundles and torsors on the projective line")]
struct Args {
    /// One of: splitting-type, factorize, cohomology, hn, construct, classify,
    /// pushout, pgl-lift, double-coset, euler-witness, selftest
    command: String,
    /// JSON input file; stdin when omitted
    #[arg(long)]
    input: Option<PathBuf>,
    /// Root seed for randomized commands
    #[arg(long)]
    seed: Option<u64>,
    /// Output file; stdout when omitted
    #[arg(long)]
    output: Option<PathBuf>,
}

fn read_input(args: &Args) -> Result<String, TaskError> {
    match &args.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| TaskError::Parse(format!("{}: {e}", path.display()))),
        None if std::io::stdin().is_terminal() => Ok(String::new()),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| TaskError::Parse(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

/// Builds the request document: a bare payload is wrapped, a full request
/// must name the same command as the command line.
fn request(args: &Args, command: Command) -> Result<Value, TaskError> {
    let text = read_input(args)?;
    let mut doc = if text.trim().is_empty() {
        json!({})
    } else {
        serde_json::from_str::<Value>(&text).map_err(|e| TaskError::Parse(format!("invalid JSON: {e}")))?
    };
    let full = doc.get("command").is_some();
    if full {
        if doc["command"] != json!(command.name()) {
            return Err(TaskError::Parse(format!(
                "request names command {} but {} was given on the command line",
                doc["command"],
                command.name()
            )));
        }
    } else {
        doc = json!({ "command": command.name(), "payload": doc });
    }
    if let Some(seed) = args.seed {
        doc["seed"] = json!(seed);
    }
    Ok(doc)
}

fn outcome(args: &Args) -> Outcome {
    let result = Command::from_name(&args.command)
        .ok_or_else(|| TaskError::UnknownCommand(args.command.clone()))
        .and_then(|c| request(args, c));
    match result {
        Ok(doc) => task::run(&doc.to_string()),
        Err(e) => Outcome { body: e.to_json(), exit_code: e.exit_code() },
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let out = outcome(&args);
    let text = serde_json::to_string_pretty(&out.body).expect("JSON values serialize") + "\n";
    let written = match &args.output {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("p1torsor: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(out.exit_code as u8)
}
