//! `graphsym` command-line tool.
//!
//! Exit codes: 0 success, 1 usage, 2 invalid graph input, 3 negative
//! answer (verification or comparison failed), 4 budget exceeded.

mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::{json, Map, Value};

use args::{Cli, Command};
use commands::{AutParams, CliResult, Output};

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Catalog { .. } => "catalog",
        Command::Invariants { .. } => "invariants",
        Command::Isocycles { .. } => "isocycles",
        Command::Gencycles { .. } => "gencycles",
        Command::Orbits { .. } => "orbits",
        Command::Aut { .. } => "aut",
        Command::Cayley { .. } => "cayley",
        Command::Verify { .. } => "verify",
        Command::Compare { .. } => "compare",
    }
}

fn dispatch(c: &Command) -> CliResult<Output> {
    match c {
        Command::Catalog { name, export } => commands::catalog_cmd(name.as_deref(), *export),
        Command::Invariants { src } => commands::invariants(src),
        Command::Isocycles { src, rule, count_only } => commands::isocycles(src, *rule, *count_only),
        Command::Gencycles { src, k, len, max_subset, rule, budget } => {
            commands::gencycles(src, *k, *len, *max_subset, *rule, *budget)
        }
        Command::Orbits { src, oracle } => commands::orbits(src, *oracle),
        Command::Aut { src, method, full, max_subset, rule, budget, cap } => commands::aut(
            src,
            &AutParams { method: *method, full: *full, max_subset: *max_subset, rule: *rule, budget: *budget, cap: *cap },
        ),
        Command::Cayley { src, out, klein_blocks } => commands::cayley(src, out.as_deref(), *klein_blocks),
        Command::Verify { src, perm } => commands::verify(src, perm),
        Command::Compare { a, b } => commands::compare(a, b),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    // a second init fails only if something already built the pool
    let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads as usize).build_global();

    let t0 = Instant::now();
    let out = match dispatch(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let body = if cli.json {
        let mut env = Map::new();
        env.insert("command".into(), json!(command_name(&cli.command)));
        env.insert("graph".into(), out.graph);
        env.insert("params".into(), out.params);
        env.insert("result".into(), out.result);
        if !cli.stable {
            env.insert("wall_ms".into(), json!(t0.elapsed().as_secs_f64() * 1e3));
        }
        serde_json::to_string(&Value::Object(env)).expect("plain data serializes") + "\n"
    } else {
        out.text
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(body.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(1);
    }
    if out.truncated {
        eprintln!("error: automorphism cap reached, the listing is partial");
        ExitCode::from(4)
    } else if out.negative {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}
