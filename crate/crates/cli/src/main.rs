mod commands;
mod failure;
mod job;
mod reproduce;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use crate::commands::Outcome;
use crate::failure::{exit_code, Failure};
use crate::job::{Job, JobSpec};

/// Scott modules and Brauer indecomposability over finite fields.
#[derive(Parser)]
#[command(name = "scott-brauer", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Job document (JSON).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Built-in example job: ex2.3, ex3.4 or ex3.5.
    #[arg(long, global = true)]
    example: Option<String>,
    #[arg(long, global = true)]
    json: bool,
    /// Cap on the group order.
    #[arg(long, global = true)]
    max_order: Option<usize>,
    /// Cap on module dimensions.
    #[arg(long, global = true)]
    max_dim: Option<usize>,
    /// Check every subgroup of P instead of one per G-class.
    #[arg(long, global = true)]
    no_conjugacy_reduction: bool,
}

#[derive(Subcommand, Clone)]
enum Command {
    /// Scott module Sc(G, H) of the vertex subgroup.
    Scott,
    /// Decompose the job's module.
    Decompose,
    /// Brauer quotient M(Q) and its restrictions.
    BrauerQuotient,
    /// Decide Brauer indecomposability of the module.
    CheckBi,
    /// Rerun a built-in example against its expected values.
    Reproduce {
        /// ex2.3, ex3.4 or ex3.5
        id: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Scott => "scott",
            Command::Decompose => "decompose",
            Command::BrauerQuotient => "brauer-quotient",
            Command::CheckBi => "check-bi",
            Command::Reproduce { .. } => "reproduce",
        }
    }
}

fn seed() -> Result<u64> {
    match std::env::var("SCOTT_BRAUER_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Parse(format!("SCOTT_BRAUER_SEED is not an integer: {:?}", s)).into()),
        Err(_) => Ok(0),
    }
}

fn load(cli: &Cli) -> Result<JobSpec> {
    let example = match (&cli.command, &cli.example) {
        (Command::Reproduce { id }, _) => Some(id.as_str()),
        (_, Some(id)) => Some(id.as_str()),
        _ => None,
    };
    let mut spec = match (example, &cli.input) {
        (Some(_), Some(_)) => {
            return Err(Failure::Parse("give either --input or an example, not both".into()).into())
        }
        (Some(id), None) => reproduce::example_job(id)?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            JobSpec::parse(&text)?
        }
        (None, None) => return Err(Failure::Parse("no job: pass --input FILE or --example ID".into()).into()),
    };
    if cli.max_order.is_some() {
        spec.options.max_order = cli.max_order;
    }
    if cli.max_dim.is_some() {
        spec.options.max_dim = cli.max_dim;
    }
    if cli.no_conjugacy_reduction {
        spec.options.conjugacy_reduction = false;
    }
    Ok(spec)
}

fn run(cli: &Cli) -> Result<()> {
    let start = Instant::now();
    let spec = load(cli)?;
    let digest = spec.digest();
    let job = Job::build(spec, seed()?)?;
    let mut failed = Vec::new();
    let out: Outcome = match &cli.command {
        Command::Scott => commands::scott(&job)?,
        Command::Decompose => commands::decompose(&job)?,
        Command::BrauerQuotient => commands::brauer_quotient(&job)?,
        Command::CheckBi => commands::check_bi(&job)?,
        Command::Reproduce { id } => {
            let (out, f) = reproduce::reproduce(id, &job)?;
            failed = f;
            out
        }
    };
    let total_ms = start.elapsed().as_millis() as u64;
    let mut text = String::new();
    if cli.json {
        let doc = json!({
            "command": cli.command.name(),
            "input_digest": digest,
            "field": job.field.to_string(),
            "group_order": job.group.order(),
            "verdicts": out.verdicts,
            "extensions": out.extensions,
            "timings": { "total_ms": total_ms },
        });
        text.push_str(&serde_json::to_string_pretty(&doc)?);
        text.push('\n');
    } else {
        text.push_str(&format!("field: {}\n|G| = {}\n", job.field, job.group.order()));
        for l in &out.lines {
            text.push_str(l);
            text.push('\n');
        }
        if !out.extensions.is_empty() {
            text.push_str(&format!("extensions: {}\n", out.extensions.join(", ")));
        }
        text.push_str(&format!("time: {} ms\n", total_ms));
    }
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        // a closed pipe (e.g. `| head`) is not an error
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => return Err(e.into()),
        _ => {}
    }
    if !failed.is_empty() {
        return Err(Failure::Mismatch(failed.join("; ")).into());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { failure::EXIT_PARSE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
