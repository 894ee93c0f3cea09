use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};

use arrangement_cli::input::{load_arrangement, load_characters, load_presentation, Source};
use arrangement_cli::pipeline::{run, Command, Options};
use arrangement_cli::{render_json, render_text, write_atomic};

/// Resonance, multinets and Milnor-fiber monodromy of line arrangements.
#[derive(Parser, Debug)]
#[command(name = "arrmono", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Full pipeline with cross-checks.
    Analyze(CommonArgs),
    /// Intersection lattice only.
    Lattice(CommonArgs),
    /// Resonance components (local and multinet).
    Resonance(CommonArgs),
    /// Multinet search and pencil realization.
    Multinets(CommonArgs),
    /// Exact eigenspaces of the Milnor-fiber monodromy.
    Milnor(CommonArgs),
    /// Nontriviality certificates and eigenspace lower bounds.
    Certify(CommonArgs),
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// Catalog arrangement: A3, B3, Pappus, Hesse, Ceva(r).
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    builtin: Option<String>,
    /// Arrangement JSON file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Emit the JSON report instead of a text summary.
    #[arg(long)]
    json: bool,
    /// Write output to this file (atomically) instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Search only multinets with this many classes (3 or 4).
    #[arg(long)]
    k: Option<usize>,
    /// Search only reduced multinets.
    #[arg(long)]
    reduced_only: bool,
    /// Largest multiplicity tried per line.
    #[arg(long, default_value_t = 4)]
    max_mu: u32,
    /// Also search subarrangements with at most this many lines.
    #[arg(long)]
    subarrangements: Option<usize>,
    /// Time budget per multinet search, in milliseconds.
    #[arg(long)]
    budget_ms: Option<u64>,
    /// Line sent to infinity for the wiring diagram (default: last line).
    #[arg(long)]
    infinity_line: Option<usize>,
    /// External presentation with meridians for every line.
    #[arg(long)]
    presentation: Option<PathBuf>,
    /// JSON list of characters for pullback checks.
    #[arg(long)]
    characters: Option<PathBuf>,
}

fn execute(cmd: Command, args: &CommonArgs) -> Result<bool> {
    let source = match (&args.builtin, &args.input) {
        (Some(name), _) => Source::Builtin(name.clone()),
        (None, Some(path)) => Source::File(path.clone()),
        (None, None) => unreachable!("clap requires one of --builtin/--input"),
    };
    let arr = load_arrangement(&source)?;
    let d = arr.d();
    let opts = Options {
        ks: args.k.map_or(vec![3, 4], |k| vec![k]),
        reduced_only: args.reduced_only,
        max_mu: args.max_mu,
        max_support: args.subarrangements,
        budget: args.budget_ms.map(Duration::from_millis),
        infinity_line: args.infinity_line,
        presentation: args
            .presentation
            .as_deref()
            .map(|p| load_presentation(p, d))
            .transpose()?,
        characters: args
            .characters
            .as_deref()
            .map(|p| load_characters(p, d))
            .transpose()?
            .unwrap_or_default(),
    };
    let report = run(&arr, cmd, &opts)?;
    let text = if args.json {
        render_json(&report)
    } else {
        render_text(&report)
    };
    match &args.out {
        Some(path) => write_atomic(path, &text)?,
        None => print!("{text}"),
    }
    for c in report.failed_checks() {
        log::error!("consistency check {} failed: {}", c.name, c.detail);
    }
    Ok(report.all_checks_pass())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let (cmd, args) = match &cli.command {
        Cmd::Analyze(a) => (Command::Analyze, a),
        Cmd::Lattice(a) => (Command::Lattice, a),
        Cmd::Resonance(a) => (Command::Resonance, a),
        Cmd::Multinets(a) => (Command::Multinets, a),
        Cmd::Milnor(a) => (Command::Milnor, a),
        Cmd::Certify(a) => (Command::Certify, a),
    };
    match execute(cmd, args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
