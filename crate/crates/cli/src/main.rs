use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use critlab::{run, Budgets, Command, Filters, Input, JobSpec, Outcome};

/// Edge-colouring, criticality and even-factor certificates for graph6
/// streams.
#[derive(Parser)]
#[command(name = "critlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Optimal edge colouring
    Color(Opts),
    /// Chromatic index and maximum degree
    Chi(Opts),
    /// Per-edge criticality report
    Critical(Opts),
    /// Even factor, or a barrier when none exists
    Evenfactor(Opts),
    /// Barrier search
    Barrier(Opts),
    /// Barrier search followed by normalisation and property check
    Normalize(Opts),
    /// Configuration search and claim traces
    Lemma1(Opts),
    /// Critical 3-edge cuts against divalent vertices
    Lemma2(Opts),
    /// Divalent count, even factor or barrier weights on a critical graph
    Audit(Opts),
    /// Barrier existence against even-factor non-existence
    #[command(name = "theorem2-xcheck")]
    Theorem2Xcheck(Opts),
}

#[derive(Args)]
struct Opts {
    /// A single graph6 string; otherwise lines come from --in or stdin
    graph6: Option<String>,
    /// Input file with one graph6 string per line
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Worker threads
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Node budget of each colouring search
    #[arg(long)]
    budget_color: Option<u64>,
    /// Node budget of each even-factor search
    #[arg(long)]
    budget_factor: Option<u64>,
    /// Subsets examined by each barrier search
    #[arg(long)]
    budget_barrier: Option<u64>,
    /// Vertex sets examined by each configuration search
    #[arg(long)]
    budget_subsets: Option<u64>,
    /// Write the full report as JSON
    #[arg(long, value_name = "OUT")]
    json: Option<PathBuf>,
    /// Write the summary table as CSV
    #[arg(long, value_name = "OUT")]
    csv: Option<PathBuf>,
    /// Directory for falsification bundles
    #[arg(long, value_name = "DIR")]
    bundle_dir: Option<PathBuf>,
    #[arg(long)]
    filter_n_min: Option<usize>,
    #[arg(long)]
    filter_n_max: Option<usize>,
    #[arg(long)]
    filter_delta_min: Option<usize>,
    #[arg(long)]
    filter_delta_max: Option<usize>,
    /// Keep only graphs with χ′ = Δ + 1
    #[arg(long)]
    filter_class2: bool,
    /// Keep only Δ-critical graphs
    #[arg(long)]
    filter_critical: bool,
    /// Do not print per-graph records
    #[arg(long, short)]
    quiet: bool,
}

fn budget_scale() -> anyhow::Result<f64> {
    match std::env::var("CRITLAB_BUDGET_SCALE") {
        Err(_) => Ok(1.0),
        Ok(s) => {
            let f: f64 = s
                .trim()
                .parse()
                .with_context(|| format!("CRITLAB_BUDGET_SCALE={s:?} is not a number"))?;
            anyhow::ensure!(
                f.is_finite() && f > 0.0,
                "CRITLAB_BUDGET_SCALE must be positive"
            );
            Ok(f)
        }
    }
}

fn spec(command: Command, o: Opts) -> anyhow::Result<(JobSpec, bool, bool)> {
    let single = o.graph6.is_some();
    let input = match (o.graph6, o.input) {
        (Some(_), Some(_)) => anyhow::bail!("give either a graph6 argument or --in, not both"),
        (Some(g), None) => Input::Lines(vec![g]),
        (None, Some(p)) => Input::File(p),
        (None, None) => Input::Stdin,
    };
    let d = Budgets::default();
    let budgets = Budgets {
        color: o.budget_color.unwrap_or(d.color),
        factor: o.budget_factor.unwrap_or(d.factor),
        barrier: o.budget_barrier.unwrap_or(d.barrier),
        subsets: o.budget_subsets.unwrap_or(d.subsets),
    };
    let scale = budget_scale()?;
    let spec = JobSpec {
        input,
        command,
        filters: Filters {
            n_min: o.filter_n_min,
            n_max: o.filter_n_max,
            delta_min: o.filter_delta_min,
            delta_max: o.filter_delta_max,
            class2_only: o.filter_class2,
            critical_only: o.filter_critical,
        },
        budgets: if scale == 1.0 {
            budgets
        } else {
            budgets.scaled(scale)
        },
        jobs: o.jobs,
        json_out: o.json,
        csv_out: o.csv,
        bundle_dir: o.bundle_dir,
    };
    Ok((spec, single, o.quiet))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    let (command, opts) = match cli.command {
        Cmd::Color(o) => (Command::Color, o),
        Cmd::Chi(o) => (Command::Chi, o),
        Cmd::Critical(o) => (Command::Critical, o),
        Cmd::Evenfactor(o) => (Command::Evenfactor, o),
        Cmd::Barrier(o) => (Command::Barrier, o),
        Cmd::Normalize(o) => (Command::Normalize, o),
        Cmd::Lemma1(o) => (Command::Lemma1, o),
        Cmd::Lemma2(o) => (Command::Lemma2, o),
        Cmd::Audit(o) => (Command::Audit, o),
        Cmd::Theorem2Xcheck(o) => (Command::Theorem2Xcheck, o),
    };
    match execute(command, opts) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("critlab: {e:#}");
            ExitCode::from(3)
        }
    }
}

fn execute(command: Command, opts: Opts) -> anyhow::Result<u8> {
    let (spec, single, quiet) = spec(command, opts)?;
    let report = run(&spec)?;
    for e in &report.malformed {
        eprintln!("critlab: line {}: {}", e.line, e.error);
    }
    if single {
        if let Some(r) = report.records.first() {
            if r.verdict == Outcome::Skipped {
                eprintln!(
                    "critlab: {}",
                    r.message.as_deref().unwrap_or("precondition failed")
                );
                return Ok(3);
            }
            println!("{}", serde_json::to_string_pretty(&r.certificate)?);
        }
    } else if !quiet {
        for r in &report.records {
            let line = serde_json::json!({
                "line": r.line,
                "graph6": r.graph6,
                "verdict": r.verdict,
                "certificate": r.certificate,
            });
            println!("{line}");
        }
    }
    if !single || report.summary.filtered_out > 0 {
        eprintln!("critlab: {}", serde_json::to_string(&report.summary)?);
    }
    Ok(report.exit_code() as u8)
}
