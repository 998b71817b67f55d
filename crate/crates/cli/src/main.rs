//! Command-line harness: run experiment plans, summarize result rows,
//! derive plot series and re-check the embedded published statistics.
//!
//! Exit codes: 0 success, 1 usage error, 2 infeasible plan or
//! configuration, 3 i/o failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use relaydeploy::error::Error;
use relaydeploy::experiment::{run_plan, summarize, ExperimentPlan};
use relaydeploy::optim::OptimizerKind;
use relaydeploy::reference::{verify_cells, CellStatus};
use relaydeploy::report::{
    emit_plan, emit_plot_data, emit_rows_csv, emit_summary_csv, emit_traces_csv, parse_plan,
    parse_rows_csv, parse_traces_csv, PlotKind,
};

/// Output directory override; defaults to the current directory.
const OUT_DIR_ENV: &str = "RELAYDEPLOY_OUT_DIR";

#[derive(Parser)]
#[command(name = "relaydeploy", version, about = "Relay placement experiment harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment plan and write rows.csv plus traces.csv.
    Run {
        /// Plan file (key = value text). Omit to run the default desk-scale plan.
        plan: Option<PathBuf>,
        /// Run the full-scale protocol (all five sizes, 200 generations).
        #[arg(long)]
        full_scale: bool,
        /// Write the effective plan next to the outputs.
        #[arg(long)]
        dump_plan: bool,
    },
    /// Summarize a rows.csv into per-cell mean/std/p-value statistics.
    Summarize {
        rows: PathBuf,
        /// Reference optimizer for p-values.
        #[arg(long, default_value = "DE")]
        reference: String,
    },
    /// Derive plot series from a rows.csv.
    Plot {
        rows: PathBuf,
        #[arg(long)]
        kind: String,
        /// Plan file for energy constants and traffic levels (defaults to
        /// the desk-scale plan).
        #[arg(long)]
        plan: Option<PathBuf>,
    },
    /// Re-derive the embedded published summary tables from their raw
    /// samples and report agreement.
    VerifyPaperStats,
    /// Write the default desk-scale plan to stdout.
    DefaultPlan,
}

fn out_dir() -> PathBuf {
    std::env::var_os(OUT_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("."))
}

fn write_out(path: &Path, contents: &str) -> Result<(), Error> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    std::fs::write(path, contents)?;
    Ok(())
}

fn load_plan(path: Option<&Path>) -> Result<ExperimentPlan, Error> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)?;
            parse_plan(&text)
        }
        None => Ok(ExperimentPlan::default()),
    }
}

fn cmd_run(plan_path: Option<&Path>, full_scale: bool, dump_plan: bool) -> Result<(), Error> {
    let mut plan = load_plan(plan_path)?;
    if full_scale {
        eprintln!(
            "warning: full-scale protocol requested; this runs all five sizes at \
             200 generations and may take hours"
        );
        plan = plan.full_scale();
    }
    let outcome = run_plan(&plan)?;

    let dir = out_dir();
    write_out(&dir.join("rows.csv"), &emit_rows_csv(&outcome.rows))?;
    write_out(&dir.join("traces.csv"), &emit_traces_csv(&outcome.traces))?;
    if dump_plan {
        write_out(&dir.join("plan.txt"), &emit_plan(&plan))?;
    }

    eprintln!(
        "{} rows, {} errors, {} connectivity-band violations",
        outcome.rows.len(),
        outcome.errors.len(),
        outcome.band_violations
    );
    for e in &outcome.errors {
        eprintln!(
            "  cell error: {} N={} rep={}: {}",
            e.optimizer.as_str(),
            e.network_size,
            e.repetition,
            e.message
        );
    }
    let total_ms: u64 = outcome.timings_ms.iter().map(|&(_, _, _, ms)| ms).sum();
    eprintln!("total optimizer time: {:.1}s", total_ms as f64 / 1000.0);
    println!("{}", dir.join("rows.csv").display());
    if !outcome.errors.is_empty() {
        return Err(Error::Config(format!(
            "{} cells failed to run",
            outcome.errors.len()
        )));
    }
    Ok(())
}

fn cmd_summarize(rows_path: &Path, reference: &str) -> Result<(), Error> {
    let rows = parse_rows_csv(&std::fs::read_to_string(rows_path)?)?;
    let reference = OptimizerKind::parse(reference)?;
    let summaries = summarize(&rows, reference)?;
    let text = emit_summary_csv(&summaries);
    let path = out_dir().join("summary.csv");
    write_out(&path, &text)?;
    print!("{text}");
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn cmd_plot(rows_path: &Path, kind: &str, plan_path: Option<&Path>) -> Result<(), Error> {
    let kind = PlotKind::parse(kind)?;
    let rows = parse_rows_csv(&std::fs::read_to_string(rows_path)?)?;
    let plan = load_plan(plan_path)?;
    let traces = if kind == PlotKind::Convergence {
        let trace_path = rows_path.with_file_name("traces.csv");
        let text = std::fs::read_to_string(&trace_path).map_err(|e| {
            Error::MissingData(format!(
                "convergence plot needs {} next to the rows file: {e}",
                trace_path.display()
            ))
        })?;
        Some(parse_traces_csv(&text)?)
    } else {
        None
    };
    let text = emit_plot_data(&rows, traces.as_deref(), &plan, kind)?;
    let path = out_dir().join(format!("plot_{}.dat", kind.as_str()));
    write_out(&path, &text)?;
    print!("{text}");
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn cmd_verify_paper_stats() -> Result<(), Error> {
    let checks = verify_cells();
    let mut failures = 0usize;
    let mut known = 0usize;
    for c in &checks {
        let cell = c.cell;
        let label = format!(
            "N={} {:<3} {:<7}",
            cell.network_size,
            cell.optimizer.as_str(),
            cell.metric.as_str()
        );
        if c.passes() {
            match cell.status {
                CellStatus::Consistent => {
                    println!(
                        "ok   {label} mean {:.4} std {:.4}",
                        c.computed_mean, c.computed_std
                    );
                }
                CellStatus::PublishedMeanInconsistent => {
                    known += 1;
                    println!(
                        "nota {label} published mean {:.4} contradicts its own raw sample \
                         (recomputed {:.4}); std reproduces ({:.4})",
                        cell.published_mean, c.computed_mean, c.computed_std
                    );
                }
            }
        } else {
            failures += 1;
            println!(
                "FAIL {label} mean {:.4} vs {:.4}, std {:.4} vs {:.4}",
                c.computed_mean, cell.published_mean, c.computed_std, cell.published_std
            );
        }
    }
    println!(
        "{} cells checked, {failures} failures, {known} known published-mean defects",
        checks.len()
    );
    if failures > 0 {
        return Err(Error::Config(format!("{failures} reference cells failed")));
    }
    Ok(())
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Io(_) => 3,
        Error::Config(_) | Error::MissingData(_) | Error::EnumerationBudget { .. } => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not usage errors.
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    let result = match &cli.command {
        Command::Run { plan, full_scale, dump_plan } => {
            cmd_run(plan.as_deref(), *full_scale, *dump_plan)
        }
        Command::Summarize { rows, reference } => cmd_summarize(rows, reference),
        Command::Plot { rows, kind, plan } => cmd_plot(rows, kind, plan.as_deref()),
        Command::VerifyPaperStats => cmd_verify_paper_stats(),
        Command::DefaultPlan => {
            print!("{}", emit_plan(&ExperimentPlan::default()));
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
