//! Subcommand drivers.

use std::io::Write;
use std::time::Instant;

use anyhow::{bail, Result};
use qspec_core::bounds::{BoundError, Tolerance};
use qspec_core::conjecture::{conjecture_check, Conjecture};
use qspec_core::evaluate::{evaluate_analysis, Analysis, Evaluation};
use qspec_core::graph6::to_graph6;
use qspec_core::spectrum::SpectrumError;
use qspec_core::{Graph, Spectrum};
use rayon::prelude::*;

use crate::args::{Cli, Command, CommonArgs, ConjectureArg, Format, HuntArgs};
use crate::input::{self, Item, Items};
use crate::output::{summary_line, write_hunt, RecordWriter};
use crate::record::{HuntReport, Summary, SweepResult, SCHEMA_VERSION};

/// Graphs handed to the worker pool at a time; results are written in input
/// order after each chunk completes.
const CHUNK: usize = 1024;

/// Runs `cli`, writing reports to `out` and diagnostics to `err`. Returns
/// the process exit code.
pub fn run<O: Write, E: Write>(cli: Cli, out: O, err: &mut E) -> Result<i32> {
    match cli.command {
        Command::Invariants(args) => invariants(&args, out, err),
        Command::Verify(args) => verify(&args, out, err),
        Command::Hunt(args) => hunt(&args, out, err),
    }
}

fn tolerance(args: &CommonArgs) -> Result<Tolerance> {
    let tol = args.output.tol;
    if !(tol.is_finite() && tol > 0.0) {
        bail!("--tol must be a positive number, got {tol}");
    }
    Ok(Tolerance::with_tight(tol))
}

/// Applies `work` to every graph on a pool of `jobs` threads and feeds
/// `(item, result)` pairs to `sink` in source order.
fn for_each_ordered<T, F, S>(items: Items, jobs: usize, work: F, mut sink: S) -> Result<()>
where
    T: Send,
    F: Fn(&Graph) -> T + Sync,
    S: FnMut(Item, Option<T>) -> Result<()>,
{
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build()?;
    let mut items = items;
    loop {
        let chunk: Vec<Item> = items.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            return Ok(());
        }
        let results: Vec<Option<T>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|item| match item {
                    Item::Graph(g) => Some(work(g)),
                    Item::Error { .. } => None,
                })
                .collect()
        });
        for (item, result) in chunk.into_iter().zip(results) {
            sink(item, result)?;
        }
    }
}

fn report_input_error<E: Write>(err: &mut E, line: usize, message: &str) -> Result<()> {
    writeln!(err, "error: line {line}: {message}")?;
    Ok(())
}

fn timed<T>(timing: bool, f: impl FnOnce() -> T) -> (T, Option<f64>) {
    if timing {
        let start = Instant::now();
        let v = f();
        (v, Some(start.elapsed().as_secs_f64() * 1e3))
    } else {
        (f(), None)
    }
}

fn invariants<O: Write, E: Write>(args: &CommonArgs, out: O, err: &mut E) -> Result<i32> {
    let items = input::open(&args.source)?;
    let mut writer = RecordWriter::new(out, args.output.format, false);
    let mut summary = Summary::default();
    let timing = args.output.timing;
    for_each_ordered(
        items,
        args.output.jobs,
        |g| timed(timing, || Analysis::new(g)),
        |item, result| {
            match (item, result) {
                (Item::Error { line, message }, _) => {
                    summary.input_errors += 1;
                    report_input_error(err, line, &message)?;
                }
                (Item::Graph(g), Some((Ok(a), ms))) => {
                    summary.graphs += 1;
                    summary.analyzed += 1;
                    let mut rec = SweepResult::from_analysis(&g, &a);
                    rec.timing_ms = ms;
                    writer.write(&rec)?;
                }
                (Item::Graph(g), Some((Err(e), _))) => {
                    summary.graphs += 1;
                    summary.evaluation_errors += 1;
                    writeln!(err, "error: {}: {e}", to_graph6(&g))?;
                }
                (Item::Graph(_), None) => unreachable!("graphs always produce a result"),
            }
            Ok(())
        },
    )?;
    writer.finish(None)?;
    Ok(summary.exit_code())
}

enum VerifyOutcome {
    Skipped,
    Done(Box<Result<Evaluation, BoundError>>, Option<f64>),
}

fn verify<O: Write, E: Write>(args: &CommonArgs, out: O, err: &mut E) -> Result<i32> {
    let tol = tolerance(args)?;
    let items = input::open(&args.source)?;
    let mut writer = RecordWriter::new(out, args.output.format, true);
    let mut summary = Summary::default();
    let (timing, allow_disconnected) = (args.output.timing, args.output.allow_disconnected);
    for_each_ordered(
        items,
        args.output.jobs,
        |g| {
            if !allow_disconnected && !g.is_connected() {
                return VerifyOutcome::Skipped;
            }
            let (analysis, ms) = timed(timing, || Analysis::new(g));
            let evaluation = analysis.map_err(BoundError::from).and_then(|a| evaluate_analysis(g, a, &tol));
            VerifyOutcome::Done(Box::new(evaluation), ms)
        },
        |item, result| {
            match (item, result) {
                (Item::Error { line, message }, _) => {
                    summary.input_errors += 1;
                    report_input_error(err, line, &message)?;
                }
                (Item::Graph(_), Some(VerifyOutcome::Skipped)) => {
                    summary.graphs += 1;
                    summary.skipped_disconnected += 1;
                }
                (Item::Graph(g), Some(VerifyOutcome::Done(result, ms))) => match *result {
                    Ok(e) => {
                        summary.graphs += 1;
                        summary.analyzed += 1;
                        summary.add_tally(e.tally(&tol));
                        summary.check_failures += e.check_failures(&tol);
                        let mut rec = SweepResult::from_evaluation(&g, &e, &tol);
                        rec.timing_ms = ms;
                        writer.write(&rec)?;
                    }
                    Err(e) => {
                        summary.graphs += 1;
                        summary.evaluation_errors += 1;
                        writeln!(err, "error: {}: {e}", to_graph6(&g))?;
                    }
                },
                (Item::Graph(_), None) => unreachable!("graphs always produce a result"),
            }
            Ok(())
        },
    )?;
    if summary.skipped_disconnected > 0 {
        writeln!(
            err,
            "warning: skipped {} disconnected graph(s); pass --allow-disconnected to include them",
            summary.skipped_disconnected
        )?;
    }
    writer.finish(Some(&summary))?;
    if args.output.format != Format::Table {
        writeln!(err, "{}", summary_line(&summary))?;
    }
    Ok(summary.exit_code())
}

fn hunt<O: Write, E: Write>(args: &HuntArgs, out: O, err: &mut E) -> Result<i32> {
    let common = &args.common;
    let tol = tolerance(common)?;
    let which = match args.conjecture {
        ConjectureArg::Brouwer => Conjecture::Brouwer,
        ConjectureArg::Ashraf => Conjecture::Ashraf,
    };
    let items = input::open(&common.source)?;
    let mut report = HuntReport {
        v: SCHEMA_VERSION,
        conjecture: which.as_str(),
        graphs: 0,
        min_slack: None,
        k: None,
        witness: None,
        counterexamples: 0,
        input_errors: 0,
    };
    let mut eval_errors = 0;
    for_each_ordered(
        items,
        common.output.jobs,
        |g| -> Result<_, SpectrumError> {
            let s = Spectrum::compute(g, which.kind())?;
            conjecture_check(g, &s, which, tol.sound_rel)
        },
        |item, result| {
            match (item, result) {
                (Item::Error { line, message }, _) => {
                    report.input_errors += 1;
                    report_input_error(err, line, &message)?;
                }
                (Item::Graph(g), Some(Ok(c))) => {
                    report.graphs += 1;
                    report.counterexamples += c.counterexample as usize;
                    if report.min_slack.is_none_or(|best| c.min_slack < best) {
                        report.min_slack = Some(c.min_slack);
                        report.k = Some(c.min_k);
                        report.witness = Some(to_graph6(&g));
                    }
                }
                (Item::Graph(g), Some(Err(e))) => {
                    eval_errors += 1;
                    writeln!(err, "error: {}: {e}", to_graph6(&g))?;
                }
                (Item::Graph(_), None) => unreachable!("graphs always produce a result"),
            }
            Ok(())
        },
    )?;
    write_hunt(out, &report, common.output.format)?;
    Ok(if report.counterexamples > 0 {
        1
    } else if report.input_errors > 0 || eval_errors > 0 {
        2
    } else {
        0
    })
}
