//! Streaming JSON / CSV / table writers.

use std::io::Write;

use anyhow::Result;
use serde::Serialize;

use crate::args::Format;
use crate::record::{HuntReport, Summary, SweepResult};

/// Writes SweepResult records in input order.
pub struct RecordWriter<W: Write> {
    out: W,
    format: Format,
    count: usize,
    csv_header_done: bool,
    with_bounds: bool,
}

#[derive(Serialize)]
struct BoundRow<'a> {
    graph_id: &'a str,
    bound: &'a str,
    k: Option<usize>,
    lhs: Option<f64>,
    rhs: Option<f64>,
    residual: Option<f64>,
    tight: bool,
}

#[derive(Serialize)]
struct InvariantRow<'a> {
    graph_id: &'a str,
    n: usize,
    m: usize,
    max_degree: usize,
    min_degree: usize,
    avg_degree: f64,
    diameter: Option<usize>,
    m1: u64,
    distinct_q: usize,
    connected: bool,
    q_index: Option<f64>,
    qe: f64,
    le: f64,
    energy: f64,
}

impl<W: Write> RecordWriter<W> {
    pub fn new(out: W, format: Format, with_bounds: bool) -> Self {
        RecordWriter { out, format, count: 0, csv_header_done: false, with_bounds }
    }

    pub fn write(&mut self, rec: &SweepResult) -> Result<()> {
        match self.format {
            Format::Json => {
                self.out.write_all(if self.count == 0 { b"[\n" } else { b",\n" })?;
                serde_json::to_writer(&mut self.out, rec)?;
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().has_headers(!self.csv_header_done).from_writer(&mut self.out);
                let mut rows = 0;
                if self.with_bounds {
                    for b in rec.bounds.iter().flatten() {
                        w.serialize(BoundRow {
                            graph_id: &rec.graph_id,
                            bound: b.bound,
                            k: b.k,
                            lhs: b.lhs,
                            rhs: b.rhs,
                            residual: b.residual,
                            tight: b.tight,
                        })?;
                        rows += 1;
                    }
                } else {
                    let inv = &rec.invariants;
                    w.serialize(InvariantRow {
                        graph_id: &rec.graph_id,
                        n: inv.n,
                        m: inv.m,
                        max_degree: inv.max_degree,
                        min_degree: inv.min_degree,
                        avg_degree: inv.avg_degree,
                        diameter: inv.diameter,
                        m1: inv.m1,
                        distinct_q: inv.distinct_q,
                        connected: rec.connected,
                        q_index: rec.spectra.signless_laplacian.first().copied(),
                        qe: rec.energies.qe,
                        le: rec.energies.le,
                        energy: rec.energies.e,
                    })?;
                    rows += 1;
                }
                w.flush()?;
                self.csv_header_done |= rows > 0;
            }
            Format::Table => self.write_table_row(rec)?,
        }
        self.count += 1;
        Ok(())
    }

    fn write_table_row(&mut self, rec: &SweepResult) -> Result<()> {
        let inv = &rec.invariants;
        if self.count == 0 {
            writeln!(
                self.out,
                "{:<16} {:>4} {:>5} {:>3} {:>3} {:>4} {:>6} {:>3} {:>12} {:>12}  {}",
                "graph6",
                "n",
                "m",
                "Δ",
                "δ",
                "D",
                "M1",
                "e",
                "q1",
                "QE",
                if self.with_bounds { "bounds" } else { "" }
            )?;
        }
        let diameter = inv.diameter.map_or_else(|| "-".to_string(), |d| d.to_string());
        let q1 = rec.spectra.signless_laplacian.first().copied().unwrap_or(0.0);
        write!(
            self.out,
            "{:<16} {:>4} {:>5} {:>3} {:>3} {:>4} {:>6} {:>3} {:>12.8} {:>12.8}",
            rec.graph_id,
            inv.n,
            inv.m,
            inv.max_degree,
            inv.min_degree,
            diameter,
            inv.m1,
            inv.distinct_q,
            q1,
            rec.energies.qe
        )?;
        if let Some(bounds) = &rec.bounds {
            let count = |s: &str| bounds.iter().filter(|b| b.status == s).count();
            write!(
                self.out,
                "  holds={} tight={} violated={} skipped={}",
                count("holds"),
                count("tight"),
                count("violated"),
                count("skipped")
            )?;
        } else if !rec.connected {
            write!(self.out, "  (disconnected)")?;
        }
        writeln!(self.out)?;
        Ok(())
    }

    /// Closes the JSON array and emits the table summary.
    pub fn finish(mut self, summary: Option<&Summary>) -> Result<W> {
        match self.format {
            Format::Json => {
                self.out.write_all(if self.count == 0 { b"[]\n" } else { b"\n]\n" })?;
            }
            Format::Csv => {}
            Format::Table => {
                if let Some(s) = summary {
                    writeln!(self.out, "{}", summary_line(s))?;
                }
            }
        }
        self.out.flush()?;
        Ok(self.out)
    }
}

pub fn summary_line(s: &Summary) -> String {
    format!(
        "summary: graphs={} analyzed={} skipped_disconnected={} holds={} tight={} violated={} skipped={} check_failures={} input_errors={} evaluation_errors={}",
        s.graphs,
        s.analyzed,
        s.skipped_disconnected,
        s.holds,
        s.tight,
        s.violated,
        s.skipped,
        s.check_failures,
        s.input_errors,
        s.evaluation_errors
    )
}

pub fn write_hunt<W: Write>(mut out: W, report: &HuntReport, format: Format) -> Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer(&mut out, report)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.serialize(report)?;
            w.flush()?;
        }
        Format::Table => {
            writeln!(out, "conjecture       {}", report.conjecture)?;
            writeln!(out, "graphs           {}", report.graphs)?;
            match (report.min_slack, report.k, &report.witness) {
                (Some(s), Some(k), Some(w)) => {
                    writeln!(out, "min slack        {s}")?;
                    writeln!(out, "at k             {k}")?;
                    writeln!(out, "witness          {w}")?;
                }
                _ => writeln!(out, "min slack        -")?,
            }
            writeln!(out, "counterexamples  {}", report.counterexamples)?;
        }
    }
    out.flush()?;
    Ok(())
}
