//! Serialized report schema (version 1). Field order is the JSON key order.

use qspec_core::bounds::{BoundReport, Tolerance};
use qspec_core::conjecture::ConjectureReport;
use qspec_core::evaluate::{Analysis, Evaluation, Tally};
use qspec_core::graph6::to_graph6;
use qspec_core::Graph;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct SweepResult {
    pub v: u32,
    pub graph_id: String,
    pub connected: bool,
    pub invariants: InvariantsRecord,
    pub spectra: SpectraRecord,
    pub energies: EnergiesRecord,
    pub moments: MomentsRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Vec<BoundRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<ChecksRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjectures: Option<Vec<ConjectureRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct InvariantsRecord {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub avg_degree: f64,
    /// `null` when disconnected.
    pub diameter: Option<usize>,
    pub m1: u64,
    pub distinct_q: usize,
}

#[derive(Debug, Serialize)]
pub struct SpectraRecord {
    pub signless_laplacian: Vec<f64>,
    pub laplacian: Vec<f64>,
    pub adjacency: Vec<f64>,
    /// Largest off-diagonal residual left by the three eigensolves.
    pub solver_residual: f64,
}

#[derive(Debug, Serialize)]
pub struct EnergiesRecord {
    pub qe: f64,
    pub le: f64,
    pub e: f64,
}

#[derive(Debug, Serialize)]
pub struct MomentsRecord {
    pub sum_residual: f64,
    pub sq_residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundRecord {
    pub bound: &'static str,
    pub k: Option<usize>,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub residual: Option<f64>,
    pub tight: bool,
    pub preconditions_met: bool,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<&'static str>,
}

#[derive(Debug, Serialize)]
pub struct ChecksRecord {
    pub diameter_bound: Option<DiameterRecord>,
    pub two_eigenvalues_complete: Option<CompleteRecord>,
    pub moments_ok: bool,
}

#[derive(Debug, Serialize)]
pub struct DiameterRecord {
    pub diameter: usize,
    pub distinct_q: usize,
    pub holds: bool,
    pub equality: bool,
}

#[derive(Debug, Serialize)]
pub struct CompleteRecord {
    pub distinct_q: usize,
    pub complete: bool,
    pub consistent: bool,
}

#[derive(Debug, Serialize)]
pub struct ConjectureRecord {
    pub conjecture: &'static str,
    pub slacks: Vec<f64>,
    pub min_slack: f64,
    pub min_k: usize,
    pub counterexample: bool,
}

#[derive(Debug, Default, Clone, Copy, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub analyzed: usize,
    pub skipped_disconnected: usize,
    pub input_errors: usize,
    pub evaluation_errors: usize,
    pub holds: usize,
    pub tight: usize,
    pub violated: usize,
    pub skipped: usize,
    pub check_failures: usize,
}

impl Summary {
    pub fn add_tally(&mut self, t: Tally) {
        self.holds += t.holds;
        self.tight += t.tight;
        self.violated += t.violated;
        self.skipped += t.skipped;
    }

    /// 0 = everything verified, 1 = some violation, 2 = input or evaluation
    /// errors only.
    pub fn exit_code(&self) -> i32 {
        if self.violated > 0 || self.check_failures > 0 {
            1
        } else if self.input_errors > 0 || self.evaluation_errors > 0 {
            2
        } else {
            0
        }
    }
}

#[derive(Debug, Serialize)]
pub struct HuntReport {
    pub v: u32,
    pub conjecture: &'static str,
    pub graphs: usize,
    pub min_slack: Option<f64>,
    pub k: Option<usize>,
    pub witness: Option<String>,
    pub counterexamples: usize,
    pub input_errors: usize,
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

pub fn bound_status(r: &BoundReport, tol: &Tolerance) -> &'static str {
    if !r.preconditions_met {
        "skipped"
    } else if r.violated(tol.sound_rel) {
        "violated"
    } else if r.tight {
        "tight"
    } else {
        "holds"
    }
}

impl BoundRecord {
    pub fn new(r: &BoundReport, tol: &Tolerance) -> Self {
        BoundRecord {
            bound: r.name.as_str(),
            k: r.k,
            lhs: finite(r.lhs),
            rhs: finite(r.rhs),
            residual: finite(r.residual),
            tight: r.tight,
            preconditions_met: r.preconditions_met,
            status: bound_status(r, tol),
            reason: r.reason,
        }
    }
}

impl ConjectureRecord {
    pub fn new(r: &ConjectureReport) -> Self {
        ConjectureRecord {
            conjecture: r.conjecture.as_str(),
            slacks: r.slacks.clone(),
            min_slack: r.min_slack,
            min_k: r.min_k,
            counterexample: r.counterexample,
        }
    }
}

impl SweepResult {
    pub fn from_analysis(g: &Graph, a: &Analysis) -> Self {
        let inv = a.invariants;
        SweepResult {
            v: SCHEMA_VERSION,
            graph_id: to_graph6(g),
            connected: a.connected,
            invariants: InvariantsRecord {
                n: inv.n,
                m: inv.m,
                max_degree: inv.max_degree,
                min_degree: inv.min_degree,
                avg_degree: inv.avg_degree,
                diameter: a.diameter,
                m1: a.m1,
                distinct_q: a.distinct_q,
            },
            spectra: SpectraRecord {
                signless_laplacian: a.signless.values().to_vec(),
                laplacian: a.laplacian.values().to_vec(),
                adjacency: a.adjacency.values().to_vec(),
                solver_residual: a.signless.tol().max(a.laplacian.tol()).max(a.adjacency.tol()),
            },
            energies: EnergiesRecord { qe: a.qe(), le: a.le(), e: a.energy() },
            moments: MomentsRecord { sum_residual: a.moments.sum, sq_residual: a.moments.squares },
            bounds: None,
            checks: None,
            conjectures: None,
            timing_ms: None,
        }
    }

    pub fn from_evaluation(g: &Graph, e: &Evaluation, tol: &Tolerance) -> Self {
        let mut rec = SweepResult::from_analysis(g, &e.analysis);
        let scale = (2.0 * e.analysis.invariants.m as f64 + e.analysis.m1 as f64).max(1.0);
        rec.bounds = Some(e.bounds.iter().map(|r| BoundRecord::new(r, tol)).collect());
        rec.checks = Some(ChecksRecord {
            diameter_bound: e.diameter_check.map(|c| DiameterRecord {
                diameter: c.diameter,
                distinct_q: c.distinct,
                holds: c.holds,
                equality: c.equality,
            }),
            two_eigenvalues_complete: e.complete_check.map(|c| CompleteRecord {
                distinct_q: c.distinct,
                complete: c.complete,
                consistent: c.consistent,
            }),
            moments_ok: e.analysis.moments.sum <= tol.sound_rel * scale
                && e.analysis.moments.squares <= tol.sound_rel * scale,
        });
        rec.conjectures = Some(e.conjectures.iter().map(ConjectureRecord::new).collect());
        rec
    }
}
