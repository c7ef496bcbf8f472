//! One-call evaluation of every invariant, bound, structural check and
//! conjecture on a graph.

use alloc::vec::Vec;

use crate::bounds::{evaluate_bounds, BoundError, BoundInput, BoundReport, Tolerance};
use crate::conjecture::{conjecture_check, Conjecture, ConjectureReport};
use crate::graph::{BasicInvariants, Graph};
use crate::matrix::MatrixKind;
use crate::spectrum::{MomentResiduals, Spectrum, SpectrumError};

/// Spectra and structural invariants of one graph.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub invariants: BasicInvariants,
    pub m1: u64,
    pub connected: bool,
    /// `None` on disconnected graphs.
    pub diameter: Option<usize>,
    pub adjacency: Spectrum,
    pub laplacian: Spectrum,
    pub signless: Spectrum,
    /// `e(G)`, distinct Q-eigenvalues.
    pub distinct_q: usize,
    pub moments: MomentResiduals,
}

impl Analysis {
    pub fn new(g: &Graph) -> Result<Self, SpectrumError> {
        let signless = Spectrum::compute(g, MatrixKind::SignlessLaplacian)?;
        let moments = signless.moment_identities(g)?;
        Ok(Analysis {
            invariants: g.basic_invariants(),
            m1: g.zagreb_m1(),
            connected: g.is_connected(),
            diameter: g.diameter().ok(),
            adjacency: Spectrum::compute(g, MatrixKind::Adjacency)?,
            laplacian: Spectrum::compute(g, MatrixKind::Laplacian)?,
            distinct_q: signless.distinct_count(),
            signless,
            moments,
        })
    }

    /// Signless Laplacian energy QE(G).
    pub fn qe(&self) -> f64 {
        self.signless.energy(self.invariants.avg_degree)
    }

    /// Laplacian energy LE(G).
    pub fn le(&self) -> f64 {
        self.laplacian.energy(self.invariants.avg_degree)
    }

    /// Adjacency energy E(G).
    pub fn energy(&self) -> f64 {
        self.adjacency.energy(0.0)
    }
}

/// `D ≤ e(G) − 1` on a connected graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiameterCheck {
    pub diameter: usize,
    pub distinct: usize,
    pub holds: bool,
    pub equality: bool,
}

/// `e(G) = 2 ⟺ G ≅ K_n` on a connected graph with `n ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompleteCheck {
    pub distinct: usize,
    pub complete: bool,
    pub consistent: bool,
}

pub fn check_diameter_eigs(g: &Graph, q: &Spectrum) -> Option<DiameterCheck> {
    let diameter = g.diameter().ok()?;
    let distinct = q.distinct_count();
    Some(DiameterCheck { diameter, distinct, holds: diameter < distinct, equality: diameter + 1 == distinct })
}

pub fn check_two_eigs_complete(g: &Graph, q: &Spectrum) -> Option<CompleteCheck> {
    if g.order() < 2 || !g.is_connected() {
        return None;
    }
    let distinct = q.distinct_count();
    let complete = g.is_complete();
    Some(CompleteCheck { distinct, complete, consistent: (distinct == 2) == complete })
}

#[derive(Debug, Clone)]
pub struct Evaluation {
    pub analysis: Analysis,
    /// Every registered bound, see [`crate::bounds::evaluate_bounds`].
    pub bounds: Vec<BoundReport>,
    pub diameter_check: Option<DiameterCheck>,
    pub complete_check: Option<CompleteCheck>,
    /// Brouwer then Ashraf.
    pub conjectures: [ConjectureReport; 2],
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    /// Held with positive slack.
    pub holds: usize,
    pub tight: usize,
    pub violated: usize,
    pub skipped: usize,
}

impl core::ops::AddAssign for Tally {
    fn add_assign(&mut self, o: Tally) {
        self.holds += o.holds;
        self.tight += o.tight;
        self.violated += o.violated;
        self.skipped += o.skipped;
    }
}

impl Evaluation {
    /// Classifies each bound report: violated, else tight, else holds;
    /// skipped when preconditions fail.
    pub fn tally(&self, tol: &Tolerance) -> Tally {
        let mut t = Tally::default();
        for r in &self.bounds {
            if !r.preconditions_met {
                t.skipped += 1;
            } else if r.violated(tol.sound_rel) {
                t.violated += 1;
            } else if r.tight {
                t.tight += 1;
            } else {
                t.holds += 1;
            }
        }
        t
    }

    /// Failed checks other than bound reports: conjecture counterexamples,
    /// `D ≤ e(G) − 1`, `e(G) = 2 ⟺ K_n` and the moment identities.
    pub fn check_failures(&self, tol: &Tolerance) -> usize {
        let g_scale = (2 * self.analysis.invariants.m) as f64 + self.analysis.m1 as f64;
        let moments_ok = self.analysis.moments.sum <= tol.sound_rel * g_scale.max(1.0)
            && self.analysis.moments.squares <= tol.sound_rel * g_scale.max(1.0);
        self.conjectures.iter().filter(|c| c.counterexample).count()
            + self.diameter_check.is_some_and(|c| !c.holds) as usize
            + self.complete_check.is_some_and(|c| !c.consistent) as usize
            + (!moments_ok) as usize
    }

    pub fn all_hold(&self, tol: &Tolerance) -> bool {
        self.tally(tol).violated == 0 && self.check_failures(tol) == 0
    }
}

/// Computes the three spectra once and evaluates every bound (all valid `k`),
/// both structural checks and both conjectures.
pub fn evaluate_all(g: &Graph, tol: &Tolerance) -> Result<Evaluation, BoundError> {
    let analysis = Analysis::new(g)?;
    evaluate_analysis(g, analysis, tol)
}

/// As [`evaluate_all`] for an already computed [`Analysis`] of `g`.
pub fn evaluate_analysis(g: &Graph, analysis: Analysis, tol: &Tolerance) -> Result<Evaluation, BoundError> {
    let input = BoundInput::new(g, &analysis.signless)?;
    let bounds = evaluate_bounds(&input, tol)?;
    let conjectures = [
        conjecture_check(g, &analysis.laplacian, Conjecture::Brouwer, tol.sound_rel)?,
        conjecture_check(g, &analysis.signless, Conjecture::Ashraf, tol.sound_rel)?,
    ];
    Ok(Evaluation {
        diameter_check: check_diameter_eigs(g, &analysis.signless),
        complete_check: check_two_eigs_complete(g, &analysis.signless),
        bounds,
        conjectures,
        analysis,
    })
}
