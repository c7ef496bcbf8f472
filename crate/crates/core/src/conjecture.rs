//! Brouwer's conjecture `S_k ≤ m + C(k+1, 2)` on Laplacian eigenvalues and
//! its signless analogue `S⁺_k ≤ m + C(k+1, 2)` due to Ashraf et al.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::matrix::MatrixKind;
use crate::spectrum::{Spectrum, SpectrumError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conjecture {
    Brouwer,
    Ashraf,
}

impl Conjecture {
    pub fn as_str(self) -> &'static str {
        match self {
            Conjecture::Brouwer => "brouwer",
            Conjecture::Ashraf => "ashraf",
        }
    }

    /// Spectrum the conjecture is stated for.
    pub fn kind(self) -> MatrixKind {
        match self {
            Conjecture::Brouwer => MatrixKind::Laplacian,
            Conjecture::Ashraf => MatrixKind::SignlessLaplacian,
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `m + C(k+1, 2)`
pub fn budget(m: usize, k: usize) -> f64 {
    (m + k * (k + 1) / 2) as f64
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConjectureReport {
    pub conjecture: Conjecture,
    /// `slacks[k−1] = m + C(k+1,2) − (sum of the k largest eigenvalues)`.
    pub slacks: Vec<f64>,
    pub min_slack: f64,
    /// The `k` attaining `min_slack` (smallest such `k`).
    pub min_k: usize,
    /// Some slack fell below `−sound_rel · max(1, m + C(k+1,2))`.
    pub counterexample: bool,
}

/// Evaluates `which` for every `k ∈ 1..=n`.
pub fn conjecture_check(
    g: &Graph,
    spectrum: &Spectrum,
    which: Conjecture,
    sound_rel: f64,
) -> Result<ConjectureReport, SpectrumError> {
    if spectrum.kind() != which.kind() {
        return Err(SpectrumError::WrongKind { expected: which.kind(), found: spectrum.kind() });
    }
    if spectrum.len() != g.order() {
        return Err(SpectrumError::OrderMismatch { graph: g.order(), spectrum: spectrum.len() });
    }
    let m = g.size();
    let mut slacks = Vec::with_capacity(g.order());
    let mut partial = 0.0;
    let mut counterexample = false;
    for (i, v) in spectrum.values().iter().enumerate() {
        let k = i + 1;
        partial += v;
        let b = budget(m, k);
        let slack = b - partial;
        counterexample |= slack < -sound_rel * b.max(1.0);
        slacks.push(slack);
    }
    let (min_k, min_slack) =
        slacks
            .iter()
            .enumerate()
            .fold((1, f64::INFINITY), |(bk, bs), (i, &s)| if s < bs { (i + 1, s) } else { (bk, bs) });
    Ok(ConjectureReport { conjecture: which, slacks, min_slack, min_k, counterexample })
}
