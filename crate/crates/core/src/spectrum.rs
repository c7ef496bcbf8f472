//! Spectra of graph matrices and the invariants read off them.

use alloc::vec::Vec;
use core::fmt;

use crate::eigen::{symmetric_eigenvalues, EigenError};
use crate::graph::Graph;
use crate::matrix::{build_matrix, MatrixKind};

/// Gap threshold factor for counting distinct eigenvalues.
pub const DISTINCT_REL_GAP: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub enum SpectrumError {
    Eigen(EigenError),
    KOutOfRange { k: usize, n: usize },
    WrongKind { expected: MatrixKind, found: MatrixKind },
    OrderMismatch { graph: usize, spectrum: usize },
}

impl fmt::Display for SpectrumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumError::Eigen(e) => e.fmt(f),
            SpectrumError::KOutOfRange { k, n } => write!(f, "k = {k} outside 1..={n}"),
            SpectrumError::WrongKind { expected, found } => {
                write!(f, "expected a {expected} spectrum, got {found}")
            }
            SpectrumError::OrderMismatch { graph, spectrum } => {
                write!(f, "graph has {graph} vertices but spectrum has {spectrum} values")
            }
        }
    }
}

impl core::error::Error for SpectrumError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            SpectrumError::Eigen(e) => Some(e),
            _ => None,
        }
    }
}

impl From<EigenError> for SpectrumError {
    fn from(e: EigenError) -> Self {
        SpectrumError::Eigen(e)
    }
}

/// Real eigenvalues of one graph matrix, sorted nonincreasing.
///
/// `tol` is the off-diagonal Frobenius norm left by the eigensolver.
/// Laplacian and signless Laplacian values may dip below zero by about
/// `tol`; they are reported as computed.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    kind: MatrixKind,
    values: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    pub fn compute(g: &Graph, kind: MatrixKind) -> Result<Self, SpectrumError> {
        let eig = symmetric_eigenvalues(&build_matrix(g, kind))?;
        Ok(Spectrum { kind, values: eig.values, tol: eig.residual })
    }

    /// Wraps externally computed values; they are sorted nonincreasing here.
    pub fn from_values(kind: MatrixKind, mut values: Vec<f64>, tol: f64) -> Self {
        values.sort_by(|x, y| y.total_cmp(x));
        Spectrum { kind, values, tol }
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn expect_kind(&self, expected: MatrixKind) -> Result<(), SpectrumError> {
        if self.kind == expected {
            Ok(())
        } else {
            Err(SpectrumError::WrongKind { expected, found: self.kind })
        }
    }

    fn check_k(&self, k: usize) -> Result<(), SpectrumError> {
        if k == 0 || k > self.len() {
            Err(SpectrumError::KOutOfRange { k, n: self.len() })
        } else {
            Ok(())
        }
    }

    /// Number of distinct eigenvalues `e(G)`.
    ///
    /// Sorted values are grouped by single linkage: neighbours belong to the
    /// same cluster when their gap is at most `1e-8 · max(1, |values[0]|)`.
    pub fn distinct_count(&self) -> usize {
        let Some(&first) = self.values.first() else {
            return 0;
        };
        let gap = DISTINCT_REL_GAP * first.abs().max(1.0);
        1 + self.values.windows(2).filter(|w| w[0] - w[1] > gap).count()
    }

    /// `S⁺_k`, the sum of the `k` largest signless Laplacian eigenvalues.
    pub fn s_plus_k(&self, k: usize) -> Result<f64, SpectrumError> {
        self.expect_kind(MatrixKind::SignlessLaplacian)?;
        self.top_sum(k)
    }

    /// `L_k`, the sum of the `k` smallest signless Laplacian eigenvalues.
    pub fn l_k(&self, k: usize) -> Result<f64, SpectrumError> {
        self.expect_kind(MatrixKind::SignlessLaplacian)?;
        self.check_k(k)?;
        Ok(self.values[self.len() - k..].iter().sum())
    }

    /// `S_k`, the sum of the `k` largest Laplacian eigenvalues.
    pub fn s_k(&self, k: usize) -> Result<f64, SpectrumError> {
        self.expect_kind(MatrixKind::Laplacian)?;
        self.top_sum(k)
    }

    fn top_sum(&self, k: usize) -> Result<f64, SpectrumError> {
        self.check_k(k)?;
        Ok(self.values[..k].iter().sum())
    }

    /// Q-index `q(G) = q₁`.
    pub fn q_index(&self) -> Result<f64, SpectrumError> {
        self.expect_kind(MatrixKind::SignlessLaplacian)?;
        self.values.first().copied().ok_or(SpectrumError::KOutOfRange { k: 1, n: 0 })
    }

    /// `Σ |valueᵢ − shift|`. With the average degree as shift this is QE(G)
    /// for Q and LE(G) for L; with shift 0 on A it is the graph energy E(G).
    pub fn energy(&self, shift: f64) -> f64 {
        self.values.iter().map(|v| (v - shift).abs()).sum()
    }

    /// Residuals of `Σqᵢ = 2m` and `Σqᵢ² = 2m + M₁`.
    pub fn moment_identities(&self, g: &Graph) -> Result<MomentResiduals, SpectrumError> {
        self.expect_kind(MatrixKind::SignlessLaplacian)?;
        if g.order() != self.len() {
            return Err(SpectrumError::OrderMismatch { graph: g.order(), spectrum: self.len() });
        }
        let two_m = 2.0 * g.size() as f64;
        let sum: f64 = self.values.iter().sum();
        let sq: f64 = self.values.iter().map(|q| q * q).sum();
        Ok(MomentResiduals { sum: (sum - two_m).abs(), squares: (sq - (two_m + g.zagreb_m1() as f64)).abs() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentResiduals {
    /// `|Σqᵢ − 2m|`
    pub sum: f64,
    /// `|Σqᵢ² − (2m + M₁)|`
    pub squares: f64,
}

impl MomentResiduals {
    /// Both residuals within `rel · max(1, 2m + M₁)`.
    pub fn within(&self, g: &Graph, rel: f64) -> bool {
        let scale = (2.0 * g.size() as f64 + g.zagreb_m1() as f64).max(1.0);
        self.sum <= rel * scale && self.squares <= rel * scale
    }
}
