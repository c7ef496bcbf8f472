//! Cyclic Jacobi eigenvalue solver for dense real symmetric matrices.

use alloc::vec::Vec;
use core::fmt;

use crate::matrix::SymMatrix;

/// Sweep cap.
pub const MAX_SWEEPS: usize = 100;
/// Convergence threshold on the off-diagonal Frobenius norm, relative to
/// `1 + ‖A‖_F`.
pub const REL_OFF_DIAGONAL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum EigenError {
    /// The off-diagonal norm was still above threshold after [`MAX_SWEEPS`].
    NoConvergence { residual: f64, threshold: f64, sweeps: usize },
}

impl fmt::Display for EigenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigenError::NoConvergence { residual, threshold, sweeps } => write!(
                f,
                "Jacobi did not converge after {sweeps} sweeps (off-diagonal norm {residual:e} > {threshold:e})"
            ),
        }
    }
}

impl core::error::Error for EigenError {}

/// Eigenvalues sorted nonincreasing plus the achieved off-diagonal norm.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenvalues {
    pub values: Vec<f64>,
    pub residual: f64,
    pub sweeps: usize,
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j] * a[i * n + j];
            }
        }
    }
    libm::sqrt(sum)
}

/// All eigenvalues of `matrix` via cyclic Jacobi rotations.
///
/// Sweeps visit every pair `p < q` in row order and annihilate `a[p][q]`
/// with the smaller-angle rotation. Iteration stops once the off-diagonal
/// Frobenius norm is at most `1e-12 · (1 + ‖A‖_F)`.
pub fn symmetric_eigenvalues(matrix: &SymMatrix) -> Result<Eigenvalues, EigenError> {
    let n = matrix.order();
    let threshold = REL_OFF_DIAGONAL_TOL * (1.0 + matrix.frobenius_norm());
    let mut a = matrix.clone().into_data();
    let mut sweeps = 0;
    let mut residual = off_diagonal_norm(&a, n);
    while residual > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(EigenError::NoConvergence { residual, threshold, sweeps });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
        residual = off_diagonal_norm(&a, n);
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(Eigenvalues { values, residual, sweeps })
}

/// Applies `A ← Jᵀ A J` with `J` chosen so that `A[p][q]` becomes zero.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t =
        if theta >= 0.0 { 1.0 / (theta + libm::hypot(1.0, theta)) } else { -1.0 / (-theta + libm::hypot(1.0, theta)) };
    let c = 1.0 / libm::sqrt(1.0 + t * t);
    let s = t * c;

    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = c * akp - s * akq;
        a[k * n + q] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = a[p * n + k];
        let aqk = a[q * n + k];
        a[p * n + k] = c * apk - s * aqk;
        a[q * n + k] = s * apk + c * aqk;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}
