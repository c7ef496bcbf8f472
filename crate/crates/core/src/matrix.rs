//! Dense symmetric matrices attached to a graph.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

/// Which graph matrix a spectrum belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    /// `A(G)`
    Adjacency,
    /// `L(G) = D(G) − A(G)`
    Laplacian,
    /// `Q(G) = D(G) + A(G)`
    SignlessLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::SignlessLaplacian];

    pub fn as_str(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Laplacian => "laplacian",
            MatrixKind::SignlessLaplacian => "signless_laplacian",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Row-major square matrix known to be symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum MatrixError {
    NotSquare,
    NotSymmetric { row: usize, col: usize },
    NonFinite { row: usize, col: usize },
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::NotSquare => write!(f, "matrix is not square"),
            MatrixError::NotSymmetric { row, col } => write!(f, "entry ({row},{col}) breaks symmetry"),
            MatrixError::NonFinite { row, col } => write!(f, "entry ({row},{col}) is not finite"),
        }
    }
}

impl core::error::Error for MatrixError {}

impl SymMatrix {
    /// Checks squareness, finiteness and exact symmetry.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, MatrixError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(MatrixError::NotSquare);
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if !x.is_finite() {
                    return Err(MatrixError::NonFinite { row: i, col: j });
                }
                if x != rows[j][i] {
                    return Err(MatrixError::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymMatrix { n, data: rows.iter().flatten().copied().collect() })
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let n = values.len();
        let mut data = vec![0.0; n * n];
        for (i, &v) in values.iter().enumerate() {
            data[i * n + i] = v;
        }
        SymMatrix { n, data }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|x| x * x).sum())
    }

    pub(crate) fn into_data(self) -> Vec<f64> {
        self.data
    }
}

/// `A`, `L = D − A` or `Q = D + A` with exact integer entries.
pub fn build_matrix(g: &Graph, kind: MatrixKind) -> SymMatrix {
    let n = g.order();
    let mut data = vec![0.0; n * n];
    let off = match kind {
        MatrixKind::Laplacian => -1.0,
        MatrixKind::Adjacency | MatrixKind::SignlessLaplacian => 1.0,
    };
    for (u, v) in g.edges() {
        data[u * n + v] = off;
        data[v * n + u] = off;
    }
    if kind != MatrixKind::Adjacency {
        for v in 0..n {
            data[v * n + v] = g.degree(v) as f64;
        }
    }
    SymMatrix { n, data }
}
