//! Spectral invariants of simple graphs built around the signless Laplacian
//! `Q(G) = D(G) + A(G)`.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! * [`Graph`], a dense simple undirected graph with cached degrees, plus
//!   graph6 encoding ([`graph6`]) and deterministic generators ([`family`]).
//! * Adjacency, Laplacian and signless Laplacian matrices and their full
//!   spectra through a cyclic Jacobi eigensolver ([`matrix`], [`eigen`],
//!   [`spectrum`]).
//! * Upper and lower bounds on the first Zagreb index, on sums of the
//!   largest/smallest Q-eigenvalues, on the Q-index and on the signless
//!   Laplacian energy, each evaluated as a [`BoundReport`] with equality
//!   detection ([`bounds`]).
//! * Checkers for the Brouwer and Ashraf eigenvalue-sum conjectures
//!   ([`conjecture`]) and a one-call driver ([`evaluate`]).
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod conjecture;
pub mod eigen;
pub mod evaluate;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod matrix;
pub mod spectrum;

pub use bounds::{BoundError, BoundInput, BoundName, BoundReport, Tolerance};
pub use conjecture::{Conjecture, ConjectureReport};
pub use eigen::EigenError;
pub use evaluate::{evaluate_all, Evaluation};
pub use family::{FamilyError, FamilySpec};
pub use graph::{BasicInvariants, Graph, GraphError};
pub use graph6::Graph6Error;
pub use matrix::{MatrixKind, SymMatrix};
pub use spectrum::{Spectrum, SpectrumError};
