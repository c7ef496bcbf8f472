//! Degree-based bounds on the first Zagreb index, on sums of signless
//! Laplacian eigenvalues, on the Q-index and on the signless Laplacian
//! energy.
//!
//! Every bound is evaluated into a [`BoundReport`] whose `residual` is
//! nonnegative exactly when the inequality holds: `rhs − lhs` for upper
//! bounds and `lhs − rhs` for lower bounds. All bounds require a connected
//! graph with `n ≥ 2`; other graphs yield a skipped report instead of an
//! error.
//!
//! Notation: `n` order, `m` size, `Δ`/`δ` maximum/minimum degree,
//! `M₁ = Σ dᵢ²`, `q₁ ≥ … ≥ qₙ` the Q-eigenvalues, `S⁺_k`/`L_k` the sums of
//! the `k` largest/smallest of them and `QE = Σ |qᵢ − 2m/n|`.

use core::fmt;

use crate::graph::{BasicInvariants, Graph};
use crate::matrix::MatrixKind;
use crate::spectrum::{Spectrum, SpectrumError};

/// Numerical slack used when judging inequalities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// `tight ⟺ |residual| ≤ tight_rel · max(1, |rhs|)`.
    pub tight_rel: f64,
    /// An inequality holds when `residual ≥ −sound_rel · max(1, |rhs|)`.
    pub sound_rel: f64,
    /// Radicands in `[−radicand_rel · scale, 0)` are clamped to zero.
    pub radicand_rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { tight_rel: 1e-8, sound_rel: 1e-9, radicand_rel: 1e-9 }
    }
}

impl Tolerance {
    pub fn with_tight(tight_rel: f64) -> Self {
        Tolerance { tight_rel, ..Tolerance::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundName {
    /// `M₁ ≤ 4m²/n + (n/4)(Δ−δ)²`
    M1Polarization,
    /// `M₁ ≤ m²(Δ+δ)²/(nΔδ)`
    M1PolyaSzego,
    /// `M₁ ≤ m(2m/(n−1) + n − 2)`
    M1DeCaen,
    /// `S⁺_k ≤ 2mk/n + √(k(n−k)(8mn + n²(Δ−δ)²))/(2n)`
    SkPlusPolarization,
    /// `L_k ≥ 2mk/n − √(k(n−k)(8mn + n²(Δ−δ)²))/(2n)`
    LkPolarization,
    /// `q₁ ≤ 2m/n + √((n−1)(8mn + n²(Δ−δ)²))/(2n)`
    QIndexPolarization,
    /// `S⁺_k ≤ 2mk/n + √(mk(n−k)(2Δδ(n−2m) + m(Δ+δ)²))/(n√(Δδ))`
    SkPlusPolyaSzego,
    /// `q₁ ≤ 2m/n + √(m(n−1)(2Δδ(n−2m) + m(Δ+δ)²))/(n√(Δδ))`
    QIndexPolyaSzego,
    /// `L_k ≥ 2mk/n − √(mk(n−k)(2Δδ(n−2m) + m(Δ+δ)²))/(n√(Δδ))`
    LkPolyaSzego,
    /// `q₁ ≤ 2m/(n−1) + n − 2`
    QIndexHong,
    /// `QE ≤ 2m/(n(n−1)) + n − 2 + √((n−1)(2m + (n/4)(Δ−δ)² − (q₁ − 2m/n)²))`
    QePolarization,
    /// `QE ≤ 2m/(n(n−1)) + n − 2 + √((n−1)(mn + 2m²(2−n)/(n(n−1)) − (q₁ − 2m/n)²))`
    QeDeCaen,
}

impl BoundName {
    pub const ALL: [BoundName; 12] = [
        BoundName::M1Polarization,
        BoundName::M1PolyaSzego,
        BoundName::M1DeCaen,
        BoundName::SkPlusPolarization,
        BoundName::LkPolarization,
        BoundName::QIndexPolarization,
        BoundName::SkPlusPolyaSzego,
        BoundName::QIndexPolyaSzego,
        BoundName::LkPolyaSzego,
        BoundName::QIndexHong,
        BoundName::QePolarization,
        BoundName::QeDeCaen,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::M1Polarization => "bound_m1_polarization",
            BoundName::M1PolyaSzego => "bound_m1_polya_szego",
            BoundName::M1DeCaen => "bound_m1_decaen",
            BoundName::SkPlusPolarization => "bound_skplus_polarization",
            BoundName::LkPolarization => "bound_lk_polarization",
            BoundName::QIndexPolarization => "bound_qindex_polarization",
            BoundName::SkPlusPolyaSzego => "bound_skplus_polya_szego",
            BoundName::QIndexPolyaSzego => "bound_qindex_polya_szego",
            BoundName::LkPolyaSzego => "bound_lk_polya_szego",
            BoundName::QIndexHong => "bound_qindex_hong",
            BoundName::QePolarization => "bound_qe_polarization",
            BoundName::QeDeCaen => "bound_qe_decaen",
        }
    }

    pub fn from_str_name(s: &str) -> Option<Self> {
        BoundName::ALL.into_iter().find(|b| b.as_str() == s)
    }

    /// Bounds parameterised by `1 ≤ k ≤ n`.
    pub fn takes_k(self) -> bool {
        matches!(
            self,
            BoundName::SkPlusPolarization
                | BoundName::LkPolarization
                | BoundName::SkPlusPolyaSzego
                | BoundName::LkPolyaSzego
        )
    }

    pub fn is_lower(self) -> bool {
        matches!(self, BoundName::LkPolarization | BoundName::LkPolyaSzego)
    }

    /// Number of reports one graph of order `n` produces: one per plain bound
    /// and one per `k ∈ 1..=n` for each parameterised bound.
    pub fn registered_count(n: usize) -> usize {
        BoundName::ALL.iter().map(|b| if b.takes_k() { n } else { 1 }).sum()
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One bound evaluated on one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub name: BoundName,
    pub k: Option<usize>,
    /// Bounded quantity. `NaN` when skipped.
    pub lhs: f64,
    /// Bound value. `NaN` when skipped.
    pub rhs: f64,
    /// `rhs − lhs` (upper) or `lhs − rhs` (lower). `NaN` when skipped.
    pub residual: f64,
    pub tight: bool,
    pub preconditions_met: bool,
    /// Why the bound was skipped.
    pub reason: Option<&'static str>,
}

impl BoundReport {
    fn evaluated(name: BoundName, k: Option<usize>, lhs: f64, rhs: f64, tol: &Tolerance) -> Self {
        let residual = if name.is_lower() { lhs - rhs } else { rhs - lhs };
        BoundReport {
            name,
            k,
            lhs,
            rhs,
            residual,
            tight: residual.abs() <= tol.tight_rel * rhs.abs().max(1.0),
            preconditions_met: true,
            reason: None,
        }
    }

    fn skipped(name: BoundName, k: Option<usize>, reason: &'static str) -> Self {
        BoundReport {
            name,
            k,
            lhs: f64::NAN,
            rhs: f64::NAN,
            residual: f64::NAN,
            tight: false,
            preconditions_met: false,
            reason: Some(reason),
        }
    }

    /// `true` when evaluated and `residual ≥ −sound_rel · max(1, |rhs|)`.
    pub fn holds(&self, sound_rel: f64) -> bool {
        self.preconditions_met && self.residual >= -sound_rel * self.rhs.abs().max(1.0)
    }

    pub fn violated(&self, sound_rel: f64) -> bool {
        self.preconditions_met && !self.holds(sound_rel)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum BoundError {
    /// A radicand was negative beyond the clamp window: the formula and the
    /// inputs disagree.
    NegativeRadicand {
        bound: BoundName,
        k: Option<usize>,
        value: f64,
    },
    KOutOfRange {
        bound: BoundName,
        k: usize,
        n: usize,
    },
    Spectrum(SpectrumError),
}

impl fmt::Display for BoundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundError::NegativeRadicand { bound, k, value } => {
                write!(f, "{bound}")?;
                if let Some(k) = k {
                    write!(f, " (k = {k})")?;
                }
                write!(f, ": negative radicand {value:e}")
            }
            BoundError::KOutOfRange { bound, k, n } => write!(f, "{bound}: k = {k} outside 1..={n}"),
            BoundError::Spectrum(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for BoundError {}

impl From<SpectrumError> for BoundError {
    fn from(e: SpectrumError) -> Self {
        BoundError::Spectrum(e)
    }
}

/// Graph data shared by all bounds: degree invariants and the Q-spectrum.
#[derive(Debug, Clone)]
pub struct BoundInput<'a> {
    inv: BasicInvariants,
    m1: u64,
    connected: bool,
    q: &'a Spectrum,
}

impl<'a> BoundInput<'a> {
    pub fn new(g: &Graph, q: &'a Spectrum) -> Result<Self, BoundError> {
        if q.kind() != MatrixKind::SignlessLaplacian {
            return Err(SpectrumError::WrongKind { expected: MatrixKind::SignlessLaplacian, found: q.kind() }.into());
        }
        if q.len() != g.order() {
            return Err(SpectrumError::OrderMismatch { graph: g.order(), spectrum: q.len() }.into());
        }
        Ok(BoundInput { inv: g.basic_invariants(), m1: g.zagreb_m1(), connected: g.is_connected(), q })
    }

    fn precondition(&self) -> Result<(), &'static str> {
        if self.inv.n < 2 {
            Err("requires n >= 2")
        } else if !self.connected {
            Err("requires a connected graph")
        } else {
            Ok(())
        }
    }

    fn n(&self) -> f64 {
        self.inv.n as f64
    }

    fn m(&self) -> f64 {
        self.inv.m as f64
    }

    fn avg_degree(&self) -> f64 {
        self.inv.avg_degree
    }

    /// `k(n−k)(8mn + n²(Δ−δ)²)`, exact.
    fn polarization_radicand(&self, k: usize) -> f64 {
        let (n, m) = (self.inv.n as u128, self.inv.m as u128);
        let spread = (self.inv.max_degree - self.inv.min_degree) as u128;
        let k = k as u128;
        (k * (n - k) * (8 * m * n + n * n * spread * spread)) as f64
    }

    /// `2Δδ(n−2m) + m(Δ+δ)²`, exact, with the magnitude of its terms.
    fn polya_szego_inner(&self) -> (f64, f64) {
        let (n, m) = (self.inv.n as i128, self.inv.m as i128);
        let (hi, lo) = (self.inv.max_degree as i128, self.inv.min_degree as i128);
        let a = 2 * hi * lo * (n - 2 * m);
        let b = m * (hi + lo) * (hi + lo);
        ((a + b) as f64, (a.abs() + b) as f64)
    }

    /// `√(mk(n−k)·inner)/(n√(Δδ))`.
    fn polya_szego_radical(&self, name: BoundName, k: usize, tol: &Tolerance) -> Result<f64, BoundError> {
        let (inner, scale) = self.polya_szego_inner();
        let factor = self.m() * k as f64 * (self.inv.n - k) as f64;
        let root = guarded_sqrt(factor * inner, factor * scale, tol).ok_or(BoundError::NegativeRadicand {
            bound: name,
            k: Some(k),
            value: factor * inner,
        })?;
        let delta_prod = (self.inv.max_degree * self.inv.min_degree) as f64;
        Ok(root / (self.n() * libm::sqrt(delta_prod)))
    }

    fn check_k(&self, name: BoundName, k: usize) -> Result<(), BoundError> {
        if k == 0 || k > self.inv.n {
            Err(BoundError::KOutOfRange { bound: name, k, n: self.inv.n })
        } else {
            Ok(())
        }
    }

    fn q1(&self) -> f64 {
        self.q.values()[0]
    }

    fn s_plus(&self, k: usize) -> f64 {
        self.q.values()[..k].iter().sum()
    }

    fn l(&self, k: usize) -> f64 {
        let v = self.q.values();
        v[v.len() - k..].iter().sum()
    }
}

/// `√value`, clamping `value ∈ [−radicand_rel · scale, 0)` to zero.
/// `None` for anything more negative.
fn guarded_sqrt(value: f64, scale: f64, tol: &Tolerance) -> Option<f64> {
    if value >= 0.0 {
        Some(libm::sqrt(value))
    } else if value >= -tol.radicand_rel * scale.max(1.0) {
        Some(0.0)
    } else {
        None
    }
}

/// Evaluates `name` on `input`. `k` is required exactly for
/// [`BoundName::takes_k`] bounds and must lie in `1..=n`; at `k = n` the
/// bound value is defined as `2m`.
pub fn evaluate_bound(
    name: BoundName,
    input: &BoundInput<'_>,
    k: Option<usize>,
    tol: &Tolerance,
) -> Result<BoundReport, BoundError> {
    let k = if name.takes_k() {
        let k = k.unwrap_or(0);
        input.check_k(name, k)?;
        Some(k)
    } else {
        None
    };
    if let Err(reason) = input.precondition() {
        return Ok(BoundReport::skipped(name, k, reason));
    }

    let (n, m) = (input.n(), input.m());
    let (hi, lo) = (input.inv.max_degree as f64, input.inv.min_degree as f64);
    let m1 = input.m1 as f64;
    let avg = input.avg_degree();
    let two_m = 2.0 * m;

    let report = |lhs: f64, rhs: f64| Ok(BoundReport::evaluated(name, k, lhs, rhs, tol));
    match name {
        BoundName::M1Polarization => report(m1, 4.0 * m * m / n + n * (hi - lo) * (hi - lo) / 4.0),
        BoundName::M1PolyaSzego => report(m1, m * m * (hi + lo) * (hi + lo) / (n * hi * lo)),
        BoundName::M1DeCaen => report(m1, m * (two_m / (n - 1.0) + n - 2.0)),
        BoundName::SkPlusPolarization | BoundName::LkPolarization => {
            let k = k.unwrap_or(0);
            let lhs = if name.is_lower() { input.l(k) } else { input.s_plus(k) };
            if k == input.inv.n {
                return report(lhs, two_m);
            }
            let radical = libm::sqrt(input.polarization_radicand(k)) / (2.0 * n);
            let centre = two_m * k as f64 / n;
            report(lhs, if name.is_lower() { centre - radical } else { centre + radical })
        }
        BoundName::QIndexPolarization => {
            report(input.q1(), avg + libm::sqrt(input.polarization_radicand(1)) / (2.0 * n))
        }
        BoundName::SkPlusPolyaSzego | BoundName::LkPolyaSzego => {
            let k = k.unwrap_or(0);
            let lhs = if name.is_lower() { input.l(k) } else { input.s_plus(k) };
            if k == input.inv.n {
                return report(lhs, two_m);
            }
            let radical = input.polya_szego_radical(name, k, tol)?;
            let centre = two_m * k as f64 / n;
            report(lhs, if name.is_lower() { centre - radical } else { centre + radical })
        }
        BoundName::QIndexPolyaSzego => report(input.q1(), avg + input.polya_szego_radical(name, 1, tol)?),
        BoundName::QIndexHong => report(input.q1(), two_m / (n - 1.0) + n - 2.0),
        BoundName::QePolarization | BoundName::QeDeCaen => {
            let deviation = input.q1() - avg;
            let dev_sq = deviation * deviation;
            let (spread_term, spread_scale) = if name == BoundName::QePolarization {
                let t = two_m + n * (hi - lo) * (hi - lo) / 4.0;
                (t, t)
            } else {
                let cross = 2.0 * m * m * (2.0 - n) / (n * (n - 1.0));
                (m * n + cross, m * n + cross.abs())
            };
            let radicand = (n - 1.0) * (spread_term - dev_sq);
            let root = guarded_sqrt(radicand, (n - 1.0) * (spread_scale + dev_sq), tol)
                .ok_or(BoundError::NegativeRadicand { bound: name, k: None, value: radicand })?;
            report(input.q.energy(avg), two_m / (n * (n - 1.0)) + n - 2.0 + root)
        }
    }
}

/// Every registered bound, parameterised ones for each `k ∈ 1..=n`, in
/// [`BoundName::ALL`] order.
pub fn evaluate_bounds(input: &BoundInput<'_>, tol: &Tolerance) -> Result<alloc::vec::Vec<BoundReport>, BoundError> {
    let n = input.inv.n;
    let mut out = alloc::vec::Vec::with_capacity(BoundName::registered_count(n));
    for name in BoundName::ALL {
        if name.takes_k() {
            for k in 1..=n {
                out.push(evaluate_bound(name, input, Some(k), tol)?);
            }
        } else {
            out.push(evaluate_bound(name, input, None, tol)?);
        }
    }
    Ok(out)
}

macro_rules! bound_fns {
    ($($(#[$doc:meta])* $fname:ident => $variant:ident;)*) => {$(
        $(#[$doc])*
        pub fn $fname(input: &BoundInput<'_>, tol: &Tolerance) -> Result<BoundReport, BoundError> {
            evaluate_bound(BoundName::$variant, input, None, tol)
        }
    )*};
}

macro_rules! bound_k_fns {
    ($($(#[$doc:meta])* $fname:ident => $variant:ident;)*) => {$(
        $(#[$doc])*
        pub fn $fname(input: &BoundInput<'_>, k: usize, tol: &Tolerance) -> Result<BoundReport, BoundError> {
            evaluate_bound(BoundName::$variant, input, Some(k), tol)
        }
    )*};
}

bound_fns! {
    /// Polarization-type upper bound on `M₁`; tight on regular graphs.
    bound_m1_polarization => M1Polarization;
    /// Pólya–Szegő-type upper bound on `M₁`; tight on regular graphs.
    bound_m1_polya_szego => M1PolyaSzego;
    /// de Caen's bound; tight exactly on stars and complete graphs.
    bound_m1_decaen => M1DeCaen;
    bound_qindex_polarization => QIndexPolarization;
    bound_qindex_polya_szego => QIndexPolyaSzego;
    /// Tight exactly on stars and complete graphs.
    bound_qindex_hong => QIndexHong;
    bound_qe_polarization => QePolarization;
    bound_qe_decaen => QeDeCaen;
}

bound_k_fns! {
    bound_skplus_polarization => SkPlusPolarization;
    bound_lk_polarization => LkPolarization;
    bound_skplus_polya_szego => SkPlusPolyaSzego;
    bound_lk_polya_szego => LkPolyaSzego;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use alloc::vec::Vec;

    const TOL: Tolerance = Tolerance { tight_rel: 1e-8, sound_rel: 1e-9, radicand_rel: 1e-9 };

    fn q(g: &Graph) -> Spectrum {
        Spectrum::compute(g, MatrixKind::SignlessLaplacian).unwrap()
    }

    fn eval(g: &Graph, name: BoundName, k: Option<usize>) -> BoundReport {
        let s = q(g);
        let input = BoundInput::new(g, &s).unwrap();
        evaluate_bound(name, &input, k, &TOL).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-9 * b.abs().max(1.0)
    }

    // (graph, bound, k, lhs, rhs, tight) frozen from an independent
    // floating-point evaluation with a separate eigen-solver.
    #[test]
    fn frozen_values() {
        use BoundName::*;
        let k4 = complete(4);
        let s13 = star(4);
        let p4 = path(4);
        let c4 = cycle(4);
        let c5 = cycle(5);
        let c6 = cycle(6);
        type Case<'a> = (&'a Graph, BoundName, Option<usize>, f64, f64, bool);
        let cases: Vec<Case> = alloc::vec![
            (&k4, M1Polarization, None, 36.0, 36.0, true),
            (&p4, M1Polarization, None, 10.0, 10.0, true),
            (&s13, M1Polarization, None, 12.0, 13.0, false),
            (&k4, M1PolyaSzego, None, 36.0, 36.0, true),
            (&p4, M1PolyaSzego, None, 10.0, 10.125, false),
            (&s13, M1PolyaSzego, None, 12.0, 12.0, true),
            (&s13, M1DeCaen, None, 12.0, 12.0, true),
            (&k4, M1DeCaen, None, 36.0, 36.0, true),
            (&c4, M1DeCaen, None, 16.0, 18.666666666666664, false),
            (&k4, SkPlusPolarization, Some(1), 6.0, 6.0, true),
            (&k4, SkPlusPolarization, Some(2), 8.0, 9.464101615137753, false),
            (&k4, SkPlusPolarization, Some(4), 12.0, 12.0, true),
            (&k4, LkPolarization, Some(3), 6.0, 6.0, true),
            (&k4, LkPolarization, Some(1), 2.0, 0.0, false),
            (&s13, LkPolarization, Some(1), 0.0, -1.2386127875258306, false),
            (&k4, QIndexPolarization, None, 6.0, 6.0, true),
            (&s13, QIndexPolarization, None, 4.0, 4.238612787525831, false),
            (&c5, QIndexPolarization, None, 4.0, 4.82842712474619, false),
            (&k4, SkPlusPolyaSzego, Some(1), 6.0, 6.0, true),
            (&k4, SkPlusPolyaSzego, Some(2), 8.0, 9.464101615137755, false),
            (&k4, QIndexPolyaSzego, None, 6.0, 6.0, true),
            (&p4, QIndexPolyaSzego, None, 3.414213562373095, 3.811655251113366, false),
            (&c6, QIndexPolyaSzego, None, 4.0, 5.16227766016838, false),
            (&s13, QIndexPolyaSzego, None, 4.0, 4.098076211353316, false),
            (&k4, LkPolyaSzego, Some(3), 6.0, 6.0, true),
            (&k4, LkPolyaSzego, Some(1), 2.0, 0.0, false),
            (&s13, QIndexHong, None, 4.0, 4.0, true),
            (&k4, QIndexHong, None, 6.0, 6.0, true),
            (&c5, QIndexHong, None, 4.0, 5.5, false),
            (&k4, QePolarization, None, 6.0, 6.0, true),
            (&s13, QePolarization, None, 5.0, 5.854101966249685, false),
            (&p4, QePolarization, None, 4.828427124746189, 5.663441055698798, false),
            (&k4, QeDeCaen, None, 6.0, 6.0, true),
            (&s13, QeDeCaen, None, 5.0, 5.372281323269014, false),
            (&c4, QeDeCaen, None, 4.0, 7.1388026216662475, false),
        ];
        for (g, name, k, lhs, rhs, tight) in cases {
            let r = eval(g, name, k);
            assert!(close(r.lhs, lhs) && close(r.rhs, rhs), "{name} k={k:?} on {g:?}: {r:?}");
            assert_eq!(r.tight, tight, "{name} k={k:?} on {g:?}: {r:?}");
            assert!(r.holds(TOL.sound_rel));
            assert!(r.residual >= 0.0 || r.tight);
        }
    }

    #[test]
    fn named_functions_dispatch() {
        let g = complete(5);
        let s = q(&g);
        let input = BoundInput::new(&g, &s).unwrap();
        assert_eq!(bound_qindex_hong(&input, &TOL).unwrap().name, BoundName::QIndexHong);
        assert_eq!(bound_lk_polya_szego(&input, 4, &TOL).unwrap().k, Some(4));
        assert!(bound_m1_decaen(&input, &TOL).unwrap().tight);
        assert!(bound_skplus_polarization(&input, 1, &TOL).unwrap().tight);
        assert!(bound_lk_polarization(&input, 4, &TOL).unwrap().tight);
        assert!(bound_skplus_polya_szego(&input, 1, &TOL).unwrap().tight);
        assert!(bound_m1_polarization(&input, &TOL).unwrap().tight);
        assert!(bound_m1_polya_szego(&input, &TOL).unwrap().tight);
        assert!(bound_qindex_polarization(&input, &TOL).unwrap().tight);
        assert!(bound_qindex_polya_szego(&input, &TOL).unwrap().tight);
        assert!(bound_qe_polarization(&input, &TOL).unwrap().tight);
        assert!(bound_qe_decaen(&input, &TOL).unwrap().tight);
    }

    #[test]
    fn k_equal_n_is_exact() {
        for g in [path(5), star(6), complete_bipartite(2, 3), cycle(7)] {
            let n = g.order();
            let two_m = 2.0 * g.size() as f64;
            for name in [
                BoundName::SkPlusPolarization,
                BoundName::SkPlusPolyaSzego,
                BoundName::LkPolarization,
                BoundName::LkPolyaSzego,
            ] {
                let r = eval(&g, name, Some(n));
                assert_eq!(r.rhs, two_m);
                assert!(r.tight, "{r:?}");
            }
        }
    }

    #[test]
    fn k_out_of_range_is_an_error() {
        let g = path(4);
        let s = q(&g);
        let input = BoundInput::new(&g, &s).unwrap();
        for k in [None, Some(0), Some(5)] {
            assert!(matches!(
                evaluate_bound(BoundName::SkPlusPolarization, &input, k, &TOL),
                Err(BoundError::KOutOfRange { .. })
            ));
        }
        // k is ignored for plain bounds
        assert!(evaluate_bound(BoundName::QIndexHong, &input, Some(99), &TOL).unwrap().k.is_none());
    }

    #[test]
    fn disconnected_and_trivial_graphs_are_skipped() {
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let s = q(&two_k2);
        let input = BoundInput::new(&two_k2, &s).unwrap();
        let reports = evaluate_bounds(&input, &TOL).unwrap();
        assert_eq!(reports.len(), BoundName::registered_count(4));
        assert!(reports.iter().all(|r| !r.preconditions_met && !r.tight && r.lhs.is_nan()));
        assert!(reports.iter().all(|r| !r.holds(TOL.sound_rel) && !r.violated(TOL.sound_rel)));
        assert_eq!(reports[0].reason, Some("requires a connected graph"));

        let k1 = Graph::empty(1).unwrap();
        let s = q(&k1);
        let r = bound_m1_decaen(&BoundInput::new(&k1, &s).unwrap(), &TOL).unwrap();
        assert_eq!(r.reason, Some("requires n >= 2"));
    }

    #[test]
    fn input_requires_signless_spectrum() {
        let g = path(3);
        let l = Spectrum::compute(&g, MatrixKind::Laplacian).unwrap();
        assert!(BoundInput::new(&g, &l).is_err());
        let s = q(&path(4));
        assert!(BoundInput::new(&g, &s).is_err());
    }

    #[test]
    fn radicand_guard() {
        assert_eq!(guarded_sqrt(4.0, 4.0, &TOL), Some(2.0));
        assert_eq!(guarded_sqrt(-1e-12, 10.0, &TOL), Some(0.0));
        assert_eq!(guarded_sqrt(-1e-3, 10.0, &TOL), None);
    }

    #[test]
    fn registry() {
        assert_eq!(BoundName::registered_count(4), 8 + 16);
        assert_eq!(BoundName::ALL.iter().filter(|b| b.takes_k()).count(), 4);
        for b in BoundName::ALL {
            assert_eq!(BoundName::from_str_name(b.as_str()), Some(b));
        }
    }

    #[test]
    fn lower_and_upper_residuals_are_dual() {
        for g in [path(6), star(5), cycle(5), complete_bipartite(2, 4)] {
            let n = g.order();
            for (upper, lower) in [
                (BoundName::SkPlusPolarization, BoundName::LkPolarization),
                (BoundName::SkPlusPolyaSzego, BoundName::LkPolyaSzego),
            ] {
                for k in 1..n {
                    let u = eval(&g, upper, Some(k));
                    let l = eval(&g, lower, Some(n - k));
                    assert!((u.residual - l.residual).abs() <= 1e-9, "{upper} {k}: {u:?} {l:?}");
                }
            }
        }
    }
}
