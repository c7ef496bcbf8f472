//! Deterministic graph families and ensembles.
//!
//! Random graphs use the `G(n, p)` model driven by PCG XSL RR 128/64
//! ([`rand_pcg::Pcg64`]) seeded with `seed_from_u64(seed)`. Pairs are visited
//! in graph6 column-major order and each pair is included when the next draw
//! `(next_u64() >> 11) · 2⁻⁵³` is `< p`. Consecutive samples share one stream.

use core::fmt;

use rand_core::{Rng, SeedableRng};
use rand_pcg::Pcg64;

use crate::graph::{named, Graph};

/// Largest order accepted by [`FamilySpec::Exhaustive`].
pub const MAX_EXHAUSTIVE_ORDER: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilySpec {
    Complete {
        n: usize,
    },
    Star {
        n: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    /// Endless stream of independent `G(n, p)` samples.
    Gnp {
        n: usize,
        p: f64,
        seed: u64,
    },
    /// Every labeled graph on `n` vertices, one per upper-triangle bitmask.
    Exhaustive {
        n: usize,
        connected_only: bool,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum FamilyError {
    OrderTooSmall { family: &'static str, n: usize, min: usize },
    ExhaustiveTooLarge(usize),
    InvalidProbability(f64),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::OrderTooSmall { family, n, min } => {
                write!(f, "{family} needs at least {min} vertices, got {n}")
            }
            FamilyError::ExhaustiveTooLarge(n) => {
                write!(f, "exhaustive enumeration limited to n <= {MAX_EXHAUSTIVE_ORDER}, got {n}")
            }
            FamilyError::InvalidProbability(p) => write!(f, "edge probability {p} not in [0, 1]"),
        }
    }
}

impl core::error::Error for FamilyError {}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::Gnp { .. } => "gnp",
            FamilySpec::Exhaustive { .. } => "exhaustive",
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let need = |n: usize, min: usize| {
            if n < min {
                Err(FamilyError::OrderTooSmall { family: self.name(), n, min })
            } else {
                Ok(())
            }
        };
        match *self {
            FamilySpec::Complete { n } | FamilySpec::Star { n } | FamilySpec::Path { n } => need(n, 2),
            FamilySpec::Cycle { n } => need(n, 3),
            FamilySpec::CompleteBipartite { a, b } => need(a.min(b), 1),
            FamilySpec::Gnp { n, p, .. } => {
                need(n, 1)?;
                if (0.0..=1.0).contains(&p) {
                    Ok(())
                } else {
                    Err(FamilyError::InvalidProbability(p))
                }
            }
            FamilySpec::Exhaustive { n, .. } => {
                need(n, 2)?;
                if n > MAX_EXHAUSTIVE_ORDER {
                    Err(FamilyError::ExhaustiveTooLarge(n))
                } else {
                    Ok(())
                }
            }
        }
    }
}

/// Graphs produced by [`generate`].
pub enum Family {
    Single(Option<Graph>),
    Gnp(GnpSampler),
    Exhaustive(Exhaustive),
}

impl Iterator for Family {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match self {
            Family::Single(g) => g.take(),
            Family::Gnp(s) => Some(s.sample()),
            Family::Exhaustive(e) => e.next(),
        }
    }
}

pub fn generate(spec: FamilySpec) -> Result<Family, FamilyError> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::Complete { n } => Family::Single(Some(named::complete(n))),
        FamilySpec::Star { n } => Family::Single(Some(named::star(n))),
        FamilySpec::Path { n } => Family::Single(Some(named::path(n))),
        FamilySpec::Cycle { n } => Family::Single(Some(named::cycle(n))),
        FamilySpec::CompleteBipartite { a, b } => Family::Single(Some(named::complete_bipartite(a, b))),
        FamilySpec::Gnp { n, p, seed } => Family::Gnp(GnpSampler::new(n, p, seed)),
        FamilySpec::Exhaustive { n, connected_only } => Family::Exhaustive(Exhaustive::new(n, connected_only)),
    })
}

/// Seeded `G(n, p)` sampler.
pub struct GnpSampler {
    n: usize,
    p: f64,
    rng: Pcg64,
}

impl GnpSampler {
    pub fn new(n: usize, p: f64, seed: u64) -> Self {
        GnpSampler { n, p, rng: Pcg64::seed_from_u64(seed) }
    }

    /// Uniform draw in `[0, 1)` with 53 random bits.
    fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn sample(&mut self) -> Graph {
        let p = self.p;
        Graph::from_upper_bits(self.n, |_| self.uniform() < p).expect("n >= 1")
    }
}

/// Labeled graphs on `n` vertices, mask bit `i` is the `i`-th pair in graph6
/// order.
pub struct Exhaustive {
    n: usize,
    next_mask: u64,
    end: u64,
    connected_only: bool,
}

impl Exhaustive {
    pub fn new(n: usize, connected_only: bool) -> Self {
        let pairs = n * n.saturating_sub(1) / 2;
        Exhaustive { n, next_mask: 0, end: 1u64 << pairs, connected_only }
    }
}

impl Iterator for Exhaustive {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            let g = Graph::from_upper_bits(self.n, |i| mask >> i & 1 == 1).expect("n >= 1");
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    /// Brute-force count of connected labeled graphs: union-find over the
    /// edge list of each mask.
    fn count_connected_labeled(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut count = 0;
        for mask in 0u64..(1 << pairs.len()) {
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut [usize], x: usize) -> usize {
                let mut r = x;
                while p[r] != r {
                    r = p[r];
                }
                r
            }
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
            let root = find(&mut parent, 0);
            if (0..n).all(|v| find(&mut parent, v) == root) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn exhaustive_counts() {
        assert_eq!(count_connected_labeled(4), 38);
        assert_eq!(generate(FamilySpec::Exhaustive { n: 4, connected_only: false }).unwrap().count(), 64);
        assert_eq!(generate(FamilySpec::Exhaustive { n: 4, connected_only: true }).unwrap().count(), 38);
        for n in 2..=6 {
            let all = Exhaustive::new(n, false).count();
            assert_eq!(all, 1 << (n * (n - 1) / 2));
            assert_eq!(Exhaustive::new(n, true).count(), count_connected_labeled(n));
        }
    }

    #[test]
    fn single_graph_families() {
        let k4: Vec<_> = generate(FamilySpec::Complete { n: 4 }).unwrap().collect();
        assert_eq!(k4.len(), 1);
        assert_eq!(k4[0].size(), 6);
        let kab = generate(FamilySpec::CompleteBipartite { a: 2, b: 3 }).unwrap().next().unwrap();
        assert_eq!((kab.order(), kab.size()), (5, 6));
        assert!(generate(FamilySpec::Star { n: 5 }).unwrap().next().unwrap().is_star());
    }

    #[test]
    fn gnp_is_seeded() {
        let take =
            |seed| -> Vec<Graph> { generate(FamilySpec::Gnp { n: 20, p: 0.5, seed }).unwrap().take(3).collect() };
        let a = take(42);
        assert_eq!(a, take(42));
        assert_ne!(a, take(43));
        assert_ne!(a[0], a[1]);
        let g = generate(FamilySpec::Gnp { n: 20, p: 1.0, seed: 1 }).unwrap().next().unwrap();
        assert!(g.is_complete());
        let g = generate(FamilySpec::Gnp { n: 20, p: 0.0, seed: 1 }).unwrap().next().unwrap();
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn gnp_density_is_plausible() {
        let edges: usize = GnpSamplerIter(GnpSampler::new(30, 0.3, 7)).take(50).map(|g| g.size()).sum();
        let expected = 50.0 * 435.0 * 0.3;
        assert!((edges as f64 - expected).abs() < 0.05 * expected, "{edges}");
    }

    struct GnpSamplerIter(GnpSampler);
    impl Iterator for GnpSamplerIter {
        type Item = Graph;
        fn next(&mut self) -> Option<Graph> {
            Some(self.0.sample())
        }
    }

    #[test]
    fn validation() {
        assert!(FamilySpec::Complete { n: 1 }.validate().is_err());
        assert!(FamilySpec::Star { n: 2 }.validate().is_ok());
        assert!(FamilySpec::Cycle { n: 2 }.validate().is_err());
        assert!(FamilySpec::CompleteBipartite { a: 0, b: 3 }.validate().is_err());
        assert_eq!(FamilySpec::Gnp { n: 5, p: 1.5, seed: 0 }.validate(), Err(FamilyError::InvalidProbability(1.5)));
        assert_eq!(
            FamilySpec::Exhaustive { n: 8, connected_only: false }.validate(),
            Err(FamilyError::ExhaustiveTooLarge(8))
        );
        assert!(generate(FamilySpec::Exhaustive { n: 1, connected_only: false }).is_err());
    }
}
