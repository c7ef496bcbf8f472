//! Dense simple undirected graphs and their degree-based invariants.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors raised while building a [`Graph`] or querying a
/// connectivity-dependent invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Graphs must have at least one vertex.
    Empty,
    SelfLoop(usize),
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    /// Diameter is undefined on a disconnected graph.
    Disconnected,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Empty => write!(f, "graph must have at least one vertex"),
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for order {n}")
            }
            GraphError::Disconnected => write!(f, "graph is disconnected"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as a dense symmetric `n × n` boolean matrix with an
/// empty diagonal. Degrees and the edge count are computed once at
/// construction; the value is immutable afterwards.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    degrees: Vec<usize>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        Ok(Graph { n, adj: vec![false; n * n], degrees: vec![0; n], m: 0 })
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from upper-triangle bits in graph6 column-major order
    /// `x(0,1), x(0,2), x(1,2), x(0,3), …`. `bit(idx)` is queried once per
    /// pair.
    pub fn from_upper_bits(n: usize, mut bit: impl FnMut(usize) -> bool) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if bit(idx) {
                    g.insert(i, j);
                }
                idx += 1;
            }
        }
        Ok(g)
    }

    fn insert(&mut self, u: usize, v: usize) {
        let n = self.n;
        if !self.adj[u * n + v] {
            self.adj[u * n + v] = true;
            self.adj[v * n + u] = true;
            self.degrees[u] += 1;
            self.degrees[v] += 1;
            self.m += 1;
        }
    }

    /// Order `n`.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Size `m`.
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[v * self.n..(v + 1) * self.n];
        row.iter().enumerate().filter_map(|(u, &e)| e.then_some(u))
    }

    /// Edges `(u, v)` with `u < v`, in graph6 column-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |j| (0..j).filter(move |&i| self.has_edge(i, j)).map(move |i| (i, j)))
    }

    /// Number of unordered vertex pairs, `n(n−1)/2`.
    pub fn pair_count(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// `true` iff every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        self.m == self.pair_count()
    }

    /// `true` iff the graph is a star `K_{1,n−1}` (for `n = 2` this is also `K_2`).
    pub fn is_star(&self) -> bool {
        self.n >= 2 && self.m == self.n - 1 && self.degrees.iter().any(|&d| d == self.n - 1)
    }

    pub fn basic_invariants(&self) -> BasicInvariants {
        let max_degree = self.degrees.iter().copied().max().unwrap_or(0);
        let min_degree = self.degrees.iter().copied().min().unwrap_or(0);
        BasicInvariants {
            n: self.n,
            m: self.m,
            max_degree,
            min_degree,
            avg_degree: (2 * self.m) as f64 / self.n as f64,
        }
    }

    /// First Zagreb index `M₁ = Σ dᵢ²`.
    pub fn zagreb_m1(&self) -> u64 {
        self.degrees.iter().map(|&d| (d as u64) * (d as u64)).sum()
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].unwrap_or(0);
            for u in self.neighbors(v) {
                if dist[u].is_none() {
                    dist[u] = Some(dv + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    /// Largest shortest-path distance over all vertex pairs.
    pub fn diameter(&self) -> Result<usize, GraphError> {
        let mut diameter = 0;
        for v in 0..self.n {
            for d in self.distances_from(v) {
                diameter = diameter.max(d.ok_or(GraphError::Disconnected)?);
            }
        }
        Ok(diameter)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

/// Order, size, extreme degrees and average degree of a graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasicInvariants {
    pub n: usize,
    pub m: usize,
    /// Δ(G)
    pub max_degree: usize,
    /// δ(G)
    pub min_degree: usize,
    /// `2m/n`
    pub avg_degree: f64,
}

/// Named graphs used throughout the tests and the CLI families.
pub mod named {
    use super::Graph;

    /// `K_n`
    pub fn complete(n: usize) -> Graph {
        Graph::from_upper_bits(n, |_| true).expect("n >= 1")
    }

    /// `K_{1,n−1}` centred at vertex 0.
    pub fn star(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (0, v))).expect("n >= 1")
    }

    /// `P_n`
    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("n >= 1")
    }

    /// `C_n`, `n ≥ 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("n >= 3")
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).expect("a + b >= 1")
    }
}
