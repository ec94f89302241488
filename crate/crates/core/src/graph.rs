//! I-graph construction, gcd classification and text export.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::numtheory::{gcd, gcd3};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid I-graph tuple (n={n}, j={j}, k={k}): {reason}")]
    InvalidSpec {
        n: u64,
        j: u64,
        k: u64,
        reason: &'static str,
    },
    #[error("unknown export format {0:?} (expected edgelist or dot)")]
    UnknownFormat(String),
}

/// Which upper bound on the inner step defines the tuple domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Convention {
    /// `k <= floor(n/2)`, the tuple domain of the density theorems.
    #[default]
    Inclusive,
    /// `k < n/2`, the domain over which the class-count formulas hold.
    Strict,
}

impl Convention {
    pub fn max_inner_step(self, n: u64) -> u64 {
        match self {
            Convention::Inclusive => n / 2,
            Convention::Strict => (n - 1) / 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Convention::Inclusive => "inclusive",
            Convention::Strict => "strict",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "inclusive" => Ok(Convention::Inclusive),
            "strict" => Ok(Convention::Strict),
            other => Err(format!("unknown convention {other:?}")),
        }
    }
}

/// A validated `(n, j, k)`: `n >= 3`, `1 <= j <= k`, `k` bounded per the convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IGraphSpec {
    n: u64,
    j: u64,
    k: u64,
}

impl IGraphSpec {
    pub fn new(n: u64, j: u64, k: u64) -> Result<Self, GraphError> {
        Self::with_convention(n, j, k, Convention::Inclusive)
    }

    pub fn with_convention(n: u64, j: u64, k: u64, conv: Convention) -> Result<Self, GraphError> {
        let invalid = |reason| GraphError::InvalidSpec { n, j, k, reason };
        if n < 3 {
            return Err(invalid("n must be at least 3"));
        }
        if j < 1 || j > k {
            return Err(invalid("need 1 <= j <= k"));
        }
        if k > conv.max_inner_step(n) {
            return Err(invalid(match conv {
                Convention::Inclusive => "need k <= n/2",
                Convention::Strict => "need k < n/2",
            }));
        }
        Ok(IGraphSpec { n, j, k })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn is_strict(&self) -> bool {
        2 * self.k < self.n
    }
}

impl fmt::Display for IGraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I({},{},{})", self.n, self.j, self.k)
    }
}

/// All valid tuples for a given `n`, ordered by `k` then `j`.
pub fn tuples(n: u64, conv: Convention) -> Vec<IGraphSpec> {
    if n < 3 {
        return Vec::new();
    }
    let kmax = conv.max_inner_step(n);
    (1..=kmax)
        .flat_map(|k| (1..=k).map(move |j| IGraphSpec { n, j, k }))
        .collect()
}

/// Simple undirected graph with sorted adjacency lists.
///
/// When built from an I-graph, vertex `i` is `a_i` and vertex `n + i` is `b_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    rim: Option<usize>,
}

impl Graph {
    /// Builds a simple graph, dropping loops and duplicate edges.
    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            assert!(u < vertex_count && v < vertex_count, "edge ({u},{v}) out of range");
            if u == v {
                continue;
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Graph {
            adjacency,
            rim: None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn label(&self, v: usize) -> String {
        match self.rim {
            Some(n) if v < n => format!("a{v}"),
            Some(n) => format!("b{}", v - n),
            None => format!("v{v}"),
        }
    }

    /// BFS distances from `source`; unreachable vertices get `None`.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Rims of length `n` with outer step `outer` and inner step `inner`, no ordering
/// constraint between the steps.
pub fn igraph_from_steps(n: usize, outer: usize, inner: usize) -> Graph {
    let edges = (0..n).flat_map(|i| {
        [
            (i, (i + outer) % n),
            (i, n + i),
            (n + i, n + (i + inner) % n),
        ]
    });
    let mut g = Graph::from_edges(2 * n, edges);
    g.rim = Some(n);
    g
}

pub fn build_igraph(spec: &IGraphSpec) -> Graph {
    igraph_from_steps(spec.n as usize, spec.j as usize, spec.k as usize)
}

/// `I(n, j, k)` is a generalised Petersen graph iff `gcd(n, j) = 1` or `gcd(n, k) = 1`.
pub fn is_gpg_tuple(spec: &IGraphSpec) -> bool {
    gcd(spec.n, spec.j) == 1 || gcd(spec.n, spec.k) == 1
}

/// `I(n, j, k)` is connected iff `gcd(n, j, k) = 1`.
pub fn is_connected_tuple(spec: &IGraphSpec) -> bool {
    gcd3(spec.n, spec.j, spec.k) == 1
}

/// Number of connected components, by BFS. The empty graph has none.
pub fn connected_components(g: &Graph) -> usize {
    let mut seen = vec![false; g.vertex_count()];
    let mut components = 0;
    let mut stack = Vec::new();
    for start in 0..g.vertex_count() {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    components
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeList,
    Dot,
}

impl FromStr for ExportFormat {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edgelist" => Ok(ExportFormat::EdgeList),
            "dot" => Ok(ExportFormat::Dot),
            other => Err(GraphError::UnknownFormat(other.to_string())),
        }
    }
}

pub fn export(g: &Graph, format: ExportFormat) -> String {
    let mut out = String::new();
    match format {
        ExportFormat::EdgeList => {
            for (u, v) in g.edges() {
                out.push_str(&format!("{u} {v}\n"));
            }
        }
        ExportFormat::Dot => {
            out.push_str("graph G {\n");
            for v in 0..g.vertex_count() {
                out.push_str(&format!("  {v} [label=\"{}\"];\n", g.label(v)));
            }
            for (u, v) in g.edges() {
                out.push_str(&format!("  {u} -- {v};\n"));
            }
            out.push_str("}\n");
        }
    }
    out
}
