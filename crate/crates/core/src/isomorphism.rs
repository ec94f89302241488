//! Brute-force isomorphism testing and class enumeration for small I-graphs.
//!
//! Tuples for a fixed `n` are compared pairwise and merged with a union-find.
//! Two graphs are first screened on cheap invariants (sizes, degree sequence,
//! multiset of sorted BFS distance rows); survivors go to a backtracking search
//! whose candidate lists are restricted to vertices with identical invariants.
//! A partial map is extended only if it preserves the distance from the new vertex
//! to every vertex already mapped; adjacency alone lets wrong partial maps survive
//! until they wrap around a rim.

use thiserror::Error;

use crate::graph::{build_igraph, is_connected_tuple, is_gpg_tuple, tuples, Convention, Graph, IGraphSpec};

pub const DEFAULT_BRUTE_CAP: u64 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("n={n} is outside the brute-force range 3..={cap}")]
    OutOfRange { n: u64, cap: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct VertexInvariant {
    degree: usize,
    neighbor_degrees: Vec<usize>,
    distances: Vec<usize>,
}

fn vertex_invariants(g: &Graph) -> Vec<VertexInvariant> {
    (0..g.vertex_count())
        .map(|v| {
            let mut neighbor_degrees: Vec<usize> =
                g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            neighbor_degrees.sort_unstable();
            let mut distances: Vec<usize> = g
                .distances_from(v)
                .into_iter()
                .map(|d| d.unwrap_or(usize::MAX))
                .collect();
            distances.sort_unstable();
            VertexInvariant {
                degree: g.degree(v),
                neighbor_degrees,
                distances,
            }
        })
        .collect()
}

/// Greedy matching order: highest degree first, then always the vertex with the
/// most already-placed neighbours, ties broken by fewer candidates.
fn matching_order(g: &Graph, candidate_counts: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut placed = vec![false; n];
    let mut placed_neighbors = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                (placed_neighbors[a], g.degree(a), std::cmp::Reverse(candidate_counts[a]), std::cmp::Reverse(a))
                    .cmp(&(placed_neighbors[b], g.degree(b), std::cmp::Reverse(candidate_counts[b]), std::cmp::Reverse(b)))
            })
            .unwrap();
        placed[next] = true;
        for &w in g.neighbors(next) {
            placed_neighbors[w] += 1;
        }
        order.push(next);
    }
    order
}

struct Search {
    dist1: Vec<Vec<usize>>,
    dist2: Vec<Vec<usize>>,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    forward: Vec<usize>,
    backward: Vec<usize>,
}

const UNMAPPED: usize = usize::MAX;

fn distance_matrix(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.vertex_count())
        .map(|v| {
            g.distances_from(v)
                .into_iter()
                .map(|d| d.unwrap_or(usize::MAX))
                .collect()
        })
        .collect()
}

impl Search {
    /// `v -> w` must preserve the distance to every vertex mapped so far.
    fn feasible(&self, depth: usize, v: usize, w: usize) -> bool {
        self.backward[w] == UNMAPPED
            && self.order[..depth]
                .iter()
                .all(|&u| self.dist1[v][u] == self.dist2[w][self.forward[u]])
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for idx in 0..self.candidates[v].len() {
            let w = self.candidates[v][idx];
            if self.feasible(depth, v, w) {
                self.forward[v] = w;
                self.backward[w] = v;
                if self.extend(depth + 1) {
                    return true;
                }
                self.forward[v] = UNMAPPED;
                self.backward[w] = UNMAPPED;
            }
        }
        false
    }
}

/// True iff some bijection of vertices maps the edges of `g1` exactly onto those of `g2`.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let mut deg1: Vec<usize> = (0..g1.vertex_count()).map(|v| g1.degree(v)).collect();
    let mut deg2: Vec<usize> = (0..g2.vertex_count()).map(|v| g2.degree(v)).collect();
    deg1.sort_unstable();
    deg2.sort_unstable();
    if deg1 != deg2 {
        return false;
    }
    let inv1 = vertex_invariants(g1);
    let inv2 = vertex_invariants(g2);
    let mut sorted1 = inv1.clone();
    let mut sorted2 = inv2.clone();
    sorted1.sort();
    sorted2.sort();
    if sorted1 != sorted2 {
        return false;
    }

    let candidates: Vec<Vec<usize>> = inv1
        .iter()
        .map(|a| (0..inv2.len()).filter(|&w| inv2[w] == *a).collect())
        .collect();
    let counts: Vec<usize> = candidates.iter().map(Vec::len).collect();
    let n = g1.vertex_count();
    let mut search = Search {
        dist1: distance_matrix(g1),
        dist2: distance_matrix(g2),
        order: matching_order(g1, &counts),
        candidates,
        forward: vec![UNMAPPED; n],
        backward: vec![UNMAPPED; n],
    };
    search.extend(0)
}

/// Isomorphism classes of all valid tuples for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoClassPartition {
    pub n: u64,
    pub convention: Convention,
    pub classes: Vec<Vec<IGraphSpec>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassCounts {
    pub total: u64,
    pub connected: u64,
    pub gpg: u64,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut y = x;
        while self.parent[y] != root {
            let next = self.parent[y];
            self.parent[y] = root;
            y = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

pub fn enumerate_classes(n: u64, convention: Convention) -> Result<IsoClassPartition, IsoError> {
    enumerate_classes_with_cap(n, convention, DEFAULT_BRUTE_CAP)
}

/// Pairwise isomorphism tests merged by union-find. Classes are listed in order of
/// their first tuple; tuples within a class keep enumeration order.
///
/// Panics if a class mixes connected and disconnected tuples, which would mean the
/// isomorphism test is wrong.
pub fn enumerate_classes_with_cap(
    n: u64,
    convention: Convention,
    cap: u64,
) -> Result<IsoClassPartition, IsoError> {
    if n < 3 || n > cap {
        return Err(IsoError::OutOfRange { n, cap });
    }
    let specs = tuples(n, convention);
    let graphs: Vec<Graph> = specs.iter().map(build_igraph).collect();
    let mut uf = UnionFind::new(specs.len());
    for a in 0..specs.len() {
        for b in a + 1..specs.len() {
            if uf.find(a) != uf.find(b) && are_isomorphic(&graphs[a], &graphs[b]) {
                uf.union(a, b);
            }
        }
    }
    let mut classes: Vec<Vec<IGraphSpec>> = Vec::new();
    let mut slot = vec![usize::MAX; specs.len()];
    for (i, spec) in specs.iter().enumerate() {
        let root = uf.find(i);
        if slot[root] == usize::MAX {
            slot[root] = classes.len();
            classes.push(Vec::new());
        }
        classes[slot[root]].push(*spec);
    }
    for class in &classes {
        let connected = is_connected_tuple(&class[0]);
        assert!(
            class.iter().all(|t| is_connected_tuple(t) == connected),
            "class {:?} mixes connectivity",
            class
        );
    }
    Ok(IsoClassPartition {
        n,
        convention,
        classes,
    })
}

pub fn class_counts(p: &IsoClassPartition) -> ClassCounts {
    let total = p.classes.len() as u64;
    let connected = p
        .classes
        .iter()
        .filter(|c| is_connected_tuple(&c[0]))
        .count() as u64;
    let gpg = p
        .classes
        .iter()
        .filter(|c| c.iter().any(is_gpg_tuple))
        .count() as u64;
    ClassCounts {
        total,
        connected,
        gpg,
    }
}
