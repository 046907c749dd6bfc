//! Power graphs. The directed relation has an arc `x -> y` whenever `y` is a
//! positive left-normed power of `x` (so every vertex carries a self-loop,
//! kept internally); the undirected power graph is its symmetric closure
//! with self-loops dropped. Adjacency is stored as one bitset row per vertex.

use crate::bitset::BitSet;
use crate::magma::{powers_of, Magma};

#[derive(Clone, Debug)]
pub struct PowerGraph {
    n: usize,
    directed: Vec<BitSet>,
    undirected: Vec<BitSet>,
}

impl PowerGraph {
    /// Builds a graph from a directed power relation (row `x` holds every `y`
    /// that is a power of `x`, including `x` itself).
    pub fn from_directed(directed: Vec<BitSet>) -> PowerGraph {
        let n = directed.len();
        let mut undirected = vec![BitSet::new(n); n];
        for x in 0..n {
            debug_assert!(directed[x].contains(x), "directed relation must be reflexive");
            for y in directed[x].iter() {
                if y != x {
                    undirected[x].insert(y);
                    undirected[y].insert(x);
                }
            }
        }
        PowerGraph { n, directed, undirected }
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// True iff `y` is a positive power of `x` (reflexive).
    pub fn directed_adj(&self, x: usize, y: usize) -> bool {
        self.directed[x].contains(y)
    }

    /// True iff one of `x`, `y` is a positive power of the other and
    /// `x != y`.
    pub fn undirected_adj(&self, x: usize, y: usize) -> bool {
        self.undirected[x].contains(y)
    }

    /// Undirected neighbor row of `x`.
    pub fn neighbors(&self, x: usize) -> &BitSet {
        &self.undirected[x]
    }

    /// Vertices reachable from `x` along the directed relation (the powers
    /// of `x`, including `x`).
    pub fn directed_row(&self, x: usize) -> &BitSet {
        &self.directed[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.undirected[x].len()
    }

    /// All undirected edges as pairs `(u, v)` with `u < v`, in lexicographic
    /// order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.undirected[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }
}

/// Power graph of a finite magma: one bitset row per element, filled from
/// that element's distinct power sequence.
pub fn build_power_graph(m: &Magma) -> PowerGraph {
    let n = m.size();
    let mut directed = vec![BitSet::new(n); n];
    for x in 0..n {
        for y in powers_of(m, x) {
            directed[x].insert(y);
        }
    }
    PowerGraph::from_directed(directed)
}

/// Connected components of the subgraph induced by `subset`, via an
/// iterative breadth-first search. Components are returned with members
/// ascending, ordered by their minimal vertex; the empty subset yields an
/// empty partition.
pub fn connected_components(pg: &PowerGraph, subset: &[usize]) -> Vec<Vec<usize>> {
    let mut in_subset = BitSet::new(pg.n_vertices());
    for &v in subset {
        assert!(v < pg.n_vertices(), "vertex {v} out of range");
        in_subset.insert(v);
    }
    let mut seen = BitSet::new(pg.n_vertices());
    let mut components = Vec::new();
    for start in in_subset.iter() {
        if seen.contains(start) {
            continue;
        }
        let mut component = Vec::new();
        let mut queue = vec![start];
        seen.insert(start);
        while let Some(v) = queue.pop() {
            component.push(v);
            let candidates = pg.neighbors(v).intersection(&in_subset);
            for w in candidates.iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    queue.push(w);
                }
            }
        }
        component.sort_unstable();
        components.push(component);
    }
    components
}
