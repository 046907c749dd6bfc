//! Independent graph oracles used to cross-check the canonical coloring:
//! exact maximum clique, exact chromatic number, greedy first-fit coloring,
//! and set-shape checks (independence, disjoint-clique unions).
//!
//! The exact searches are deterministic: all tie-breaks fall back to
//! ascending vertex index, so equal-quality answers never flip between runs.

use thiserror::Error;

use crate::bitset::BitSet;
use crate::graph::PowerGraph;

/// Exact k-colorability is driven through a 128-bit forbidden-color mask.
const EXACT_COLOR_CAP: usize = 128;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {vertices} vertices, exact search limited to {limit}")]
    LimitExceeded { vertices: usize, limit: usize },
    #[error("partition does not match the set: {detail}")]
    PartitionMismatch { detail: String },
}

/// Outcome of an independence check over a vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceCheck {
    pub independent: bool,
    /// First adjacent pair found, in the scan order of the input slice.
    pub witness: Option<(usize, usize)>,
}

/// True iff no two vertices of `set` are adjacent; on failure the first
/// offending pair (in slice scan order) is reported.
pub fn is_independent(pg: &PowerGraph, set: &[usize]) -> IndependenceCheck {
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if pg.undirected_adj(u, v) {
                return IndependenceCheck { independent: false, witness: Some((u, v)) };
            }
        }
    }
    IndependenceCheck { independent: true, witness: None }
}

/// Outcome of checking that a set splits into pairwise-nonadjacent cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueUnionReport {
    pub holds: bool,
    pub class_sizes: Vec<usize>,
    /// Two vertices of one class that are not adjacent.
    pub non_clique_witness: Option<(usize, usize)>,
    /// An edge joining two different classes.
    pub cross_edge_witness: Option<(usize, usize)>,
}

/// Checks that `partition` covers `set` exactly with pairwise-disjoint
/// classes, that every class is a clique, and that no edge joins two
/// classes. A partition that does not cover the set (missing, repeated, or
/// foreign vertices) is a [`OracleError::PartitionMismatch`].
pub fn is_clique_union(
    pg: &PowerGraph,
    set: &[usize],
    partition: &[Vec<usize>],
) -> Result<CliqueUnionReport, OracleError> {
    let mut expected: Vec<usize> = set.to_vec();
    expected.sort_unstable();
    if expected.windows(2).any(|w| w[0] == w[1]) {
        return Err(OracleError::PartitionMismatch { detail: "set has repeated vertices".into() });
    }
    let mut covered: Vec<usize> = partition.iter().flatten().copied().collect();
    covered.sort_unstable();
    if covered.windows(2).any(|w| w[0] == w[1]) {
        return Err(OracleError::PartitionMismatch {
            detail: "classes overlap or repeat a vertex".into(),
        });
    }
    if covered != expected {
        return Err(OracleError::PartitionMismatch {
            detail: format!("classes cover {} vertices, set has {}", covered.len(), expected.len()),
        });
    }

    let mut report = CliqueUnionReport {
        holds: true,
        class_sizes: partition.iter().map(Vec::len).collect(),
        non_clique_witness: None,
        cross_edge_witness: None,
    };
    'clique: for class in partition {
        for (i, &u) in class.iter().enumerate() {
            for &v in &class[i + 1..] {
                if !pg.undirected_adj(u, v) {
                    report.holds = false;
                    report.non_clique_witness = Some((u, v));
                    break 'clique;
                }
            }
        }
    }
    'cross: for (ci, class) in partition.iter().enumerate() {
        for other in &partition[ci + 1..] {
            for &u in class {
                for &v in other {
                    if pg.undirected_adj(u, v) {
                        report.holds = false;
                        report.cross_edge_witness = Some((u, v));
                        break 'cross;
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Greedy sequential coloring of the vertices in `cand` (ascending index):
/// returns 1-based colors plus the vertex list sorted by (color, vertex).
fn color_sort(pg: &PowerGraph, cand: &BitSet) -> Vec<(usize, usize)> {
    let mut classes: Vec<BitSet> = Vec::new();
    let mut ordered: Vec<(usize, usize)> = Vec::new(); // (color, vertex)
    for v in cand.iter() {
        let mut color = 0;
        while color < classes.len() {
            if classes[color].intersection(pg.neighbors(v)).is_empty() {
                break;
            }
            color += 1;
        }
        if color == classes.len() {
            classes.push(BitSet::new(pg.n_vertices()));
        }
        classes[color].insert(v);
        ordered.push((color + 1, v));
    }
    ordered.sort_unstable();
    ordered
}

fn clique_expand(
    pg: &PowerGraph,
    current: &mut Vec<usize>,
    cand: &mut BitSet,
    best: &mut Vec<usize>,
) {
    if cand.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    let mut ordered = color_sort(pg, cand);
    // Highest color first; within one color class ascending vertex. Every
    // candidate still in `cand` at that point has color <= the current one,
    // so `|current| + color` bounds any clique reachable from here.
    ordered.sort_unstable_by_key(|&(color, v)| (std::cmp::Reverse(color), v));
    for &(color, v) in &ordered {
        if current.len() + color <= best.len() {
            return;
        }
        current.push(v);
        let mut next = cand.intersection(pg.neighbors(v));
        clique_expand(pg, current, &mut next, best);
        current.pop();
        cand.remove(v);
    }
}

/// Exact maximum clique via branch and bound with a greedy-coloring bound.
/// Returns the vertices ascending; among equal-size maximum cliques the
/// result is the first one met in the deterministic search order.
pub fn max_clique(pg: &PowerGraph, limit: usize) -> Result<Vec<usize>, OracleError> {
    let n = pg.n_vertices();
    if n > limit {
        return Err(OracleError::LimitExceeded { vertices: n, limit });
    }
    let mut cand = BitSet::new(n);
    for v in 0..n {
        cand.insert(v);
    }
    let mut best = Vec::new();
    clique_expand(pg, &mut Vec::new(), &mut cand, &mut best);
    best.sort_unstable();
    Ok(best)
}

/// Integer-palette coloring (colors `0..palette_size`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntColoring {
    pub colors: Vec<usize>,
    pub palette_size: usize,
}

impl IntColoring {
    pub fn is_proper(&self, pg: &PowerGraph) -> bool {
        pg.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Vertices sorted by descending degree, ties by ascending index — the
/// default greedy order.
pub fn degree_descending_order(pg: &PowerGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pg.n_vertices()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(pg.degree(v)), v));
    order
}

/// First-fit greedy coloring along an explicit vertex order (a permutation
/// of `0..n`).
pub fn greedy_color_with_order(pg: &PowerGraph, order: &[usize]) -> IntColoring {
    let n = pg.n_vertices();
    assert_eq!(order.len(), n, "order must be a permutation of the vertices");
    let mut colors = vec![usize::MAX; n];
    let mut palette_size = 0;
    for &v in order {
        let mut used = vec![false; palette_size + 1];
        for w in pg.neighbors(v).iter() {
            if colors[w] != usize::MAX && colors[w] <= palette_size {
                used[colors[w]] = true;
            }
        }
        let c = (0..).find(|&c| c >= used.len() || !used[c]).unwrap();
        colors[v] = c;
        palette_size = palette_size.max(c + 1);
    }
    IntColoring { colors, palette_size }
}

/// Greedy coloring in the default order (descending degree).
pub fn greedy_color(pg: &PowerGraph) -> IntColoring {
    greedy_color_with_order(pg, &degree_descending_order(pg))
}

struct ExactColorSearch<'a> {
    pg: &'a PowerGraph,
    order: Vec<usize>,
    k: usize,
}

impl ExactColorSearch<'_> {
    fn run(&self, colors: &mut Vec<u32>, pos: usize, max_used: u32) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        let mut forbidden: u128 = 0;
        for w in self.pg.neighbors(v).iter() {
            if colors[w] != u32::MAX {
                forbidden |= 1u128 << colors[w];
            }
        }
        // A fresh color may only be the next unused one: color classes of
        // equal status are interchangeable.
        let cap = (self.k as u32).min(max_used + 2);
        for c in 0..cap {
            if forbidden >> c & 1 == 0 {
                colors[v] = c;
                if self.run(colors, pos + 1, max_used.max(c)) {
                    return true;
                }
                colors[v] = u32::MAX;
            }
        }
        false
    }
}

fn k_colorable(pg: &PowerGraph, k: usize, seed_clique: &[usize]) -> bool {
    debug_assert!(seed_clique.len() <= k);
    let mut colors = vec![u32::MAX; pg.n_vertices()];
    for (c, &v) in seed_clique.iter().enumerate() {
        colors[v] = c as u32;
    }
    let mut order: Vec<usize> = (0..pg.n_vertices())
        .filter(|v| colors[*v] == u32::MAX)
        .collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(pg.degree(v)), v));
    let max_used = seed_clique.len().max(1) as u32 - 1;
    ExactColorSearch { pg, order, k }.run(&mut colors, 0, max_used)
}

/// Exact chromatic number by iterative deepening between the clique lower
/// bound and the greedy upper bound; the search pre-colors one maximum
/// clique to break color symmetry. Refused via `LimitExceeded` above the
/// vertex limit.
pub fn chromatic_number(pg: &PowerGraph, limit: usize) -> Result<usize, OracleError> {
    let n = pg.n_vertices();
    let effective = limit.min(EXACT_COLOR_CAP);
    if n > effective {
        return Err(OracleError::LimitExceeded { vertices: n, limit: effective });
    }
    if n == 0 {
        return Ok(0);
    }
    let clique = max_clique(pg, effective)?;
    let lower = clique.len();
    let upper = greedy_color(pg).palette_size;
    for k in lower..upper {
        if k_colorable(pg, k, &clique) {
            return Ok(k);
        }
    }
    Ok(upper)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_power_graph;
    use crate::magma::build_magma;
    use crate::magma::tests::{cyclic_table, monogenic_table};

    /// Graph from an explicit undirected edge list (self-loops added to keep
    /// the directed relation reflexive).
    fn graph_from_edges(n: usize, edges: &[(usize, usize)]) -> PowerGraph {
        let mut directed = vec![BitSet::new(n); n];
        for v in 0..n {
            directed[v].insert(v);
        }
        for &(u, v) in edges {
            directed[u].insert(v);
        }
        PowerGraph::from_directed(directed)
    }

    #[test]
    fn independence_and_witness() {
        let m = build_magma(cyclic_table(12), None).unwrap();
        let pg = build_power_graph(&m);
        assert!(is_independent(&pg, &[2, 3]).independent);
        let check = is_independent(&pg, &[1, 2, 3]);
        assert!(!check.independent);
        assert_eq!(check.witness, Some((1, 2)));
        assert!(is_independent(&pg, &[]).independent);
        assert!(is_independent(&pg, &[5]).independent);
    }

    #[test]
    fn clique_union_accepts_single_class() {
        let m = build_magma(cyclic_table(12), None).unwrap();
        let pg = build_power_graph(&m);
        let report = is_clique_union(&pg, &[3, 9], &[vec![3, 9]]).unwrap();
        assert!(report.holds);
        assert_eq!(report.class_sizes, vec![2]);
    }

    #[test]
    fn clique_union_detects_cross_edges_between_orders() {
        // Generators of Z_12 are adjacent to everything, so the order-12 and
        // order-4 classes cannot live in one clique union.
        let m = build_magma(cyclic_table(12), None).unwrap();
        let pg = build_power_graph(&m);
        let report =
            is_clique_union(&pg, &[1, 3, 5, 7, 9, 11], &[vec![1, 5, 7, 11], vec![3, 9]]).unwrap();
        assert!(!report.holds);
        assert!(report.cross_edge_witness.is_some());
        assert_eq!(report.non_clique_witness, None);
    }

    #[test]
    fn clique_union_rejects_bad_partitions() {
        let m = build_magma(cyclic_table(12), None).unwrap();
        let pg = build_power_graph(&m);
        for partition in [
            vec![vec![3]],                 // misses 9
            vec![vec![3, 9], vec![9]],     // repeats 9
            vec![vec![3, 9, 6]],           // foreign vertex
        ] {
            assert!(matches!(
                is_clique_union(&pg, &[3, 9], &partition),
                Err(OracleError::PartitionMismatch { .. })
            ));
        }
    }

    #[test]
    fn monogenic_three_two_max_clique_is_deterministic() {
        // Two maximum cliques exist ({0,1,3} and {0,2,3}); the search must
        // settle on {0,1,3}.
        let m = build_magma(monogenic_table(3, 2), None).unwrap();
        let pg = build_power_graph(&m);
        assert_eq!(max_clique(&pg, 256).unwrap(), vec![0, 1, 3]);
    }

    #[test]
    fn monogenic_three_two_chromatic_is_three() {
        let m = build_magma(monogenic_table(3, 2), None).unwrap();
        let pg = build_power_graph(&m);
        assert_eq!(chromatic_number(&pg, 64).unwrap(), 3);
    }

    #[test]
    fn complete_and_edgeless_extremes() {
        let m = build_magma(cyclic_table(5), None).unwrap();
        let pg = build_power_graph(&m);
        assert_eq!(max_clique(&pg, 256).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(chromatic_number(&pg, 64).unwrap(), 5);

        // x*y = x: three idempotents, no edges.
        let e = build_magma(vec![vec![0; 3], vec![1; 3], vec![2; 3]], None).unwrap();
        let pe = build_power_graph(&e);
        assert_eq!(max_clique(&pe, 256).unwrap(), vec![0]);
        assert_eq!(chromatic_number(&pe, 64).unwrap(), 1);
        assert_eq!(greedy_color(&pe).palette_size, 1);
    }

    #[test]
    fn odd_cycle_needs_three_colors() {
        let pg = graph_from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(max_clique(&pg, 256).unwrap().len(), 2);
        assert_eq!(chromatic_number(&pg, 64).unwrap(), 3);
    }

    #[test]
    fn bipartite_path_needs_two() {
        let pg = graph_from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(chromatic_number(&pg, 64).unwrap(), 2);
    }

    #[test]
    fn limits_are_enforced() {
        let m = build_magma(cyclic_table(5), None).unwrap();
        let pg = build_power_graph(&m);
        assert_eq!(
            chromatic_number(&pg, 4),
            Err(OracleError::LimitExceeded { vertices: 5, limit: 4 })
        );
        assert_eq!(
            max_clique(&pg, 4),
            Err(OracleError::LimitExceeded { vertices: 5, limit: 4 })
        );
    }

    #[test]
    fn greedy_is_proper_and_bounded_by_default_order() {
        for t in [cyclic_table(12), cyclic_table(30), monogenic_table(6, 4)] {
            let m = build_magma(t, None).unwrap();
            let pg = build_power_graph(&m);
            let greedy = greedy_color(&pg);
            assert!(greedy.is_proper(&pg));
            let natural: Vec<usize> = (0..pg.n_vertices()).collect();
            let natural_coloring = greedy_color_with_order(&pg, &natural);
            assert!(natural_coloring.is_proper(&pg));
            let chi = chromatic_number(&pg, 64).unwrap();
            assert!(chi <= greedy.palette_size);
            assert!(max_clique(&pg, 256).unwrap().len() <= chi);
        }
    }
}
