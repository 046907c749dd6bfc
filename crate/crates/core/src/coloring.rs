//! The canonical proper coloring of a power graph, with its three disjoint
//! color namespaces:
//!
//! * `A(n, i)` — cyclic elements of order `n`, rank `i` within their
//!   mutual-power class (the classes are cliques of size φ(n));
//! * `B(p)` — non-cyclic finite-order elements, colored by pre-period `p`;
//! * `C(m, n)` — infinite-order elements of symbolic families on a window,
//!   colored by the minimal exponent pair relating them to their component
//!   representative.
//!
//! Tags from different namespaces never compare equal, so the three groups
//! can share one assignment.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::PowerGraph;
use crate::magma::{element_profiles, ElementProfile, Magma};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColorTag {
    /// Rendered `A(order, rank)`; `rank` is 1-based within the clique.
    Cyclic { order: u64, rank: u64 },
    /// Rendered `B(p)` with `p` the (positive) pre-period.
    PrePeriod { p: u64 },
    /// Rendered `C(m, n)`: the element `y` satisfies `x^m = y^n` for its
    /// component representative `x`.
    Relation { m: u64, n: u64 },
}

impl fmt::Display for ColorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorTag::Cyclic { order, rank } => write!(f, "A({order},{rank})"),
            ColorTag::PrePeriod { p } => write!(f, "B({p})"),
            ColorTag::Relation { m, n } => write!(f, "C({m},{n})"),
        }
    }
}

impl Serialize for ColorTag {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Which side of the finite coloring an element falls on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementClass {
    CyclicOfOrder(usize),
    NonCyclicFinite { pre_period: usize },
}

pub fn classify_element(profile: &ElementProfile) -> ElementClass {
    if profile.cyclic {
        ElementClass::CyclicOfOrder(profile.order)
    } else {
        ElementClass::NonCyclicFinite {
            pre_period: profile.pre_period.expect("non-cyclic elements carry a pre-period"),
        }
    }
}

/// A (possibly partial) assignment of tags to the vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    tags: Vec<Option<ColorTag>>,
}

impl Coloring {
    pub fn new_unassigned(n: usize) -> Self {
        Coloring { tags: vec![None; n] }
    }

    pub fn assign(&mut self, vertex: usize, tag: ColorTag) {
        self.tags[vertex] = Some(tag);
    }

    pub fn get(&self, vertex: usize) -> Option<ColorTag> {
        self.tags.get(vertex).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.tags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tags.is_empty()
    }

    pub fn first_unassigned(&self) -> Option<usize> {
        self.tags.iter().position(Option::is_none)
    }

    /// The set of distinct tags actually used.
    pub fn palette(&self) -> BTreeSet<ColorTag> {
        self.tags.iter().flatten().copied().collect()
    }

    pub fn palette_size(&self) -> usize {
        self.palette().len()
    }

    pub fn tags(&self) -> impl Iterator<Item = Option<ColorTag>> + '_ {
        self.tags.iter().copied()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("vertex {vertex} has no color assigned")]
    MissingAssignment { vertex: usize },
}

/// Partitions the cyclic elements of order `n` into their mutual-power
/// classes: `x` and `y` share a class iff each is a power of the other.
/// Classes are returned with members ascending, ordered by minimal member.
///
/// On the cyclic elements of one order the relation is an equivalence, and
/// each class is exactly the generator set of one monogenic subgroup, hence
/// a clique of size φ(n).
pub fn cyclic_clique_decomposition(
    profiles: &[ElementProfile],
    pg: &PowerGraph,
    n: usize,
) -> Vec<Vec<usize>> {
    let members: Vec<usize> = profiles
        .iter()
        .filter(|p| p.cyclic && p.order == n)
        .map(|p| p.element)
        .collect();
    let mut class_of = vec![usize::MAX; pg.n_vertices()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &x in &members {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut class = Vec::new();
        for &y in &members {
            if pg.directed_adj(x, y) && pg.directed_adj(y, x) {
                debug_assert_eq!(class_of[y], usize::MAX, "mutual-power classes must not overlap");
                class_of[y] = id;
                class.push(y);
            }
        }
        classes.push(class);
    }
    classes
}

/// The canonical coloring of a finite power graph: cyclic elements get
/// `A(order, rank)` with ranks 1-based by ascending element index inside
/// each mutual-power class; non-cyclic elements get `B(pre_period)`.
///
/// Precondition: the magma passed [`crate::magma::check_power_associativity`].
pub fn paper_color_finite(m: &Magma) -> Coloring {
    let profiles = element_profiles(m);
    let pg = crate::graph::build_power_graph(m);
    paper_color_with(&profiles, &pg)
}

/// As [`paper_color_finite`], reusing already-computed profiles and graph.
pub fn paper_color_with(profiles: &[ElementProfile], pg: &PowerGraph) -> Coloring {
    let mut coloring = Coloring::new_unassigned(pg.n_vertices());
    let mut orders: Vec<usize> =
        profiles.iter().filter(|p| p.cyclic).map(|p| p.order).collect();
    orders.sort_unstable();
    orders.dedup();
    for n in orders {
        for class in cyclic_clique_decomposition(profiles, pg, n) {
            for (i, &v) in class.iter().enumerate() {
                coloring.assign(
                    v,
                    ColorTag::Cyclic { order: n as u64, rank: (i + 1) as u64 },
                );
            }
        }
    }
    for p in profiles {
        if !p.cyclic {
            coloring.assign(
                p.element,
                ColorTag::PrePeriod { p: p.pre_period.expect("non-cyclic") as u64 },
            );
        }
    }
    coloring
}

/// All edges whose endpoints carry equal tags (empty list means the coloring
/// is proper). Errors when any vertex of the graph has no tag.
pub fn verify_proper_coloring(
    pg: &PowerGraph,
    coloring: &Coloring,
) -> Result<Vec<(usize, usize)>, ColoringError> {
    if coloring.len() < pg.n_vertices() {
        return Err(ColoringError::MissingAssignment { vertex: coloring.len() });
    }
    for v in 0..pg.n_vertices() {
        if coloring.get(v).is_none() {
            return Err(ColoringError::MissingAssignment { vertex: v });
        }
    }
    Ok(pg
        .edges()
        .into_iter()
        .filter(|&(u, v)| coloring.get(u) == coloring.get(v))
        .collect())
}
