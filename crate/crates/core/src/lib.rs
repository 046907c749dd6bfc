//! Power graphs of finite power-associative magmas.
//!
//! The crate builds the directed and undirected power graph of any finite
//! magma given by a Cayley table, verifies power-associativity by an
//! exhaustive exponent sweep, computes a canonical proper coloring whose
//! palette is split into three disjoint namespaces (`A` for cyclic
//! elements, `B` for non-cyclic finite-order elements, `C` for
//! infinite-order elements of symbolic families restricted to a finite
//! window), and cross-checks everything against independent exact oracles
//! (maximum clique, chromatic number, greedy bounds).

pub mod arith;
pub mod bitset;
pub mod cli;
pub mod coloring;
pub mod families;
pub mod gen;
pub mod graph;
pub mod io;
pub mod limits;
pub mod magma;
pub mod oracle;
pub mod report;

pub use coloring::{paper_color_finite, ColorTag, Coloring};
pub use graph::{build_power_graph, connected_components, PowerGraph};
pub use magma::{
    build_magma, check_power_associativity, element_profile, element_profiles, power, Magma,
};
