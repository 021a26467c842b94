//! Simple graphs, rooted trees and graph invariants.

mod enumerate;
mod graph;
mod invariants;
mod rooted;

pub use enumerate::{
    canonical_code, canonical_levels, centroids, code_to_levels, enumerate_tree_codes,
    enumerate_trees, tree_from_code, tree_from_levels, TreeCode, MAX_ENUMERATION_N,
};
pub use graph::{make_named, Graph, NamedGraph};
pub use invariants::{
    automorphisms, independence_number, independence_number_exhaustive, independence_number_tree,
    is_bipartite, is_chordal, matching_number, matching_number_exhaustive, matching_number_tree,
    EXHAUSTIVE_CAP,
};
pub use rooted::{root_and_label, RootedTree};

/// `is_tree` as a free function.
pub fn is_tree(g: &Graph) -> bool {
    g.is_tree()
}
