//! Brute-force ground truth for the test suites.
//!
//! Nothing here calls the searches, clique-tree builders or separator
//! algorithms of the other modules; only the graph and clique-tree data
//! types and the random generators are shared.

mod bits;
mod corpus;
mod orderings;
mod separators;
mod trees;

pub use corpus::{
    enumerate_graphs, CorpusMode, CorpusSpec, Filters, GraphStream, CHORDAL_CLASSES_LIMIT, EXHAUSTIVE_LIMIT,
};
pub use orderings::{
    brute_contains_induced, brute_has_hole, brute_has_reversible_ordering, brute_reversible_orderings, ORDERING_LIMIT,
};
pub use separators::{
    brute_is_chordal, brute_maximal_cliques, brute_minimal_separators, extremal_separators, SeparatorMode,
    SUBSET_MODE_LIMIT,
};
pub use trees::{
    clique_tree_exists, enumerate_max_clique_trees, has_minmin_pending_by_enumeration,
    minmax_simplicial_by_enumeration, MaxSpanningTrees, TREE_LIMIT, VISIT_LIMIT,
};
