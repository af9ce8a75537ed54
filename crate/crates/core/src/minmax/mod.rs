//! Separator posets, pending min-max clique trees, containment-order
//! elimination schemes and counterexample searches.

mod counterexample;
mod pending;
mod poset;
mod scheme;

pub use counterexample::{
    search_counterexamples, terminal_table, Counterexample, CounterexampleKind, Evidence, SearchReport, TerminalRow,
};
pub use pending::{
    chain_reduction, pending_from_clique_tree, pending_minmax_tree, ChainReduction, EdgeExchange, PendingTreeResult,
    Side,
};
pub use poset::{separator_poset, SeparatorPoset};
pub use scheme::{
    containment_elimination_scheme, has_minmin_pending_tree, minmax_simplicial_vertices, ContainmentScheme, PruneStep,
};
