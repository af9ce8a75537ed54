use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clique_tree::CliqueTree;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{
    brute_minimal_separators, enumerate_graphs, extremal_separators, has_minmin_pending_by_enumeration,
    minmax_simplicial_by_enumeration, CorpusSpec, MaxSpanningTrees, SeparatorMode, TREE_LIMIT,
};
use crate::search::{is_chordal, lexbfs, mcs};

use super::scheme::{has_minmin_pending_tree, minmax_simplicial_vertices};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CounterexampleKind {
    /// Every LexBFS and MCS run, from every start, ends outside the min-max
    /// simplicial vertices.
    NoMinmaxTerminal,
    /// No clique tree has a pending edge labeled with an inclusion-minimal
    /// separator.
    NoMinminPending,
}

/// Last vertex of LexBFS and of MCS from one start vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TerminalRow {
    pub start: usize,
    pub lexbfs_end: usize,
    pub mcs_end: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Evidence {
    Terminals {
        minmax_simplicial: VertexSet,
        table: Vec<TerminalRow>,
    },
    /// All maximum spanning trees of the clique intersection graph, listed
    /// when there are at most the oracle's materialization limit of them.
    Trees {
        min_min_separators: Vec<VertexSet>,
        tree_count: u64,
        trees: Vec<CliqueTree>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph: Graph,
    pub kind: CounterexampleKind,
    pub evidence: Evidence,
}

impl Counterexample {
    /// Re-checks the instance independently: searches are rerun from every
    /// start and the extremal separators and trees come from the oracle.
    pub fn reverify(&self) -> Result<bool> {
        let g = &self.graph;
        match (&self.kind, &self.evidence) {
            (
                CounterexampleKind::NoMinmaxTerminal,
                Evidence::Terminals {
                    minmax_simplicial,
                    table,
                },
            ) => {
                let oracle = minmax_simplicial_by_enumeration(g)?;
                let rerun = terminal_table(g)?;
                Ok(&oracle == minmax_simplicial
                    && &rerun == table
                    && rerun
                        .iter()
                        .all(|r| !oracle.contains(r.lexbfs_end) && !oracle.contains(r.mcs_end)))
            }
            (CounterexampleKind::NoMinminPending, Evidence::Trees { min_min_separators, .. }) => {
                let seps = brute_minimal_separators(g, SeparatorMode::Generation)?;
                let (_, min) = extremal_separators(&seps);
                Ok(has_minmin_pending_by_enumeration(g)? == Some(false)
                    && min.into_iter().collect::<Vec<_>>() == *min_min_separators)
            }
            _ => Ok(false),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchReport {
    pub kind: CounterexampleKind,
    pub examined: usize,
    pub found: Vec<Counterexample>,
}

/// Terminal vertices of LexBFS and MCS for every start vertex.
pub fn terminal_table(g: &Graph) -> Result<Vec<TerminalRow>> {
    g.vertices()
        .map(|s| {
            Ok(TerminalRow {
                start: s,
                lexbfs_end: lexbfs(g, s)?.last().expect("non-empty"),
                mcs_end: mcs(g, s)?.last().expect("non-empty"),
            })
        })
        .collect()
}

/// Evaluates one graph; graphs that are disconnected or not chordal are
/// skipped.
pub(crate) fn classify(kind: CounterexampleKind, g: &Graph) -> Result<Option<Counterexample>> {
    if g.vertex_count() == 0 || !matches!(is_chordal(g), Ok(c) if c.is_chordal()) {
        return Ok(None);
    }
    let evidence = match kind {
        CounterexampleKind::NoMinmaxTerminal => {
            let minmax = minmax_simplicial_vertices(g)?;
            let table = terminal_table(g)?;
            let hit = table
                .iter()
                .any(|r| minmax.contains(r.lexbfs_end) || minmax.contains(r.mcs_end));
            if hit {
                return Ok(None);
            }
            Evidence::Terminals {
                minmax_simplicial: minmax,
                table,
            }
        }
        CounterexampleKind::NoMinminPending => {
            if has_minmin_pending_tree(g)? != Some(false) {
                return Ok(None);
            }
            let seps = brute_minimal_separators(g, SeparatorMode::Generation)?;
            let (_, min) = extremal_separators(&seps);
            let mst = MaxSpanningTrees::new(g)?;
            let count = mst.count();
            let trees = if count <= TREE_LIMIT as u128 {
                mst.trees()?
            } else {
                Vec::new()
            };
            Evidence::Trees {
                min_min_separators: min.into_iter().collect(),
                tree_count: u64::try_from(count).unwrap_or(u64::MAX),
                trees,
            }
        }
    };
    Ok(Some(Counterexample {
        graph: g.clone(),
        kind,
        evidence,
    }))
}

const BATCH: usize = 4096;

/// Scans a corpus for counterexamples on `workers` threads. Results are in
/// corpus order whatever the worker count.
pub fn search_counterexamples(kind: CounterexampleKind, spec: &CorpusSpec, workers: usize) -> Result<SearchReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("worker pool: {e}")))?;
    let mut stream = enumerate_graphs(spec)?;
    let mut examined = 0;
    let mut found = Vec::new();
    loop {
        let batch: Vec<Graph> = stream.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            break;
        }
        examined += batch.len();
        let results: Vec<Result<Option<Counterexample>>> =
            pool.install(|| batch.par_iter().map(|g| classify(kind, g)).collect());
        for r in results {
            if let Some(c) = r? {
                found.push(c);
            }
        }
    }
    Ok(SearchReport { kind, examined, found })
}
