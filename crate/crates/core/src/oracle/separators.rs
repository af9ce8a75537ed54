//! Maximal cliques, minimal separators and chordality from first principles.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::bits::{components, full, is_chordal_masks, masks_of, members, neighborhood, to_set};

pub fn brute_is_chordal(g: &Graph) -> bool {
    is_chordal_masks(&masks_of(g))
}

/// All maximal cliques (Bron–Kerbosch with pivoting), sorted.
pub fn brute_maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let adj = masks_of(g);
    let mut out = Vec::new();
    bron_kerbosch(&adj, 0, full(adj.len()), 0, &mut out);
    let mut sets: Vec<VertexSet> = out.into_iter().map(to_set).collect();
    sets.sort();
    sets
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot = members(p | x)
        .max_by_key(|&u| (p & adj[u]).count_ones())
        .expect("p|x non-empty");
    for v in members(p & !adj[pivot]) {
        bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeparatorMode {
    /// Every vertex subset, checked against the definition (n <= 12).
    Subsets,
    /// Closure from vertex neighborhoods: `N(C)` for components `C` of
    /// `G − N[v]`, then of `G − (S ∪ N(x))` for found `S` and `x ∈ S`.
    Generation,
}

pub const SUBSET_MODE_LIMIT: usize = 12;

/// All minimal separators of a connected graph.
pub fn brute_minimal_separators(g: &Graph, mode: SeparatorMode) -> Result<BTreeSet<VertexSet>> {
    let adj = masks_of(g);
    let n = adj.len();
    Ok(match mode {
        SeparatorMode::Subsets => {
            if n > SUBSET_MODE_LIMIT {
                return Err(Error::OverBudget(format!(
                    "subset mode is limited to n <= {SUBSET_MODE_LIMIT}"
                )));
            }
            (0..1u64 << n)
                .filter(|&s| is_minimal_separator_by_definition(&adj, s))
                .map(to_set)
                .collect()
        }
        SeparatorMode::Generation => generate_separators(&adj).into_iter().map(to_set).collect(),
    })
}

/// Some pair outside `s` is separated by `s` but by no set obtained from
/// `s` by dropping one vertex (so by no proper subset, since separation is
/// monotone under adding vertices).
fn is_minimal_separator_by_definition(adj: &[u64], s: u64) -> bool {
    let n = adj.len();
    let rest = full(n) & !s;
    let comps = components(adj, rest);
    if comps.len() < 2 {
        return false;
    }
    let shrunk: Vec<Vec<u64>> = members(s).map(|x| components(adj, rest | 1 << x)).collect();
    let same = |parts: &[u64], a: usize, b: usize| parts.iter().any(|&c| c >> a & 1 == 1 && c >> b & 1 == 1);
    for (i, &ci) in comps.iter().enumerate() {
        for &cj in &comps[i + 1..] {
            let (a, b) = (ci.trailing_zeros() as usize, cj.trailing_zeros() as usize);
            if shrunk.iter().all(|parts| same(parts, a, b)) {
                return true;
            }
        }
    }
    false
}

fn generate_separators(adj: &[u64]) -> BTreeSet<u64> {
    let n = adj.len();
    let all = full(n);
    let mut found = BTreeSet::new();
    let mut queue = Vec::new();
    let push = |sep: u64, found: &mut BTreeSet<u64>, queue: &mut Vec<u64>| {
        if sep != 0 && found.insert(sep) {
            queue.push(sep);
        }
    };
    for v in 0..n {
        let closed = adj[v] | 1 << v;
        for c in components(adj, all & !closed) {
            push(neighborhood(adj, c), &mut found, &mut queue);
        }
    }
    while let Some(s) = queue.pop() {
        for x in members(s) {
            let blocked = s | adj[x];
            for c in components(adj, all & !blocked) {
                push(neighborhood(adj, c), &mut found, &mut queue);
            }
        }
    }
    found
}

/// Inclusion-maximal and inclusion-minimal members of a separator family.
pub fn extremal_separators(seps: &BTreeSet<VertexSet>) -> (BTreeSet<VertexSet>, BTreeSet<VertexSet>) {
    let max = seps
        .iter()
        .filter(|s| !seps.iter().any(|t| s.is_proper_subset(t)))
        .cloned()
        .collect();
    let min = seps
        .iter()
        .filter(|s| !seps.iter().any(|t| t.is_proper_subset(s)))
        .cloned()
        .collect();
    (max, min)
}
