//! Adjacency bitmasks for graphs with at most 64 vertices.

use crate::graph::{Graph, VertexSet};

pub(crate) fn masks_of(g: &Graph) -> Vec<u64> {
    assert!(g.vertex_count() <= 64, "bitmask oracles need n <= 64");
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

pub(crate) fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn members(mut set: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (set != 0).then(|| {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            v
        })
    })
}

pub(crate) fn to_set(set: u64) -> VertexSet {
    VertexSet::from_vec(members(set).collect())
}

/// Vertices reachable from `start` inside `allowed`.
pub(crate) fn reach(adj: &[u64], allowed: u64, start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in members(frontier) {
            next |= adj[v];
        }
        next &= allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Connected components of the subgraph induced on `allowed`.
pub(crate) fn components(adj: &[u64], allowed: u64) -> Vec<u64> {
    let mut rest = allowed;
    let mut out = Vec::new();
    while rest != 0 {
        let c = reach(adj, allowed, rest.trailing_zeros() as usize);
        out.push(c);
        rest &= !c;
    }
    out
}

pub(crate) fn is_connected_masks(adj: &[u64]) -> bool {
    adj.is_empty() || reach(adj, full(adj.len()), 0) == full(adj.len())
}

pub(crate) fn is_clique_mask(adj: &[u64], set: u64) -> bool {
    members(set).all(|v| set & !(adj[v] | 1 << v) == 0)
}

/// Chordality by greedy removal of simplicial vertices.
pub(crate) fn is_chordal_masks(adj: &[u64]) -> bool {
    let mut alive = full(adj.len());
    while alive != 0 {
        let Some(v) = members(alive).find(|&v| is_clique_mask(adj, adj[v] & alive)) else {
            return false;
        };
        alive &= !(1 << v);
    }
    true
}

/// Neighborhood of a vertex set, outside the set.
pub(crate) fn neighborhood(adj: &[u64], set: u64) -> u64 {
    members(set).fold(0, |m, v| m | adj[v]) & !set
}
