//! Helpers shared by the integration tests. Everything here works from the
//! raw adjacency of a graph and does not call the algorithms under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use chordal::oracle::{enumerate_graphs, CorpusSpec, Filters};
use chordal::{Graph, VertexSet};

pub const RANDOM_SEED: u64 = 0x00c0_ffee;

pub fn connected() -> Filters {
    Filters {
        connected: true,
        chordal: false,
    }
}

pub fn connected_chordal() -> Filters {
    Filters {
        connected: true,
        chordal: true,
    }
}

/// Every connected labeled graph with `1 <= n <= n_max`.
pub fn all_connected(n_max: usize) -> impl Iterator<Item = Graph> {
    enumerate_graphs(&CorpusSpec::exhaustive(1, n_max, connected())).expect("within budget")
}

/// Every connected chordal labeled graph with `1 <= n <= n_max`.
pub fn all_connected_chordal(n_max: usize) -> impl Iterator<Item = Graph> {
    enumerate_graphs(&CorpusSpec::exhaustive(1, n_max, connected_chordal())).expect("within budget")
}

/// Seeded random connected chordal graphs with `2 <= n <= n_max`.
pub fn random_chordal(count: usize, n_max: usize, density: f64, seed: u64) -> impl Iterator<Item = Graph> {
    enumerate_graphs(&CorpusSpec::random(count, 2, n_max, density, seed, connected_chordal())).expect("valid spec")
}

/// Vertices reachable from `start` without entering `blocked`.
pub fn reachable(g: &Graph, blocked: &[bool], start: usize) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] && !blocked[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

pub fn mask(n: usize, s: &VertexSet) -> Vec<bool> {
    let mut m = vec![false; n];
    for v in s.iter() {
        m[v] = true;
    }
    m
}

pub fn pairwise_adjacent(g: &Graph, s: &VertexSet) -> bool {
    let v = s.as_slice();
    v.iter()
        .enumerate()
        .all(|(i, &a)| v[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// Whether the pairs form a spanning tree on `k` nodes in which, for every
/// vertex, the cliques holding it are connected.
pub fn is_clique_tree(cliques: &[VertexSet], pairs: &[(usize, usize)]) -> bool {
    let k = cliques.len();
    if pairs.len() + 1 != k {
        return false;
    }
    let universe: BTreeSet<usize> = cliques.iter().flat_map(|c| c.iter()).collect();
    let spans = connected_on(k, pairs, |_| true);
    spans
        && universe
            .into_iter()
            .all(|x| connected_on(k, pairs, |i| cliques[i].contains(x)))
}

fn connected_on(k: usize, pairs: &[(usize, usize)], keep: impl Fn(usize) -> bool) -> bool {
    let nodes: Vec<usize> = (0..k).filter(|&i| keep(i)).collect();
    let Some(&root) = nodes.first() else {
        return true;
    };
    let mut seen = vec![false; k];
    seen[root] = true;
    let mut stack = vec![root];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &(a, b) in pairs {
            let w = if a == u {
                b
            } else if b == u {
                a
            } else {
                continue;
            };
            if keep(w) && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == nodes.len()
}

/// Σₓ (cₓ − 1), where cₓ counts the cliques containing `x`. A tree on the
/// cliques has at most this weight, with equality exactly when it is a
/// clique tree.
pub fn weight_bound(cliques: &[VertexSet]) -> usize {
    let mut count = std::collections::BTreeMap::new();
    for c in cliques {
        for x in c.iter() {
            *count.entry(x).or_insert(0usize) += 1;
        }
    }
    count.values().map(|c| c - 1).sum()
}

/// All spanning trees of the graph on `k` nodes with the given edges, as
/// lists of edge pairs. Intended for a handful of edges.
pub fn all_spanning_trees(k: usize, edges: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        k: usize,
        edges: &[(usize, usize)],
        at: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if chosen.len() + 1 == k {
            if connected_on(k, chosen, |_| true) {
                out.push(chosen.clone());
            }
            return;
        }
        if at == edges.len() || edges.len() - at < k - 1 - chosen.len() {
            return;
        }
        chosen.push(edges[at]);
        rec(k, edges, at + 1, chosen, out);
        chosen.pop();
        rec(k, edges, at + 1, chosen, out);
    }
    if k == 0 {
        return out;
    }
    rec(k, edges, 0, &mut chosen, &mut out);
    out
}
