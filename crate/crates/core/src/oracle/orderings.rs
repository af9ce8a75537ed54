//! Permutation search for reversible orderings, and induced-subgraph
//! searches for holes and small patterns.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};

use super::bits::{is_connected_masks, masks_of, members};

pub const ORDERING_LIMIT: usize = 9;

/// Depth-first over prefixes. A prefix survives when each placed vertex's
/// earlier neighbors form a clique and the later neighbors placed so far of
/// each vertex form a clique; both conditions are final once all vertices
/// are placed.
fn search<F>(g: &Graph, mut f: F) -> Result<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = g.vertex_count();
    if n > ORDERING_LIMIT {
        return Err(Error::OverBudget(format!(
            "permutation search is limited to n <= {ORDERING_LIMIT}"
        )));
    }
    let adj = masks_of(g);
    let mut prefix = Vec::with_capacity(n);
    let mut later = vec![0u64; n];
    let _ = step(&adj, 0, &mut prefix, &mut later, &mut f);
    Ok(())
}

fn step<F>(adj: &[u64], placed: u64, prefix: &mut Vec<usize>, later: &mut [u64], f: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = adj.len();
    if prefix.len() == n {
        return f(prefix);
    }
    for v in 0..n {
        if placed >> v & 1 == 1 {
            continue;
        }
        let earlier = adj[v] & placed;
        let earlier_ok = members(earlier).all(|u| earlier & !(adj[u] | 1 << u) == 0);
        let later_ok = members(earlier).all(|u| later[u] & !adj[v] == 0);
        if !(earlier_ok && later_ok) {
            continue;
        }
        for u in members(earlier) {
            later[u] |= 1 << v;
        }
        prefix.push(v);
        let flow = step(adj, placed | 1 << v, prefix, later, f);
        prefix.pop();
        for u in members(earlier) {
            later[u] &= !(1 << v);
        }
        flow?;
    }
    ControlFlow::Continue(())
}

/// Every ordering that is a simplicial elimination scheme in both
/// directions, in lexicographic order.
pub fn brute_reversible_orderings(g: &Graph) -> Result<Vec<VertexOrdering>> {
    let mut out = Vec::new();
    search(g, |p| {
        out.push(VertexOrdering::new(p.to_vec()));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

pub fn brute_has_reversible_ordering(g: &Graph) -> Result<bool> {
    let mut found = false;
    search(g, |_| {
        found = true;
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Whether some vertex subset induces a cycle of length at least 4
/// (subset enumeration, n <= 16).
pub fn brute_has_hole(g: &Graph) -> bool {
    let adj = masks_of(g);
    let n = adj.len();
    assert!(n <= 16, "hole search enumerates all subsets");
    (0..1u64 << n).any(|s| {
        s.count_ones() >= 4
            && members(s).all(|v| (adj[v] & s).count_ones() == 2)
            && is_connected_masks(&restrict(&adj, s))
    })
}

fn restrict(adj: &[u64], s: u64) -> Vec<u64> {
    let verts: Vec<usize> = members(s).collect();
    verts
        .iter()
        .map(|&v| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &w)| adj[v] >> w & 1 == 1)
                .fold(0u64, |m, (i, _)| m | 1 << i)
        })
        .collect()
}

/// Whether `pattern` occurs as an induced subgraph of `g`.
pub fn brute_contains_induced(g: &Graph, pattern: &Graph) -> bool {
    let adj = masks_of(g);
    let pat = masks_of(pattern);
    let k = pat.len();
    let mut chosen = Vec::with_capacity(k);
    embed(&adj, &pat, 0, &mut chosen)
}

fn embed(adj: &[u64], pat: &[u64], used: u64, chosen: &mut Vec<usize>) -> bool {
    let i = chosen.len();
    if i == pat.len() {
        return true;
    }
    for v in 0..adj.len() {
        if used >> v & 1 == 1 {
            continue;
        }
        let fits = chosen
            .iter()
            .enumerate()
            .all(|(j, &u)| (pat[i] >> j & 1 == 1) == (adj[v] >> u & 1 == 1));
        if fits {
            chosen.push(v);
            if embed(adj, pat, used | 1 << v, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
