use std::collections::HashMap;

use serde::Serialize;

use crate::clique_tree::{build_clique_tree, CliqueEdge, CliqueTree, ReducedCliqueGraph};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::poset::SeparatorPoset;

/// One edge exchange `removed → added` between clique nodes; the label is
/// the same before and after.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeExchange {
    pub removed: (usize, usize),
    pub added: (usize, usize),
    pub label: VertexSet,
}

/// Clique tree with a pending edge labeled by a min-max separator.
#[derive(Clone, Debug, Serialize)]
pub struct PendingTreeResult {
    pub tree: CliqueTree,
    /// Index into `tree.edges()`.
    pub pending_edge: usize,
    pub leaf: usize,
    pub separator: VertexSet,
    pub transform_log: Vec<EdgeExchange>,
    /// Total edge visits: the labeling pass plus the flattening pass.
    pub edge_traversals: usize,
    pub max_traversals_per_edge: usize,
    /// Number of edges followed before reaching one whose far side can be
    /// flattened.
    pub descent_steps: usize,
}

impl PendingTreeResult {
    /// Checks the pending-edge conditions against the tree itself: the tree
    /// is structurally valid, `leaf` is a leaf on `pending_edge`, and the
    /// label has no proper superset among the tree's labels.
    pub fn check(&self) -> std::result::Result<(), String> {
        self.tree.check_structure().map_err(|v| v.to_string())?;
        let e = self
            .tree
            .edges()
            .get(self.pending_edge)
            .ok_or("pending edge index out of range")?;
        if !e.touches(self.leaf) || !self.tree.is_leaf(self.leaf) {
            return Err(format!("node {} is not a leaf on the pending edge", self.leaf));
        }
        if e.label != self.separator {
            return Err("separator differs from the pending edge label".into());
        }
        if !SeparatorPoset::from_tree(&self.tree).contains_min_max(&e.label) {
            return Err(format!("label {} is not inclusion-maximal", e.label));
        }
        Ok(())
    }

    pub fn to_dot(&self, g: &Graph) -> String {
        self.tree.to_dot(g, Some(self.pending_edge))
    }
}

/// Builds a clique tree of `g` with a pending min-max edge.
pub fn pending_minmax_tree(g: &Graph) -> Result<PendingTreeResult> {
    pending_from_clique_tree(build_clique_tree(g)?)
}

/// Transforms a valid clique tree into one with a pending min-max edge.
///
/// The starting edge carries a largest separator, which is therefore
/// inclusion-maximal. One post-order pass per side computes, for every edge
/// `g` directed away from it, `worst[g]`: a largest label below `g` that is
/// not contained in `g`'s label. A side without such a label is flattened by
/// leaf exchanges. Otherwise the search moves to `worst` of that side and
/// repeats with the stored values; each move enters a strictly smaller
/// subtree. A label below `g` is contained in `g`'s label exactly when it is
/// contained in the label of the edge right below `g` on the path, which is
/// what makes the pass local.
pub fn pending_from_clique_tree(mut tree: CliqueTree) -> Result<PendingTreeResult> {
    let k = tree.node_count();
    if k < 2 {
        return Err(Error::NoSeparators);
    }
    let edges = tree.edges();
    let m = edges.len();
    let mut traversals = vec![0usize; m];

    let e0 = pick_start_edge(edges);
    let inc = tree.incidence();
    let universe = tree.nodes().iter().flat_map(|c| c.iter()).max().map_or(0, |v| v + 1);

    // Orient every edge away from e0: parent_edge[u] is the edge above u,
    // order lists nodes top-down.
    let mut parent_edge = vec![usize::MAX; k];
    let mut parent_node = vec![usize::MAX; k];
    let mut order = Vec::with_capacity(k);
    let (ra, rb) = (edges[e0].a, edges[e0].b);
    parent_edge[ra] = e0;
    parent_edge[rb] = e0;
    parent_node[ra] = rb;
    parent_node[rb] = ra;
    let mut stack = vec![ra, rb];
    while let Some(u) = stack.pop() {
        order.push(u);
        for &ei in &inc[u] {
            if ei == parent_edge[u] {
                continue;
            }
            let w = edges[ei].other(u);
            parent_edge[w] = ei;
            parent_node[w] = u;
            stack.push(w);
        }
    }

    // worst[e] for e above node u: Some(edge index) or None; two slots for e0
    // (one per side).
    let mut worst: Vec<Option<usize>> = vec![None; m];
    let mut worst_side = [None, None];
    let mut subtree_size = vec![1usize; k];
    let mut stamp = vec![usize::MAX; universe];
    let size = |e: usize| edges[e].label.len();
    let better = |x: Option<usize>, y: usize| match x {
        Some(x) if size(x) >= size(y) => Some(x),
        _ => Some(y),
    };
    for &u in order.iter().rev() {
        let up = parent_edge[u];
        for x in edges[up].label.iter() {
            stamp[x] = u;
        }
        let mut acc: Option<usize> = None;
        for &h in &inc[u] {
            if h == up {
                continue;
            }
            traversals[h] += 1;
            let child = edges[h].other(u);
            subtree_size[u] += subtree_size[child];
            let contained = edges[h].label.iter().all(|x| stamp[x] == u);
            let below = worst[h];
            acc = if contained {
                match below {
                    Some(b) => better(acc, b),
                    None => acc,
                }
            } else {
                let with_h = better(acc, h);
                match below {
                    Some(b) => better(with_h, b),
                    None => with_h,
                }
            };
        }
        if up == e0 {
            worst_side[if u == ra { 0 } else { 1 }] = acc;
        } else {
            worst[up] = acc;
        }
    }
    traversals[e0] += 1;

    // Descend until an edge has nothing incomparable below it.
    let (mut current, mut top) = match (worst_side[0], worst_side[1]) {
        (None, _) => (e0, ra),
        (_, None) => (e0, rb),
        (Some(next), _) => (next, lower_end(edges, next, &parent_edge)),
    };
    let mut descent_steps = usize::from(current != e0);
    while current != e0 {
        let Some(next) = worst[current] else { break };
        let next_top = lower_end(edges, next, &parent_edge);
        assert!(
            subtree_size[next_top] < subtree_size[top],
            "descent must enter a strictly smaller subtree"
        );
        current = next;
        top = next_top;
        descent_steps += 1;
    }

    // Flatten the subtree under `top`: post-order, so every node is a leaf
    // when its edge moves onto the node above `top`.
    let anchor = parent_node[top];
    let mut log = Vec::new();
    let mut post = Vec::new();
    let mut stack = vec![(top, false)];
    while let Some((u, expanded)) = stack.pop() {
        if expanded {
            post.push(u);
            continue;
        }
        stack.push((u, true));
        for &ei in &inc[u] {
            if ei != parent_edge[u] {
                stack.push((edges[ei].other(u), false));
            }
        }
    }
    let mut moves = Vec::new();
    for &y in &post {
        if y == top {
            continue;
        }
        let ei = parent_edge[y];
        traversals[ei] += 1;
        moves.push((ei, parent_node[y], y));
    }
    let edges = tree.edges_mut();
    for (ei, x, y) in moves {
        let label = edges[ei].label.clone();
        edges[ei] = CliqueEdge {
            a: anchor,
            b: y,
            label: label.clone(),
        };
        log.push(EdgeExchange {
            removed: (x, y),
            added: (anchor, y),
            label,
        });
    }
    debug_assert!(tree.check_structure().is_ok(), "flattening keeps a clique tree");

    let separator = tree.edges()[current].label.clone();
    Ok(PendingTreeResult {
        tree,
        pending_edge: current,
        leaf: top,
        separator,
        transform_log: log,
        edge_traversals: traversals.iter().sum(),
        max_traversals_per_edge: traversals.iter().copied().max().unwrap_or(0),
        descent_steps,
    })
}

/// Largest label; ties go to the lexicographically smallest label, then the
/// smallest index.
fn pick_start_edge(edges: &[CliqueEdge]) -> usize {
    let top = edges.iter().map(|e| e.label.len()).max().unwrap_or(0);
    let mut best: Option<usize> = None;
    for (i, e) in edges.iter().enumerate() {
        if e.label.len() != top {
            continue;
        }
        if best.is_none_or(|b| e.label < edges[b].label) {
            best = Some(i);
        }
    }
    best.expect("tree has an edge")
}

fn lower_end(edges: &[CliqueEdge], e: usize, parent_edge: &[usize]) -> usize {
    let CliqueEdge { a, b, .. } = edges[e];
    if parent_edge[a] == e {
        a
    } else {
        b
    }
}

/// Endpoint of an edge whose side of the tree is worked on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// Outcome of one chain reduction.
#[derive(Clone, Debug)]
pub struct ChainReduction {
    pub tree: CliqueTree,
    pub exchange: EdgeExchange,
}

/// Moves one pendant clique `y` of the designated side of `edge` across to
/// the other endpoint: the leaf edge `xy` is replaced by an edge from the
/// far endpoint to `y`. The leaf edge label must be contained in the label
/// of `edge`. When `leaf` is `None`, the smallest qualifying leaf is used.
pub fn chain_reduction(
    t: &CliqueTree,
    rcg: &ReducedCliqueGraph,
    edge: usize,
    side: Side,
    leaf: Option<usize>,
) -> Result<ChainReduction> {
    let e = t
        .edges()
        .get(edge)
        .ok_or_else(|| Error::Precondition(format!("no edge {edge}")))?
        .clone();
    let (near, far) = match side {
        Side::A => (e.a, e.b),
        Side::B => (e.b, e.a),
    };
    if t.is_leaf(near) {
        return Err(Error::NotApplicable(format!(
            "edge {edge} already pends on node {near}"
        )));
    }
    let inc = t.incidence();
    let mut on_side = vec![false; t.node_count()];
    on_side[near] = true;
    let mut stack = vec![near];
    while let Some(u) = stack.pop() {
        for &ei in &inc[u] {
            let w = t.edges()[ei].other(u);
            if ei != edge && !on_side[w] {
                on_side[w] = true;
                stack.push(w);
            }
        }
    }
    let leaf_edge = |y: usize| -> Option<usize> { (y != near && on_side[y] && inc[y].len() == 1).then(|| inc[y][0]) };
    let y = match leaf {
        Some(y) => {
            let ei = leaf_edge(y)
                .ok_or_else(|| Error::Precondition(format!("node {y} is not a leaf on the chosen side")))?;
            if !t.edges()[ei].label.is_subset(&e.label) {
                return Err(Error::Precondition(format!(
                    "leaf label {} is not contained in {}",
                    t.edges()[ei].label,
                    e.label
                )));
            }
            y
        }
        None => (0..t.node_count())
            .find(|&y| leaf_edge(y).is_some_and(|ei| t.edges()[ei].label.is_subset(&e.label)))
            .ok_or_else(|| Error::NotApplicable("no leaf on this side has a label inside the separator".into()))?,
    };
    let ei = inc[y][0];
    let old = t.edges()[ei].clone();
    let x = old.other(y);

    let index: HashMap<&VertexSet, usize> = rcg.nodes().iter().enumerate().map(|(i, c)| (c, i)).collect();
    let (rf, ry) = (index[&t.nodes()[far]], index[&t.nodes()[y]]);
    assert!(
        rcg.has_edge(rf, ry),
        "chain reduction must follow a reduced clique graph edge"
    );

    let mut out = t.clone();
    out.edges_mut()[ei] = CliqueEdge {
        a: far,
        b: y,
        label: t.nodes()[far].intersection(&t.nodes()[y]),
    };
    assert_eq!(out.edges()[ei].label, old.label, "chain reduction preserves the label");
    if let Err(v) = out.check_structure() {
        panic!("chain reduction produced an invalid clique tree: {v}");
    }
    Ok(ChainReduction {
        tree: out,
        exchange: EdgeExchange {
            removed: (x, y),
            added: (far, y),
            label: old.label,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique_tree::{reduced_clique_graph, verify_clique_tree};

    fn g1() -> Graph {
        Graph::from_edges(
            6,
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)],
        )
        .unwrap()
    }

    #[test]
    fn g1_pends_on_cd() {
        let g = g1();
        let r = pending_minmax_tree(&g).unwrap();
        assert_eq!(r.check(), Ok(()));
        assert_eq!(verify_clique_tree(&g, &r.tree), Ok(()));
        assert_eq!(r.separator, VertexSet::from([2, 3]));
        assert_eq!(r.tree.nodes()[r.leaf], VertexSet::from([0, 1, 2, 3]));
        assert!(r.transform_log.is_empty());
    }

    #[test]
    fn single_clique_has_no_separators() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(pending_minmax_tree(&k3), Err(Error::NoSeparators)));
    }

    #[test]
    fn path_descends_to_a_leaf_edge() {
        // cliques {0,1},{1,2,3},{2,3,4},{4,5}: both sides of {2,3} hold an
        // incomparable separator, so the pending edge is a leaf edge
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)]).unwrap();
        let r = pending_minmax_tree(&g).unwrap();
        assert_eq!(r.check(), Ok(()));
        assert_eq!(verify_clique_tree(&g, &r.tree), Ok(()));
        assert_eq!(r.separator.len(), 1);
        assert_eq!(r.descent_steps, 1);
        assert!(r.transform_log.is_empty());
    }

    #[test]
    fn good_side_is_flattened() {
        // A={0,1,2}, B={1,2,3}, C={2,4} hanging on B, D={0,5} hanging on A
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (0, 5)]).unwrap();
        let nodes = [[0, 1, 2].as_slice(), &[1, 2, 3], &[2, 4], &[0, 5]]
            .iter()
            .map(|c| VertexSet::from_vec(c.to_vec()))
            .collect();
        let t = CliqueTree::with_intersection_labels(nodes, &[(0, 1), (1, 2), (0, 3)]).unwrap();
        assert_eq!(verify_clique_tree(&g, &t), Ok(()));
        let r = pending_from_clique_tree(t).unwrap();
        assert_eq!(r.check(), Ok(()));
        assert_eq!(verify_clique_tree(&g, &r.tree), Ok(()));
        assert_eq!((r.pending_edge, r.leaf), (0, 1));
        assert_eq!(
            r.transform_log,
            vec![EdgeExchange {
                removed: (1, 2),
                added: (0, 2),
                label: VertexSet::from([2]),
            }]
        );
        assert!(r.max_traversals_per_edge <= 2);
    }

    #[test]
    fn chain_reduction_moves_the_leaf() {
        // C1={0,1,2}, C2={1,2,3}, C3={2,4}
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4)]).unwrap();
        let c1 = VertexSet::from([0, 1, 2]);
        let c2 = VertexSet::from([1, 2, 3]);
        let c3 = VertexSet::from([2, 4]);
        let t = CliqueTree::with_intersection_labels(vec![c1, c2, c3], &[(1, 0), (1, 2)]).unwrap();
        assert_eq!(verify_clique_tree(&g, &t), Ok(()));
        let rcg = reduced_clique_graph(&g).unwrap();
        let out = chain_reduction(&t, &rcg, 0, Side::A, None).unwrap();
        assert_eq!(out.exchange.removed, (1, 2));
        assert_eq!(out.exchange.added, (0, 2));
        assert_eq!(verify_clique_tree(&g, &out.tree), Ok(()));
        assert_eq!(out.tree.separator_multiset(), t.separator_multiset());
        assert!(matches!(
            chain_reduction(&out.tree, &rcg, 0, Side::A, None),
            Err(Error::NotApplicable(_))
        ));
    }
}
