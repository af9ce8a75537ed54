use serde::Serialize;

use crate::clique_tree::{build_clique_tree, CliqueEdge, CliqueTree};
use crate::error::Result;
use crate::graph::{Graph, VertexOrdering, VertexSet};

use super::pending::pending_from_clique_tree;
use super::poset::SeparatorPoset;

/// One pruning round: the leaf clique, the separator it hung on (none for
/// the final clique) and the vertices eliminated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PruneStep {
    pub clique: VertexSet,
    pub separator: Option<VertexSet>,
    pub eliminated: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContainmentScheme {
    pub ordering: VertexOrdering,
    pub steps: Vec<PruneStep>,
}

/// Elimination scheme that repeatedly removes `C − S` for a leaf clique `C`
/// hanging on a min-max separator `S`, then continues on the rest of the
/// clique tree. Vertices within one step are eliminated in id order.
pub fn containment_elimination_scheme(g: &Graph) -> Result<ContainmentScheme> {
    let mut tree = build_clique_tree(g)?;
    let mut ordering = Vec::with_capacity(g.vertex_count());
    let mut steps = Vec::new();
    while tree.node_count() > 1 {
        let r = pending_from_clique_tree(tree)?;
        debug_assert!(
            SeparatorPoset::from_tree(&r.tree).contains_min_max(&r.separator),
            "each pruned separator is inclusion-maximal in the residual graph"
        );
        let clique = r.tree.nodes()[r.leaf].clone();
        let eliminated = clique.difference(&r.separator).into_vec();
        ordering.extend_from_slice(&eliminated);
        steps.push(PruneStep {
            clique,
            separator: Some(r.separator),
            eliminated,
        });
        tree = remove_leaf(&r.tree, r.leaf);
    }
    if let Some(last) = tree.nodes().first() {
        let eliminated = last.clone().into_vec();
        ordering.extend_from_slice(&eliminated);
        steps.push(PruneStep {
            clique: last.clone(),
            separator: None,
            eliminated,
        });
    }
    Ok(ContainmentScheme {
        ordering: VertexOrdering::new(ordering),
        steps,
    })
}

fn remove_leaf(t: &CliqueTree, leaf: usize) -> CliqueTree {
    let shift = |i: usize| if i > leaf { i - 1 } else { i };
    let nodes: Vec<VertexSet> = t
        .nodes()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != leaf)
        .map(|(_, c)| c.clone())
        .collect();
    let edges: Vec<CliqueEdge> = t
        .edges()
        .iter()
        .filter(|e| !e.touches(leaf))
        .map(|e| CliqueEdge {
            a: shift(e.a),
            b: shift(e.b),
            label: e.label.clone(),
        })
        .collect();
    CliqueTree::from_parts(nodes, edges).expect("indices shift consistently")
}

/// For each clique, the vertices it shares with other cliques (the union of
/// its incident labels) and whether that union is itself one of the labels.
/// A clique is a leaf of some clique tree exactly when it is, and then it
/// hangs on that union.
fn attachment(t: &CliqueTree) -> Vec<Option<VertexSet>> {
    let inc = t.incidence();
    (0..t.node_count())
        .map(|c| {
            let labels: Vec<&VertexSet> = inc[c].iter().map(|&e| &t.edges()[e].label).collect();
            let widest = labels.iter().max_by_key(|l| l.len())?;
            labels.iter().all(|l| l.is_subset(widest)).then(|| (*widest).clone())
        })
        .collect()
}

/// Vertices `v` such that some clique tree has a leaf `C` on a min-max
/// separator `S` with `v ∈ C − S`. For a single clique, all vertices.
pub fn minmax_simplicial_vertices(g: &Graph) -> Result<VertexSet> {
    let t = build_clique_tree(g)?;
    if t.node_count() == 1 {
        return Ok(t.nodes()[0].clone());
    }
    let poset = SeparatorPoset::from_tree(&t);
    let mut out = Vec::new();
    for (c, att) in attachment(&t).into_iter().enumerate() {
        if let Some(s) = att {
            if poset.contains_min_max(&s) {
                out.extend(t.nodes()[c].difference(&s).iter());
            }
        }
    }
    Ok(VertexSet::from_vec(out))
}

/// Whether some clique tree of `g` has a pending edge labeled with an
/// inclusion-minimal separator. `None` for a single clique.
pub fn has_minmin_pending_tree(g: &Graph) -> Result<Option<bool>> {
    let t = build_clique_tree(g)?;
    if t.node_count() == 1 {
        return Ok(None);
    }
    let poset = SeparatorPoset::from_tree(&t);
    Ok(Some(
        attachment(&t).into_iter().flatten().any(|s| poset.contains_min_min(&s)),
    ))
}
