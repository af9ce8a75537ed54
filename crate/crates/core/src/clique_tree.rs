//! Maximal cliques, clique trees, separator multisets and the reduced clique
//! graph of a chordal graph.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::io::dot_escape;
use crate::search::{is_chordal, require_chordal, ChordalityCertificate};

/// Edge between two clique nodes, labeled with their intersection.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliqueEdge {
    pub a: usize,
    pub b: usize,
    pub label: VertexSet,
}

impl CliqueEdge {
    pub fn other(&self, node: usize) -> usize {
        if node == self.a {
            self.b
        } else {
            self.a
        }
    }

    pub fn touches(&self, node: usize) -> bool {
        self.a == node || self.b == node
    }
}

/// Tree on the maximal cliques of a chordal graph. Construction does not
/// validate; use [`verify_clique_tree`] or [`CliqueTree::check_structure`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CliqueTreeDoc", into = "CliqueTreeDoc")]
pub struct CliqueTree {
    nodes: Vec<VertexSet>,
    edges: Vec<CliqueEdge>,
}

/// Multiset of minimal separators: each separator with its number of
/// occurrences as a clique-tree label.
pub type SeparatorMultiset = BTreeMap<VertexSet, usize>;

impl CliqueTree {
    pub fn from_parts(nodes: Vec<VertexSet>, edges: Vec<CliqueEdge>) -> Result<Self> {
        for e in &edges {
            for end in [e.a, e.b] {
                if end >= nodes.len() {
                    return Err(Error::Precondition(format!("edge endpoint {end} is not a node")));
                }
            }
        }
        Ok(CliqueTree { nodes, edges })
    }

    /// Tree whose edge labels are the intersections of their endpoints.
    pub fn with_intersection_labels(nodes: Vec<VertexSet>, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a >= nodes.len() || b >= nodes.len() {
                return Err(Error::Precondition(format!("edge ({a}, {b}) has no such node")));
            }
            edges.push(CliqueEdge {
                a,
                b,
                label: nodes[a].intersection(&nodes[b]),
            });
        }
        Ok(CliqueTree { nodes, edges })
    }

    pub fn nodes(&self) -> &[VertexSet] {
        &self.nodes
    }

    pub fn edges(&self) -> &[CliqueEdge] {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub(crate) fn edges_mut(&mut self) -> &mut Vec<CliqueEdge> {
        &mut self.edges
    }

    pub fn weight(&self) -> usize {
        self.edges.iter().map(|e| e.label.len()).sum()
    }

    /// Incident edge indices per node.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.nodes.len()];
        for (i, e) in self.edges.iter().enumerate() {
            inc[e.a].push(i);
            inc[e.b].push(i);
        }
        inc
    }

    pub fn degree(&self, node: usize) -> usize {
        self.edges.iter().filter(|e| e.touches(node)).count()
    }

    pub fn is_leaf(&self, node: usize) -> bool {
        self.degree(node) == 1
    }

    pub fn separator_multiset(&self) -> SeparatorMultiset {
        let mut out = SeparatorMultiset::new();
        for e in &self.edges {
            *out.entry(e.label.clone()).or_insert(0) += 1;
        }
        out
    }

    /// Edges as unordered pairs of cliques, independent of node numbering.
    pub fn canonical_edges(&self) -> BTreeSet<(VertexSet, VertexSet)> {
        self.edges
            .iter()
            .map(|e| {
                let (x, y) = (self.nodes[e.a].clone(), self.nodes[e.b].clone());
                if x <= y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect()
    }

    /// True iff the nodes containing `x` induce a connected subtree.
    pub fn is_subtree_for(&self, x: usize) -> bool {
        let holding: Vec<usize> = (0..self.nodes.len()).filter(|&i| self.nodes[i].contains(x)).collect();
        let Some(&root) = holding.first() else {
            return true;
        };
        let inc = self.incidence();
        let mut seen = vec![false; self.nodes.len()];
        seen[root] = true;
        let mut stack = vec![root];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &ei in &inc[u] {
                let w = self.edges[ei].other(u);
                if !seen[w] && self.nodes[w].contains(x) {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == holding.len()
    }

    /// Checks everything that does not need the source graph: the edges form
    /// a tree, labels are endpoint intersections, and the weight reaches the
    /// upper bound Σₓ (cₓ − 1), where cₓ counts the nodes containing x. The
    /// last condition holds exactly when every vertex's nodes form a subtree.
    pub fn check_structure(&self) -> Result<(), CliqueTreeViolation> {
        let k = self.nodes.len();
        if k == 0 || self.edges.len() + 1 != k {
            return Err(CliqueTreeViolation::NotATree);
        }
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.a >= k || e.b >= k {
                return Err(CliqueTreeViolation::NotATree);
            }
            let (ra, rb) = (find(&mut parent, e.a), find(&mut parent, e.b));
            if ra == rb {
                return Err(CliqueTreeViolation::NotATree);
            }
            parent[ra] = rb;
            if e.label != self.nodes[e.a].intersection(&self.nodes[e.b]) {
                return Err(CliqueTreeViolation::LabelMismatch { edge: i });
            }
        }
        let mut count: BTreeMap<usize, usize> = BTreeMap::new();
        for c in &self.nodes {
            for x in c.iter() {
                *count.entry(x).or_insert(0) += 1;
            }
        }
        let maximum: usize = count.values().map(|c| c - 1).sum();
        let weight = self.weight();
        if weight != maximum {
            let mut in_labels: BTreeMap<usize, usize> = BTreeMap::new();
            for e in &self.edges {
                for x in e.label.iter() {
                    *in_labels.entry(x).or_insert(0) += 1;
                }
            }
            let vertex = count
                .iter()
                .find(|(x, c)| in_labels.get(x).copied().unwrap_or(0) + 1 != **c)
                .map(|(x, _)| *x)
                .expect("a weight deficit has a witness vertex");
            return Err(CliqueTreeViolation::NotMaximumWeight {
                weight,
                maximum,
                vertex,
            });
        }
        Ok(())
    }

    /// DOT rendering; `highlight` marks one edge (by index) in red.
    pub fn to_dot(&self, g: &Graph, highlight: Option<usize>) -> String {
        clique_dot("T", &self.nodes, &self.edges, g, highlight)
    }
}

fn set_label(g: &Graph, s: &VertexSet) -> String {
    let names: Vec<String> = s.iter().map(|v| g.label(v).into_owned()).collect();
    format!("{{{}}}", names.join(","))
}

fn clique_dot(name: &str, nodes: &[VertexSet], edges: &[CliqueEdge], g: &Graph, highlight: Option<usize>) -> String {
    let mut out = format!("graph {name} {{\n  node [shape=box];\n");
    for (i, c) in nodes.iter().enumerate() {
        let _ = writeln!(out, "  c{i} [label=\"{}\"];", dot_escape(&set_label(g, c)));
    }
    for (i, e) in edges.iter().enumerate() {
        let style = if highlight == Some(i) {
            ", color=red, penwidth=2"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  c{} -- c{} [label=\"{}\"{style}];",
            e.a,
            e.b,
            dot_escape(&set_label(g, &e.label))
        );
    }
    out.push_str("}\n");
    out
}

/// JSON form of a clique tree: parallel `edges` and `labels` arrays.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CliqueTreeDoc {
    pub nodes: Vec<VertexSet>,
    pub edges: Vec<[usize; 2]>,
    pub labels: Vec<VertexSet>,
}

impl From<CliqueTree> for CliqueTreeDoc {
    fn from(t: CliqueTree) -> Self {
        let edges = t.edges.iter().map(|e| [e.a, e.b]).collect();
        let labels = t.edges.into_iter().map(|e| e.label).collect();
        CliqueTreeDoc {
            nodes: t.nodes,
            edges,
            labels,
        }
    }
}

impl TryFrom<CliqueTreeDoc> for CliqueTree {
    type Error = Error;

    fn try_from(doc: CliqueTreeDoc) -> Result<Self> {
        if doc.edges.len() != doc.labels.len() {
            return Err(Error::Precondition(format!(
                "{} edges but {} labels",
                doc.edges.len(),
                doc.labels.len()
            )));
        }
        let edges = doc
            .edges
            .into_iter()
            .zip(doc.labels)
            .map(|([a, b], label)| CliqueEdge { a, b, label })
            .collect();
        CliqueTree::from_parts(doc.nodes, edges)
    }
}

/// First broken clique-tree condition found by [`verify_clique_tree`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliqueTreeViolation {
    GraphDisconnected,
    GraphNotChordal {
        hole: Vec<usize>,
    },
    /// Node sets differ from the maximal cliques of the graph.
    CliquesMismatch,
    NotATree,
    LabelMismatch {
        edge: usize,
    },
    /// Weight below Σₓ (cₓ − 1); the nodes containing `vertex` do not form
    /// a subtree.
    NotMaximumWeight {
        weight: usize,
        maximum: usize,
        vertex: usize,
    },
}

impl fmt::Display for CliqueTreeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliqueTreeViolation::GraphDisconnected => write!(f, "graph is disconnected"),
            CliqueTreeViolation::GraphNotChordal { hole } => {
                write!(f, "graph is not chordal (hole {hole:?})")
            }
            CliqueTreeViolation::CliquesMismatch => {
                write!(f, "nodes are not the maximal cliques of the graph")
            }
            CliqueTreeViolation::NotATree => write!(f, "edges do not form a spanning tree"),
            CliqueTreeViolation::LabelMismatch { edge } => {
                write!(f, "edge {edge} is not labeled with its endpoint intersection")
            }
            CliqueTreeViolation::NotMaximumWeight {
                weight,
                maximum,
                vertex,
            } => write!(
                f,
                "weight {weight} below maximum {maximum}; cliques containing {vertex} are not a subtree"
            ),
        }
    }
}

/// Clique tree built from a reversed perfect elimination ordering.
///
/// Vertices are visited from the end of the scheme. A vertex whose later
/// neighborhood is exactly the current clique of its parent (its earliest
/// later neighbor) extends that clique, provided the parent was the last
/// vertex added to it; otherwise it opens a new clique attached to the
/// parent's clique, labeled by its later neighborhood.
pub fn build_clique_tree(g: &Graph) -> Result<CliqueTree> {
    let scheme = require_chordal(g)?;
    Ok(tree_from_scheme(g, scheme.as_slice()))
}

pub(crate) fn tree_from_scheme(g: &Graph, scheme: &[usize]) -> CliqueTree {
    let n = g.vertex_count();
    if n == 0 {
        return CliqueTree {
            nodes: Vec::new(),
            edges: Vec::new(),
        };
    }
    let mut pos = vec![0; n];
    for (i, &v) in scheme.iter().enumerate() {
        pos[v] = i;
    }
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut newest: Vec<usize> = Vec::new();
    let mut node_of = vec![usize::MAX; n];
    let mut later_size = vec![0usize; n];
    let mut edges = Vec::new();
    for &v in scheme.iter().rev() {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        later_size[v] = later.len();
        let Some(&p) = later.iter().min_by_key(|&&w| pos[w]) else {
            node_of[v] = members.len();
            members.push(vec![v]);
            newest.push(v);
            continue;
        };
        let host = node_of[p];
        if newest[host] == p && later.len() == later_size[p] + 1 {
            members[host].push(v);
            newest[host] = v;
            node_of[v] = host;
        } else {
            let id = members.len();
            let mut clique = later.clone();
            clique.push(v);
            members.push(clique);
            newest.push(v);
            node_of[v] = id;
            edges.push(CliqueEdge {
                a: host,
                b: id,
                label: VertexSet::from_vec(later),
            });
        }
    }
    let nodes = members.into_iter().map(VertexSet::from_vec).collect();
    CliqueTree { nodes, edges }
}

/// Maximal cliques, in the order the clique-tree sweep creates them.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    Ok(build_clique_tree(g)?.nodes)
}

/// Minimal separators with multiplicities, read off any clique tree.
pub fn separator_multiset(g: &Graph) -> Result<SeparatorMultiset> {
    Ok(build_clique_tree(g)?.separator_multiset())
}

/// Graph on the maximal cliques with an edge whenever the intersection of
/// two cliques separates them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedCliqueGraph {
    nodes: Vec<VertexSet>,
    edges: Vec<CliqueEdge>,
}

impl ReducedCliqueGraph {
    pub fn nodes(&self) -> &[VertexSet] {
        &self.nodes
    }

    /// Edges with `a < b`, sorted by endpoints.
    pub fn edges(&self) -> &[CliqueEdge] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let (a, b) = (a.min(b), a.max(b));
        self.edges.binary_search_by(|e| (e.a, e.b).cmp(&(a, b))).is_ok()
    }

    pub fn canonical_edges(&self) -> BTreeSet<(VertexSet, VertexSet)> {
        self.edges
            .iter()
            .map(|e| {
                let (x, y) = (self.nodes[e.a].clone(), self.nodes[e.b].clone());
                if x <= y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect()
    }

    pub fn to_dot(&self, g: &Graph) -> String {
        clique_dot("R", &self.nodes, &self.edges, g, None)
    }
}

/// Reduced clique graph over the cliques of `build_clique_tree`, by direct
/// separation tests. Pairs are grouped by intersection so each distinct
/// intersection costs one component computation.
pub fn reduced_clique_graph(g: &Graph) -> Result<ReducedCliqueGraph> {
    let nodes = maximal_cliques(g)?;
    Ok(reduced_clique_graph_on(g, nodes))
}

pub(crate) fn reduced_clique_graph_on(g: &Graph, nodes: Vec<VertexSet>) -> ReducedCliqueGraph {
    let n = g.vertex_count();
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, c) in nodes.iter().enumerate() {
        for x in c.iter() {
            holders[x].push(i);
        }
    }
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for h in &holders {
        for (k, &i) in h.iter().enumerate() {
            for &j in &h[k + 1..] {
                pairs.insert((i.min(j), i.max(j)));
            }
        }
    }
    let mut by_sep: HashMap<VertexSet, Vec<(usize, usize)>> = HashMap::new();
    for (i, j) in pairs {
        by_sep.entry(nodes[i].intersection(&nodes[j])).or_default().push((i, j));
    }
    let mut edges = Vec::new();
    let mut removed = vec![false; n];
    for (sep, group) in by_sep {
        for x in sep.iter() {
            removed[x] = true;
        }
        let (comp, _) = g.components_without(&removed);
        for (i, j) in group {
            let side = |c: &VertexSet| -> usize {
                let rest = c.difference(&sep);
                let first = comp[rest.as_slice()[0]];
                debug_assert!(
                    rest.len() > 8 || rest.iter().all(|x| comp[x] == first),
                    "a clique minus a separator lies in one component"
                );
                first
            };
            if side(&nodes[i]) != side(&nodes[j]) {
                edges.push(CliqueEdge {
                    a: i,
                    b: j,
                    label: sep.clone(),
                });
            }
        }
        for x in sep.iter() {
            removed[x] = false;
        }
    }
    edges.sort_by_key(|e| (e.a, e.b));
    ReducedCliqueGraph { nodes, edges }
}

/// Checks every clique-tree condition against `g`, reporting the first one
/// that fails.
pub fn verify_clique_tree(g: &Graph, t: &CliqueTree) -> Result<(), CliqueTreeViolation> {
    match is_chordal(g) {
        Err(_) => return Err(CliqueTreeViolation::GraphDisconnected),
        Ok(ChordalityCertificate::Hole(hole)) => return Err(CliqueTreeViolation::GraphNotChordal { hole }),
        Ok(ChordalityCertificate::Scheme(_)) => {}
    }
    let mut expected = maximal_cliques(g).expect("graph is chordal and connected");
    let mut actual = t.nodes.clone();
    expected.sort();
    actual.sort();
    if expected != actual {
        return Err(CliqueTreeViolation::CliquesMismatch);
    }
    t.check_structure()
}
