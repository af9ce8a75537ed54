//! Graph searches, elimination-scheme checks and chordality recognition.

mod traversal;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_clique, Graph, VertexOrdering, VertexSet};

pub(crate) use traversal::lexbfs_by_priority;

/// LexBFS visit order from `start`, ties broken by smallest vertex id.
pub fn lexbfs(g: &Graph, start: usize) -> Result<VertexOrdering> {
    g.check_vertex(start)?;
    g.require_connected()?;
    let mut priority = Vec::with_capacity(g.vertex_count());
    priority.push(start);
    priority.extend(g.vertices().filter(|&v| v != start));
    Ok(VertexOrdering::new(lexbfs_by_priority(g, &priority)))
}

/// LexBFS+ sweep: ties go to the vertex appearing latest in `previous`.
pub fn lexbfs_plus(g: &Graph, previous: &VertexOrdering) -> Result<VertexOrdering> {
    previous.positions(g.vertex_count())?;
    g.require_connected()?;
    let priority: Vec<usize> = previous.as_slice().iter().rev().copied().collect();
    Ok(VertexOrdering::new(lexbfs_by_priority(g, &priority)))
}

/// Maximum cardinality search visit order from `start`, ties broken by
/// smallest vertex id.
pub fn mcs(g: &Graph, start: usize) -> Result<VertexOrdering> {
    g.check_vertex(start)?;
    g.require_connected()?;
    Ok(VertexOrdering::new(traversal::mcs_order(g, start)))
}

/// First position where an ordering stops being a simplicial elimination
/// scheme: `vertex` sits at `position` and has the non-adjacent later
/// neighbors `pair`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeViolation {
    pub position: usize,
    pub vertex: usize,
    pub pair: (usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemeCheck {
    Valid,
    Violation(SchemeViolation),
}

impl SchemeCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, SchemeCheck::Valid)
    }
}

/// Checks that every vertex's later neighbors form a clique.
///
/// The common case runs in O(n + m): each vertex only needs its later
/// neighbors to be adjacent to its earliest later neighbor (its parent),
/// and those requirements are checked per parent with one marking pass.
/// When that fails, an exact scan locates the first failing position.
pub fn is_simplicial_elimination_scheme(g: &Graph, ord: &VertexOrdering) -> Result<SchemeCheck> {
    let pos = ord.positions(g.vertex_count())?;
    if parent_test(g, ord.as_slice(), &pos) {
        return Ok(SchemeCheck::Valid);
    }
    Ok(first_violation(g, ord.as_slice(), &pos)
        .map(SchemeCheck::Violation)
        .unwrap_or(SchemeCheck::Valid))
}

fn parent_test(g: &Graph, order: &[usize], pos: &[usize]) -> bool {
    let n = order.len();
    let mut required: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &v in order {
        let later = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]);
        let Some(parent) = later.clone().min_by_key(|&w| pos[w]) else {
            continue;
        };
        required[parent].extend(later.filter(|&w| w != parent));
    }
    let mut mark = vec![usize::MAX; n];
    for (p, req) in required.iter().enumerate() {
        if req.is_empty() {
            continue;
        }
        for &w in g.neighbors(p) {
            mark[w] = p;
        }
        if req.iter().any(|&w| mark[w] != p) {
            return false;
        }
    }
    true
}

fn first_violation(g: &Graph, order: &[usize], pos: &[usize]) -> Option<SchemeViolation> {
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > i).collect();
        for (k, &a) in later.iter().enumerate() {
            for &b in &later[k + 1..] {
                if !g.has_edge(a, b) {
                    return Some(SchemeViolation {
                        position: i,
                        vertex: v,
                        pair: (a, b),
                    });
                }
            }
        }
    }
    None
}

/// Either a simplicial elimination scheme or a chordless cycle of length at
/// least four.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "lowercase")]
pub enum ChordalityCertificate {
    Scheme(VertexOrdering),
    Hole(Vec<usize>),
}

impl ChordalityCertificate {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalityCertificate::Scheme(_))
    }

    /// Re-checks the certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            ChordalityCertificate::Scheme(ord) => {
                matches!(is_simplicial_elimination_scheme(g, ord), Ok(SchemeCheck::Valid))
            }
            ChordalityCertificate::Hole(cycle) => is_hole(g, cycle),
        }
    }
}

/// Recognizes chordal graphs: the reversed LexBFS order from vertex 0 is
/// checked, and a hole is extracted from the first violation.
pub fn is_chordal(g: &Graph) -> Result<ChordalityCertificate> {
    g.require_connected()?;
    if g.vertex_count() == 0 {
        return Ok(ChordalityCertificate::Scheme(VertexOrdering::new(Vec::new())));
    }
    let scheme = lexbfs(g, 0)?.reversed();
    match is_simplicial_elimination_scheme(g, &scheme)? {
        SchemeCheck::Valid => Ok(ChordalityCertificate::Scheme(scheme)),
        SchemeCheck::Violation(SchemeViolation {
            vertex, pair: (a, b), ..
        }) => {
            let hole = hole_through(g, vertex, a, b)
                .or_else(|| find_hole(g))
                .expect("a failed LexBFS scheme implies a hole");
            Ok(ChordalityCertificate::Hole(hole))
        }
    }
}

/// Shortcut for callers that need a scheme and treat a hole as an error.
pub fn require_chordal(g: &Graph) -> Result<VertexOrdering> {
    match is_chordal(g)? {
        ChordalityCertificate::Scheme(s) => Ok(s),
        ChordalityCertificate::Hole(hole) => Err(Error::NotChordal { hole }),
    }
}

/// Hole through `v` and its non-adjacent neighbors `a`, `b`: a shortest
/// `a`–`b` path avoiding the rest of `N[v]` closes a chordless cycle.
pub(crate) fn hole_through(g: &Graph, v: usize, a: usize, b: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &w in g.neighbors(v) {
        blocked[w] = true;
    }
    blocked[a] = false;
    blocked[b] = false;
    let mut parent = vec![usize::MAX; n];
    parent[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            break;
        }
        for &y in g.neighbors(x) {
            if !blocked[y] && parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    if parent[b] == usize::MAX {
        return None;
    }
    let mut cycle = vec![v];
    let mut path = vec![b];
    let mut x = b;
    while x != a {
        x = parent[x];
        path.push(x);
    }
    cycle.extend(path.into_iter().rev());
    Some(normalize_cycle(cycle))
}

/// Any hole of `g`, trying every vertex with a non-adjacent neighbor pair.
pub(crate) fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !g.has_edge(a, b) {
                    if let Some(h) = hole_through(g, v, a, b) {
                        return Some(h);
                    }
                }
            }
        }
    }
    None
}

/// Rotates a cycle to start at its smallest vertex, oriented so the second
/// vertex is smaller than the last.
pub fn normalize_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    if cycle.is_empty() {
        return cycle;
    }
    let k = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap_or(0);
    cycle.rotate_left(k);
    if cycle.len() > 2 && cycle[1] > cycle[cycle.len() - 1] {
        cycle[1..].reverse();
    }
    cycle
}

/// True iff `cycle` lists at least four distinct vertices forming an
/// induced cycle in that order.
pub fn is_hole(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 || cycle.iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    let mut seen = cycle.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != k {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

pub fn is_simplicial(g: &Graph, v: usize) -> bool {
    is_clique(g, &VertexSet::from_sorted(g.neighbors(v).to_vec()))
}

/// Vertices whose open neighborhood is a clique.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    VertexSet::from_sorted(g.vertices().filter(|&v| is_simplicial(g, v)).collect())
}
