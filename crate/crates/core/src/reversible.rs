//! Reversible elimination schemes and proper interval recognition.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, VertexOrdering};
use crate::search::{
    is_chordal, is_hole, is_simplicial_elimination_scheme, lexbfs, lexbfs_plus, ChordalityCertificate, SchemeCheck,
    SchemeViolation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

/// Result of checking an ordering in both directions. A backward violation
/// reports positions in the reversed ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReversibleCheck {
    Valid,
    Violation {
        direction: Direction,
        violation: SchemeViolation,
    },
}

impl ReversibleCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, ReversibleCheck::Valid)
    }
}

/// Whether `ord` and its reverse are both simplicial elimination schemes.
pub fn is_reversible_ordering(g: &Graph, ord: &VertexOrdering) -> Result<ReversibleCheck> {
    if let SchemeCheck::Violation(v) = is_simplicial_elimination_scheme(g, ord)? {
        return Ok(ReversibleCheck::Violation {
            direction: Direction::Forward,
            violation: v,
        });
    }
    if let SchemeCheck::Violation(v) = is_simplicial_elimination_scheme(g, &ord.reversed())? {
        return Ok(ReversibleCheck::Violation {
            direction: Direction::Backward,
            violation: v,
        });
    }
    Ok(ReversibleCheck::Valid)
}

/// Whether `N(v)` splits into at most two cliques, i.e. the complement of
/// the graph induced on `N(v)` is bipartite.
pub fn is_bisimplicial(g: &Graph, v: usize) -> bool {
    let nb = g.neighbors(v);
    let d = nb.len();
    let mut color = vec![u8::MAX; d];
    for s in 0..d {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            for j in 0..d {
                if i == j || g.has_edge(nb[i], nb[j]) {
                    continue;
                }
                if color[j] == u8::MAX {
                    color[j] = 1 - color[i];
                    queue.push_back(j);
                } else if color[j] == color[i] {
                    return false;
                }
            }
        }
    }
    true
}

/// A reversible ordering, or an induced structure that rules one out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "lowercase")]
pub enum ReversibilityCertificate {
    Ordering(VertexOrdering),
    /// Center first, then the three leaves.
    Claw(Vec<usize>),
    /// Triangle `a, b, c`, then the pendant vertices of `a`, `b`, `c`.
    Net(Vec<usize>),
    /// Triangle `a, b, c`, then the vertices on `ab`, `bc`, `ca`.
    Sun3(Vec<usize>),
    Hole(Vec<usize>),
}

impl ReversibilityCertificate {
    pub fn is_ordering(&self) -> bool {
        matches!(self, ReversibilityCertificate::Ordering(_))
    }

    /// Re-checks the certificate: orderings in both directions, witnesses
    /// by an isomorphism test against the named structure.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            ReversibilityCertificate::Ordering(o) => {
                matches!(is_reversible_ordering(g, o), Ok(ReversibleCheck::Valid))
            }
            ReversibilityCertificate::Claw(v) => induces(g, v, &patterns::claw()),
            ReversibilityCertificate::Net(v) => induces(g, v, &patterns::net()),
            ReversibilityCertificate::Sun3(v) => induces(g, v, &patterns::sun3()),
            ReversibilityCertificate::Hole(v) => is_hole(g, v),
        }
    }
}

/// Small named graphs.
pub mod patterns {
    use crate::graph::Graph;

    fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).expect("fixed pattern")
    }

    /// Center 0, leaves 1, 2, 3.
    pub fn claw() -> Graph {
        build(4, &[(0, 1), (0, 2), (0, 3)])
    }

    /// Triangle 0, 1, 2 with pendants 3–0, 4–1, 5–2.
    pub fn net() -> Graph {
        build(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
    }

    /// Triangle 0, 1, 2 with 3 on 01, 4 on 12, 5 on 20.
    pub fn sun3() -> Graph {
        build(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)],
        )
    }

    /// Triangle b, c, d with pendants a–b and e–c, where a..e = 0..4.
    pub fn bull() -> Graph {
        build(5, &[(0, 1), (1, 2), (1, 3), (2, 3), (2, 4)])
    }
}

/// Whether the listed distinct vertices induce a copy of `pattern`
/// (permutation search; intended for at most 6 vertices).
pub fn induces(g: &Graph, vertices: &[usize], pattern: &Graph) -> bool {
    let k = pattern.vertex_count();
    if vertices.len() != k || vertices.iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return false;
    }
    let mut image = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn place(g: &Graph, vs: &[usize], p: &Graph, image: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = image.len();
        if i == vs.len() {
            return true;
        }
        for j in 0..vs.len() {
            if used[j] {
                continue;
            }
            let fits = image
                .iter()
                .enumerate()
                .all(|(q, &w)| p.has_edge(i, q) == g.has_edge(vs[j], vs[w]));
            if fits {
                used[j] = true;
                image.push(j);
                if place(g, vs, p, image, used) {
                    return true;
                }
                image.pop();
                used[j] = false;
            }
        }
        false
    }
    place(g, vertices, pattern, &mut image, &mut used)
}

/// Whether every closed neighborhood occupies consecutive positions.
fn is_umbrella(g: &Graph, ord: &[usize]) -> bool {
    let mut pos = vec![0; ord.len()];
    for (i, &v) in ord.iter().enumerate() {
        pos[v] = i;
    }
    g.vertices().all(|v| {
        let (lo, hi) = g
            .neighbors(v)
            .iter()
            .fold((pos[v], pos[v]), |(lo, hi), &w| (lo.min(pos[w]), hi.max(pos[w])));
        hi - lo == g.degree(v)
    })
}

/// Proper interval recognition with certificates.
///
/// Three LexBFS sweeps (the second and third breaking ties by the previous
/// sweep, from its end) produce a candidate ordering, which is returned only
/// if its closed neighborhoods are consecutive and it is reversible. Any
/// failure falls back to a witness: a hole when the graph is not chordal,
/// otherwise an induced claw, net or 3-sun.
pub fn find_reversible_ordering(g: &Graph) -> Result<ReversibilityCertificate> {
    if let ChordalityCertificate::Hole(h) = is_chordal(g)? {
        return Ok(ReversibilityCertificate::Hole(h));
    }
    if g.vertex_count() == 0 {
        return Ok(ReversibilityCertificate::Ordering(VertexOrdering::new(Vec::new())));
    }
    let first = lexbfs(g, 0)?;
    let second = lexbfs_plus(g, &first)?;
    let third = lexbfs_plus(g, &second)?;
    if is_umbrella(g, third.as_slice()) && is_reversible_ordering(g, &third)?.is_valid() {
        let oriented = match (third.first(), third.last()) {
            (Some(a), Some(b)) if a > b => third.reversed(),
            _ => third,
        };
        return Ok(ReversibilityCertificate::Ordering(oriented));
    }
    if let Some(w) = find_claw(g) {
        return Ok(ReversibilityCertificate::Claw(w));
    }
    if let Some(w) = find_net(g) {
        return Ok(ReversibilityCertificate::Net(w));
    }
    if let Some(w) = find_sun3(g) {
        return Ok(ReversibilityCertificate::Sun3(w));
    }
    unreachable!("a chordal graph without claw, net or 3-sun is a proper interval graph")
}

pub fn is_proper_interval(g: &Graph) -> Result<bool> {
    Ok(find_reversible_ordering(g)?.is_ordering())
}

fn find_claw(g: &Graph) -> Option<Vec<usize>> {
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &c in &nb[j + 1..] {
                    if !g.has_edge(a, c) && !g.has_edge(b, c) {
                        return Some(vec![v, a, b, c]);
                    }
                }
            }
        }
    }
    None
}

fn triangles(g: &Graph) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
    g.vertices().flat_map(move |a| {
        g.neighbors(a)
            .iter()
            .copied()
            .filter(move |&b| b > a)
            .flat_map(move |b| {
                g.neighbors(b)
                    .iter()
                    .copied()
                    .filter(move |&c| c > b && g.has_edge(a, c))
                    .map(move |c| (a, b, c))
            })
    })
}

/// Neighbors of `x` adjacent to neither `y` nor `z` (and distinct from them).
fn private(g: &Graph, x: usize, y: usize, z: usize) -> Vec<usize> {
    g.neighbors(x)
        .iter()
        .copied()
        .filter(|&w| w != y && w != z && !g.has_edge(w, y) && !g.has_edge(w, z))
        .collect()
}

fn find_net(g: &Graph) -> Option<Vec<usize>> {
    for (a, b, c) in triangles(g) {
        let (pa, pb, pc) = (private(g, a, b, c), private(g, b, a, c), private(g, c, a, b));
        for &x in &pa {
            for &y in &pb {
                if g.has_edge(x, y) {
                    continue;
                }
                for &z in &pc {
                    if !g.has_edge(x, z) && !g.has_edge(y, z) {
                        return Some(vec![a, b, c, x, y, z]);
                    }
                }
            }
        }
    }
    None
}

/// Common neighbors of `x` and `y` not adjacent to `z`.
fn ear(g: &Graph, x: usize, y: usize, z: usize) -> Vec<usize> {
    g.neighbors(x)
        .iter()
        .copied()
        .filter(|&w| w != z && g.has_edge(w, y) && !g.has_edge(w, z))
        .collect()
}

fn find_sun3(g: &Graph) -> Option<Vec<usize>> {
    for (a, b, c) in triangles(g) {
        let (eab, ebc, eca) = (ear(g, a, b, c), ear(g, b, c, a), ear(g, c, a, b));
        for &x in &eab {
            for &y in &ebc {
                if g.has_edge(x, y) {
                    continue;
                }
                for &z in &eca {
                    if !g.has_edge(x, z) && !g.has_edge(y, z) {
                        return Some(vec![a, b, c, x, y, z]);
                    }
                }
            }
        }
    }
    None
}
