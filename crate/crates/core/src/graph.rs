//! Simple undirected graphs over dense vertex ids, plus the vertex-set and
//! ordering types every other module works with.

use std::borrow::Cow;
use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Sorts and deduplicates.
    pub fn from_vec(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// Caller guarantees `v` is strictly increasing.
    pub(crate) fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for &x in &self.0 {
            for &y in it.by_ref() {
                if y == x {
                    continue 'outer;
                }
                if y > x {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_proper_subset(&self, other: &VertexSet) -> bool {
        self.len() < other.len() && self.is_subset(other)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        VertexSet(out)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| !other.contains(v)).collect())
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        VertexSet::from_vec(v)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vec(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(a: [usize; N]) -> Self {
        VertexSet::from_vec(a.to_vec())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A sequence of vertex ids. Operations that need a permutation call
/// [`VertexOrdering::positions`], which validates it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexOrdering(Vec<usize>);

impl VertexOrdering {
    pub fn new(v: Vec<usize>) -> Self {
        VertexOrdering(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn reversed(&self) -> VertexOrdering {
        VertexOrdering(self.0.iter().rev().copied().collect())
    }

    /// Inverse permutation: `positions()[v]` is the index of `v`.
    pub fn positions(&self, n: usize) -> Result<Vec<usize>> {
        if self.0.len() != n {
            return Err(Error::NotPermutation(format!(
                "expected {n} vertices, got {}",
                self.0.len()
            )));
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.0.iter().enumerate() {
            if v >= n {
                return Err(Error::NotPermutation(format!("vertex {v} out of range")));
            }
            if pos[v] != usize::MAX {
                return Err(Error::NotPermutation(format!("vertex {v} repeated")));
            }
            pos[v] = i;
        }
        Ok(pos)
    }
}

impl std::ops::Index<usize> for VertexOrdering {
    type Output = usize;
    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

/// Finite simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted, so adjacency tests are a binary search and
/// neighborhood intersections are linear merges. Graphs are immutable once
/// built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "crate::io::GraphDoc", try_from = "crate::io::GraphDoc")]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
    edge_count: usize,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
            edge_count: 0,
        }
    }

    /// Duplicate edges are ignored; self-loops and out-of-range ids are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        let g = Graph {
            adj,
            labels: None,
            edge_count: edge_count / 2,
        };
        debug_assert!(g.invariants_hold());
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.adj.len() {
            return Err(Error::Precondition(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.adj.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Each edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label if present, else the id.
    pub fn label(&self, v: usize) -> Cow<'_, str> {
        match &self.labels {
            Some(l) => Cow::Borrowed(l[v].as_str()),
            None => Cow::Owned(v.to_string()),
        }
    }

    pub fn vertex_by_label(&self, name: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|s| s == name),
            None => name.parse().ok().filter(|&v| v < self.adj.len()),
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.as_slice().last() {
            Some(&v) if v >= self.adj.len() => Err(Error::VertexOutOfRange(v)),
            _ => Ok(()),
        }
    }

    fn invariants_hold(&self) -> bool {
        self.adj.iter().enumerate().all(|(u, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list
                    .iter()
                    .all(|&v| v < self.adj.len() && v != u && self.adj[v].binary_search(&u).is_ok())
        })
    }

    /// Component id per vertex, skipping vertices where `removed` is set
    /// (those get `usize::MAX`). Returns the ids and the component count.
    pub fn components_without(&self, removed: &[bool]) -> (Vec<usize>, usize) {
        let n = self.adj.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if removed[s] || comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !removed[w] && comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Vertex lists of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let (comp, count) = self.components_without(&vec![false; self.adj.len()]);
        let mut out = vec![Vec::new(); count];
        for (v, &c) in comp.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.adj.len() <= 1 || self.components_without(&vec![false; self.adj.len()]).1 == 1
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Subgraph induced on `vertices` (in the given order). Returns the
    /// subgraph and the map from new ids to old ids. Labels carry over.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut new_id = vec![usize::MAX; self.adj.len()];
        for (i, &v) in vertices.iter().enumerate() {
            new_id[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        let mut edge_count = 0;
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if new_id[w] != usize::MAX {
                    adj[i].push(new_id[w]);
                }
            }
            adj[i].sort_unstable();
            edge_count += adj[i].len();
        }
        let labels = Some(vertices.iter().map(|&v| self.label(v).into_owned()).collect());
        (
            Graph {
                adj,
                labels,
                edge_count: edge_count / 2,
            },
            vertices.to_vec(),
        )
    }
}

/// True iff every pair of vertices in `s` is adjacent.
pub fn is_clique(g: &Graph, s: &VertexSet) -> bool {
    let v = s.as_slice();
    v.iter()
        .enumerate()
        .all(|(i, &a)| v[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// True iff `a` and `b` lie in different components of `g - s`.
pub fn separates(g: &Graph, s: &VertexSet, a: usize, b: usize) -> Result<bool> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    g.check_set(s)?;
    if a == b {
        return Err(Error::Precondition("separated vertices must differ".into()));
    }
    if s.contains(a) || s.contains(b) {
        return Err(Error::Precondition(format!(
            "vertices {a} and {b} must lie outside the separator"
        )));
    }
    let mut seen = vec![false; g.vertex_count()];
    for v in s.iter() {
        seen[v] = true;
    }
    seen[a] = true;
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if w == b {
                return Ok(false);
            }
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    Ok(true)
}

/// Components of `g - s` whose neighborhood is all of `s`.
pub fn full_components(g: &Graph, s: &VertexSet) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut removed = vec![false; n];
    for v in s.iter() {
        removed[v] = true;
    }
    let (comp, count) = g.components_without(&removed);
    let mut members = vec![Vec::new(); count];
    for v in 0..n {
        if comp[v] != usize::MAX {
            members[comp[v]].push(v);
        }
    }
    // touching[c]: number of separator vertices adjacent to component c
    let mut touching = vec![0usize; count];
    let mut stamp = vec![usize::MAX; count];
    for (i, x) in s.iter().enumerate() {
        for &w in g.neighbors(x) {
            let c = comp[w];
            if c != usize::MAX && stamp[c] != i {
                stamp[c] = i;
                touching[c] += 1;
            }
        }
    }
    members
        .into_iter()
        .enumerate()
        .filter(|&(c, _)| touching[c] == s.len())
        .map(|(_, m)| m)
        .collect()
}

/// `s` is a minimal separator iff `g - s` has at least two full components.
pub fn is_minimal_separator(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_set(s)?;
    g.require_connected()?;
    Ok(full_components(g, s).len() >= 2)
}
