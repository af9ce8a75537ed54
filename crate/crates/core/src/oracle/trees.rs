//! All maximum-weight spanning trees of the clique intersection graph.
//!
//! Edges are processed by weight from heaviest to lightest. At each weight,
//! vertices joined by strictly heavier edges are contracted, and every
//! maximum spanning tree picks a spanning forest of the remaining
//! multigraph at that weight, independently of the other weights. The trees
//! are the products of those per-weight choices.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use crate::clique_tree::CliqueTree;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::separators::{brute_maximal_cliques, brute_minimal_separators, extremal_separators, SeparatorMode};

/// Materialized enumeration limit.
pub const TREE_LIMIT: usize = 100_000;
/// Limit for searches that visit trees one at a time without storing them.
pub const VISIT_LIMIT: u128 = 20_000_000;

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Candidate edge between cliques `a < b` with its weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Candidate {
    a: usize,
    b: usize,
    weight: usize,
    level: usize,
    /// Contracted endpoints at its level; equal for edges in no tree.
    ca: usize,
    cb: usize,
}

impl Candidate {
    fn usable(&self) -> bool {
        self.ca != self.cb
    }
}

/// Spanning-tree structure of the clique intersection graph of `g`.
pub struct MaxSpanningTrees {
    cliques: Vec<VertexSet>,
    candidates: Vec<Candidate>,
    groups: Vec<Group>,
    connected: bool,
}

/// A connected group of usable same-level edges. Every maximum spanning
/// tree restricts to a spanning tree of each group.
struct Group {
    edges: Vec<usize>,
    nodes: usize,
    /// Spanning trees of the group, by the matrix-tree theorem.
    count: u128,
}

impl MaxSpanningTrees {
    /// Counting is exact (saturating at `u128::MAX`); trees are only listed
    /// when visited.
    pub fn new(g: &Graph) -> Result<Self> {
        let cliques = brute_maximal_cliques(g);
        let k = cliques.len();
        let mut candidates = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let w = cliques[i].intersection(&cliques[j]).len();
                if w > 0 {
                    candidates.push(Candidate {
                        a: i,
                        b: j,
                        weight: w,
                        level: 0,
                        ca: 0,
                        cb: 0,
                    });
                }
            }
        }
        candidates.sort_by(|x, y| y.weight.cmp(&x.weight).then((x.a, x.b).cmp(&(y.a, y.b))));

        let mut dsu = Dsu::new(k);
        let mut groups = Vec::new();
        let mut start = 0;
        let mut level = 0;
        while start < candidates.len() {
            let w = candidates[start].weight;
            let end = start + candidates[start..].iter().take_while(|c| c.weight == w).count();
            for c in &mut candidates[start..end] {
                c.level = level;
                c.ca = dsu.find(c.a);
                c.cb = dsu.find(c.b);
            }
            // connected groups of usable edges at this level
            let mut local = Dsu::new(k);
            for c in &candidates[start..end] {
                if c.usable() {
                    local.union(c.ca, c.cb);
                }
            }
            let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for (i, &c) in candidates.iter().enumerate().take(end).skip(start) {
                if c.usable() {
                    by_root.entry(local.find(c.ca)).or_default().push(i);
                }
            }
            for edges in by_root.into_values() {
                groups.push(Group::new(&candidates, edges));
            }
            for c in &candidates[start..end] {
                dsu.union(c.a, c.b);
            }
            start = end;
            level += 1;
        }
        let root = if k > 0 { dsu.find(0) } else { 0 };
        let connected = (0..k).all(|i| dsu.find(i) == root);
        Ok(MaxSpanningTrees {
            cliques,
            candidates,
            groups,
            connected,
        })
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    /// Whether the clique intersection graph is connected.
    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn count(&self) -> u128 {
        if !self.connected {
            return 0;
        }
        self.groups.iter().fold(1u128, |acc, g| acc.saturating_mul(g.count))
    }

    /// Weight of a maximum spanning tree.
    pub fn max_weight(&self) -> usize {
        let mut total = 0;
        for g in &self.groups {
            total += (g.nodes - 1) * self.candidates[g.edges[0]].weight;
        }
        total
    }

    /// Calls `f` with the clique pairs of each maximum spanning tree.
    pub fn visit<F>(&self, mut f: F) -> Result<()>
    where
        F: FnMut(&[(usize, usize)]) -> ControlFlow<()>,
    {
        let total = self.count();
        if total > VISIT_LIMIT {
            return Err(Error::OverBudget(format!("{total} maximum spanning trees")));
        }
        if !self.connected {
            return Ok(());
        }
        let lists: Vec<Vec<Vec<usize>>> = self
            .groups
            .iter()
            .map(|g| spanning_trees(&self.candidates, &g.edges))
            .collect::<Result<_>>()?;
        let mut cursor = vec![0usize; self.groups.len()];
        let mut pairs = Vec::with_capacity(self.cliques.len().saturating_sub(1));
        loop {
            pairs.clear();
            for (g, &c) in lists.iter().zip(&cursor) {
                pairs.extend(g[c].iter().map(|&i| (self.candidates[i].a, self.candidates[i].b)));
            }
            if f(&pairs).is_break() {
                return Ok(());
            }
            let mut i = 0;
            loop {
                if i == cursor.len() {
                    return Ok(());
                }
                cursor[i] += 1;
                if cursor[i] < lists[i].len() {
                    break;
                }
                cursor[i] = 0;
                i += 1;
            }
        }
    }

    /// Every maximum spanning tree, at most [`TREE_LIMIT`] of them.
    pub fn trees(&self) -> Result<Vec<CliqueTree>> {
        let total = self.count();
        if total > TREE_LIMIT as u128 {
            return Err(Error::OverBudget(format!(
                "{total} maximum spanning trees exceed the limit of {TREE_LIMIT}"
            )));
        }
        let mut out = Vec::with_capacity(total as usize);
        self.visit(|pairs| {
            let t = CliqueTree::with_intersection_labels(self.cliques.clone(), pairs).expect("pairs index cliques");
            out.push(t);
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    fn canonical(&self, a: usize, b: usize) -> (VertexSet, VertexSet) {
        let (x, y) = (self.cliques[a].clone(), self.cliques[b].clone());
        if x <= y {
            (x, y)
        } else {
            (y, x)
        }
    }

    /// Union of the edge sets of all maximum spanning trees.
    pub fn union_edges(&self) -> BTreeSet<(VertexSet, VertexSet)> {
        self.candidates
            .iter()
            .filter(|c| c.usable())
            .map(|c| self.canonical(c.a, c.b))
            .collect()
    }

    fn candidate(&self, a: usize, b: usize) -> Option<&Candidate> {
        let (a, b) = (a.min(b), a.max(b));
        self.candidates.iter().find(|c| c.a == a && c.b == b)
    }

    /// Whether some maximum spanning tree contains both clique pairs.
    pub fn co_occur(&self, e: (usize, usize), f: (usize, usize)) -> bool {
        let (Some(x), Some(y)) = (self.candidate(e.0, e.1), self.candidate(f.0, f.1)) else {
            return false;
        };
        if !x.usable() || !y.usable() {
            return false;
        }
        if x == y || x.level != y.level {
            return true;
        }
        let ends = |c: &Candidate| (c.ca.min(c.cb), c.ca.max(c.cb));
        ends(x) != ends(y)
    }
}

impl Group {
    fn new(candidates: &[Candidate], edges: Vec<usize>) -> Self {
        let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
        for &i in &edges {
            for v in [candidates[i].ca, candidates[i].cb] {
                let next = ids.len();
                ids.entry(v).or_insert(next);
            }
        }
        let n = ids.len();
        // reduced Laplacian: drop the row and column of local node 0
        let mut lap = vec![vec![0i128; n - 1]; n - 1];
        for &i in &edges {
            let (a, b) = (ids[&candidates[i].ca], ids[&candidates[i].cb]);
            for (x, y) in [(a, b), (b, a)] {
                if x > 0 {
                    lap[x - 1][x - 1] += 1;
                    if y > 0 {
                        lap[x - 1][y - 1] -= 1;
                    }
                }
            }
        }
        let count = determinant(lap).map_or(u128::MAX, |d| d as u128);
        Group { edges, nodes: n, count }
    }
}

/// Fraction-free (Bareiss) determinant; `None` on overflow.
fn determinant(mut m: Vec<Vec<i128>>) -> Option<i128> {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return Some(0);
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j]
                    .checked_mul(m[k][k])?
                    .checked_sub(m[i][k].checked_mul(m[k][j])?)?;
                m[i][j] = v / prev;
            }
        }
        prev = m[k][k];
    }
    Some(if n == 0 { 1 } else { sign * m[n - 1][n - 1] })
}

fn spanning_trees(candidates: &[Candidate], edges: &[usize]) -> Result<Vec<Vec<usize>>> {
    let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
    for &i in edges {
        for v in [candidates[i].ca, candidates[i].cb] {
            let next = ids.len();
            ids.entry(v).or_insert(next);
        }
    }
    let local: Vec<(usize, usize)> = edges
        .iter()
        .map(|&i| (ids[&candidates[i].ca], ids[&candidates[i].cb]))
        .collect();
    let n = ids.len();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    grow(&local, n, 0, &mut chosen, &mut out)?;
    Ok(out
        .into_iter()
        .map(|t: Vec<usize>| t.into_iter().map(|j| edges[j]).collect())
        .collect())
}

fn connects(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    let mut d = Dsu::new(n);
    let mut parts = n;
    for (a, b) in edges {
        if d.union(a, b) {
            parts -= 1;
        }
    }
    parts == 1
}

fn grow(
    edges: &[(usize, usize)],
    n: usize,
    at: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) -> Result<()> {
    if chosen.len() + 1 == n {
        if out.len() as u128 >= VISIT_LIMIT {
            return Err(Error::OverBudget(
                "too many spanning forests in one weight class".into(),
            ));
        }
        out.push(chosen.clone());
        return Ok(());
    }
    if at == edges.len() {
        return Ok(());
    }
    let acyclic = {
        let mut d = Dsu::new(n);
        chosen.iter().all(|&j| d.union(edges[j].0, edges[j].1)) && d.union(edges[at].0, edges[at].1)
    };
    if acyclic {
        chosen.push(at);
        grow(edges, n, at + 1, chosen, out)?;
        chosen.pop();
    }
    let still_spans = connects(
        n,
        chosen.iter().map(|&j| edges[j]).chain(edges[at + 1..].iter().copied()),
    );
    if still_spans {
        grow(edges, n, at + 1, chosen, out)?;
    }
    Ok(())
}

/// Every maximum spanning tree of the clique intersection graph.
pub fn enumerate_max_clique_trees(g: &Graph) -> Result<Vec<CliqueTree>> {
    MaxSpanningTrees::new(g)?.trees()
}

/// Whether some spanning tree of the clique intersection graph reaches the
/// weight bound Σₓ (cₓ − 1), i.e. whether a clique tree exists.
pub fn clique_tree_exists(g: &Graph) -> bool {
    let cliques = brute_maximal_cliques(g);
    let mut count: BTreeMap<usize, usize> = BTreeMap::new();
    for c in &cliques {
        for x in c.iter() {
            *count.entry(x).or_insert(0) += 1;
        }
    }
    let bound: usize = count.values().map(|c| c - 1).sum();
    let mut pairs = Vec::new();
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            let w = cliques[i].intersection(&cliques[j]).len();
            if w > 0 {
                pairs.push((w, i, j));
            }
        }
    }
    pairs.sort_by_key(|p| std::cmp::Reverse(p.0));
    let mut d = Dsu::new(cliques.len());
    let (mut weight, mut joined) = (0, 0);
    for (w, i, j) in pairs {
        if d.union(i, j) {
            weight += w;
            joined += 1;
        }
    }
    joined + 1 == cliques.len() && weight == bound
}

fn leaf_labels(cliques: &[VertexSet], pairs: &[(usize, usize)], mut f: impl FnMut(usize, VertexSet)) {
    let mut degree = vec![0usize; cliques.len()];
    let mut incident = vec![usize::MAX; cliques.len()];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        degree[a] += 1;
        degree[b] += 1;
        incident[a] = i;
        incident[b] = i;
    }
    for c in 0..cliques.len() {
        if degree[c] == 1 {
            let (a, b) = pairs[incident[c]];
            f(c, cliques[a].intersection(&cliques[b]));
        }
    }
}

/// Vertices of `C − S` over all trees and leaves `C` hanging on an
/// inclusion-maximal separator `S`; all vertices for a single clique.
pub fn minmax_simplicial_by_enumeration(g: &Graph) -> Result<VertexSet> {
    let mst = MaxSpanningTrees::new(g)?;
    if mst.cliques().len() == 1 {
        return Ok(mst.cliques()[0].clone());
    }
    let seps = brute_minimal_separators(g, SeparatorMode::Generation)?;
    let (max, _) = extremal_separators(&seps);
    let mut out = BTreeSet::new();
    mst.visit(|pairs| {
        leaf_labels(mst.cliques(), pairs, |c, s| {
            if max.contains(&s) {
                out.extend(mst.cliques()[c].difference(&s).iter());
            }
        });
        ControlFlow::Continue(())
    })?;
    Ok(out.into_iter().collect())
}

/// Whether some tree has a leaf hanging on an inclusion-minimal separator;
/// `None` for a single clique.
pub fn has_minmin_pending_by_enumeration(g: &Graph) -> Result<Option<bool>> {
    let mst = MaxSpanningTrees::new(g)?;
    if mst.cliques().len() == 1 {
        return Ok(None);
    }
    let seps = brute_minimal_separators(g, SeparatorMode::Generation)?;
    let (_, min) = extremal_separators(&seps);
    let mut found = false;
    mst.visit(|pairs| {
        leaf_labels(mst.cliques(), pairs, |_, s| found |= min.contains(&s));
        if found {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(Some(found))
}
