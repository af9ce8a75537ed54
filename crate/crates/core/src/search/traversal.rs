//! LexBFS by partition refinement and maximum cardinality search.

use std::collections::BTreeSet;

use crate::graph::Graph;

const NIL: usize = usize::MAX;

#[derive(Clone, Copy)]
struct Cell {
    head: usize,
    tail: usize,
    prev: usize,
    next: usize,
    // step in which this cell was last split, and the cell split off from it
    stamp: usize,
    twin: usize,
}

impl Cell {
    fn empty(prev: usize, next: usize) -> Self {
        Cell {
            head: NIL,
            tail: NIL,
            prev,
            next,
            stamp: NIL,
            twin: NIL,
        }
    }
}

/// Ordered partition of the unvisited vertices. Cells are doubly linked, and
/// so are the vertices inside each cell, so removing a vertex keeps the
/// relative order of the others.
struct Partition {
    cells: Vec<Cell>,
    first: usize,
    next: Vec<usize>,
    prev: Vec<usize>,
    cell_of: Vec<usize>,
}

impl Partition {
    fn new(order: &[usize], n: usize) -> Self {
        let mut p = Partition {
            cells: vec![Cell::empty(NIL, NIL)],
            first: 0,
            next: vec![NIL; n],
            prev: vec![NIL; n],
            cell_of: vec![0; n],
        };
        for &v in order {
            p.append(v, 0);
        }
        p
    }

    fn detach(&mut self, v: usize) {
        let c = self.cell_of[v];
        let (p, nx) = (self.prev[v], self.next[v]);
        if p != NIL {
            self.next[p] = nx;
        } else {
            self.cells[c].head = nx;
        }
        if nx != NIL {
            self.prev[nx] = p;
        } else {
            self.cells[c].tail = p;
        }
        self.prev[v] = NIL;
        self.next[v] = NIL;
        if self.cells[c].head == NIL {
            self.unlink(c);
        }
    }

    fn append(&mut self, v: usize, c: usize) {
        let tail = self.cells[c].tail;
        self.prev[v] = tail;
        self.next[v] = NIL;
        if tail != NIL {
            self.next[tail] = v;
        } else {
            self.cells[c].head = v;
        }
        self.cells[c].tail = v;
        self.cell_of[v] = c;
    }

    fn unlink(&mut self, c: usize) {
        let Cell { prev, next, .. } = self.cells[c];
        if prev != NIL {
            self.cells[prev].next = next;
        } else {
            self.first = next;
        }
        if next != NIL {
            self.cells[next].prev = prev;
        }
    }

    /// Cell placed immediately before `c`, created once per step.
    fn twin_before(&mut self, c: usize, step: usize) -> usize {
        if self.cells[c].stamp == step {
            return self.cells[c].twin;
        }
        let y = self.cells.len();
        let prev = self.cells[c].prev;
        self.cells.push(Cell::empty(prev, c));
        if prev != NIL {
            self.cells[prev].next = y;
        } else {
            self.first = y;
        }
        self.cells[c].prev = y;
        self.cells[c].stamp = step;
        self.cells[c].twin = y;
        y
    }
}

/// LexBFS where ties between equal labels go to the vertex listed earliest
/// in `priority` (which must be a permutation); the first vertex visited is
/// `priority[0]`.
pub(crate) fn lexbfs_by_priority(g: &Graph, priority: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    debug_assert_eq!(priority.len(), n);
    if n == 0 {
        return Vec::new();
    }

    // Neighbor lists re-sorted by priority rank, so refined cells stay in
    // priority order.
    let mut offset = vec![0usize; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + g.degree(v);
    }
    let mut fill = offset.clone();
    let mut ranked = vec![0usize; offset[n]];
    for &v in priority {
        for &w in g.neighbors(v) {
            ranked[fill[w]] = v;
            fill[w] += 1;
        }
    }

    let mut part = Partition::new(priority, n);
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = part.cells[part.first].head;
        part.detach(v);
        visited[v] = true;
        order.push(v);
        for &w in &ranked[offset[v]..offset[v + 1]] {
            if visited[w] {
                continue;
            }
            let x = part.cell_of[w];
            let y = part.twin_before(x, step);
            part.detach(w);
            part.append(w, y);
        }
    }
    order
}

/// Maximum cardinality search from `start`, ties to the smallest id.
pub(crate) fn mcs_order(g: &Graph, start: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n.max(1)];
    buckets[0].extend(0..n);
    let mut top = 0;
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = if step == 0 {
            start
        } else {
            *buckets[top].first().expect("top bucket is non-empty")
        };
        buckets[weight[v]].remove(&v);
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                buckets[weight[w]].remove(&w);
                weight[w] += 1;
                buckets[weight[w]].insert(w);
                top = top.max(weight[w]);
            }
        }
        while top > 0 && buckets[top].is_empty() {
            top -= 1;
        }
    }
    order
}
