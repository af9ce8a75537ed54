//! Test corpora: labeled exhaustive enumeration, one-per-shape chordal
//! enumeration, and seeded random graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generate::{random_chordal, random_connected};
use crate::graph::Graph;

use super::bits::{is_chordal_masks, is_connected_masks, masks_of};

/// Largest `n` for labeled exhaustive enumeration (2^28 edge subsets).
pub const EXHAUSTIVE_LIMIT: usize = 8;
/// Largest `n` for chordal enumeration up to relabeling.
pub const CHORDAL_CLASSES_LIMIT: usize = 9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum CorpusMode {
    /// Every labeled graph on `n` vertices for each `n` in range.
    Exhaustive { n_min: usize, n_max: usize },
    /// Connected chordal graphs whose identity order is a LexBFS order and
    /// whose earlier neighborhoods are cliques. Every connected chordal
    /// graph is isomorphic to at least one of them; some shapes repeat.
    ChordalClasses { n_min: usize, n_max: usize },
    /// `count` graphs with `n` uniform in range. With the chordal filter the
    /// chordal generator is used, otherwise a random connected graph with
    /// edge probability `density`.
    Random {
        count: usize,
        n_min: usize,
        n_max: usize,
        density: f64,
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filters {
    pub connected: bool,
    pub chordal: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusSpec {
    #[serde(flatten)]
    pub mode: CorpusMode,
    #[serde(default)]
    pub filters: Filters,
}

impl CorpusSpec {
    pub fn exhaustive(n_min: usize, n_max: usize, filters: Filters) -> Self {
        CorpusSpec {
            mode: CorpusMode::Exhaustive { n_min, n_max },
            filters,
        }
    }

    pub fn chordal_classes(n_min: usize, n_max: usize) -> Self {
        CorpusSpec {
            mode: CorpusMode::ChordalClasses { n_min, n_max },
            filters: Filters {
                connected: true,
                chordal: true,
            },
        }
    }

    pub fn random(count: usize, n_min: usize, n_max: usize, density: f64, seed: u64, filters: Filters) -> Self {
        CorpusSpec {
            mode: CorpusMode::Random {
                count,
                n_min,
                n_max,
                density,
                seed,
            },
            filters,
        }
    }

    fn check_budget(&self) -> Result<()> {
        match self.mode {
            CorpusMode::Exhaustive { n_max, .. } if n_max > EXHAUSTIVE_LIMIT => Err(Error::OverBudget(format!(
                "labeled exhaustive enumeration is limited to n <= {EXHAUSTIVE_LIMIT}"
            ))),
            CorpusMode::ChordalClasses { n_max, .. } if n_max > CHORDAL_CLASSES_LIMIT => Err(Error::OverBudget(
                format!("chordal enumeration is limited to n <= {CHORDAL_CLASSES_LIMIT}"),
            )),
            CorpusMode::Random { n_min, n_max, .. } if n_min == 0 || n_min > n_max => {
                Err(Error::Precondition(format!("bad size range {n_min}..={n_max}")))
            }
            _ => Ok(()),
        }
    }
}

pub type GraphStream = Box<dyn Iterator<Item = Graph> + Send>;

/// Streams the graphs of a corpus, in a fixed order.
pub fn enumerate_graphs(spec: &CorpusSpec) -> Result<GraphStream> {
    spec.check_budget()?;
    let filters = spec.filters;
    Ok(match spec.mode.clone() {
        CorpusMode::Exhaustive { n_min, n_max } => {
            Box::new((n_min..=n_max).flat_map(move |n| Exhaustive::new(n, filters)))
        }
        CorpusMode::ChordalClasses { n_min, n_max } => Box::new((n_min.max(1)..=n_max).flat_map(ChordalClasses::new)),
        CorpusMode::Random {
            count,
            n_min,
            n_max,
            density,
            seed,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Box::new((0..count).filter_map(move |_| {
                let n = rng.gen_range(n_min..=n_max);
                let s: u64 = rng.gen();
                let g = if filters.chordal {
                    random_chordal(n, density, s)
                } else {
                    random_connected(n, density, s)
                };
                let masks = masks_of(&g);
                (!filters.chordal || is_chordal_masks(&masks)).then_some(g)
            }))
        }
    })
}

struct Exhaustive {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
    filters: Filters,
}

impl Exhaustive {
    fn new(n: usize, filters: Filters) -> Self {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        let end = 1u64 << pairs.len();
        Exhaustive {
            n,
            pairs,
            next: 0,
            end,
            filters,
        }
    }
}

impl Iterator for Exhaustive {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let bits = self.next;
            self.next += 1;
            let mut masks = vec![0u64; self.n];
            for (i, &(u, v)) in self.pairs.iter().enumerate() {
                if bits >> i & 1 == 1 {
                    masks[u] |= 1 << v;
                    masks[v] |= 1 << u;
                }
            }
            if self.filters.connected && !is_connected_masks(&masks) {
                continue;
            }
            if self.filters.chordal && !is_chordal_masks(&masks) {
                continue;
            }
            let edges = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e);
            return Some(Graph::from_edges(self.n, edges).expect("pairs are valid"));
        }
        None
    }
}

/// Depth-first enumeration of attach sets. Vertex `c` attaches to a
/// non-empty clique `A` of earlier vertices such that the identity stays a
/// LexBFS order: for `a < b < c` with `a ∈ A`, `b ∉ A` and `a`, `b`
/// non-adjacent, some `d < a` is adjacent to `b` and not in `A`.
struct ChordalClasses {
    n: usize,
    adj: Vec<u64>,
    // options[c] and chosen index for vertices 1..n
    options: Vec<Vec<u64>>,
    cursor: Vec<usize>,
    started: bool,
}

impl ChordalClasses {
    fn new(n: usize) -> Self {
        ChordalClasses {
            n,
            adj: vec![0; n],
            options: vec![Vec::new(); n],
            cursor: vec![0; n],
            started: false,
        }
    }

    fn valid_attachments(&self, c: usize) -> Vec<u64> {
        let mut out = Vec::new();
        for attach in 1u64..(1 << c) {
            let is_clique = (0..c)
                .filter(|&x| attach >> x & 1 == 1)
                .all(|x| attach & !(self.adj[x] | 1 << x) == 0);
            if is_clique && self.lexbfs_consistent(c, attach) {
                out.push(attach);
            }
        }
        out
    }

    fn lexbfs_consistent(&self, c: usize, attach: u64) -> bool {
        for a in 0..c {
            if attach >> a & 1 == 0 {
                continue;
            }
            for b in a + 1..c {
                if attach >> b & 1 == 1 || self.adj[a] >> b & 1 == 1 {
                    continue;
                }
                let witness = (0..a).any(|d| self.adj[d] >> b & 1 == 1 && attach >> d & 1 == 0);
                if !witness {
                    return false;
                }
            }
        }
        true
    }

    fn set(&mut self, c: usize, attach: u64) {
        self.adj[c] = attach;
        for x in 0..c {
            if attach >> x & 1 == 1 {
                self.adj[x] |= 1 << c;
            } else {
                self.adj[x] &= !(1 << c);
            }
        }
    }

    fn graph(&self) -> Graph {
        let mut edges = Vec::new();
        for c in 1..self.n {
            for x in 0..c {
                if self.adj[c] >> x & 1 == 1 {
                    edges.push((x, c));
                }
            }
        }
        Graph::from_edges(self.n, edges).expect("valid attachments")
    }

    /// Fills options and cursors from vertex `c` on; false if some vertex
    /// has no valid attachment.
    fn descend(&mut self, mut c: usize) -> bool {
        while c < self.n {
            let opts = self.valid_attachments(c);
            if opts.is_empty() {
                return false;
            }
            self.set(c, opts[0]);
            self.options[c] = opts;
            self.cursor[c] = 0;
            c += 1;
        }
        true
    }
}

impl Iterator for ChordalClasses {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if !self.started {
            self.started = true;
            if self.n == 0 {
                return None;
            }
            if self.descend(1) {
                return Some(self.graph());
            }
        }
        // advance the deepest vertex that still has options
        let mut c = self.n;
        loop {
            if c <= 1 {
                return None;
            }
            c -= 1;
            if self.cursor[c] + 1 < self.options[c].len() {
                self.cursor[c] += 1;
                let attach = self.options[c][self.cursor[c]];
                self.set(c, attach);
                if self.descend(c + 1) {
                    return Some(self.graph());
                }
                c = self.n;
            }
        }
    }
}
