//! Seeded random graph generators for test corpora and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Random connected chordal graph on `n` vertices.
///
/// Vertices are added one at a time; each new vertex picks a random earlier
/// vertex `w` and joins a random subset of the clique `w` was created with
/// (always including `w`). Every other member is kept with probability
/// `density`, so the new neighborhood is a clique and the insertion order
/// reversed is a perfect elimination ordering. Ids are shuffled at the end.
///
/// With `density < 1` clique sizes settle around `(2 - d) / (1 - d)`, which
/// keeps the edge count roughly proportional to `n`.
pub fn random_chordal(n: usize, density: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density = density.clamp(0.0, 1.0);
    let mut cliques: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut edges = Vec::new();
    for v in 0..n {
        if v == 0 {
            cliques.push(vec![0]);
            continue;
        }
        let w = rng.gen_range(0..v);
        let mut attach = Vec::with_capacity(cliques[w].len() + 1);
        for &x in &cliques[w] {
            if x == w || rng.gen_bool(density) {
                attach.push(x);
            }
        }
        edges.extend(attach.iter().map(|&x| (x, v)));
        attach.push(v);
        cliques.push(attach);
    }
    relabel(n, edges, &mut rng)
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// with probability `p`. Not uniform over connected graphs.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = p.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    relabel(n, edges, &mut rng)
}

fn relabel(n: usize, edges: Vec<(usize, usize)>, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v])))
        .expect("generated edges are in range and loop-free")
}

/// Chordal graph with roughly `target_edges` edges at the given density.
/// Used by the linear-time benchmark.
pub fn random_chordal_with_edges(target_edges: usize, density: f64, seed: u64) -> Graph {
    let probe_n = 2000.min(target_edges.max(2));
    let probe = random_chordal(probe_n, density, seed);
    let per_vertex = (probe.edge_count() as f64 / probe_n as f64).max(0.5);
    let n = ((target_edges as f64 / per_vertex).round() as usize).max(2);
    random_chordal(n, density, seed)
}
