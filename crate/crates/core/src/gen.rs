//! Seeded synthetic graph families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::DiGraph;

fn build(n: usize, edges: Vec<(usize, usize)>, directed: bool) -> DiGraph {
    DiGraph::from_edges(n, edges, directed).expect("generator ids are in range")
}

/// `G(n, p)`. Directed graphs flip a coin per ordered pair, undirected ones
/// per unordered pair.
pub fn gnp(n: usize, p: f64, directed: bool, seed: u64) -> DiGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v || (!directed && v < u) {
                continue;
            }
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build(n, edges, directed)
}

/// The cycle `0 -> 1 -> ... -> n-1 -> 0`.
pub fn cycle(n: usize, directed: bool) -> DiGraph {
    build(n, (0..n).map(|v| (v, (v + 1) % n)).collect(), directed)
}

/// Complete bidirected graph `K_n`.
pub fn complete(n: usize) -> DiGraph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    build(n, edges, false)
}

/// Bidirected star with center `0` and `leaves` leaves.
pub fn star(leaves: usize) -> DiGraph {
    build(leaves + 1, (1..=leaves).map(|v| (0, v)).collect(), false)
}

/// Two bidirected cliques of sizes `a` and `b` sharing `shared` vertices.
/// The shared vertices are `0..shared`, the rest of the first clique comes
/// next, then the rest of the second.
pub fn cliques_sharing(a: usize, b: usize, shared: usize) -> DiGraph {
    let n = a + b - shared;
    let first: Vec<usize> = (0..a).collect();
    let second: Vec<usize> = (0..shared).chain(a..n).collect();
    let mut edges = Vec::new();
    for part in [&first, &second] {
        for (i, &u) in part.iter().enumerate() {
            for &v in &part[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    build(n, edges, false)
}

/// Bidirected `K_n` with the edges `(2i, 2i+1)` removed.
pub fn complete_minus_matching(n: usize) -> DiGraph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1))
        .collect();
    build(n, edges, false)
}

/// A graph with a planted separator, along with that separator.
#[derive(Debug, Clone)]
pub struct Planted {
    pub graph: DiGraph,
    pub separator: Vec<usize>,
    pub left: Vec<usize>,
}

/// Two `G(., p)` blobs joined only through `k` separator vertices. The
/// separator is `0..k`, the left blob has `left` vertices.
pub fn planted_dense(n: usize, k: usize, left: usize, p: f64, directed: bool, seed: u64) -> Planted {
    assert!(left >= 1 && k + left < n, "planted sides must be nonempty");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sep: Vec<usize> = (0..k).collect();
    let lhs: Vec<usize> = (k..k + left).collect();
    let rhs: Vec<usize> = (k + left..n).collect();
    let mut edges = Vec::new();
    for side in [&lhs, &rhs] {
        let with_sep: Vec<usize> = sep.iter().chain(side.iter()).copied().collect();
        for &u in &with_sep {
            for &v in &with_sep {
                if u == v || (!directed && v < u) {
                    continue;
                }
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        // keep every separator vertex attached to each side
        for &s in &sep {
            let &w = side.choose(&mut rng).expect("side is nonempty");
            edges.push((s, w));
            edges.push((w, s));
        }
    }
    Planted {
        graph: build(n, edges, directed),
        separator: sep,
        left: lhs,
    }
}

/// Random `(k+2)`-out blobs joined through `k` separator vertices, each of
/// which links to `k+2` vertices on either side. Sparse: `m = O(kn)`.
pub fn planted_sparse(n: usize, k: usize, left: usize, directed: bool, seed: u64) -> Planted {
    let d = k + 2;
    assert!(left > d && n - k - left > d, "blobs must exceed the out-degree");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sep: Vec<usize> = (0..k).collect();
    let lhs: Vec<usize> = (k..k + left).collect();
    let rhs: Vec<usize> = (k + left..n).collect();
    let mut edges = Vec::new();
    for side in [&lhs, &rhs] {
        for &u in side.iter() {
            let picks: Vec<usize> = side
                .choose_multiple(&mut rng, d + 1)
                .copied()
                .filter(|&w| w != u)
                .take(d)
                .collect();
            for w in picks {
                edges.push((u, w));
            }
            if directed {
                // as many random in-neighbours, so in-degrees match
                let picks: Vec<usize> = side
                    .choose_multiple(&mut rng, d + 1)
                    .copied()
                    .filter(|&w| w != u)
                    .take(d)
                    .collect();
                for w in picks {
                    edges.push((w, u));
                }
            }
        }
        for &s in &sep {
            for &w in side.choose_multiple(&mut rng, d) {
                edges.push((s, w));
                edges.push((w, s));
            }
        }
    }
    Planted {
        graph: build(n, edges, directed),
        separator: sep,
        left: lhs,
    }
}
