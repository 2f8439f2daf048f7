//! Random modular convex embeddings over `Z_p` and the rank-based
//! approximation of vertex connectivity.
//!
//! Every vertex outside the anchor set `X` is placed at a random affine
//! combination of its out-neighbours. The rank of the image of a set `U`
//! then equals the number of disjoint paths from `U` to `X` with high
//! probability.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{usage, Result, VcError};
use crate::framework::{degree_cut, VcAnswer};
use crate::graph::DiGraph;
use crate::pair::{pair_vertex_connectivity, PairAnswer};
use crate::triple::SeparationTriple;

const MAX_PRIME: u64 = 1 << 62;
const RESAMPLES: usize = 8;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller–Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for b in BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for b in BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The window `[n^5, n^6]`, clamped to stay below `2^62`.
pub fn prime_window(n: usize) -> (u64, u64) {
    let n = n.max(2) as u128;
    let lo = n.pow(5).min(MAX_PRIME as u128 / 2) as u64;
    let hi = n.pow(6).min(MAX_PRIME as u128) as u64;
    (lo, hi)
}

/// The first prime at or after a random point of the window, wrapping around.
pub fn random_prime(n: usize, rng: &mut impl Rng) -> u64 {
    let (lo, hi) = prime_window(n);
    let mut c = rng.gen_range(lo..=hi);
    loop {
        if is_prime(c) {
            return c;
        }
        c = if c >= hi { lo } else { c + 1 };
    }
}

/// Row-reduces `rows` in place and returns the rank over `Z_p`.
fn eliminate(rows: &mut [Vec<u64>], p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][c], p);
        for x in rows[rank].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot) {
                *x = (*x + p - mul_mod(f, y, p)) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Matrix rank over `Z_p` of the given row vectors.
pub fn rank_mod_p(vectors: &[Vec<u64>], p: u64) -> Result<usize> {
    if !is_prime(p) {
        return usage(format!("{p} is not prime"));
    }
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    if vectors.iter().any(|v| v.len() != first.len()) {
        return usage("vectors differ in dimension");
    }
    let mut rows: Vec<Vec<u64>> = vectors.iter().map(|v| v.iter().map(|x| x % p).collect()).collect();
    Ok(eliminate(&mut rows, p))
}

/// A random modular directed `X`-embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub p: u64,
    pub anchors: Vec<usize>,
    /// Lifted coordinates of length `|X|`: the first `|X| - 1` entries are
    /// the point, the last is the constant coordinate. Anchor `i > 0` sits at
    /// the `i`-th unit point, anchor `0` at the origin. Vertices that cannot
    /// reach `X` get the zero vector.
    pub coords: Vec<Vec<u64>>,
    /// Normalised coefficient of each out-edge, aligned with
    /// `g.out_neighbors(v)`; empty for anchors and vertices that cannot reach `X`.
    pub coeffs: Vec<Vec<u64>>,
}

impl Embedding {
    pub fn dim(&self) -> usize {
        self.anchors.len().saturating_sub(1)
    }

    /// `1 + dim aff(f(U))`, or 0 for the empty image.
    pub fn rank(&self, set: &[usize]) -> usize {
        let mut rows: Vec<Vec<u64>> = set.iter().map(|&v| self.coords[v].clone()).collect();
        eliminate(&mut rows, self.p)
    }

    /// Checks `f(v) = sum c(v, w) f(w)` with coefficients summing to one for
    /// every non-anchor vertex that reaches `X`.
    pub fn check_hull(&self, g: &DiGraph) -> bool {
        let p = self.p;
        (0..g.n()).all(|v| {
            let cs = &self.coeffs[v];
            if cs.is_empty() {
                return self.anchors.contains(&v) || self.coords[v].iter().all(|&x| x == 0);
            }
            if cs.iter().fold(0, |a, &c| (a + c) % p) != 1 % p {
                return false;
            }
            let mut acc = vec![0u64; self.anchors.len()];
            for (&w, &c) in g.out_neighbors(v).iter().zip(cs) {
                for (a, &x) in acc.iter_mut().zip(&self.coords[w]) {
                    *a = (*a + mul_mod(c, x, p)) % p;
                }
            }
            acc == self.coords[v]
        })
    }
}

/// The first `k` out-neighbours by id, or all of them if there are fewer.
pub fn fixed_out(g: &DiGraph, v: usize, k: usize) -> &[usize] {
    let nb = g.out_neighbors(v);
    &nb[..k.min(nb.len())]
}

/// The first `k` in-neighbours by id, or all of them if there are fewer.
pub fn fixed_in(g: &DiGraph, v: usize, k: usize) -> &[usize] {
    let nb = g.in_neighbors(v);
    &nb[..k.min(nb.len())]
}

/// Embeds `g` with `X` the first `k` in-neighbours of `anchor`.
pub fn build_embedding(g: &DiGraph, anchor: usize, k: usize, seed: u64) -> Result<Embedding> {
    if anchor >= g.n() {
        return usage(format!("anchor {anchor} out of range"));
    }
    if k == 0 || g.in_degree(anchor) < k {
        return usage(format!("anchor {anchor} has fewer than k = {k} in-neighbours"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = random_prime(g.n(), &mut rng);
    embed_with_prime(g, fixed_in(g, anchor, k), p, &mut rng)
}

/// Embeds `g` over `Z_p` with anchor set `anchors`.
pub fn embed_with_prime(g: &DiGraph, anchors: &[usize], p: u64, rng: &mut impl Rng) -> Result<Embedding> {
    let n = g.n();
    let dim = anchors.len();
    let mut coords = vec![vec![0u64; dim]; n];
    let mut is_anchor = vec![false; n];
    for (i, &x) in anchors.iter().enumerate() {
        is_anchor[x] = true;
        coords[x][dim - 1] = 1;
        if i > 0 {
            coords[x][i - 1] = 1;
        }
    }
    // vertices outside X with a path into X
    let mut reaches = is_anchor.clone();
    let mut stack: Vec<usize> = anchors.to_vec();
    while let Some(v) = stack.pop() {
        for &u in g.in_neighbors(v) {
            if !reaches[u] {
                reaches[u] = true;
                stack.push(u);
            }
        }
    }
    let free: Vec<usize> = (0..n).filter(|&v| reaches[v] && !is_anchor[v]).collect();
    let mut slot = vec![usize::MAX; n];
    for (i, &v) in free.iter().enumerate() {
        slot[v] = i;
    }
    for _ in 0..RESAMPLES {
        let coeffs = random_coefficients(g, &free, p, rng);
        // augmented rows [I - C | B] for the unknowns in `free`
        let width = free.len() + dim;
        let mut rows: Vec<Vec<u64>> = free
            .iter()
            .map(|&v| {
                let mut row = vec![0u64; width];
                row[slot[v]] = 1;
                for (&w, &c) in g.out_neighbors(v).iter().zip(&coeffs[v]) {
                    if is_anchor[w] {
                        for (r, &x) in row[free.len()..].iter_mut().zip(&coords[w]) {
                            *r = (*r + mul_mod(c, x, p)) % p;
                        }
                    } else if reaches[w] {
                        row[slot[w]] = (row[slot[w]] + p - c) % p;
                    }
                }
                row
            })
            .collect();
        if solve_in_place(&mut rows, free.len(), p) {
            for (i, &v) in free.iter().enumerate() {
                coords[v] = rows[i][free.len()..].to_vec();
            }
            return Ok(Embedding {
                p,
                anchors: anchors.to_vec(),
                coords,
                coeffs,
            });
        }
    }
    Err(VcError::Singular(RESAMPLES))
}

fn random_coefficients(g: &DiGraph, free: &[usize], p: u64, rng: &mut impl Rng) -> Vec<Vec<u64>> {
    let mut coeffs = vec![Vec::new(); g.n()];
    for &v in free {
        loop {
            let cs: Vec<u64> = (0..g.out_degree(v)).map(|_| rng.gen_range(1..p)).collect();
            let sum = cs.iter().fold(0, |a, &c| (a + c) % p);
            if sum != 0 {
                let inv = inv_mod(sum, p);
                coeffs[v] = cs.into_iter().map(|c| mul_mod(c, inv, p)).collect();
                break;
            }
        }
    }
    coeffs
}

/// Gauss–Jordan on `[A | B]` with `A` of size `size`; false if `A` is singular.
fn solve_in_place(rows: &mut [Vec<u64>], size: usize, p: u64) -> bool {
    for c in 0..size {
        let Some(piv) = (c..size).find(|&r| rows[r][c] != 0) else {
            return false;
        };
        rows.swap(c, piv);
        let inv = inv_mod(rows[c][c], p);
        for x in rows[c][c..].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot = rows[c].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == c || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x = (*x + p - mul_mod(f, y, p)) % p;
            }
        }
    }
    true
}

fn pair_cut(g: &DiGraph, x: usize, y: usize) -> Result<Option<SeparationTriple>> {
    match pair_vertex_connectivity(g, x, y, g.n())? {
        PairAnswer::Shore { separator, .. } => Ok(SeparationTriple::from_separator(g, &separator, x)),
        PairAnswer::AtLeast => Ok(None),
    }
}

/// Rank-based `(1+eps)`-approximation. `boost` scales the `ln n` factor of
/// both sampling loops.
pub fn approx_vc_embedding(g: &DiGraph, eps: f64, seed: u64, boost: f64) -> Result<VcAnswer> {
    if eps.is_nan() || eps <= 0.0 || boost.is_nan() || boost <= 0.0 {
        return usage("eps and boost must be positive");
    }
    let n = g.n();
    if let Some((u, v)) = g.unreachable_pair() {
        let triple = SeparationTriple::from_separator(g, &[], u).expect("v is unreachable from u");
        return Ok(VcAnswer::Cut {
            separator: Vec::new(),
            triple,
            witness: Some((u, v)),
        });
    }
    let Some(deg) = degree_cut(g) else {
        return Ok(VcAnswer::AtLeast(n.saturating_sub(1)));
    };
    let st = g.degree_stats();
    let k = st.d_min_out.max(st.d_min_in);
    let k_low = st.d_min_out.min(st.d_min_in).max(1);
    let rev = g.reverse();
    let ln = (n.max(2) as f64).ln();
    let outer = (boost * ln / eps).ceil() as usize;
    let inner = (boost * ln * n as f64 / (eps * k_low as f64)).ceil() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = random_prime(n, &mut rng);
    // (rank, x, y) of the best pair so far
    let mut best: Option<(usize, usize, usize)> = None;
    let mut offer = |r: usize, x: usize, y: usize| {
        if x != y && !g.has_edge(x, y) && best.is_none_or(|(b, _, _)| r < b) {
            best = Some((r, x, y));
        }
    };
    for _ in 0..outer {
        let (x2, y1) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let f = embed_with_prime(g, fixed_in(g, y1, k), p, &mut rng)?;
        let fr = embed_with_prime(&rev, fixed_in(&rev, x2, k), p, &mut rng)?;
        for _ in 0..inner {
            let (y2, x1) = (rng.gen_range(0..n), rng.gen_range(0..n));
            offer(f.rank(fixed_out(g, x1, k)), x1, y1);
            offer(fr.rank(fixed_out(&rev, y2, k)), x2, y2);
        }
    }
    let mut answer = deg;
    let mut witness = None;
    if let Some((_, x, y)) = best {
        if let Some(t) = pair_cut(g, x, y)? {
            if t.sep.len() < answer.sep.len() {
                answer = t;
                witness = Some((x, y));
            }
        }
        if let Some(t) = pair_cut(&rev, x, y)? {
            if t.sep.len() < answer.sep.len() {
                answer = t.reversed();
                witness = Some((y, x));
            }
        }
    }
    Ok(VcAnswer::Cut {
        separator: answer.sep.clone(),
        triple: answer,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::oracle::set_disjoint_paths;

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(101) && is_prime((1 << 61) - 1));
        assert!(!is_prime(1) && !is_prime(561) && !is_prime(3215031751));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = random_prime(10, &mut rng);
        assert!(is_prime(p) && (100_000..=1_000_000).contains(&p));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_mod_p(&[vec![0, 0], vec![0, 0]], 7).unwrap(), 0);
        let id: Vec<Vec<u64>> = (0..4).map(|i| (0..4).map(|j| u64::from(i == j)).collect()).collect();
        assert_eq!(rank_mod_p(&id, 101).unwrap(), 4);
        assert_eq!(rank_mod_p(&[vec![1, 2], vec![2, 4]], 101).unwrap(), 1);
        assert!(rank_mod_p(&id, 100).is_err());
    }

    #[test]
    fn anchors_are_independent() {
        let g = gen::complete(6);
        let e = build_embedding(&g, 0, 4, 3).unwrap();
        assert_eq!(e.rank(&e.anchors), 4);
        assert!(e.check_hull(&g));
    }

    #[test]
    fn single_out_neighbour_copies_its_point() {
        // 3 -> 2 -> {0, 1} -> 4 -> {0, 1}
        let g = DiGraph::from_edges(5, [(3, 2), (2, 0), (2, 1), (0, 4), (1, 4), (4, 0), (4, 1)], true).unwrap();
        let e = build_embedding(&g, 4, 2, 5).unwrap();
        assert_eq!(e.coords[3], e.coords[2]);
    }

    #[test]
    fn rank_matches_paths() {
        let mut misses = 0;
        for seed in 0..50 {
            let g = gen::gnp(10, 0.5, true, seed);
            let Some(y) = (0..10).find(|&v| g.in_degree(v) >= 2) else {
                continue;
            };
            let k = g.in_degree(y).min(3);
            let e = build_embedding(&g, y, k, seed).unwrap();
            for u in 0..10 {
                let set = fixed_out(&g, u, k);
                if set.is_empty() {
                    continue;
                }
                misses += usize::from(e.rank(set) != set_disjoint_paths(&g, set, &e.anchors));
            }
        }
        assert!(misses <= 1);
    }

    #[test]
    fn approximation_examples() {
        let sep = |a: VcAnswer| a.separator().map(<[usize]>::len);
        assert_eq!(sep(approx_vc_embedding(&gen::star(4), 0.25, 1, 1.0).unwrap()), Some(1));
        assert_eq!(sep(approx_vc_embedding(&gen::cliques_sharing(5, 5, 2), 0.25, 1, 2.0).unwrap()), Some(2));
        assert_eq!(approx_vc_embedding(&gen::complete(6), 0.25, 1, 1.0).unwrap(), VcAnswer::AtLeast(5));
    }
}
