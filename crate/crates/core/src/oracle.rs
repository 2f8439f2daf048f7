//! Brute-force ground truth for tests and the `oracle` subcommand.

use std::collections::HashSet;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{usage, Result};
use crate::graph::DiGraph;
use crate::pair::{pair_vertex_connectivity, FlowNet, PairAnswer};
use crate::triple::SeparationTriple;

/// Largest `n` accepted by [`oracle_kappa`].
pub const ORACLE_MAX_N: usize = 60;
/// Largest `n` accepted by the subset enumerations.
pub const SUBSET_MAX_N: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleAnswer {
    pub kappa: usize,
    /// A minimum vertex cut, `None` for complete graphs.
    pub separator: Option<Vec<usize>>,
}

/// `kappa` as the minimum pair connectivity over all ordered pairs.
pub fn oracle_kappa(g: &DiGraph) -> Result<OracleAnswer> {
    if g.n() > ORACLE_MAX_N {
        return usage(format!("oracle limited to n <= {ORACLE_MAX_N}"));
    }
    if g.unreachable_pair().is_some() {
        return Ok(OracleAnswer {
            kappa: 0,
            separator: Some(Vec::new()),
        });
    }
    let n = g.n();
    let mut best = n.saturating_sub(1);
    let mut sep = None;
    for x in 0..n {
        for y in 0..n {
            if x == y || g.has_edge(x, y) || best == 0 {
                continue;
            }
            if let PairAnswer::Shore { separator, .. } = pair_vertex_connectivity(g, x, y, best - 1)? {
                best = separator.len();
                sep = Some(separator);
            }
        }
    }
    Ok(OracleAnswer {
        kappa: best,
        separator: sep,
    })
}

fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut idx: Vec<usize> = (0..size).collect();
    let mut done = size > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = idx.clone();
        // advance to the next combination in lexicographic order
        let mut i = size;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - size + i {
                idx[i] += 1;
                for j in i + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

/// `kappa` as the smallest `S` with `G - S` not strongly connected.
pub fn kappa_by_subsets(g: &DiGraph) -> Result<OracleAnswer> {
    let n = g.n();
    if n > SUBSET_MAX_N {
        return usage(format!("subset enumeration limited to n <= {SUBSET_MAX_N}"));
    }
    for size in 0..n.saturating_sub(1) {
        if let Some(sep) = subsets_of_size(n, size).find(|s| g.is_vertex_cut(s)) {
            return Ok(OracleAnswer {
                kappa: size,
                separator: Some(sep),
            });
        }
    }
    Ok(OracleAnswer {
        kappa: n.saturating_sub(1),
        separator: None,
    })
}

/// `kappa(x, y)` as the smallest `S` avoiding `x, y` that cuts every
/// `x -> y` path, or `n - 1` if none does.
pub fn pair_kappa_by_subsets(g: &DiGraph, x: usize, y: usize) -> Result<usize> {
    let n = g.n();
    if n > SUBSET_MAX_N {
        return usage(format!("subset enumeration limited to n <= {SUBSET_MAX_N}"));
    }
    if g.has_edge(x, y) {
        return Ok(n - 1);
    }
    let others: Vec<usize> = (0..n).filter(|&v| v != x && v != y).collect();
    for size in 0..=others.len() {
        for pick in subsets_of_size(others.len(), size) {
            let mut blocked = vec![false; n];
            for i in pick {
                blocked[others[i]] = true;
            }
            if !g.reachable_avoiding(x, &blocked)[y] {
                return Ok(size);
            }
        }
    }
    Ok(n - 1)
}

/// Some triple `(L, S, R)` with `x` in `L`, `vol_out(L) <= nu` and
/// `|S| <= k`, found by growing `L` from `{x}` one out-neighbour at a time.
pub fn oracle_local_triple(g: &DiGraph, x: usize, nu: usize, k: usize) -> Result<Option<SeparationTriple>> {
    let n = g.n();
    if n > SUBSET_MAX_N {
        return usage(format!("local enumeration limited to n <= {SUBSET_MAX_N}"));
    }
    if g.out_degree(x) > nu {
        return Ok(None);
    }
    let mut seen: HashSet<u64> = HashSet::new();
    let mut stack = vec![1u64 << x];
    seen.insert(1u64 << x);
    while let Some(set) = stack.pop() {
        let members: Vec<usize> = (0..n).filter(|&v| set >> v & 1 == 1).collect();
        let vol = g.vol_out(&members);
        let mut nbr = 0u64;
        for &u in &members {
            for &w in g.out_neighbors(u) {
                nbr |= 1 << w;
            }
        }
        nbr &= !set;
        let closed = set | nbr;
        if nbr.count_ones() as usize <= k && closed.count_ones() < n as u32 {
            let sep: Vec<usize> = (0..n).filter(|&v| nbr >> v & 1 == 1).collect();
            let right: Vec<usize> = (0..n).filter(|&v| closed >> v & 1 == 0).collect();
            return Ok(Some(SeparationTriple {
                left: members,
                sep,
                right,
            }));
        }
        for w in (0..n).filter(|&v| nbr >> v & 1 == 1) {
            let next = set | 1 << w;
            if vol + g.out_degree(w) <= nu && seen.insert(next) {
                stack.push(next);
            }
        }
    }
    Ok(None)
}

/// Whether [`oracle_local_triple`] finds anything.
pub fn oracle_local_triples(g: &DiGraph, x: usize, nu: usize, k: usize) -> Result<bool> {
    Ok(oracle_local_triple(g, x, nu, k)?.is_some())
}

/// Maximum number of vertex-disjoint paths from `from` to `to` with distinct
/// endpoints. A vertex in both sets is a path of length zero.
pub fn set_disjoint_paths(g: &DiGraph, from: &[usize], to: &[usize]) -> usize {
    let n = g.n();
    let (s, t) = (2 * n, 2 * n + 1);
    let mut net = FlowNet::new(2 * n + 2);
    for v in 0..n {
        net.add_edge(2 * v, 2 * v + 1, 1);
    }
    for (u, w) in g.edges() {
        net.add_edge(2 * u + 1, 2 * w, 1);
    }
    for &u in from {
        net.add_edge(s, 2 * u, 1);
    }
    for &x in to {
        net.add_edge(2 * x + 1, t, 1);
    }
    net.max_flow(s, t, i64::MAX - 1) as usize
}

/// Minimum `(s, t)` cut of the explicitly built augmented graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentedMinCut {
    pub value: Ratio<i128>,
    /// Vertices whose split edge crosses the cut.
    pub split_cut: Vec<usize>,
    /// Vertices whose out-copy is on the source side.
    pub source_out: Vec<usize>,
}

/// Builds the augmented split graph for `(x, nu, k, eps)` edge by edge from
/// its definition and runs Edmonds–Karp on integer capacities scaled by the
/// common denominator.
pub fn augmented_min_cut(g: &DiGraph, x: usize, nu: usize, k: usize, eps: Ratio<i64>) -> AugmentedMinCut {
    let n = g.n();
    let (p, q) = (*eps.numer() as i128, *eps.denom() as i128);
    let (nu_i, k_i) = (nu as i128, k as i128);
    // capacities times p*k
    let scale = p * k_i;
    let split = nu_i * q;
    let source = k_i * (nu_i * q + nu_i * p + p);
    let inf = source + 1;
    let to_i64 = |c: i128| i64::try_from(c).expect("oracle capacities fit in i64");
    let (s, t) = (2 * n, 2 * n + 1);
    let v_in = |v: usize| 2 * v;
    let v_out = |v: usize| 2 * v + 1;
    let mut net = FlowNet::new(2 * n + 2);
    for v in 0..n {
        if v != x {
            net.add_edge(v_in(v), v_out(v), to_i64(split));
        }
    }
    for (u, w) in g.edges() {
        if w != x {
            net.add_edge(v_out(u), v_in(w), to_i64(inf));
        }
    }
    for v in 0..n {
        net.add_edge(v_out(v), t, to_i64(g.out_degree(v) as i128 * scale));
    }
    net.add_edge(s, v_out(x), to_i64(source));
    let flow = net.max_flow(s, t, i64::MAX - 1);
    let reach = net.residual_reachable(s);
    AugmentedMinCut {
        value: Ratio::new(flow as i128, scale),
        split_cut: (0..n)
            .filter(|&v| v != x && reach[v_in(v)] && !reach[v_out(v)])
            .collect(),
        source_out: (0..n).filter(|&v| reach[v_out(v)]).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn families() {
        let k5 = gen::complete(5);
        assert_eq!(oracle_kappa(&k5).unwrap(), OracleAnswer { kappa: 4, separator: None });
        assert_eq!(oracle_kappa(&gen::cycle(7, false)).unwrap().kappa, 2);
        assert_eq!(oracle_kappa(&gen::cycle(7, true)).unwrap().kappa, 1);
        assert_eq!(kappa_by_subsets(&gen::cycle(6, false)).unwrap().kappa, 2);
        assert_eq!(kappa_by_subsets(&gen::cliques_sharing(4, 4, 1)).unwrap().separator, Some(vec![0]));
    }

    #[test]
    fn pair_methods_agree() {
        for seed in 0..20 {
            let g = gen::gnp(8, 0.4, seed % 2 == 0, seed);
            for x in 0..8 {
                for y in 0..8 {
                    if x != y {
                        let a = crate::pair::pair_kappa(&g, x, y).unwrap();
                        assert_eq!(a, pair_kappa_by_subsets(&g, x, y).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn local_triples_examples() {
        assert!(!oracle_local_triples(&gen::complete(6), 0, 100, 4).unwrap());
        // x = 1 on the first K4, which has volume 9 without the shared vertex
        let g = gen::cliques_sharing(4, 4, 1);
        assert!(oracle_local_triples(&g, 1, 9, 1).unwrap());
        assert!(!oracle_local_triples(&g, 1, 2, 1).unwrap());
    }

    #[test]
    fn disjoint_paths_examples() {
        let c = gen::cycle(6, false);
        assert_eq!(set_disjoint_paths(&c, &[0], &[3]), 1);
        assert_eq!(set_disjoint_paths(&c, &[0, 1], &[3, 4]), 2);
        assert_eq!(set_disjoint_paths(&c, &[2], &[2]), 1);
    }

    #[test]
    fn augmented_cut_on_complete_graph() {
        let g = gen::complete(5);
        // eps = 1/2, k = 1, nu = 4: no small cut, so the source edge or sinks bind
        let cut = augmented_min_cut(&g, 0, 4, 1, Ratio::new(1, 2));
        assert!(cut.value > Ratio::from_integer(12));
    }
}
