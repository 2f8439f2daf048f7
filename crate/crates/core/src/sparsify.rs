//! Scan-first-search forest decompositions and sparse certificates.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use crate::error::{usage, Result};
use crate::graph::DiGraph;

/// Edge-disjoint forests `F_1, F_2, ...` whose union is the edge set.
/// Edges are stored once as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestDecomposition {
    pub forests: Vec<Vec<(usize, usize)>>,
    pub source_n: usize,
    pub source_m: usize,
}

impl ForestDecomposition {
    /// Edges of `H_j = F_1 + ... + F_j`.
    pub fn prefix_edges(&self, j: usize) -> Vec<(usize, usize)> {
        self.forests.iter().take(j).flatten().copied().collect()
    }
}

/// Nagamochi–Ibaraki labelling: scan the unscanned vertex with the largest
/// label (smallest id on ties); every edge to an unscanned neighbour `y` goes
/// to forest `r(y) + 1`, then `r(y)` grows.
pub fn forest_decomposition(g: &DiGraph) -> Result<ForestDecomposition> {
    if g.is_directed() {
        return usage("forest decomposition needs an undirected graph");
    }
    let n = g.n();
    let mut r = vec![0usize; n];
    let mut scanned = vec![false; n];
    let mut queue: BTreeSet<(Reverse<usize>, usize)> = (0..n).map(|v| (Reverse(0), v)).collect();
    let mut forests: Vec<Vec<(usize, usize)>> = Vec::new();
    while let Some((_, x)) = queue.pop_first() {
        scanned[x] = true;
        for &y in g.out_neighbors(x) {
            if scanned[y] {
                continue;
            }
            let idx = r[y];
            if forests.len() <= idx {
                forests.resize(idx + 1, Vec::new());
            }
            forests[idx].push((x.min(y), x.max(y)));
            queue.remove(&(Reverse(r[y]), y));
            r[y] += 1;
            queue.insert((Reverse(r[y]), y));
        }
    }
    Ok(ForestDecomposition {
        forests,
        source_n: n,
        source_m: g.m() / 2,
    })
}

/// The bidirected graph `H_{k+1}`. For `k + 1 >= n` this is `G` itself.
pub fn certificate(g: &DiGraph, k: usize) -> Result<DiGraph> {
    if g.is_directed() {
        return usage("certificate needs an undirected graph");
    }
    if k + 1 >= g.n() {
        return Ok(g.clone());
    }
    let dec = forest_decomposition(g)?;
    Ok(DiGraph::bidirected_from_pairs(g.n(), &dec.prefix_edges(k + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn undirected(n: usize, edges: &[(usize, usize)]) -> DiGraph {
        DiGraph::from_edges(n, edges.iter().copied(), false).unwrap()
    }

    #[test]
    fn triangle_splits_two_and_one() {
        let g = undirected(3, &[(0, 1), (1, 2), (0, 2)]);
        let d = forest_decomposition(&g).unwrap();
        assert_eq!(d.forests.len(), 2);
        assert_eq!(d.forests[0].len(), 2);
        assert_eq!(d.forests[1].len(), 1);
    }

    #[test]
    fn tree_is_one_forest() {
        let g = undirected(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]);
        let d = forest_decomposition(&g).unwrap();
        assert_eq!(d.forests.len(), 1);
        assert_eq!(d.forests[0].len(), 4);
        assert_eq!(certificate(&g, 3).unwrap(), g);
    }

    #[test]
    fn cycle_certificate_is_the_cycle() {
        let edges: Vec<_> = (0..6).map(|v| (v, (v + 1) % 6)).collect();
        let g = undirected(6, &edges);
        assert_eq!(certificate(&g, 1).unwrap(), g);
    }

    #[test]
    fn directed_input_is_rejected() {
        let g = DiGraph::from_edges(2, [(0, 1)], true).unwrap();
        assert!(forest_decomposition(&g).is_err());
    }
}
