//! Separation triples `(L, S, R)`: the witness form of a vertex cut.

use serde::Serialize;

use crate::graph::DiGraph;

/// A partition of the vertex set with `L` and `R` nonempty and no edge from
/// `L` to `R`. Each part is sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparationTriple {
    pub left: Vec<usize>,
    pub sep: Vec<usize>,
    pub right: Vec<usize>,
}

impl SeparationTriple {
    /// `L` is everything `src` reaches in `G - sep`, `R` the remainder.
    /// Returns `None` when `src` is in `sep` or `R` comes out empty.
    pub fn from_separator(g: &DiGraph, sep: &[usize], src: usize) -> Option<Self> {
        let mut blocked = vec![false; g.n()];
        for &v in sep {
            blocked[v] = true;
        }
        if blocked[src] {
            return None;
        }
        let reach = g.reachable_avoiding(src, &blocked);
        let left: Vec<usize> = (0..g.n()).filter(|&v| reach[v]).collect();
        let right: Vec<usize> = (0..g.n()).filter(|&v| !reach[v] && !blocked[v]).collect();
        if right.is_empty() {
            return None;
        }
        let mut sep = sep.to_vec();
        sep.sort_unstable();
        sep.dedup();
        Some(SeparationTriple { left, sep, right })
    }

    /// Some triple whose separator is `sep`, trying every source outside it.
    pub fn any_from_separator(g: &DiGraph, sep: &[usize]) -> Option<Self> {
        let mut blocked = vec![false; g.n()];
        for &v in sep {
            blocked[v] = true;
        }
        (0..g.n())
            .filter(|&v| !blocked[v])
            .find_map(|v| Self::from_separator(g, sep, v))
    }

    /// Checks the partition, nonemptiness and the absence of `L -> R` edges.
    pub fn verify(&self, g: &DiGraph) -> bool {
        if self.left.is_empty() || self.right.is_empty() {
            return false;
        }
        let mut side = vec![0u8; g.n()];
        for (tag, part) in [(1u8, &self.left), (2, &self.sep), (3, &self.right)] {
            for &v in part.iter() {
                if v >= g.n() || side[v] != 0 {
                    return false;
                }
                side[v] = tag;
            }
        }
        if side.contains(&0) {
            return false;
        }
        self.left
            .iter()
            .all(|&u| g.out_neighbors(u).iter().all(|&w| side[w] != 3))
    }

    /// `(R, S, L)`, which is a triple of the reverse graph.
    pub fn reversed(&self) -> Self {
        SeparationTriple {
            left: self.right.clone(),
            sep: self.sep.clone(),
            right: self.left.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_separator() {
        let g = DiGraph::from_edges(3, [(0, 1), (1, 2)], true).unwrap();
        let t = SeparationTriple::from_separator(&g, &[1], 0).unwrap();
        assert_eq!(t.left, vec![0]);
        assert_eq!(t.right, vec![2]);
        assert!(t.verify(&g));
        assert!(t.reversed().verify(&g.reverse()));
        assert!(SeparationTriple::from_separator(&g, &[1], 1).is_none());
        assert!(SeparationTriple::from_separator(&g, &[], 0).is_none());
    }

    #[test]
    fn rejects_bad_partitions() {
        let g = DiGraph::from_edges(3, [(0, 1), (1, 2)], true).unwrap();
        let bad = SeparationTriple {
            left: vec![0],
            sep: vec![],
            right: vec![1, 2],
        };
        assert!(!bad.verify(&g));
        let missing = SeparationTriple {
            left: vec![0],
            sep: vec![],
            right: vec![2],
        };
        assert!(!missing.verify(&g));
    }
}
