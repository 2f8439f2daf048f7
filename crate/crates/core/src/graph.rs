//! Graph representation, parsing and the basic degree and volume queries.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Result, VcError};
use crate::scc;

/// Input formats understood by [`DiGraph::parse`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GraphFormat {
    /// `n m d|u` header followed by `m` lines `u v`, 0-based, `#` comments.
    EdgeList,
    /// `p <n> <m>` header, `a <u> <v>` arcs (or `e <u> <v>` edges), 1-based,
    /// `c` comments.
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = VcError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edge-list" => Ok(GraphFormat::EdgeList),
            "dimacs" => Ok(GraphFormat::Dimacs),
            other => Err(VcError::Usage(format!("unknown graph format {other:?}"))),
        }
    }
}

/// Minimum in/out degrees with the smallest vertex attaining each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub d_min_out: usize,
    pub v_min_out: usize,
    pub d_min_in: usize,
    pub v_min_in: usize,
}

impl DegreeStats {
    /// `min(d_min_out, d_min_in)`, an upper bound on the connectivity.
    pub fn d_min(&self) -> usize {
        self.d_min_out.min(self.d_min_in)
    }
}

/// Immutable simple directed graph on vertices `0..n`.
///
/// Undirected inputs are stored bidirected. Adjacency lists are sorted by
/// neighbour id, which fixes every tie-break downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiGraph {
    n: usize,
    m: usize,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    directed: bool,
    stats: DegreeStats,
}

impl DiGraph {
    /// Builds a graph from an edge list. Duplicate edges and self-loops are
    /// dropped; with `directed == false` every edge is inserted both ways.
    pub fn from_edges<I>(n: usize, edges: I, directed: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out_adj = vec![Vec::new(); n];
        for (i, (u, v)) in edges.into_iter().enumerate() {
            for id in [u, v] {
                if id >= n {
                    return Err(VcError::Range { line: i + 1, id, n });
                }
            }
            if u == v {
                continue;
            }
            out_adj[u].push(v);
            if !directed {
                out_adj[v].push(u);
            }
        }
        Ok(Self::from_out_adj(out_adj, directed))
    }

    fn from_out_adj(mut out_adj: Vec<Vec<usize>>, directed: bool) -> Self {
        let n = out_adj.len();
        for list in &mut out_adj {
            list.sort_unstable();
            list.dedup();
        }
        let mut in_adj = vec![Vec::new(); n];
        for (u, list) in out_adj.iter().enumerate() {
            for &v in list {
                in_adj[v].push(u);
            }
        }
        // pushed in ascending u, so already sorted
        let m = out_adj.iter().map(Vec::len).sum();
        let stats = compute_stats(&out_adj, &in_adj);
        DiGraph {
            n,
            m,
            out_adj,
            in_adj,
            directed,
            stats,
        }
    }

    /// Parses `text` in the given format.
    pub fn parse(text: &str, format: GraphFormat) -> Result<Self> {
        match format {
            GraphFormat::EdgeList => parse_edge_list(text),
            GraphFormat::Dimacs => parse_dimacs(text),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of directed edges (an undirected edge counts twice).
    pub fn m(&self) -> usize {
        self.m
    }

    /// Whether the input was directed. Undirected graphs are stored bidirected.
    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].binary_search(&v).is_ok()
    }

    /// All edges in `(tail, head)` lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    /// Edge with the given rank in [`DiGraph::edges`] order.
    pub fn edge_at(&self, mut idx: usize) -> (usize, usize) {
        // linear in n; only used by samplers on small graphs and tests
        for (u, list) in self.out_adj.iter().enumerate() {
            if idx < list.len() {
                return (u, list[idx]);
            }
            idx -= list.len();
        }
        panic!("edge index out of range");
    }

    /// Every edge flipped. `g.reverse().reverse() == g`.
    pub fn reverse(&self) -> DiGraph {
        DiGraph {
            n: self.n,
            m: self.m,
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
            directed: self.directed,
            stats: DegreeStats {
                d_min_out: self.stats.d_min_in,
                v_min_out: self.stats.v_min_in,
                d_min_in: self.stats.d_min_out,
                v_min_in: self.stats.v_min_out,
            },
        }
    }

    /// Minimum degrees, ties broken by the smallest vertex id.
    pub fn degree_stats(&self) -> DegreeStats {
        self.stats
    }

    /// `sum of out-degrees over `set`.
    pub fn vol_out(&self, set: &[usize]) -> usize {
        set.iter().map(|&v| self.out_degree(v)).sum()
    }

    /// Whether the graph is complete (every ordered pair is an edge).
    pub fn is_complete(&self) -> bool {
        self.n <= 1 || self.stats.d_min_out == self.n - 1
    }

    /// Vertices reachable from `src` without entering `blocked` vertices.
    pub fn reachable_avoiding(&self, src: usize, blocked: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        if blocked.get(src).copied().unwrap_or(false) {
            return seen;
        }
        seen[src] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.out_adj[u] {
                if !seen[w] && !blocked.get(w).copied().unwrap_or(false) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Vertices reachable from `src`.
    pub fn reachable(&self, src: usize) -> Vec<bool> {
        self.reachable_avoiding(src, &[])
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.unreachable_pair().is_none()
    }

    /// An ordered pair `(u, v)` with `v` unreachable from `u`, if any.
    pub fn unreachable_pair(&self) -> Option<(usize, usize)> {
        if self.n <= 1 {
            return None;
        }
        let fwd = self.reachable(0);
        if let Some(v) = fwd.iter().position(|&r| !r) {
            return Some((0, v));
        }
        let bwd = self.reverse().reachable(0);
        bwd.iter().position(|&r| !r).map(|u| (u, 0))
    }

    /// Strongly connected components, each sorted, listed in ascending order
    /// of their smallest vertex.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        let c = scc::tarjan(self.n, |v| self.out_adj[v].iter().copied());
        let mut members = c.members();
        members.sort();
        members
    }

    /// Whether removing `sep` leaves some ordered pair disconnected.
    pub fn is_vertex_cut(&self, sep: &[usize]) -> bool {
        let mut blocked = vec![false; self.n];
        for &v in sep {
            blocked[v] = true;
        }
        let rest: Vec<usize> = (0..self.n).filter(|&v| !blocked[v]).collect();
        if rest.len() < 2 {
            return false;
        }
        let src = rest[0];
        let fwd = self.reachable_avoiding(src, &blocked);
        if rest.iter().any(|&v| !fwd[v]) {
            return true;
        }
        let rev = self.reverse();
        let bwd = rev.reachable_avoiding(src, &blocked);
        rest.iter().any(|&v| !bwd[v])
    }

    /// Subgraph keeping exactly the given undirected edges (stored both ways).
    pub(crate) fn bidirected_from_pairs(n: usize, pairs: &[(usize, usize)]) -> DiGraph {
        let mut out_adj = vec![Vec::new(); n];
        for &(u, v) in pairs {
            out_adj[u].push(v);
            out_adj[v].push(u);
        }
        Self::from_out_adj(out_adj, false)
    }

    /// Serialises to the edge-list format. Undirected graphs list each edge once.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        let edges: Vec<(usize, usize)> = if self.directed {
            self.edges().collect()
        } else {
            self.edges().filter(|&(u, v)| u < v).collect()
        };
        let tag = if self.directed { 'd' } else { 'u' };
        let _ = writeln!(s, "{} {} {}", self.n, edges.len(), tag);
        for (u, v) in edges {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }
}

fn compute_stats(out_adj: &[Vec<usize>], in_adj: &[Vec<usize>]) -> DegreeStats {
    let argmin = |lists: &[Vec<usize>]| {
        lists
            .iter()
            .enumerate()
            .map(|(v, l)| (l.len(), v))
            .min()
            .unwrap_or((0, 0))
    };
    let (d_min_out, v_min_out) = argmin(out_adj);
    let (d_min_in, v_min_in) = argmin(in_adj);
    DegreeStats {
        d_min_out,
        v_min_out,
        d_min_in,
        v_min_in,
    }
}

fn parse_num(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| VcError::Parse {
        line,
        msg: format!("expected a non-negative integer, got {tok:?}"),
    })
}

fn parse_edge_list(text: &str) -> Result<DiGraph> {
    let mut header: Option<(usize, usize, bool, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if toks.len() != 3 {
                    return Err(VcError::Parse {
                        line: line_no,
                        msg: "header must be `n m d|u`".into(),
                    });
                }
                let n = parse_num(toks[0], line_no)?;
                let m = parse_num(toks[1], line_no)?;
                let directed = match toks[2] {
                    "d" => true,
                    "u" => false,
                    t => {
                        return Err(VcError::Parse {
                            line: line_no,
                            msg: format!("direction flag must be d or u, got {t:?}"),
                        })
                    }
                };
                header = Some((n, m, directed, line_no));
            }
            Some((n, _, _, _)) => {
                if toks.len() != 2 {
                    return Err(VcError::Parse {
                        line: line_no,
                        msg: "edge line must be `u v`".into(),
                    });
                }
                let u = parse_num(toks[0], line_no)?;
                let v = parse_num(toks[1], line_no)?;
                for id in [u, v] {
                    if id >= n {
                        return Err(VcError::Range { line: line_no, id, n });
                    }
                }
                edges.push((u, v));
            }
        }
    }
    let Some((n, m, directed, hline)) = header else {
        return Err(VcError::Parse {
            line: 0,
            msg: "missing header".into(),
        });
    };
    if edges.len() != m {
        return Err(VcError::Parse {
            line: hline,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    DiGraph::from_edges(n, edges, directed)
}

fn parse_dimacs(text: &str) -> Result<DiGraph> {
    let mut n: Option<usize> = None;
    let mut directed: Option<bool> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "p" => {
                // `p <n> <m>` or `p <word> <n> <m>`
                let nums: Vec<&str> = toks[1..]
                    .iter()
                    .copied()
                    .filter(|t| t.chars().all(|c| c.is_ascii_digit()))
                    .collect();
                if nums.len() != 2 {
                    return Err(VcError::Parse {
                        line: line_no,
                        msg: "problem line must be `p <n> <m>`".into(),
                    });
                }
                n = Some(parse_num(nums[0], line_no)?);
            }
            tag @ ("a" | "e") => {
                let Some(nv) = n else {
                    return Err(VcError::Parse {
                        line: line_no,
                        msg: "arc before problem line".into(),
                    });
                };
                if toks.len() < 3 {
                    return Err(VcError::Parse {
                        line: line_no,
                        msg: "arc line must be `a <u> <v>`".into(),
                    });
                }
                let is_arc = tag == "a";
                if directed.is_some_and(|d| d != is_arc) {
                    return Err(VcError::Parse {
                        line: line_no,
                        msg: "cannot mix `a` and `e` lines".into(),
                    });
                }
                directed = Some(is_arc);
                let u = parse_num(toks[1], line_no)?;
                let v = parse_num(toks[2], line_no)?;
                for id in [u, v] {
                    if id == 0 || id > nv {
                        return Err(VcError::Range {
                            line: line_no,
                            id,
                            n: nv,
                        });
                    }
                }
                edges.push((u - 1, v - 1));
            }
            other => {
                return Err(VcError::Parse {
                    line: line_no,
                    msg: format!("unknown line type {other:?}"),
                })
            }
        }
    }
    let n = n.ok_or(VcError::Parse {
        line: 0,
        msg: "missing problem line".into(),
    })?;
    DiGraph::from_edges(n, edges, directed.unwrap_or(true))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_set(g: &DiGraph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn parses_directed_triangle() {
        let g = DiGraph::parse("3 3 d\n0 1\n1 2\n2 0", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert!(g.is_directed());
        assert_eq!(edge_set(&g), vec![(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn undirected_path_is_bidirected() {
        let g = DiGraph::parse("3 2 u\n0 1\n1 2", GraphFormat::EdgeList).unwrap();
        let degs: Vec<usize> = (0..3).map(|v| g.out_degree(v)).collect();
        assert_eq!(degs, vec![1, 2, 1]);
        assert!(g.has_edge(1, 0) && g.has_edge(0, 1));
    }

    #[test]
    fn duplicates_are_dropped() {
        let g = DiGraph::parse("2 2 d\n0 1\n0 1", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn comments_and_self_loops() {
        let g = DiGraph::parse("# hi\n3 3 d\n0 0\n# mid\n0 1\n1 2\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn malformed_line_reports_number() {
        let err = DiGraph::parse("3 2 d\n0 1\n1 x", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(err, VcError::Parse { line: 3, .. }));
        let err = DiGraph::parse("3 1 q\n0 1", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(err, VcError::Parse { line: 1, .. }));
    }

    #[test]
    fn out_of_range_id() {
        let err = DiGraph::parse("3 1 d\n0 3", GraphFormat::EdgeList).unwrap_err();
        assert_eq!(err, VcError::Range { line: 2, id: 3, n: 3 });
    }

    #[test]
    fn dimacs_is_one_based() {
        let g = DiGraph::parse("c test\np sp 3 3\na 1 2\na 2 3\na 3 1\n", GraphFormat::Dimacs).unwrap();
        assert_eq!(edge_set(&g), vec![(0, 1), (1, 2), (2, 0)]);
        let g = DiGraph::parse("p 2 1\ne 1 2\n", GraphFormat::Dimacs).unwrap();
        assert!(!g.is_directed());
        assert_eq!(g.m(), 2);
        let err = DiGraph::parse("p 2 1\na 0 1\n", GraphFormat::Dimacs).unwrap_err();
        assert!(matches!(err, VcError::Range { line: 2, id: 0, .. }));
    }

    #[test]
    fn reverse_examples() {
        let c3 = DiGraph::from_edges(3, [(0, 1), (1, 2), (2, 0)], true).unwrap();
        assert_eq!(edge_set(&c3.reverse()), vec![(0, 2), (1, 0), (2, 1)]);
        let e = DiGraph::from_edges(2, [(0, 1)], true).unwrap();
        assert_eq!(edge_set(&e.reverse()), vec![(1, 0)]);
        let p = DiGraph::from_edges(3, [(0, 1), (1, 2)], false).unwrap();
        assert_eq!(edge_set(&p.reverse()), edge_set(&p));
        assert_eq!(c3.reverse().reverse(), c3);
    }

    #[test]
    fn strong_connectivity() {
        let c3 = DiGraph::from_edges(3, [(0, 1), (1, 2), (2, 0)], true).unwrap();
        assert!(c3.is_strongly_connected());
        let e = DiGraph::from_edges(2, [(0, 1)], true).unwrap();
        assert!(!e.is_strongly_connected());
        assert_eq!(e.unreachable_pair(), Some((1, 0)));
        let p = DiGraph::from_edges(3, [(0, 1), (1, 2)], false).unwrap();
        assert!(p.is_strongly_connected());
        assert_eq!(e.strongly_connected_components(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn degree_stats_examples() {
        let k4 = DiGraph::from_edges(4, (0..4).flat_map(|u| (0..4).map(move |v| (u, v))), true).unwrap();
        assert_eq!(k4.degree_stats().d_min_out, 3);
        let star = DiGraph::from_edges(6, (1..6).map(|v| (0, v)), false).unwrap();
        let s = star.degree_stats();
        assert_eq!((s.d_min_out, s.v_min_out), (1, 1));
        let c5 = DiGraph::from_edges(5, (0..5).map(|v| (v, (v + 1) % 5)), true).unwrap();
        assert_eq!(c5.degree_stats().d_min_out, 1);
    }

    #[test]
    fn volume_examples() {
        let k4 = DiGraph::from_edges(4, (0..4).flat_map(|u| (0..4).map(move |v| (u, v))), false).unwrap();
        assert_eq!(k4.vol_out(&[0, 1]), 6);
        assert_eq!(k4.vol_out(&[]), 0);
        let c5 = DiGraph::from_edges(5, (0..5).map(|v| (v, (v + 1) % 5)), true).unwrap();
        assert_eq!(c5.vol_out(&[0, 1, 2, 3, 4]), c5.m());
    }

    #[test]
    fn edge_list_round_trip() {
        let p = DiGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)], false).unwrap();
        let back = DiGraph::parse(&p.to_edge_list(), GraphFormat::EdgeList).unwrap();
        assert_eq!(back, p);
    }
}
