//! Exact `(x, y)` vertex connectivity on the vertex-split unit network.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{usage, Result};
use crate::graph::DiGraph;

/// Outcome of a thresholded pair computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PairAnswer {
    /// `kappa(x, y) <= k`. `separator` is `N^out(shore)` and has size
    /// exactly `kappa(x, y)`; `paths` are that many internally disjoint
    /// `x -> y` paths, each listed from `x` to `y`.
    Shore {
        shore: Vec<usize>,
        separator: Vec<usize>,
        paths: Vec<Vec<usize>>,
    },
    /// `kappa(x, y) > k`.
    AtLeast,
}

impl PairAnswer {
    pub fn separator(&self) -> Option<&[usize]> {
        match self {
            PairAnswer::Shore { separator, .. } => Some(separator),
            PairAnswer::AtLeast => None,
        }
    }
}

/// Small residual network with integer capacities, used for every
/// unit-capacity computation in the crate.
#[derive(Debug, Clone)]
pub(crate) struct FlowNet {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
    orig: Vec<i64>,
}

impl FlowNet {
    pub(crate) fn new(nodes: usize) -> Self {
        FlowNet {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            orig: Vec::new(),
        }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize, c: i64) {
        let id = self.to.len();
        self.adj[u].push(id);
        self.to.push(v);
        self.cap.push(c);
        self.orig.push(c);
        self.adj[v].push(id + 1);
        self.to.push(u);
        self.cap.push(0);
        self.orig.push(0);
    }

    /// One shortest augmenting path, pushing its bottleneck. Returns the
    /// amount pushed (0 when `t` is unreachable).
    pub(crate) fn augment(&mut self, s: usize, t: usize) -> i64 {
        let mut pred = vec![usize::MAX; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        'bfs: while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if !seen[v] && self.cap[e] > 0 {
                    seen[v] = true;
                    pred[v] = e;
                    if v == t {
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        if !seen[t] {
            return 0;
        }
        let mut bottleneck = i64::MAX;
        let mut v = t;
        while v != s {
            let e = pred[v];
            bottleneck = bottleneck.min(self.cap[e]);
            v = self.to[e ^ 1];
        }
        let mut v = t;
        while v != s {
            let e = pred[v];
            self.cap[e] -= bottleneck;
            self.cap[e ^ 1] += bottleneck;
            v = self.to[e ^ 1];
        }
        bottleneck
    }

    /// Augments until `t` is unreachable or the flow exceeds `limit`.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        let mut total = 0;
        while total <= limit {
            let pushed = self.augment(s, t);
            if pushed == 0 {
                break;
            }
            total += pushed;
        }
        total
    }

    pub(crate) fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if !seen[v] && self.cap[e] > 0 {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Flow on forward edges, as `(tail, head, amount)` lists per node.
    fn flow_out(&self) -> Vec<Vec<(usize, i64)>> {
        let mut out = vec![Vec::new(); self.adj.len()];
        for (u, list) in self.adj.iter().enumerate() {
            for &e in list {
                if e % 2 == 0 {
                    let f = self.orig[e] - self.cap[e];
                    if f > 0 {
                        out[u].push((self.to[e], f));
                    }
                }
            }
        }
        out
    }
}

const fn node_in(v: usize) -> usize {
    2 * v
}

const fn node_out(v: usize) -> usize {
    2 * v + 1
}

/// `kappa(x, y)` if it is at most `k`, with a minimum separator and a
/// matching set of disjoint paths. A direct edge `x -> y` means no cut exists.
pub fn pair_vertex_connectivity(g: &DiGraph, x: usize, y: usize, k: usize) -> Result<PairAnswer> {
    if x == y {
        return usage("pair connectivity needs x != y");
    }
    if x >= g.n() || y >= g.n() {
        return usage("pair vertex out of range");
    }
    if g.has_edge(x, y) {
        return Ok(PairAnswer::AtLeast);
    }
    let n = g.n();
    let inf = n as i64 + 1;
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        if v != x && v != y {
            net.add_edge(node_in(v), node_out(v), 1);
        }
    }
    for (u, w) in g.edges() {
        if u != y && w != x {
            net.add_edge(node_out(u), node_in(w), inf);
        }
    }
    let (s, t) = (node_out(x), node_in(y));
    let flow = net.max_flow(s, t, k as i64);
    if flow > k as i64 {
        return Ok(PairAnswer::AtLeast);
    }
    let reach = net.residual_reachable(s);
    let shore: Vec<usize> = (0..n).filter(|&v| reach[node_out(v)]).collect();
    let separator: Vec<usize> = (0..n)
        .filter(|&v| v != x && reach[node_in(v)] && !reach[node_out(v)])
        .collect();
    let paths = decompose_paths(&net, x, y);
    debug_assert_eq!(separator.len() as i64, flow);
    debug_assert_eq!(paths.len() as i64, flow);
    Ok(PairAnswer::Shore {
        shore,
        separator,
        paths,
    })
}

fn decompose_paths(net: &FlowNet, x: usize, y: usize) -> Vec<Vec<usize>> {
    let mut flow = net.flow_out();
    let mut paths = Vec::new();
    loop {
        let mut node = node_out(x);
        let mut path = vec![x];
        let mut ok = true;
        while node != node_in(y) {
            let Some(slot) = flow[node].iter().position(|&(_, f)| f > 0) else {
                ok = false;
                break;
            };
            let next = flow[node][slot].0;
            flow[node][slot].1 -= 1;
            if next.is_multiple_of(2) {
                path.push(next / 2);
            }
            node = next;
        }
        if !ok {
            break;
        }
        paths.push(path);
    }
    paths
}

/// `min_vertex_cut_pair` semantics: the threshold is `n - 2`, so
/// [`PairAnswer::AtLeast`] means `kappa(x, y) = n - 1`.
pub fn min_vertex_cut_pair(g: &DiGraph, x: usize, y: usize) -> Result<PairAnswer> {
    pair_vertex_connectivity(g, x, y, g.n().saturating_sub(2))
}

/// Numeric `kappa(x, y)`, using `n - 1` when no cut exists.
pub fn pair_kappa(g: &DiGraph, x: usize, y: usize) -> Result<usize> {
    Ok(match min_vertex_cut_pair(g, x, y)? {
        PairAnswer::Shore { separator, .. } => separator.len(),
        PairAnswer::AtLeast => g.n() - 1,
    })
}
