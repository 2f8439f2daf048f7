//! Local vertex connectivity.
//!
//! [`local_vc`] decides, around a seed vertex `x`, whether there is a
//! separation triple `(L, S, R)` with `x` in `L`, small `|S|` and small
//! out-volume of `L`. It computes a maximum flow in an augmented split graph
//! that is never built: every round only materialises the [`FlowNetwork`]
//! spanned by the split-node-saturated set and its frontier.
//!
//! Capacities are rational. All flow values are stored as `i128` multiples of
//! `1/D` where `D` is chosen up front (see [`AugmentedCapacities`]) so that
//! every capacity, every `Delta` and every `Delta/4` quota is integral.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use rustc_hash::FxHashMap;

use log::debug;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{usage, Result, VcError};
use crate::graph::DiGraph;
use crate::scc;
use crate::triple::SeparationTriple;

/// Seed vertex, target volume `nu`, target cut size `k` and accuracy `eps`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LocalVcParams {
    pub x: usize,
    pub nu: usize,
    pub k: usize,
    #[serde(serialize_with = "ser_ratio")]
    pub eps: Ratio<i64>,
}

fn ser_ratio<S: serde::Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

impl LocalVcParams {
    pub fn new(x: usize, nu: usize, k: usize, eps: Ratio<i64>) -> Self {
        LocalVcParams { x, nu, k, eps }
    }

    /// `eps = 1/(2k)`, which makes the returned separator have size at most `k`.
    pub fn exact(x: usize, nu: usize, k: usize) -> Self {
        LocalVcParams {
            x,
            nu,
            k,
            eps: Ratio::new(1, 2 * k.max(1) as i64),
        }
    }

    /// `nu/eps + nu`, the cut capacity separating the two answers.
    pub fn threshold(&self) -> Ratio<i128> {
        let nu = Ratio::from_integer(self.nu as i128);
        nu / widen(self.eps) + nu
    }

    /// Largest separator a returned triple may have: `(1+eps)k`.
    pub fn max_separator(&self) -> Ratio<i128> {
        (Ratio::from_integer(1) + widen(self.eps)) * Ratio::from_integer(self.k as i128)
    }

    /// Largest `vol_out(L)` a returned triple may have: `nu/eps + nu + 1`.
    pub fn max_volume(&self) -> Ratio<i128> {
        self.threshold() + Ratio::from_integer(1)
    }
}

fn widen(r: Ratio<i64>) -> Ratio<i128> {
    Ratio::new(*r.numer() as i128, *r.denom() as i128)
}

/// Which side condition makes the parameters admissible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    Sparse,
    Dense,
    Invalid,
}

/// Checks the sparse condition first, then the dense one. Both also need
/// `nu/eps + nu < m`.
pub fn validate_params(g: &DiGraph, p: &LocalVcParams) -> Regime {
    if p.nu == 0 || p.k == 0 || *p.eps.numer() <= 0 || p.x >= g.n() {
        return Regime::Invalid;
    }
    if g.degree_stats().d_min_out < p.k {
        return Regime::Invalid;
    }
    let int = |v: usize| Ratio::from_integer(v as i128);
    let eps = widen(p.eps);
    let (nu, k, n, m) = (int(p.nu), int(p.k), int(g.n()), int(g.m()));
    let one = Ratio::from_integer(1);
    // both regimes need the source edge to be cheaper than cutting every sink edge
    if nu / eps + nu >= m {
        return Regime::Invalid;
    }
    if (one + eps) * (int(2) * nu / (eps * k) + k) < n {
        return Regime::Sparse;
    }
    if nu / eps + (one + eps) * n * k < m {
        return Regime::Dense;
    }
    Regime::Invalid
}

/// Vertices of the augmented graph. The derived order is the tie-break used
/// by every traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Node {
    Source,
    In(usize),
    Out(usize),
    Sink,
}

/// Edges of the augmented graph, identified independently of any network.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum EdgeKey {
    /// `(s, x_out)`.
    Source,
    /// `(v_in, v_out)`.
    Split(usize),
    /// `(u_out, w_in)` for an original edge `(u, w)`.
    Arc(usize, usize),
    /// `(v_out, t)`.
    Sink(usize),
}

impl EdgeKey {
    pub fn endpoints(&self, x: usize) -> (Node, Node) {
        match *self {
            EdgeKey::Source => (Node::Source, Node::Out(x)),
            EdgeKey::Split(v) => (Node::In(v), Node::Out(v)),
            EdgeKey::Arc(u, w) => (Node::Out(u), Node::In(w)),
            EdgeKey::Sink(v) => (Node::Out(v), Node::Sink),
        }
    }
}

/// Capacities of the augmented graph in units of `1/unit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AugmentedCapacities {
    /// The common denominator `D`.
    pub unit: i128,
    /// `nu/(eps k)`.
    pub split: i128,
    /// `nu/eps + nu + 1`.
    pub source: i128,
    /// Stands in for infinity; exceeds every finite cut that matters.
    pub inf: i128,
    /// `nu/eps + nu`.
    pub threshold: i128,
    /// `ceil(sqrt(8 nu/(eps k)))`.
    pub lambda: i128,
    /// Number of halvings of `F` the outer loop can perform.
    pub halvings: u32,
    /// `(nu/eps + nu + 1 - deg(x)) * unit`.
    pub initial_gap: i128,
}

impl AugmentedCapacities {
    pub fn new(g: &DiGraph, p: &LocalVcParams) -> Self {
        let (ep, eq) = (*p.eps.numer() as i128, *p.eps.denom() as i128);
        let (nu, k) = (p.nu as i128, p.k as i128);
        // smallest lambda with lambda^2 * ep * k >= 8 nu eq
        let target = 8 * nu * eq;
        let mut lambda = ((target as f64 / (ep * k) as f64).sqrt().floor() as i128).max(1);
        while lambda * lambda * ep * k < target {
            lambda += 1;
        }
        while lambda > 1 && (lambda - 1) * (lambda - 1) * ep * k >= target {
            lambda -= 1;
        }
        // F0 = gap_num / ep
        let gap_num = nu * eq + nu * ep + ep - g.out_degree(p.x) as i128 * ep;
        let mut halvings = 0u32;
        while gap_num > 0 && (ep << halvings) <= gap_num {
            halvings += 1;
        }
        let scale = 8 * lambda * (1i128 << halvings);
        let unit = ep * k * scale;
        let source = (nu * eq + nu * ep + ep) * k * scale;
        AugmentedCapacities {
            unit,
            split: nu * eq * scale,
            source,
            inf: source + 1,
            threshold: (nu * eq + nu * ep) * k * scale,
            lambda,
            halvings,
            initial_gap: gap_num * k * scale,
        }
    }

    pub fn capacity(&self, g: &DiGraph, key: EdgeKey) -> i128 {
        match key {
            EdgeKey::Source => self.source,
            EdgeKey::Split(_) => self.split,
            EdgeKey::Arc(..) => self.inf,
            EdgeKey::Sink(v) => g.out_degree(v) as i128 * self.unit,
        }
    }

    pub fn to_ratio(&self, scaled: i128) -> Ratio<i128> {
        Ratio::new(scaled, self.unit)
    }
}

/// Flow on the touched edges of the augmented graph plus the
/// split-node-saturated set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualState {
    flow: FxHashMap<EdgeKey, i128>,
    /// Vertices whose out-copy has a saturated sink edge.
    pub b_out: BTreeSet<usize>,
    /// Vertices whose in-copy is an out-neighbour of `b_out`.
    pub b_in: BTreeSet<usize>,
    /// Current flow value `|f|` in units of `1/D`.
    pub total: i128,
}

impl ResidualState {
    pub fn flow(&self, key: EdgeKey) -> i128 {
        self.flow.get(&key).copied().unwrap_or(0)
    }

    /// Touched edges with nonzero flow, in key order.
    pub fn flows(&self) -> BTreeMap<EdgeKey, i128> {
        self.flow.iter().map(|(&k, &v)| (k, v)).collect()
    }

    pub fn in_b(&self, node: Node) -> bool {
        match node {
            Node::Out(v) => self.b_out.contains(&v),
            Node::In(v) => self.b_in.contains(&v),
            Node::Source | Node::Sink => false,
        }
    }

    /// Out-copies in `N^out(B)` that are not themselves in `B`.
    pub fn frontier_outs(&self) -> impl Iterator<Item = usize> + '_ {
        self.b_in.iter().copied().filter(|v| !self.b_out.contains(v))
    }

    fn saturate(&mut self, g: &DiGraph, v: usize, x: usize) {
        if self.b_out.insert(v) {
            for &w in g.out_neighbors(v) {
                if w != x {
                    self.b_in.insert(w);
                }
            }
        }
    }

    fn add_flow(&mut self, key: EdgeKey, amount: i128) {
        let e = self.flow.entry(key).or_insert(0);
        *e += amount;
        if *e == 0 {
            self.flow.remove(&key);
        }
    }

    /// Capacity and conservation on every touched edge and vertex.
    pub fn check_feasible(&self, g: &DiGraph, caps: &AugmentedCapacities, x: usize) -> Result<()> {
        let mut net: HashMap<Node, i128> = HashMap::new();
        for (&key, &f) in &self.flow {
            let c = caps.capacity(g, key);
            if f < 0 || f > c {
                return Err(VcError::Invariant(format!("flow {f} outside [0, {c}] on {key:?}")));
            }
            let (a, b) = key.endpoints(x);
            *net.entry(a).or_insert(0) -= f;
            *net.entry(b).or_insert(0) += f;
        }
        for (node, bal) in net {
            let expected = match node {
                Node::Source => -self.total,
                Node::Sink => self.total,
                _ => 0,
            };
            if bal != expected {
                return Err(VcError::Invariant(format!("imbalance {bal} at {node:?}")));
            }
        }
        for &v in &self.b_out {
            if self.flow(EdgeKey::Sink(v)) != caps.capacity(g, EdgeKey::Sink(v)) {
                return Err(VcError::Invariant(format!("{v} in B_out but unsaturated")));
            }
        }
        Ok(())
    }
}

/// Pushes `deg_out(x)` units along `s -> x_out -> t` and seeds `B`.
pub fn residual_init(g: &DiGraph, p: &LocalVcParams) -> Result<ResidualState> {
    if validate_params(g, p) == Regime::Invalid {
        return usage(format!("invalid local parameters {p:?}"));
    }
    let caps = AugmentedCapacities::new(g, p);
    let push = (g.out_degree(p.x) as i128 * caps.unit).min(caps.source);
    let mut st = ResidualState {
        flow: FxHashMap::default(),
        b_out: BTreeSet::new(),
        b_in: BTreeSet::new(),
        total: push,
    };
    st.add_flow(EdgeKey::Source, push);
    st.add_flow(EdgeKey::Sink(p.x), push);
    if push == caps.capacity(g, EdgeKey::Sink(p.x)) {
        st.saturate(g, p.x, p.x);
    }
    Ok(st)
}

/// One capacitated edge of a materialised network, with its current flow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetEdge {
    pub key: EdgeKey,
    pub tail: usize,
    pub head: usize,
    pub cap: i128,
    pub flow: i128,
}

/// A materialised piece of the augmented graph: the local graph or, for
/// cross-checks, the whole thing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    /// Sorted ascending.
    pub nodes: Vec<Node>,
    pub in_b: Vec<bool>,
    /// Sorted by key.
    pub edges: Vec<NetEdge>,
    /// Both sides of every edge, ordered by (tail, head) of the residual arc.
    arc_order: Vec<(usize, bool)>,
}

impl FlowNetwork {
    fn assemble(mut nodes: Vec<Node>, keys: Vec<EdgeKey>, g: &DiGraph, st: &ResidualState, caps: &AugmentedCapacities, x: usize) -> Self {
        nodes.sort_unstable();
        nodes.dedup();
        let in_b = nodes.iter().map(|&v| st.in_b(v)).collect();
        let index = |v: Node| nodes.binary_search(&v).expect("edge endpoint is a network node");
        let edges = keys
            .into_iter()
            .map(|key| {
                let (a, b) = key.endpoints(x);
                NetEdge {
                    key,
                    tail: index(a),
                    head: index(b),
                    cap: caps.capacity(g, key),
                    flow: st.flow(key),
                }
            })
            .collect::<Vec<NetEdge>>();
        let mut arc_order: Vec<(usize, bool)> = (0..edges.len()).flat_map(|i| [(i, true), (i, false)]).collect();
        arc_order.sort_unstable_by_key(|&(i, fwd)| {
            let e = &edges[i];
            if fwd {
                (e.tail, e.head)
            } else {
                (e.head, e.tail)
            }
        });
        FlowNetwork { nodes, in_b, edges, arc_order }
    }

    /// Adds `delta` to the flow of the listed edges, all of which must exist.
    fn add_flows(&mut self, delta: &BTreeMap<EdgeKey, i128>) {
        for (&key, &d) in delta {
            let i = self.edges.binary_search_by_key(&key, |e| e.key).expect("augmented edge is in the network");
            self.edges[i].flow += d;
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, v: Node) -> Option<usize> {
        self.nodes.binary_search(&v).ok()
    }
}

/// The local graph: `B`, its out-neighbourhood, `s` and `t`, with split
/// and sink edges of `B_out` and the frontier, and the arcs leaving `B_out`.
/// Only `B_out` adjacency and frontier degrees are read.
pub fn build_local_graph(g: &DiGraph, st: &ResidualState, p: &LocalVcParams, caps: &AugmentedCapacities) -> FlowNetwork {
    let x = p.x;
    let mut nodes = vec![Node::Source, Node::Sink, Node::Out(x)];
    let mut keys = vec![EdgeKey::Source];
    for v in st.b_out.iter().copied().chain(st.frontier_outs()) {
        nodes.push(Node::Out(v));
        if v != x {
            nodes.push(Node::In(v));
            keys.push(EdgeKey::Split(v));
        }
        keys.push(EdgeKey::Sink(v));
    }
    nodes.extend(st.b_in.iter().map(|&v| Node::In(v)));
    for &v in &st.b_out {
        for &w in g.out_neighbors(v) {
            if w != x {
                keys.push(EdgeKey::Arc(v, w));
            }
        }
    }
    keys.sort_unstable();
    FlowNetwork::assemble(nodes, keys, g, st, caps, x)
}

/// The whole augmented graph with the flow of `st`. Only for cross-checks.
pub fn explicit_augmented_network(g: &DiGraph, st: &ResidualState, p: &LocalVcParams, caps: &AugmentedCapacities) -> FlowNetwork {
    let x = p.x;
    let mut nodes = vec![Node::Source, Node::Sink];
    let mut keys = vec![EdgeKey::Source];
    for v in 0..g.n() {
        nodes.push(Node::Out(v));
        if v != x {
            nodes.push(Node::In(v));
            keys.push(EdgeKey::Split(v));
        }
        keys.push(EdgeKey::Sink(v));
    }
    for (u, w) in g.edges() {
        if w != x {
            keys.push(EdgeKey::Arc(u, w));
        }
    }
    keys.sort_unstable();
    FlowNetwork::assemble(nodes, keys, g, st, caps, x)
}

/// A residual arc: the forward or backward side of a network edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualArc {
    pub tail: usize,
    pub head: usize,
    pub edge: usize,
    pub forward: bool,
    pub residual: i128,
    pub modern: bool,
    pub special: bool,
    pub len: u32,
}

/// Binary lengths of the residual arcs and the distances they induce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthAssignment {
    pub delta: i128,
    /// Sorted by `(tail, head)`.
    pub arcs: Vec<ResidualArc>,
    /// Distance from `s` under the final lengths; `t` is not expanded.
    pub dist: Vec<Option<u32>>,
    /// The truncated auxiliary distance used to detect special arcs.
    pub hhat: Vec<Option<u32>>,
    pub d_max: Option<u32>,
}

impl LengthAssignment {
    /// Nodes at distance exactly `j`.
    pub fn layer(&self, j: u32) -> Vec<usize> {
        (0..self.dist.len()).filter(|&v| self.dist[v] == Some(j)).collect()
    }
}

fn residual_arcs(net: &FlowNetwork) -> Vec<ResidualArc> {
    let mut arcs = Vec::with_capacity(net.arc_order.len());
    for &(i, forward) in &net.arc_order {
        let e = &net.edges[i];
        let (tail, head, residual) = if forward { (e.tail, e.head, e.cap - e.flow) } else { (e.head, e.tail, e.flow) };
        if residual > 0 {
            arcs.push(ResidualArc {
                tail,
                head,
                edge: i,
                forward,
                residual,
                modern: net.in_b[e.tail] && net.in_b[e.head],
                special: false,
                len: 1,
            });
        }
    }
    arcs
}

/// 0-1 BFS from `src`, never expanding `stop`.
fn zero_one_bfs(nodes: usize, arcs: &[ResidualArc], first: &[usize], src: usize, stop: usize, len: impl Fn(&ResidualArc) -> u32) -> Vec<Option<u32>> {
    let mut dist: Vec<Option<u32>> = vec![None; nodes];
    let mut done = vec![false; nodes];
    dist[src] = Some(0);
    let mut dq = VecDeque::from([src]);
    while let Some(u) = dq.pop_front() {
        if done[u] {
            continue;
        }
        done[u] = true;
        if u == stop {
            continue;
        }
        let du = dist[u].expect("queued nodes have a distance");
        for a in &arcs[first[u]..first[u + 1]] {
            let l = len(a);
            let nd = du + l;
            if dist[a.head].is_none_or(|d| nd < d) {
                dist[a.head] = Some(nd);
                if l == 0 {
                    dq.push_front(a.head);
                } else {
                    dq.push_back(a.head);
                }
            }
        }
    }
    dist
}

fn arc_offsets(nodes: usize, arcs: &[ResidualArc]) -> Vec<usize> {
    let mut first = vec![0usize; nodes + 1];
    for a in arcs {
        first[a.tail + 1] += 1;
    }
    for i in 0..nodes {
        first[i + 1] += first[i];
    }
    first
}

/// Local binary lengths for threshold `delta` (in units of `1/D`).
///
/// Arcs with both ends in `B` are modern; all others are classical with
/// length 1. A modern arc has length 0 if its residual capacity is at least
/// `delta` or it is special, 1 otherwise.
pub fn assign_lengths(net: &FlowNetwork, delta: i128) -> LengthAssignment {
    let n = net.nodes.len();
    let mut arcs = residual_arcs(net);
    let first = arc_offsets(n, &arcs);
    let src = net.index_of(Node::Source).expect("network has a source");
    let sink = net.index_of(Node::Sink).expect("network has a sink");
    let hat = |a: &ResidualArc| u32::from(a.residual < delta);
    let h = zero_one_bfs(n, &arcs, &first, src, sink, |a| if a.modern { hat(a) } else { 1 });
    let Some(ht) = h[sink] else {
        return LengthAssignment {
            delta,
            arcs,
            dist: h.clone(),
            hhat: h,
            d_max: None,
        };
    };
    let hhat: Vec<Option<u32>> = h.iter().map(|d| d.map(|d| d.min(ht))).collect();
    let reverse_residual = |a: &ResidualArc| {
        let e = &net.edges[a.edge];
        if a.forward {
            e.flow
        } else {
            e.cap - e.flow
        }
    };
    for a in arcs.iter_mut() {
        a.special = a.modern
            && hhat[a.tail].is_some()
            && hhat[a.tail] == hhat[a.head]
            && 2 * a.residual >= delta
            && a.residual < delta
            && reverse_residual(a) >= delta;
        a.len = if !a.modern || (a.residual < delta && !a.special) { 1 } else { 0 };
    }
    let dist = zero_one_bfs(n, &arcs, &first, src, sink, |a| a.len);
    let d_max = dist[sink];
    LengthAssignment {
        delta,
        arcs,
        dist,
        hhat,
        d_max,
    }
}

/// Items bucketed by a key in `0..n`, keeping their relative order.
struct Csr {
    start: Vec<usize>,
    items: Vec<usize>,
}

impl Csr {
    fn group(n: usize, items: &[usize], key: impl Fn(usize) -> usize) -> Self {
        let mut start = vec![0usize; n + 1];
        for &i in items {
            start[key(i) + 1] += 1;
        }
        for j in 0..n {
            start[j + 1] += start[j];
        }
        let mut fill = start.clone();
        let mut out = vec![0usize; items.len()];
        for &i in items {
            let k = key(i);
            out[fill[k]] = i;
            fill[k] += 1;
        }
        Csr { start, items: out }
    }

    fn row(&self, k: usize) -> &[usize] {
        &self.items[self.start[k]..self.start[k + 1]]
    }
}

/// Result of one blocking-flow round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockingOutcome {
    /// Net change of flow per augmented-graph edge; zero entries omitted.
    pub delta: BTreeMap<EdgeKey, i128>,
    pub value: i128,
    /// No admissible `s -> t` path is left.
    pub blocking: bool,
}

/// A `Delta/4`-or-blocking flow on the admissible arcs.
///
/// Zero-length strongly connected pieces of the admissible graph are
/// contracted; the resulting DAG gets a Dinic-style search with current-arc
/// pointers, and flow is routed inside each piece through an in-tree and an
/// out-tree rooted at its smallest node. Every choice follows node order.
pub fn blocking_flow(net: &FlowNetwork, la: &LengthAssignment) -> BlockingOutcome {
    let empty = BlockingOutcome {
        delta: BTreeMap::new(),
        value: 0,
        blocking: true,
    };
    let Some(dmax) = la.d_max else {
        return empty;
    };
    let src = net.index_of(Node::Source).expect("network has a source");
    let sink = net.index_of(Node::Sink).expect("network has a sink");
    let quota = la.delta / 4;
    let nn = net.nodes.len();

    // admissible arcs on some shortest path prefix, as (tail, head, residual, arc)
    let mut arcs: Vec<(usize, usize, i128, usize)> = Vec::with_capacity(la.arcs.len());
    let mut zero: Vec<usize> = Vec::new();
    for (i, a) in la.arcs.iter().enumerate() {
        if let (Some(du), Some(dv)) = (la.dist[a.tail], la.dist[a.head]) {
            if du < dmax && du + a.len == dv && (a.head == sink || dv < dmax) {
                if a.len == 0 {
                    zero.push(arcs.len());
                }
                arcs.push((a.tail, a.head, a.residual, i));
            }
        }
    }

    // distances grow along admissible arcs, so every cycle among them is
    // made of zero-length arcs
    let zero_out = Csr::group(nn, &zero, |j| arcs[j].0);
    let zero_in = Csr::group(nn, &zero, |j| arcs[j].1);
    let mut comp: Vec<usize> = (0..nn).collect();
    let mut count = nn;
    let mut pieces: Vec<usize> = Vec::new();
    if !zero.is_empty() {
        let mut local = vec![usize::MAX; nn];
        for &j in &zero {
            local[arcs[j].0] = 0;
            local[arcs[j].1] = 0;
        }
        let touched: Vec<usize> = (0..nn).filter(|&v| local[v] == 0).collect();
        for (i, &v) in touched.iter().enumerate() {
            local[v] = i;
        }
        let sc = scc::tarjan(touched.len(), |i| zero_out.row(touched[i]).iter().map(|&j| local[arcs[j].1]));
        let mut size = vec![0usize; sc.count];
        for &c in &sc.comp {
            size[c] += 1;
        }
        for (i, &v) in touched.iter().enumerate() {
            if size[sc.comp[i]] > 1 {
                comp[v] = nn + sc.comp[i];
                pieces.push(v);
            }
        }
        count = nn + sc.count;
    }
    let between: Vec<usize> = (0..arcs.len()).filter(|&j| comp[arcs[j].0] != comp[arcs[j].1]).collect();
    let cross = Csr::group(count, &between, |j| comp[arcs[j].0]);

    let mut used = vec![0i128; arcs.len()];
    let mut entering = vec![0i128; nn];
    let mut leaving = vec![0i128; nn];
    let mut ptr = vec![0usize; count];
    let mut dead = vec![false; count];
    let (cs, ct) = (comp[src], comp[sink]);
    let mut total = 0i128;
    let mut blocking = false;
    let mut path: Vec<usize> = Vec::new();
    // after each augmentation the search resumes at the first saturated arc,
    // which is where a restart from the source would get back to
    let mut c = cs;
    while total < quota {
        let found = loop {
            if c == ct {
                break true;
            }
            let mut next = None;
            let row = cross.row(c);
            while ptr[c] < row.len() {
                let j = row[ptr[c]];
                if arcs[j].2 > used[j] && !dead[comp[arcs[j].1]] {
                    next = Some(j);
                    break;
                }
                ptr[c] += 1;
            }
            match next {
                Some(j) => {
                    path.push(j);
                    c = comp[arcs[j].1];
                }
                None => {
                    dead[c] = true;
                    match path.pop() {
                        Some(j) => c = comp[arcs[j].0],
                        None => break false,
                    }
                }
            }
        };
        if !found {
            blocking = true;
            break;
        }
        let mut push = quota - total;
        for &j in &path {
            push = push.min(arcs[j].2 - used[j]);
        }
        for &j in &path {
            used[j] += push;
            leaving[arcs[j].0] += push;
            entering[arcs[j].1] += push;
        }
        total += push;
        if let Some(q) = path.iter().position(|&j| arcs[j].2 == used[j]) {
            c = comp[arcs[path[q]].0];
            path.truncate(q);
        }
    }
    entering[src] += total;
    leaving[sink] += total;

    // route through each nontrivial component along an in-tree and an
    // out-tree rooted at its smallest node
    let mut parent = vec![usize::MAX; nn];
    let mut acc = vec![0i128; nn];
    let mut seen = vec![false; nn];
    let groups = Csr::group(count, &pieces, |v| comp[v]);
    for cid in nn..count {
        let group = groups.row(cid);
        if group.len() < 2 {
            continue;
        }
        let root = group[0];
        for tree_in in [true, false] {
            let demand = if tree_in { &entering } else { &leaving };
            // BFS from the root against (in-tree) or along (out-tree) arcs
            let mut order = vec![root];
            parent[root] = usize::MAX;
            for &v in group {
                seen[v] = false;
            }
            seen[root] = true;
            let mut head = 0;
            while head < order.len() {
                let v = order[head];
                head += 1;
                let row = if tree_in { zero_in.row(v) } else { zero_out.row(v) };
                for &j in row {
                    let w = if tree_in { arcs[j].0 } else { arcs[j].1 };
                    if comp[w] == cid && !seen[w] {
                        seen[w] = true;
                        parent[w] = j;
                        order.push(w);
                    }
                }
            }
            for &v in group {
                acc[v] = demand[v];
            }
            for &v in order.iter().rev() {
                let j = parent[v];
                if j == usize::MAX {
                    continue;
                }
                let amount = acc[v];
                used[j] += amount;
                let up = if tree_in { arcs[j].1 } else { arcs[j].0 };
                acc[up] += amount;
            }
        }
    }

    let mut delta: BTreeMap<EdgeKey, i128> = BTreeMap::new();
    for (j, &amount) in used.iter().enumerate() {
        if amount == 0 {
            continue;
        }
        let a = &la.arcs[arcs[j].3];
        let signed = if a.forward { amount } else { -amount };
        *delta.entry(net.edges[a.edge].key).or_insert(0) += signed;
    }
    delta.retain(|_, v| *v != 0);
    BlockingOutcome {
        delta,
        value: total,
        blocking,
    }
}

fn apply(g: &DiGraph, st: &mut ResidualState, caps: &AugmentedCapacities, x: usize, delta: &BTreeMap<EdgeKey, i128>) -> Result<()> {
    for (&key, &d) in delta {
        st.add_flow(key, d);
        let f = st.flow(key);
        let c = caps.capacity(g, key);
        if f < 0 || f > c {
            return Err(VcError::Invariant(format!("augmentation left flow {f} on {key:?} (cap {c})")));
        }
        if key == EdgeKey::Source {
            st.total = f;
        }
    }
    for &key in delta.keys() {
        if let EdgeKey::Sink(v) = key {
            if st.flow(key) == caps.capacity(g, key) {
                st.saturate(g, v, x);
            }
        }
    }
    Ok(())
}

/// Everything an observer sees about one blocking-flow round, before the
/// flow is applied.
pub struct RoundInfo<'a> {
    pub phase: u32,
    pub round: i128,
    pub state: &'a ResidualState,
    pub local: &'a FlowNetwork,
    pub lengths: &'a LengthAssignment,
    pub outcome: &'a BlockingOutcome,
}

/// Minimum `(s, t)` cut read off the residual local graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCut {
    pub value: Ratio<i128>,
    pub scaled: i128,
    pub edges: Vec<EdgeKey>,
    /// Vertices whose split edge is cut.
    pub split_cut: Vec<usize>,
    pub source_side: Vec<Node>,
}

#[derive(Debug, Clone)]
pub struct LocalFlowOutcome {
    pub caps: AugmentedCapacities,
    pub state: Option<ResidualState>,
    /// The flow value; a lower bound when `stopped_early`.
    pub value: Ratio<i128>,
    /// `None` when stopped early.
    pub cut: Option<MinCut>,
    pub stopped_early: bool,
    pub rounds: usize,
    pub max_local_edges: usize,
    pub max_local_nodes: usize,
}

/// Exact maximum flow and minimum cut of the augmented graph.
pub fn local_flow(g: &DiGraph, p: &LocalVcParams) -> Result<LocalFlowOutcome> {
    local_flow_observed(g, p, false, &mut |_| {})
}

/// [`local_flow`] with an observer called on every blocking-flow round. With
/// `stop_above`, returns as soon as the flow exceeds `nu/eps + nu`.
pub fn local_flow_observed(g: &DiGraph, p: &LocalVcParams, stop_above: bool, observer: &mut dyn FnMut(&RoundInfo<'_>)) -> Result<LocalFlowOutcome> {
    let mut st = residual_init(g, p)?;
    let caps = AugmentedCapacities::new(g, p);
    let x = p.x;
    let mut out = LocalFlowOutcome {
        caps,
        state: None,
        value: caps.to_ratio(caps.source),
        cut: None,
        stopped_early: false,
        rounds: 0,
        max_local_edges: 0,
        max_local_nodes: 0,
    };
    if caps.initial_gap <= 0 {
        out.cut = Some(MinCut {
            value: caps.to_ratio(caps.source),
            scaled: caps.source,
            edges: vec![EdgeKey::Source],
            split_cut: Vec::new(),
            source_side: vec![Node::Source],
        });
        out.stopped_early = stop_above && caps.source > caps.threshold;
        out.state = Some(st);
        return Ok(out);
    }
    let over = |st: &ResidualState| stop_above && st.total > caps.threshold;

    // rebuilt only when B grows; otherwise flows are patched in place
    let mut lg = build_local_graph(g, &st, p, &caps);
    let mut lg_b = st.b_out.len();
    out.max_local_edges = lg.edge_count();
    out.max_local_nodes = lg.node_count();
    let mut gap = caps.initial_gap;
    let mut phase = 0u32;
    'outer: while gap >= caps.unit {
        let delta = gap / (2 * caps.lambda);
        for round in 0..5 * caps.lambda {
            if st.b_out.len() != lg_b {
                lg = build_local_graph(g, &st, p, &caps);
                lg_b = st.b_out.len();
                out.max_local_edges = out.max_local_edges.max(lg.edge_count());
                out.max_local_nodes = out.max_local_nodes.max(lg.node_count());
            }
            let la = assign_lengths(&lg, delta);
            if la.d_max.is_none() {
                break 'outer;
            }
            let bf = blocking_flow(&lg, &la);
            observer(&RoundInfo {
                phase,
                round,
                state: &st,
                local: &lg,
                lengths: &la,
                outcome: &bf,
            });
            apply(g, &mut st, &caps, x, &bf.delta)?;
            lg.add_flows(&bf.delta);
            out.rounds += 1;
            if over(&st) {
                out.value = caps.to_ratio(st.total);
                out.stopped_early = true;
                out.state = Some(st);
                return Ok(out);
            }
        }
        gap /= 2;
        phase += 1;
    }

    // capacities are not integral, so finish with plain augmenting paths
    loop {
        if st.b_out.len() != lg_b {
            lg = build_local_graph(g, &st, p, &caps);
            lg_b = st.b_out.len();
            out.max_local_edges = out.max_local_edges.max(lg.edge_count());
            out.max_local_nodes = out.max_local_nodes.max(lg.node_count());
        }
        let Some(delta) = augmenting_path(&lg) else {
            out.cut = Some(extract_cut(&lg, &caps));
            break;
        };
        apply(g, &mut st, &caps, x, &delta)?;
        lg.add_flows(&delta);
        if over(&st) {
            out.value = caps.to_ratio(st.total);
            out.stopped_early = true;
            out.state = Some(st);
            return Ok(out);
        }
    }
    out.value = caps.to_ratio(st.total);
    out.state = Some(st);
    Ok(out)
}

/// One shortest residual `s -> t` path in node order, as an edge delta.
fn augmenting_path(net: &FlowNetwork) -> Option<BTreeMap<EdgeKey, i128>> {
    let arcs = residual_arcs(net);
    let first = arc_offsets(net.nodes.len(), &arcs);
    let src = net.index_of(Node::Source)?;
    let sink = net.index_of(Node::Sink)?;
    let mut pred: Vec<Option<usize>> = vec![None; net.nodes.len()];
    let mut seen = vec![false; net.nodes.len()];
    seen[src] = true;
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        if u == sink {
            break;
        }
        for (i, a) in arcs.iter().enumerate().take(first[u + 1]).skip(first[u]) {
            if !seen[a.head] {
                seen[a.head] = true;
                pred[a.head] = Some(i);
                queue.push_back(a.head);
            }
        }
    }
    if !seen[sink] {
        return None;
    }
    let mut path = Vec::new();
    let mut v = sink;
    while let Some(i) = pred[v] {
        path.push(i);
        v = arcs[i].tail;
    }
    let push = path.iter().map(|&i| arcs[i].residual).min()?;
    let mut delta = BTreeMap::new();
    for &i in &path {
        let a = &arcs[i];
        let signed = if a.forward { push } else { -push };
        *delta.entry(net.edges[a.edge].key).or_insert(0) += signed;
    }
    delta.retain(|_, v: &mut i128| *v != 0);
    Some(delta)
}

fn extract_cut(net: &FlowNetwork, caps: &AugmentedCapacities) -> MinCut {
    let arcs = residual_arcs(net);
    let first = arc_offsets(net.nodes.len(), &arcs);
    let src = net.index_of(Node::Source).expect("network has a source");
    let mut seen = vec![false; net.nodes.len()];
    seen[src] = true;
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for a in &arcs[first[u]..first[u + 1]] {
            if !seen[a.head] {
                seen[a.head] = true;
                queue.push_back(a.head);
            }
        }
    }
    let crossing: Vec<&NetEdge> = net.edges.iter().filter(|e| seen[e.tail] && !seen[e.head]).collect();
    let scaled = crossing.iter().map(|e| e.cap).sum();
    MinCut {
        value: caps.to_ratio(scaled),
        scaled,
        edges: crossing.iter().map(|e| e.key).collect(),
        split_cut: crossing
            .iter()
            .filter_map(|e| match e.key {
                EdgeKey::Split(v) => Some(v),
                _ => None,
            })
            .collect(),
        source_side: (0..net.nodes.len()).filter(|&v| seen[v]).map(|v| net.nodes[v]).collect(),
    }
}

/// Separation triple from a cut of capacity at most `nu/eps + nu`: `S` is
/// the set of cut split edges, `L` what `x` reaches in `G - S`.
pub fn cut_to_triple(g: &DiGraph, cut: &MinCut, p: &LocalVcParams) -> Result<SeparationTriple> {
    if cut.value > p.threshold() {
        return usage("cut capacity exceeds nu/eps + nu; the answer is bottom");
    }
    SeparationTriple::from_separator(g, &cut.split_cut, p.x)
        .ok_or_else(|| VcError::Invariant(format!("cut {:?} does not separate from {}", cut.split_cut, p.x)))
}

/// Answer of [`local_vc`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum TripleAnswer {
    Triple(SeparationTriple),
    Bottom,
}

/// Either a triple with `|S| <= (1+eps)k` and `vol_out(L) <= nu/eps + nu + 1`,
/// or `Bottom`, meaning no triple with `|S| <= k` and `vol_out(L) <= nu`
/// has `x` in `L`.
pub fn local_vc(g: &DiGraph, p: &LocalVcParams) -> Result<TripleAnswer> {
    let res = local_flow_observed(g, p, true, &mut |_| {})?;
    if res.stopped_early {
        return Ok(TripleAnswer::Bottom);
    }
    let cut = res.cut.expect("a finished flow has a cut");
    if cut.value > p.threshold() {
        return Ok(TripleAnswer::Bottom);
    }
    // when m itself is below the threshold the cheapest cut can put every
    // vertex on the source side, which separates nothing
    if SeparationTriple::from_separator(g, &cut.split_cut, p.x).is_none() {
        debug!("cut at {} leaves no right side", p.x);
        return Ok(TripleAnswer::Bottom);
    }
    Ok(TripleAnswer::Triple(cut_to_triple(g, &cut, p)?))
}

/// [`local_vc`] with `eps = 1/(2k)`: a returned separator has at most `k`
/// vertices.
pub fn local_vc_exact(g: &DiGraph, x: usize, nu: usize, k: usize) -> Result<TripleAnswer> {
    local_vc(g, &LocalVcParams::exact(x, nu, k))
}
