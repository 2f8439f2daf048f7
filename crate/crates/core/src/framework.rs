//! The sampling framework: balanced cuts are caught by pair flows between
//! random samples, unbalanced ones by local flows from random seeds. On top
//! of the decision procedure sit the exact and approximate `kappa` searches.

use std::collections::HashSet;

use log::debug;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{usage, Result, VcError};
use crate::graph::DiGraph;
use crate::local::{local_vc, validate_params, LocalVcParams, Regime, TripleAnswer};
use crate::pair::{pair_vertex_connectivity, PairAnswer};
use crate::sparsify;
use crate::triple::SeparationTriple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sampling {
    Vertex,
    Edge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mode {
    Exact,
    Approx,
}

/// Parameters of one run of the decision procedure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrameworkConfig {
    pub sampling: Sampling,
    pub use_local_vc: bool,
    pub k: usize,
    /// Balancedness threshold; scales run over `2, 4, ..., 2^ceil(log2 a)`.
    pub a: f64,
    #[serde(serialize_with = "ser_ratio")]
    pub eps: Ratio<i64>,
    pub mode: Mode,
    pub seed: u64,
    /// The constant `c` in `c * ln n` repetitions.
    pub boost: f64,
}

fn ser_ratio<S: serde::Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

impl FrameworkConfig {
    /// Scales `2^l` for `1 <= l <= ceil(log2 a)`.
    pub fn scales(&self) -> Vec<usize> {
        let top = self.a.max(1.0).log2().ceil() as u32;
        (1..=top).map(|l| 1usize << l).collect()
    }

    /// The accuracy handed to local flows: `1/(2k)` in exact mode.
    pub fn local_eps(&self) -> Ratio<i64> {
        match self.mode {
            Mode::Exact => Ratio::new(1, 2 * self.k.max(1) as i64),
            Mode::Approx => self.eps,
        }
    }

    /// Largest accepted pair connectivity: `k`, or `floor((1+eps)k)`.
    pub fn pair_threshold(&self) -> usize {
        match self.mode {
            Mode::Exact => self.k,
            Mode::Approx => ((Ratio::from_integer(1) + self.eps) * Ratio::from_integer(self.k as i64)).to_integer() as usize,
        }
    }
}

/// Answer of the decision procedure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum VcAnswer {
    /// A vertex cut, its triple, and the pair it separates when one is known.
    Cut {
        separator: Vec<usize>,
        triple: SeparationTriple,
        witness: Option<(usize, usize)>,
    },
    /// The connectivity is at least this value.
    AtLeast(usize),
}

impl VcAnswer {
    pub fn separator(&self) -> Option<&[usize]> {
        match self {
            VcAnswer::Cut { separator, .. } => Some(separator),
            VcAnswer::AtLeast(_) => None,
        }
    }

    fn from_triple(triple: SeparationTriple, witness: Option<(usize, usize)>) -> Self {
        VcAnswer::Cut {
            separator: triple.sep.clone(),
            triple,
            witness,
        }
    }
}

/// Work counters of one decision run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DecideStats {
    pub pair_flows: usize,
    pub local_calls: usize,
    pub nu_schedule: Vec<usize>,
    pub skipped_scales: Vec<usize>,
}

fn samples(boost: f64, n: usize, target: f64) -> usize {
    let ln = (n.max(2) as f64).ln();
    (boost * ln * target).ceil().max(1.0) as usize
}

/// Parameter rules per mode and directedness. `sampling` overrides the
/// automatic choice of sampling method.
pub fn choose_params(n: usize, m: usize, k: usize, eps: Ratio<i64>, directed: bool, mode: Mode, sampling: Option<Sampling>) -> FrameworkConfig {
    let (nf, mf, kf) = (n.max(2) as f64, m.max(2) as f64, k.max(1) as f64);
    let base = FrameworkConfig {
        sampling: Sampling::Edge,
        use_local_vc: true,
        k,
        a: 1.0,
        eps,
        mode,
        seed: 0,
        boost: 3.0,
    };
    let (auto, a_edge, a_vertex, local) = match (mode, directed) {
        (Mode::Exact, false) => {
            let mp = m.min(2 * (k + 1) * n) as f64;
            (Sampling::Edge, mp.powf(2.0 / 3.0), mp.powf(1.0 / 3.0), true)
        }
        (Mode::Exact, true) => {
            let auto = if mf < nf.powf(1.5) { Sampling::Edge } else { Sampling::Vertex };
            (auto, mf.powf(2.0 / 3.0), mf.powf(1.0 / 3.0), true)
        }
        (Mode::Approx, false) => {
            let mp = m.min(2 * (k + 1) * n).max(2) as f64;
            let kh = kf.ln() / nf.ln();
            let ah = (5.0 * kh + 2.0).min(kh + 4.0) / (3.0 * kh + 3.0);
            let local = kf <= nf.powf(0.8);
            let auto = if local { Sampling::Edge } else { Sampling::Vertex };
            (auto, mp.powf(ah.min(1.0)), mp.powf(1.0 / 3.0) * kf.sqrt(), local)
        }
        (Mode::Approx, true) => {
            let lmk = kf.ln() / mf.ln();
            let lmn = nf.ln() / mf.ln();
            let local = kf <= nf.powf(0.8);
            let (ae, av) = if kf <= nf.sqrt() {
                (mf.powf((2.0 / 3.0 + lmk).min(1.0)), mf.powf(1.0 / 3.0) * kf.sqrt())
            } else {
                let lnk = kf.ln() / nf.ln();
                (mf.powf((4.0 * lmn / 3.0 + lmk / 3.0).min(1.0)), nf.powf(2.0 / 3.0 + lnk / 6.0))
            };
            let auto = if local { Sampling::Edge } else { Sampling::Vertex };
            (auto, ae, av, local)
        }
    };
    let sampling = sampling.unwrap_or(auto);
    let a = match sampling {
        Sampling::Edge => a_edge,
        Sampling::Vertex => a_vertex,
    };
    FrameworkConfig {
        sampling,
        use_local_vc: local,
        a: a.max(1.0),
        ..base
    }
}

/// The out- or in-neighbourhood of a minimum-degree vertex, whichever is
/// smaller. `None` for complete graphs.
pub fn degree_cut(g: &DiGraph) -> Option<SeparationTriple> {
    if g.is_complete() {
        return None;
    }
    let st = g.degree_stats();
    if st.d_min_out <= st.d_min_in {
        let v = st.v_min_out;
        SeparationTriple::from_separator(g, g.out_neighbors(v), v)
    } else {
        let v = st.v_min_in;
        SeparationTriple::from_separator(&g.reverse(), g.in_neighbors(v), v).map(|t| t.reversed())
    }
}

fn disconnected_answer(g: &DiGraph) -> Option<VcAnswer> {
    let (u, v) = g.unreachable_pair()?;
    let triple = SeparationTriple::from_separator(g, &[], u).expect("v is unreachable from u");
    Some(VcAnswer::from_triple(triple, Some((u, v))))
}

struct Search<'a> {
    g: &'a DiGraph,
    /// The graph sampled from: `g` or its sparse certificate.
    work: &'a DiGraph,
    work_rev: DiGraph,
    edges: Vec<(usize, usize)>,
    cfg: &'a FrameworkConfig,
    threshold: usize,
    stats: DecideStats,
    /// Pairs and local probes already answered negatively; both flows are
    /// deterministic, so repeats are skipped.
    pairs_done: HashSet<(usize, usize)>,
    local_done: HashSet<(usize, bool)>,
}

impl Search<'_> {
    fn sparsified(&self) -> bool {
        !std::ptr::eq(self.g, self.work)
    }

    /// A cut of size at most the threshold separating `x` from `y` in `g`.
    fn pair(&mut self, x: usize, y: usize) -> Result<Option<VcAnswer>> {
        if x == y || !self.pairs_done.insert((x, y)) {
            return Ok(None);
        }
        self.stats.pair_flows += 1;
        let PairAnswer::Shore { separator, .. } = pair_vertex_connectivity(self.work, x, y, self.threshold)? else {
            return Ok(None);
        };
        if self.sparsified() {
            return self.rederive(x, y);
        }
        let triple = SeparationTriple::from_separator(self.g, &separator, x)
            .ok_or_else(|| VcError::Invariant("pair separator does not separate".into()))?;
        Ok(Some(VcAnswer::from_triple(triple, Some((x, y)))))
    }

    /// Recomputes a cut found on the certificate directly on `g`.
    fn rederive(&mut self, x: usize, y: usize) -> Result<Option<VcAnswer>> {
        self.stats.pair_flows += 1;
        match pair_vertex_connectivity(self.g, x, y, self.threshold)? {
            PairAnswer::Shore { separator, .. } => {
                let triple = SeparationTriple::from_separator(self.g, &separator, x)
                    .ok_or_else(|| VcError::Invariant("re-derived separator does not separate".into()))?;
                Ok(Some(VcAnswer::from_triple(triple, Some((x, y)))))
            }
            PairAnswer::AtLeast => {
                debug!("certificate cut between {x} and {y} not confirmed on the input graph");
                Ok(None)
            }
        }
    }

    fn local(&mut self, z: usize, nu: usize, reversed: bool) -> Result<Option<VcAnswer>> {
        // the reverse of a bidirected graph is itself
        let reversed = reversed && self.work.is_directed();
        if !self.local_done.insert((z, reversed)) {
            return Ok(None);
        }
        let p = LocalVcParams::new(z, nu, self.cfg.k, self.cfg.local_eps());
        let h = if reversed { &self.work_rev } else { self.work };
        if validate_params(h, &p) == Regime::Invalid {
            return Ok(None);
        }
        self.stats.local_calls += 1;
        let TripleAnswer::Triple(t) = local_vc(h, &p)? else {
            return Ok(None);
        };
        let t = if reversed { t.reversed() } else { t };
        let (x, y) = (t.left[0], t.right[0]);
        if self.sparsified() {
            return self.rederive(x, y);
        }
        if !t.verify(self.g) {
            return Err(VcError::Invariant(format!("local triple {t:?} fails verification")));
        }
        Ok(Some(VcAnswer::from_triple(t, Some((x, y)))))
    }

    fn run(&mut self, rng: &mut ChaCha8Rng) -> Result<Option<VcAnswer>> {
        let n = self.work.n();
        let m = self.work.m();
        let cfg = self.cfg;
        let eps_factor = match cfg.mode {
            Mode::Exact => 1.0,
            Mode::Approx => 1.0 / (*cfg.eps.numer() as f64 / *cfg.eps.denom() as f64),
        };
        match cfg.sampling {
            Sampling::Vertex => {
                for _ in 0..samples(cfg.boost, n, eps_factor * n as f64 / cfg.a) {
                    let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
                    if let Some(ans) = self.pair(x, y)? {
                        return Ok(Some(ans));
                    }
                }
            }
            Sampling::Edge => {
                for _ in 0..samples(cfg.boost, n, eps_factor * m as f64 / cfg.a) {
                    let (x1, y1) = self.edges[rng.gen_range(0..m)];
                    let (x2, y2) = self.edges[rng.gen_range(0..m)];
                    for (x, y) in [(x1, y2), (x1, x2), (y1, x2), (y1, y2)] {
                        if let Some(ans) = self.pair(x, y)? {
                            return Ok(Some(ans));
                        }
                    }
                }
            }
        }
        if !cfg.use_local_vc {
            return Ok(None);
        }
        for s in cfg.scales() {
            let nu = match cfg.sampling {
                Sampling::Vertex => s * s + s * cfg.k,
                Sampling::Edge => s,
            };
            let probe = LocalVcParams::new(0, nu, cfg.k, cfg.local_eps());
            if validate_params(self.work, &probe) == Regime::Invalid && validate_params(&self.work_rev, &probe) == Regime::Invalid {
                debug!("skipping scale {s}: nu = {nu} violates the local conditions");
                self.stats.skipped_scales.push(s);
                continue;
            }
            self.stats.nu_schedule.push(nu);
            self.local_done.clear();
            match cfg.sampling {
                Sampling::Vertex => {
                    for _ in 0..samples(cfg.boost, n, n as f64 / s as f64) {
                        let x = rng.gen_range(0..n);
                        for reversed in [false, true] {
                            if let Some(ans) = self.local(x, nu, reversed)? {
                                return Ok(Some(ans));
                            }
                        }
                    }
                }
                Sampling::Edge => {
                    for _ in 0..samples(cfg.boost, n, m as f64 / s as f64) {
                        let (x, y) = self.edges[rng.gen_range(0..m)];
                        for reversed in [false, true] {
                            for z in [x, y] {
                                if let Some(ans) = self.local(z, nu, reversed)? {
                                    return Ok(Some(ans));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    }
}

/// Decides whether `kappa <= k` (exact mode) or finds a cut of size at most
/// `(1+eps)k` (approximate mode). [`VcAnswer::AtLeast`]`(k+1)` means no
/// such cut was found, i.e. `kappa > k` with high probability.
pub fn vc_decide(g: &DiGraph, cfg: &FrameworkConfig) -> Result<VcAnswer> {
    vc_decide_with_stats(g, cfg).map(|(a, _)| a)
}

/// [`vc_decide`] plus work counters.
pub fn vc_decide_with_stats(g: &DiGraph, cfg: &FrameworkConfig) -> Result<(VcAnswer, DecideStats)> {
    if cfg.k == 0 || cfg.a < 1.0 || *cfg.eps.numer() <= 0 || cfg.boost <= 0.0 {
        return usage(format!("invalid framework configuration {cfg:?}"));
    }
    let mut stats = DecideStats::default();
    if let Some(ans) = disconnected_answer(g) {
        return Ok((ans, stats));
    }
    if g.is_complete() {
        return Ok((VcAnswer::AtLeast(g.n().saturating_sub(1)), stats));
    }
    let threshold = cfg.pair_threshold();
    if g.degree_stats().d_min() <= threshold {
        let t = degree_cut(g).expect("graph is not complete");
        return Ok((VcAnswer::from_triple(t, None), stats));
    }
    if cfg.mode == Mode::Exact && cfg.k * cfg.k * 4 > g.n() {
        debug!("k = {} exceeds sqrt(n)/2; guarantees weaken", cfg.k);
    }
    let cert;
    let work = if g.is_directed() {
        g
    } else {
        cert = sparsify::certificate(g, threshold)?;
        &cert
    };
    let mut search = Search {
        g,
        work,
        work_rev: work.reverse(),
        edges: work.edges().collect(),
        cfg,
        threshold,
        stats: DecideStats::default(),
        pairs_done: HashSet::new(),
        local_done: HashSet::new(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let found = search.run(&mut rng)?;
    stats = search.stats;
    Ok((found.unwrap_or(VcAnswer::AtLeast(cfg.k + 1)), stats))
}

/// The approximation without local flows: exact pair flows between
/// `c ln n * n/(eps^2 d_min)` random pairs, compared with both degree cuts.
pub fn vc_approx_nolocal(g: &DiGraph, eps: Ratio<i64>, seed: u64, boost: f64) -> Result<VcAnswer> {
    if let Some(ans) = disconnected_answer(g) {
        return Ok(ans);
    }
    let Some(deg) = degree_cut(g) else {
        return Ok(VcAnswer::AtLeast(g.n().saturating_sub(1)));
    };
    let n = g.n();
    let e = *eps.numer() as f64 / *eps.denom() as f64;
    let d = g.degree_stats().d_min().max(1) as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = VcAnswer::from_triple(deg.clone(), None);
    let mut best_size = deg.sep.len();
    for _ in 0..samples(boost, n, n as f64 / (e * e * d)) {
        let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if x == y || best_size == 0 {
            continue;
        }
        if let PairAnswer::Shore { separator, .. } = pair_vertex_connectivity(g, x, y, best_size - 1)? {
            let triple = SeparationTriple::from_separator(g, &separator, x)
                .ok_or_else(|| VcError::Invariant("pair separator does not separate".into()))?;
            best_size = separator.len();
            best = VcAnswer::from_triple(triple, Some((x, y)));
        }
    }
    Ok(best)
}

/// How [`kappa`] searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KappaMode {
    Exact,
    /// Approximation factor `1 + eps`.
    Approx(#[serde(serialize_with = "ser_ratio")] Ratio<i64>),
}

/// Result of a connectivity computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KappaResult {
    pub kappa: usize,
    /// A cut of size `kappa`; `None` for complete graphs.
    pub separator: Option<Vec<usize>>,
    pub witness: Option<(usize, usize)>,
    pub decide_calls: usize,
    pub pair_flows: usize,
    pub local_calls: usize,
}

impl KappaResult {
    fn from_answer(ans: &VcAnswer, n: usize) -> Self {
        match ans {
            VcAnswer::Cut { separator, witness, .. } => KappaResult {
                kappa: separator.len(),
                separator: Some(separator.clone()),
                witness: *witness,
                decide_calls: 0,
                pair_flows: 0,
                local_calls: 0,
            },
            VcAnswer::AtLeast(_) => KappaResult {
                kappa: n.saturating_sub(1),
                separator: None,
                witness: None,
                decide_calls: 0,
                pair_flows: 0,
                local_calls: 0,
            },
        }
    }
}

fn split_seed(seed: u64, salt: u64) -> u64 {
    // splitmix64 finaliser
    let mut z = seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Vertex connectivity. Exact mode binary-searches `k` below the minimum
/// degree with [`vc_decide`] up to `sqrt(n)/2` and finishes larger values with
/// a deterministic pairwise sweep. Approximate mode walks `k` geometrically.
pub fn kappa(g: &DiGraph, mode: KappaMode, seed: u64, boost: f64) -> Result<KappaResult> {
    kappa_with(g, mode, seed, boost, None)
}

/// [`kappa`] with an optional sampling override.
pub fn kappa_with(g: &DiGraph, mode: KappaMode, seed: u64, boost: f64, sampling: Option<Sampling>) -> Result<KappaResult> {
    if let Some(ans) = disconnected_answer(g) {
        return Ok(KappaResult::from_answer(&ans, g.n()));
    }
    let Some(deg) = degree_cut(g) else {
        return Ok(KappaResult::from_answer(&VcAnswer::AtLeast(g.n() - 1), g.n()));
    };
    let mut best = KappaResult::from_answer(&VcAnswer::from_triple(deg, None), g.n());
    match mode {
        KappaMode::Exact => exact_search(g, seed, boost, sampling, &mut best)?,
        KappaMode::Approx(eps) => approx_search(g, eps, seed, boost, sampling, &mut best)?,
    }
    Ok(best)
}

fn absorb(best: &mut KappaResult, ans: &VcAnswer, stats: &DecideStats) -> bool {
    best.decide_calls += 1;
    best.pair_flows += stats.pair_flows;
    best.local_calls += stats.local_calls;
    if let VcAnswer::Cut { separator, witness, .. } = ans {
        if separator.len() < best.kappa {
            best.kappa = separator.len();
            best.separator = Some(separator.clone());
            best.witness = *witness;
        }
        return true;
    }
    false
}

fn exact_search(g: &DiGraph, seed: u64, boost: f64, sampling: Option<Sampling>, best: &mut KappaResult) -> Result<()> {
    let n = g.n();
    let kmax = ((n as f64).sqrt() / 2.0).floor() as usize;
    // probe from the top: a cut C moves the next probe to |C| - 1, and the
    // first probe without a cut settles the answer
    let mut k = best.kappa.saturating_sub(1).min(kmax);
    if k == 0 && best.kappa > 1 {
        return pairwise_sweep(g, best);
    }
    while k >= 1 {
        let mut cfg = choose_params(n, g.m(), k, Ratio::new(1, 2 * k as i64), g.is_directed(), Mode::Exact, sampling);
        cfg.seed = split_seed(seed, k as u64);
        cfg.boost = boost;
        let (ans, stats) = vc_decide_with_stats(g, &cfg)?;
        if !absorb(best, &ans, &stats) {
            // kappa > k; only the sqrt(n)/2 cap can leave a gap to close
            if best.kappa > k + 1 {
                pairwise_sweep(g, best)?;
            }
            break;
        }
        k = best.kappa.saturating_sub(1).min(k - 1);
    }
    Ok(())
}

/// For `kappa < best`, some vertex among the first `best` lies outside a
/// minimum separator, so pairs through it in both directions expose it.
fn pairwise_sweep(g: &DiGraph, best: &mut KappaResult) -> Result<()> {
    let n = g.n();
    let mut i = 0;
    while i < best.kappa.min(n) {
        for w in 0..n {
            for (x, y) in [(i, w), (w, i)] {
                if x == y || best.kappa == 0 {
                    continue;
                }
                best.pair_flows += 1;
                if let PairAnswer::Shore { separator, .. } = pair_vertex_connectivity(g, x, y, best.kappa - 1)? {
                    best.kappa = separator.len();
                    best.separator = Some(separator);
                    best.witness = Some((x, y));
                }
            }
        }
        i += 1;
    }
    Ok(())
}

fn approx_search(g: &DiGraph, eps: Ratio<i64>, seed: u64, boost: f64, sampling: Option<Sampling>, best: &mut KappaResult) -> Result<()> {
    let (n, m) = (g.n(), g.m());
    // (1 + eps/3)^2 <= 1 + eps for eps <= 3
    let step = eps / 3;
    let e = *step.numer() as f64 / *step.denom() as f64;
    let high = (n as f64 / (1.0 + e)).min((m as f64 / (1.0 + e)).sqrt());
    if (best.kappa as f64) > (n as f64).powf(0.8) {
        let ans = vc_approx_nolocal(g, step, seed, boost)?;
        absorb(best, &ans, &DecideStats::default());
        return Ok(());
    }
    let mut k = 1usize;
    while k < best.kappa && (k as f64) <= high {
        let mut cfg = choose_params(n, m, k, step, g.is_directed(), Mode::Approx, sampling);
        cfg.seed = split_seed(seed, k as u64);
        cfg.boost = boost;
        let (ans, stats) = if cfg.use_local_vc {
            vc_decide_with_stats(g, &cfg)?
        } else {
            (vc_approx_nolocal(g, step, cfg.seed, boost)?, DecideStats::default())
        };
        if absorb(best, &ans, &stats) {
            return Ok(());
        }
        let next = ((1.0 + e) * k as f64).floor() as usize;
        k = next.max(k + 1);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn cycles() {
        let r = kappa(&gen::cycle(7, false), KappaMode::Exact, 1, 3.0).unwrap();
        assert_eq!(r.kappa, 2);
        assert_eq!(r.separator.as_ref().unwrap().len(), 2);
        assert_eq!(kappa(&gen::cycle(7, true), KappaMode::Exact, 1, 3.0).unwrap().kappa, 1);
    }

    #[test]
    fn complete_graph_decides_at_least() {
        let g = gen::complete(8);
        let cfg = choose_params(8, g.m(), 4, Ratio::new(1, 8), false, Mode::Exact, None);
        assert!(matches!(vc_decide(&g, &cfg).unwrap(), VcAnswer::AtLeast(_)));
    }

    #[test]
    fn shared_pair_is_found() {
        let g = gen::cliques_sharing(6, 6, 2);
        let mut cfg = choose_params(g.n(), g.m(), 3, Ratio::new(1, 6), false, Mode::Exact, None);
        cfg.seed = 5;
        let ans = vc_decide(&g, &cfg).unwrap();
        assert_eq!(ans.separator().map(<[usize]>::len), Some(2));
    }

    #[test]
    fn parameter_rules() {
        let n = 1000;
        let cfg = choose_params(n, 20_000, 3, Ratio::new(1, 6), false, Mode::Exact, None);
        let mp = (2 * 4 * n) as f64;
        assert_eq!(cfg.sampling, Sampling::Edge);
        assert!((cfg.a - mp.powf(2.0 / 3.0)).abs() < 1e-6);
        let m = (n as f64).powf(1.6) as usize;
        let cfg = choose_params(n, m, 3, Ratio::new(1, 6), true, Mode::Exact, None);
        assert_eq!(cfg.sampling, Sampling::Vertex);
        assert!((cfg.a - (m as f64).powf(1.0 / 3.0)).abs() < 1e-6);
        let cfg = choose_params(n, m, 300, Ratio::new(1, 4), true, Mode::Approx, None);
        assert!(!cfg.use_local_vc);
        assert_eq!(cfg.sampling, Sampling::Vertex);
    }

    #[test]
    fn scales_cover_a() {
        let cfg = choose_params(100, 1000, 2, Ratio::new(1, 4), true, Mode::Exact, None);
        let scales = cfg.scales();
        assert_eq!(scales[0], 2);
        assert!(*scales.last().unwrap() as f64 >= cfg.a);
    }

    #[test]
    fn nolocal_on_star() {
        let ans = vc_approx_nolocal(&gen::star(5), Ratio::new(1, 4), 1, 3.0).unwrap();
        assert_eq!(ans.separator(), Some(&[0][..]));
    }
}
