use num_rational::Ratio;
use proptest::prelude::*;

use vcut::embedding::{build_embedding, fixed_in};
use vcut::framework::{choose_params, kappa, vc_decide, KappaMode, Mode};
use vcut::local::{local_flow, local_flow_observed, validate_params, LocalVcParams, Regime};
use vcut::oracle::{augmented_min_cut, kappa_by_subsets, oracle_kappa, pair_kappa_by_subsets};
use vcut::pair::{pair_vertex_connectivity, PairAnswer};
use vcut::sparsify::forest_decomposition;
use vcut::{gen, DiGraph, GraphFormat, VcAnswer};

fn any_graph(max_n: usize) -> impl Strategy<Value = DiGraph> {
    (2..=max_n, any::<bool>())
        .prop_flat_map(|(n, directed)| (Just(n), Just(directed), prop::collection::vec((0..n, 0..n), 0..=n * n)))
        .prop_map(|(n, directed, edges)| DiGraph::from_edges(n, edges, directed).unwrap())
}

fn gnp(n_lo: usize, n_hi: usize, p_lo: f64) -> impl Strategy<Value = DiGraph> {
    (n_lo..=n_hi, p_lo..0.95f64, any::<bool>(), any::<u64>()).prop_map(|(n, p, directed, seed)| gen::gnp(n, p, directed, seed))
}

fn undirected(n_lo: usize, n_hi: usize) -> impl Strategy<Value = DiGraph> {
    (n_lo..=n_hi, 0.2..0.9f64, any::<u64>()).prop_map(|(n, p, seed)| gen::gnp(n, p, false, seed))
}

fn mask(n: usize, bits: u64) -> Vec<usize> {
    (0..n).filter(|&v| bits >> v & 1 == 1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn adjacency_is_transposed(g in any_graph(12)) {
        for u in 0..g.n() {
            for &v in g.out_neighbors(u) {
                prop_assert!(g.in_neighbors(v).contains(&u));
            }
            for &w in g.in_neighbors(u) {
                prop_assert!(g.out_neighbors(w).contains(&u));
            }
        }
        prop_assert_eq!(g.edges().count(), g.m());
    }

    #[test]
    fn reverse_is_an_involution(g in any_graph(12)) {
        let r = g.reverse();
        prop_assert_eq!(r.m(), g.m());
        prop_assert!(g.edges().all(|(u, v)| r.has_edge(v, u)));
        prop_assert_eq!(r.reverse(), g);
    }

    #[test]
    fn edge_list_round_trips(g in any_graph(12)) {
        let back = DiGraph::parse(&g.to_edge_list(), GraphFormat::EdgeList).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn min_out_degree_bounds_kappa(g in gnp(3, 12, 0.3)) {
        prop_assume!(g.is_strongly_connected());
        prop_assert!(g.degree_stats().d_min_out >= oracle_kappa(&g).unwrap().kappa);
    }

    #[test]
    fn pair_answers_are_dual(g in gnp(3, 12, 0.2), x in 0usize..12, y in 0usize..12) {
        let (x, y) = (x % g.n(), y % g.n());
        prop_assume!(x != y);
        match pair_vertex_connectivity(&g, x, y, g.n()).unwrap() {
            PairAnswer::Shore { shore, separator, paths } => {
                prop_assert_eq!(paths.len(), separator.len());
                prop_assert!(shore.contains(&x));
                let mut blocked = vec![false; g.n()];
                for &s in &separator {
                    blocked[s] = true;
                }
                prop_assert!(!g.reachable_avoiding(x, &blocked)[y]);
                // internally disjoint, and each path uses exactly one separator vertex
                let mut used = vec![false; g.n()];
                for path in &paths {
                    prop_assert_eq!(path.first(), Some(&x));
                    prop_assert_eq!(path.last(), Some(&y));
                    prop_assert!(path.windows(2).all(|w| g.has_edge(w[0], w[1])));
                    for &v in &path[1..path.len() - 1] {
                        prop_assert!(!used[v]);
                        used[v] = true;
                    }
                    prop_assert_eq!(path.iter().filter(|v| separator.contains(v)).count(), 1);
                }
            }
            PairAnswer::AtLeast => prop_assert!(g.has_edge(x, y)),
        }
    }

    #[test]
    fn pair_flow_matches_subsets(g in gnp(3, 9, 0.2), x in 0usize..9, y in 0usize..9) {
        let (x, y) = (x % g.n(), y % g.n());
        prop_assume!(x != y);
        prop_assert_eq!(vcut::pair::pair_kappa(&g, x, y).unwrap(), pair_kappa_by_subsets(&g, x, y).unwrap());
    }

    #[test]
    fn oracles_agree(g in gnp(2, 9, 0.2)) {
        prop_assert_eq!(oracle_kappa(&g).unwrap().kappa, kappa_by_subsets(&g).unwrap().kappa);
    }

    #[test]
    fn exact_kappa_matches_subsets(g in gnp(2, 9, 0.3), seed in any::<u64>()) {
        let got = kappa(&g, KappaMode::Exact, seed, 3.0).unwrap();
        prop_assert_eq!(got.kappa, kappa_by_subsets(&g).unwrap().kappa);
        if let Some(sep) = &got.separator {
            prop_assert!(g.is_vertex_cut(sep));
        }
    }

    #[test]
    fn forests_are_sparse_inside_every_set(g in undirected(3, 14), bits in any::<u64>()) {
        let dec = forest_decomposition(&g).unwrap();
        let s = mask(g.n(), bits);
        for j in 1..=dec.forests.len() {
            let inside = dec.prefix_edges(j).iter().filter(|(u, v)| s.contains(u) && s.contains(v)).count();
            prop_assert!(inside <= j * s.len());
        }
    }

    #[test]
    fn decide_cuts_are_sound(g in gnp(4, 14, 0.2), k in 1usize..4, seed in any::<u64>(), exact in any::<bool>()) {
        let mode = if exact { Mode::Exact } else { Mode::Approx };
        let mut cfg = choose_params(g.n(), g.m(), k, Ratio::new(1, 2), g.is_directed(), mode, None);
        cfg.seed = seed;
        if let VcAnswer::Cut { separator, triple, .. } = vc_decide(&g, &cfg).unwrap() {
            prop_assert!(g.is_vertex_cut(&separator));
            prop_assert!(triple.verify(&g));
            prop_assert!(separator.len() <= cfg.pair_threshold());
        }
    }

    #[test]
    fn edges_split_around_a_triple(g in undirected(3, 12)) {
        // every edge touches L, touches R, or lies inside S
        if let Some(sep) = oracle_kappa(&g).unwrap().separator {
            let t = vcut::SeparationTriple::any_from_separator(&g, &sep).unwrap();
            let touches = |set: &[usize], (u, v): (usize, usize)| set.contains(&u) || set.contains(&v);
            let star_l = g.edges().filter(|&e| touches(&t.left, e)).count();
            let star_r = g.edges().filter(|&e| touches(&t.right, e)).count();
            let inner = g.edges().filter(|&(u, v)| t.sep.contains(&u) && t.sep.contains(&v)).count();
            prop_assert_eq!(star_l + inner + star_r, g.m());
        }
    }

    #[test]
    fn optimal_left_side_is_large(g in gnp(3, 12, 0.3)) {
        prop_assume!(g.is_strongly_connected());
        let opt = oracle_kappa(&g).unwrap();
        if let Some(sep) = opt.separator {
            let t = vcut::SeparationTriple::any_from_separator(&g, &sep).unwrap();
            prop_assert!(t.left.len() + opt.kappa >= g.degree_stats().d_min_out);
        }
    }

    #[test]
    fn embedding_satisfies_hull(g in gnp(3, 12, 0.3), seed in any::<u64>(), bits in any::<u64>()) {
        let anchor = (0..g.n()).find(|&v| g.in_degree(v) > 0);
        prop_assume!(anchor.is_some());
        let anchor = anchor.unwrap();
        let k = g.in_degree(anchor).min(3);
        let emb = build_embedding(&g, anchor, k, seed).unwrap();
        prop_assert!(emb.check_hull(&g));
        let u = mask(g.n(), bits);
        prop_assert!(emb.rank(&u) <= u.len().min(fixed_in(&g, anchor, k).len()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn local_flow_is_a_maximum_flow(g in gnp(5, 12, 0.4), x in 0usize..12, nu in 1usize..16, k in 1usize..4, den in 2i64..5) {
        let p = LocalVcParams::new(x % g.n(), nu, k, Ratio::new(1, den));
        prop_assume!(validate_params(&g, &p) != Regime::Invalid);
        let out = local_flow(&g, &p).unwrap();
        let cut = augmented_min_cut(&g, p.x, p.nu, p.k, p.eps);
        prop_assert_eq!(out.value, cut.value);
        let st = out.state.expect("full runs keep their state");
        prop_assert!(st.check_feasible(&g, &out.caps, p.x).is_ok());
    }

    #[test]
    fn lengths_are_consistent(g in gnp(5, 12, 0.4), x in 0usize..12, nu in 1usize..16, k in 1usize..4, den in 2i64..5) {
        let p = LocalVcParams::new(x % g.n(), nu, k, Ratio::new(1, den));
        prop_assume!(validate_params(&g, &p) != Regime::Invalid);
        let mut bad: Option<String> = None;
        local_flow_observed(&g, &p, false, &mut |ri| {
            let la = ri.lengths;
            let sink = ri.local.index_of(vcut::local::Node::Sink);
            for a in &la.arcs {
                if a.residual <= 0 || Some(a.tail) == sink {
                    continue;
                }
                if a.len == 0 && !a.modern {
                    bad.get_or_insert(format!("zero-length classical arc {a:?}"));
                }
                if let Some(dt) = la.dist[a.tail] {
                    if la.dist[a.head].is_none_or(|dh| dh > dt + a.len) {
                        bad.get_or_insert(format!("distance not tight across {a:?}"));
                    }
                }
            }
        })
        .unwrap();
        prop_assert!(bad.is_none(), "{}", bad.unwrap_or_default());
    }
}
