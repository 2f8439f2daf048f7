//! Decides whether a graph with a planted 3-vertex separator is 3-connected,
//! then asks the same question one level lower.

use num_rational::Ratio;
use vcut::framework::{choose_params, vc_decide_with_stats, Mode};
use vcut::{gen, VcAnswer};

fn main() -> vcut::Result<()> {
    let planted = gen::planted_dense(80, 3, 12, 0.6, true, 11);
    let g = &planted.graph;
    println!("n = {}, m = {}, planted separator {:?}", g.n(), g.m(), planted.separator);

    for k in [3, 2] {
        let mut cfg = choose_params(g.n(), g.m(), k, Ratio::new(1, 4), g.is_directed(), Mode::Exact, None);
        cfg.seed = 5;
        let (answer, stats) = vc_decide_with_stats(g, &cfg)?;
        match answer {
            VcAnswer::Cut { separator, witness, .. } => {
                println!("k = {k}: cut {separator:?} separating {witness:?}");
            }
            VcAnswer::AtLeast(c) => println!("k = {k}: connectivity is at least {c}"),
        }
        println!("  {} pair flows, {} local calls, sampling {:?}", stats.pair_flows, stats.local_calls, cfg.sampling);
    }
    Ok(())
}
