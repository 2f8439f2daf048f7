//! Probes for a small vertex cut around a seed vertex, reading only its
//! neighbourhood, and shows how much of the graph the flow touched.

use num_rational::Ratio;
use vcut::gen;
use vcut::local::{local_flow, local_vc, validate_params, LocalVcParams, TripleAnswer};

fn main() -> vcut::Result<()> {
    // a small dense blob hanging off a large one through two vertices
    let planted = gen::planted_dense(400, 2, 5, 0.9, false, 4);
    let g = &planted.graph;
    let inside = planted.left[0];
    let outside = g.n() - 1;

    for (label, x) in [("inside the blob", inside), ("far side", outside)] {
        let p = LocalVcParams::new(x, 40, 2, Ratio::new(1, 4));
        println!("x = {x} ({label}), regime {:?}", validate_params(g, &p));
        let flow = local_flow(g, &p)?;
        println!(
            "  max flow {} against threshold {}, {} rounds, local graph at most {} edges of {}",
            flow.value,
            p.threshold(),
            flow.rounds,
            flow.max_local_edges,
            g.m()
        );
        match local_vc(g, &p)? {
            TripleAnswer::Triple(t) => println!("  found L = {:?}, S = {:?}", t.left, t.sep),
            TripleAnswer::Bottom => println!("  no cut of volume <= {} around x", p.nu),
        }
    }
    Ok(())
}
