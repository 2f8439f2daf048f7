//! Builds a random modular convex embedding, checks that ranks count
//! disjoint paths, and runs the rank-based approximation.

use vcut::embedding::{approx_vc_embedding, build_embedding, fixed_in};
use vcut::gen;
use vcut::oracle::{oracle_kappa, set_disjoint_paths};

fn main() -> vcut::Result<()> {
    let g = gen::gnp(12, 0.45, true, 21);
    let anchor = 0;
    let k = g.in_degree(anchor).min(3);
    let emb = build_embedding(&g, anchor, k, 7)?;
    let xs = fixed_in(&g, anchor, k);
    println!("modulus {}, anchors {xs:?}, hull property holds: {}", emb.p, emb.check_hull(&g));
    for v in 0..4 {
        let u = g.out_neighbors(v);
        println!("  N_out({v}) = {u:?}: rank {}, disjoint paths {}", emb.rank(u), set_disjoint_paths(&g, u, xs));
    }

    let truth = oracle_kappa(&g)?.kappa;
    let answer = approx_vc_embedding(&g, 0.25, 3, 3.0)?;
    println!("kappa = {truth}, embedding estimate separator {:?}", answer.separator());
    Ok(())
}
