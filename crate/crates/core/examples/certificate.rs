//! Sparsifies a dense undirected graph with a forest decomposition while
//! keeping its connectivity up to k + 1.

use vcut::gen;
use vcut::oracle::oracle_kappa;
use vcut::sparsify::{certificate, forest_decomposition};

fn main() -> vcut::Result<()> {
    let g = gen::gnp(50, 0.5, false, 8);
    let dec = forest_decomposition(&g)?;
    let sizes: Vec<usize> = dec.forests.iter().take(6).map(Vec::len).collect();
    println!("{} undirected edges in {} forests; first sizes {sizes:?}", g.m() / 2, dec.forests.len());

    let kappa_g = oracle_kappa(&g)?.kappa;
    for k in [1, 3, 5] {
        let h = certificate(&g, k)?;
        let kappa_h = oracle_kappa(&h)?.kappa;
        println!("k = {k}: {} edges kept, kappa {kappa_h} (original {kappa_g}, preserved up to {})", h.m() / 2, k + 1);
    }
    Ok(())
}
