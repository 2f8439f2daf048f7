//! Brute-force ground truth: pairwise flows, subset enumeration and local
//! triple search agree on small graphs.

use vcut::gen;
use vcut::oracle::{kappa_by_subsets, oracle_kappa, oracle_local_triple, pair_kappa_by_subsets};

fn main() -> vcut::Result<()> {
    let g = gen::cliques_sharing(5, 6, 2);
    let flows = oracle_kappa(&g)?;
    let subsets = kappa_by_subsets(&g)?;
    println!("kappa by pair flows {} via {:?}", flows.kappa, flows.separator);
    println!("kappa by subsets    {} via {:?}", subsets.kappa, subsets.separator);
    println!("kappa(1, 8) = {}", pair_kappa_by_subsets(&g, 1, 8)?);
    match oracle_local_triple(&g, 2, 20, 2)? {
        Some(t) => println!("small triple around 2: L = {:?}, S = {:?}, R = {:?}", t.left, t.sep, t.right),
        None => println!("no small triple around 2"),
    }
    Ok(())
}
