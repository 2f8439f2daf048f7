//! Exact and approximate vertex connectivity of a few graph families.

use num_rational::Ratio;
use vcut::framework::{kappa, KappaMode};
use vcut::{gen, DiGraph};

fn main() -> vcut::Result<()> {
    let graphs: Vec<(&str, DiGraph)> = vec![
        ("undirected 12-cycle", gen::cycle(12, false)),
        ("directed 12-cycle", gen::cycle(12, true)),
        ("K_10 minus a perfect matching", gen::complete_minus_matching(10)),
        ("two K_6 sharing 2 vertices", gen::cliques_sharing(6, 6, 2)),
        ("G(40, 0.3), directed", gen::gnp(40, 0.3, true, 3)),
    ];
    for (name, g) in &graphs {
        let exact = kappa(g, KappaMode::Exact, 1, 3.0)?;
        let approx = kappa(g, KappaMode::Approx(Ratio::new(1, 2)), 1, 3.0)?;
        println!("{name:32} kappa = {:2}  (1.5-approx {:2})  separator {:?}", exact.kappa, approx.kappa, exact.separator.unwrap_or_default());
    }
    Ok(())
}
