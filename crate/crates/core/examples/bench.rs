//! Times the sampling framework against the all-sources baseline on sparse
//! planted graphs and prints CSV.

use vcut::cli::{bench, BenchAlgo, BenchArgs, Family, BENCH_HEADER};

fn main() -> vcut::Result<()> {
    println!("{BENCH_HEADER}");
    for algo in [BenchAlgo::Framework, BenchAlgo::AllSources] {
        let args = BenchArgs {
            family: Family::PlantedSparse,
            sizes: vec![64, 128],
            k: 2,
            seeds: 1,
            algo,
            boost: 3,
        };
        for row in bench(&args)? {
            println!("{}", row.to_csv());
        }
    }
    Ok(())
}
