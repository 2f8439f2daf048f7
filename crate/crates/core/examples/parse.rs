//! Reads graphs from edge-list and DIMACS text and runs the CLI on them.

use clap::Parser;
use vcut::cli::{run, Cli};
use vcut::{DiGraph, GraphFormat};

const EDGES: &str = "\
# a 6-cycle with one chord
6 7 u
0 1
1 2
2 3
3 4
4 5
5 0
0 3
";

const DIMACS: &str = "\
c directed triangle
p edge 3 3
a 1 2
a 2 3
a 3 1
";

fn main() -> vcut::Result<()> {
    let g = DiGraph::parse(EDGES, GraphFormat::EdgeList)?;
    let h = DiGraph::parse(DIMACS, GraphFormat::Dimacs)?;
    println!("edge list: n = {}, m = {} (directed: {})", g.n(), g.m(), g.is_directed());
    println!("dimacs: n = {}, m = {} (directed: {})", h.n(), h.m(), h.is_directed());

    let path = std::env::temp_dir().join("vcut-example.txt");
    std::fs::write(&path, EDGES).map_err(|e| vcut::VcError::Usage(e.to_string()))?;
    let input = path.display().to_string();
    for args in [["vcut", "kappa", "--exact", "--input", &input], ["vcut", "oracle", "--json", "--input", &input]] {
        let cli = Cli::parse_from(args);
        run(&cli, &mut std::io::stdout())?;
    }
    Ok(())
}
