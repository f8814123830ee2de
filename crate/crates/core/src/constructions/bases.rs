//! Small hamiltonian cubic base graphs for the family construction.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;

/// Three hamiltonian cubic graphs of girth `g` with orders `n1`,
/// `n1 + 2` and `n3 > n1 + 2`.
#[derive(Clone, Debug)]
pub struct BaseTriple {
    pub g1: Graph,
    pub g2: Graph,
    pub g3: Graph,
}

/// `C8` with chords `02, 15, 37, 46`.
fn cubic8_girth3() -> Graph {
    let mut e: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    e.extend([(0, 2), (1, 5), (3, 7), (4, 6)]);
    Graph::from_edges(8, &e).expect("valid edge list")
}

/// Bundled bases for `r = 3` and `g` in `{3, 4, 5}`.
pub fn cubic_bases(g: usize) -> Result<BaseTriple> {
    let parse = |s: &str| parse_graph6(s).expect("bundled graph6 is valid");
    match g {
        3 => Ok(BaseTriple {
            g1: Graph::complete(4),
            g2: Graph::prism(3),
            g3: cubic8_girth3(),
        }),
        4 => Ok(BaseTriple {
            g1: Graph::complete_bipartite(3, 3),
            g2: Graph::prism(4),
            g3: Graph::prism(5),
        }),
        5 => Ok(BaseTriple {
            g1: parse("K?ABEagE`gH_"),
            g2: parse("M??CBBOQcWAgM?H_?"),
            g3: parse("O???CB?[AQCg`_I_B_?d?"),
        }),
        _ => Err(Error::Precondition(format!(
            "no bundled cubic bases for girth {g}"
        ))),
    }
}
