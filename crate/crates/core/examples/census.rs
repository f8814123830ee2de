//! Fewest longest cycles per order over a graph6 stream, e.g.
//!
//!     geng -C -t -d3 -D3 16 | cargo run --release --example census
//!
//! Without input on stdin, the vendored stream of cubic 2-connected
//! triangle-free graphs on at most 18 vertices is used.

use std::io::{IsTerminal, Read};

use longcycles::cycle_enum::{census, CensusFilters, CensusOptions};
use longcycles::graph6::parse_graph6_lines;

const VENDORED: &str = include_str!("../tests/data/cubic_tf_2c_le18.g6");

fn main() -> longcycles::Result<()> {
    let mut text = String::new();
    if !std::io::stdin().is_terminal() {
        std::io::stdin().read_to_string(&mut text)?;
    }
    if text.trim().is_empty() {
        text = VENDORED.to_string();
    }
    let filters = CensusFilters {
        regular: Some(3),
        two_connected: true,
        non_hamiltonian: true,
        ..Default::default()
    };
    let options = CensusOptions {
        workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        skip_unreadable: true,
        ..Default::default()
    };
    let res = census(parse_graph6_lines(&text), &filters, &options)?;
    println!("{} records, {} passed the filters", res.records, res.passed);
    for (n, m) in &res.per_order {
        println!(
            "n={n:<3} graphs={:<5} fewest longest cycles={:<4} length={:<3} witness={}",
            m.graphs, m.min_count, m.circumference, m.witness
        );
    }
    Ok(())
}
