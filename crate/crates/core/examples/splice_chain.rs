//! Splices copies of the r=5 gadget into K6 and checks that the number of
//! hamiltonian cycles is c1 * c2 * c3^(k-1).
//!
//!     cargo run --release --example splice_chain -- 2

use longcycles::bounds::predicted_chain_count;
use longcycles::constructions::{build_chain, build_gadget, GadgetSpec};
use longcycles::cycle_enum::{count_hamiltonian_cycles, count_st_ham_paths};
use longcycles::{validate, Graph, MarkedGraph};

fn main() -> longcycles::Result<()> {
    let k_max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    let host = MarkedGraph::from_edge(Graph::complete(6), (0, 1))?;
    let h = build_gadget(GadgetSpec::new(5)?);

    // c1: host cycles through the marked edge; c2: all uv-paths of the
    // gadget; c3: those through its marked edge.
    let c1 = count_hamiltonian_cycles(&host.graph, host.special_edge)?;
    let c2 = count_st_ham_paths(&h.graph, h.u, h.v, None)?;
    let c3 = count_st_ham_paths(&h.graph, h.u, h.v, h.special_edge)?;
    println!("c1={c1} c2={c2} c3={c3}");

    for k in 1..=k_max {
        let g = build_chain(&host, &h, k)?;
        let s = validate(&g.graph);
        let got = count_hamiltonian_cycles(&g.graph, None)?;
        let want = predicted_chain_count(&c1, &c2, &c3, k);
        println!(
            "k={k} n={} regular={:?} 2-connected={} cycles={got} predicted={want} {}",
            s.n,
            s.regular,
            s.is_2_connected,
            if got == want { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}
