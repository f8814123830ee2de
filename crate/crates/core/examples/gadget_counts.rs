//! Hamiltonian u-v paths of the gadget through its marked edge, enumerated
//! and compared with the closed formula.
//!
//!     cargo run --release --example gadget_counts -- 7

use longcycles::constructions::{build_gadget, gadget_path_count_formula, subgraph_i, GadgetSpec};
use longcycles::cycle_enum::count_st_ham_paths;
use std::time::Instant;

fn main() -> longcycles::Result<()> {
    let r_max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    for r in 5..=r_max {
        let h = build_gadget(GadgetSpec::new(r)?);
        let t = Instant::now();
        let through = count_st_ham_paths(&h.graph, h.u, h.v, h.special_edge)?;
        let all = count_st_ham_paths(&h.graph, h.u, h.v, None)?;
        println!(
            "r={r} n={:<3} through e': {through:<10} formula: {:<10} all uv-paths: {all} ({:.2?})",
            h.graph.n(),
            gadget_path_count_formula(r)?,
            t.elapsed()
        );
        let i = subgraph_i(r)?;
        println!(
            "      I: z2v-paths {} formula {}",
            count_st_ham_paths(&i.graph, i.z2, i.v, None)?,
            i.formula
        );
    }
    Ok(())
}
