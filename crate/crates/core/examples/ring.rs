//! Pairs of hamiltonian r-regular graphs with orders one (even r) or two
//! (odd r) apart, from an edge-removed K_{r+1}.

use longcycles::constructions::{build_ring, is_hamiltonian_cycle, remove_ham_edge};
use longcycles::structure::girth;
use longcycles::{write_graph6, Graph};

fn main() -> longcycles::Result<()> {
    for r in 3..=6 {
        let base = Graph::complete(r + 1);
        let gp = remove_ham_edge(&base, r, 3)?;
        let ring = build_ring(&gp, r, 3)?;
        println!(
            "r={r}: removed edge {}-{}, hubs {:?}",
            gp.u, gp.v, ring.added
        );
        for (name, g, cyc) in [
            ("G1", &ring.g1, &ring.g1_cycle),
            ("G2", &ring.g2, &ring.g2_cycle),
        ] {
            println!(
                "  {name}: n={:<3} girth={:?} listed cycle hamiltonian={} {}",
                g.n(),
                girth(g),
                is_hamiltonian_cycle(g, cyc),
                write_graph6(g)
            );
        }
    }
    Ok(())
}
