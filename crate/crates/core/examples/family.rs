//! Non-hamiltonian cubic graphs whose longest-cycle count stays at h^2
//! however many blocks are strung together.
//!
//!     cargo run --release --example family -- 4

use longcycles::constructions::{build_family, cubic_bases, solve_family_order, FamilyParams};
use longcycles::cycle_enum::enumerate_longest_cycles_dfs;
use longcycles::validate;

fn main() -> longcycles::Result<()> {
    let girth: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let p = FamilyParams::new(3, girth, 1, 0, cubic_bases(girth)?)?;
    for (ell, m) in [(1, 0), (2, 0), (1, 1), (3, 1)] {
        let (g, pred) = build_family(&p.with_blocks(ell, m)?)?;
        let s = validate(&g.graph);
        let res = enumerate_longest_cycles_dfs(&g.graph)?;
        println!(
            "ell={ell} m={m} n={:<3} girth={:?} 2-connected={} circumference={} (predicted {}) cycles={} (predicted {})",
            s.n,
            s.girth,
            s.is_2_connected,
            res.circumference,
            pred.circumference,
            res.count(),
            pred.count
        );
    }

    // Every even order from the threshold on.
    let from = p.threshold() + p.threshold() % 2;
    for n in (from..from + 12).step_by(2) {
        let (ell, m) = solve_family_order(n, &p)?;
        println!("n={n}: ell={ell} m={m}");
    }
    Ok(())
}
