//! The 24-vertex cubic non-hamiltonian fixture: both enumerators, and the
//! four longest cycles printed with 1-based labels.

use longcycles::constructions::{load_fixture, Fixture};
use longcycles::cycle_enum::{enumerate_longest_cycles_dfs, enumerate_longest_cycles_dp};
use longcycles::validate;

fn main() -> longcycles::Result<()> {
    let g = load_fixture(Fixture::Fig5)?;
    let s = validate(&g);
    println!(
        "n={} regular={:?} girth={:?} 2-connected={}",
        s.n, s.regular, s.girth, s.is_2_connected
    );
    let dfs = enumerate_longest_cycles_dfs(&g)?;
    let dp = enumerate_longest_cycles_dp(&g)?;
    println!(
        "dfs: {} cycles of length {} in {:.2?}",
        dfs.count(),
        dfs.circumference,
        dfs.elapsed
    );
    println!(
        "dp:  {} cycles of length {} in {:.2?}",
        dp.count(),
        dp.circumference,
        dp.elapsed
    );
    println!("agree: {}", dfs.cycles == dp.cycles);
    for c in &dfs.cycles {
        let labels: Vec<String> = c.vertices().iter().map(|v| (v + 1).to_string()).collect();
        println!("  {}", labels.join(", "));
    }
    Ok(())
}
