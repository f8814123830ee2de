//! Builds the 60-vertex composite from the two vendored inputs and finds
//! its unique longest cycle.

use longcycles::constructions::{build_royle_composite, load_fixture, Fixture};
use longcycles::cycle_enum::enumerate_longest_cycles_dfs;
use longcycles::write_graph6;

fn main() -> longcycles::Result<()> {
    let g = build_royle_composite(
        &load_fixture(Fixture::Fig5)?,
        &load_fixture(Fixture::Royle18)?,
    )?;
    assert_eq!(g, load_fixture(Fixture::RoyleComposite)?);
    let deg4: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 4).collect();
    println!("{}", write_graph6(&g));
    println!("n={} degree-4 vertices {:?}", g.n(), deg4);
    let res = enumerate_longest_cycles_dfs(&g)?;
    println!(
        "{} longest cycle(s) of length {} in {:.2?}",
        res.count(),
        res.circumference,
        res.elapsed
    );
    Ok(())
}
