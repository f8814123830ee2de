//! The old and new exponential bases side by side, and the exact check
//! that the new base is smaller.

use longcycles::bounds::{
    comparison_table, goedgebeur_bound, haythorpe_bound, render_table_text, verify_base_inequality,
};

fn main() -> longcycles::Result<()> {
    print!("{}", render_table_text(&comparison_table(5, 12)?));
    let failures: Vec<usize> = (5..=100)
        .filter(|&r| !verify_base_inequality(r).unwrap_or(false))
        .collect();
    println!("inequality fails for r in 5..=100: {failures:?}");
    for n in [26, 30, 32] {
        println!(
            "r=5 n={n}: conjectured lower {} / previous upper {}",
            haythorpe_bound(n, 5)?,
            goedgebeur_bound(n, 5)?
        );
    }
    Ok(())
}
