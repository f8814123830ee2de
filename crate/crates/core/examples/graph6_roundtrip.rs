//! Reading and writing graph6, including the header forms and error
//! offsets.

use longcycles::{parse_graph6, validate, write_graph6, Graph};

fn main() {
    for (name, g) in [
        ("K4", Graph::complete(4)),
        ("C5", Graph::cycle(5)),
        ("Petersen", Graph::petersen()),
        ("C100", Graph::cycle(100)),
    ] {
        let s = write_graph6(&g);
        let back = parse_graph6(&s).expect("round trip");
        let r = validate(&back);
        println!(
            "{name:<9} {s:.40} n={} edges={} girth={:?} same={}",
            r.n,
            r.edges,
            r.girth,
            back == g
        );
    }
    println!(
        "{:?}",
        parse_graph6(">>graph6<<C~\n").map(|g| g.edge_count())
    );
    for bad in ["C", "C~~", "C\u{7f}"] {
        println!("{bad:?}: {}", parse_graph6(bad).unwrap_err());
    }
}
