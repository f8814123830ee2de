#![allow(dead_code)]

use longcycles::constructions::*;
use longcycles::{parse_graph6, Graph, MarkedGraph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const CENSUS_STREAM: &str = include_str!("../data/cubic_tf_2c_le18.g6");

/// Random simple `r`-regular graph on `n` vertices by the pairing model
/// with rejection.
pub fn random_regular(n: usize, r: usize, rng: &mut ChaCha8Rng) -> Graph {
    assert!((n * r).is_multiple_of(2) && r < n);
    loop {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
        points.shuffle(rng);
        let mut edges: Vec<(usize, usize)> = points
            .chunks(2)
            .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
            .collect();
        if edges.iter().any(|&(a, b)| a == b) {
            continue;
        }
        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        if edges.len() == before {
            return Graph::from_edges(n, &edges).unwrap();
        }
    }
}

pub fn random_regular_corpus(count: usize, seed: u64) -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shapes = [
        (8, 3),
        (10, 3),
        (12, 3),
        (14, 3),
        (16, 3),
        (7, 4),
        (9, 4),
        (11, 4),
        (13, 4),
        (8, 5),
    ];
    (0..count)
        .map(|i| {
            let (n, r) = shapes[i % shapes.len()];
            (
                format!("random {r}-regular n={n} #{i}"),
                random_regular(n, r, &mut rng),
            )
        })
        .collect()
}

/// Named small graphs, fixtures up to 24 vertices and every constructed
/// graph up to 24 vertices.
pub fn structured_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut push = |name: String, g: Graph| out.push((name, g));
    push("petersen".into(), Graph::petersen());
    for k in 3..=7 {
        push(format!("K{k}"), Graph::complete(k));
    }
    for k in 3..=8 {
        push(format!("C{k}"), Graph::cycle(k));
    }
    for k in 3..=6 {
        push(format!("prism {k}"), Graph::prism(k));
    }
    push("K3,3".into(), Graph::complete_bipartite(3, 3));
    push("fig5".into(), load_fixture(Fixture::Fig5).unwrap());
    push("royle18".into(), load_fixture(Fixture::Royle18).unwrap());
    for r in 5..=6 {
        push(
            format!("gadget {r}"),
            build_gadget(GadgetSpec::new(r).unwrap()).graph,
        );
    }
    for r in 5..=7 {
        push(format!("subgraph I {r}"), subgraph_i(r).unwrap().graph);
        push(format!("clique minus edge {r}"), clique_minus_edge(r).0);
    }
    let k6 = MarkedGraph::from_edge(Graph::complete(6), (0, 1)).unwrap();
    let chain = build_chain(&k6, &build_gadget(GadgetSpec::new(5).unwrap()), 1).unwrap();
    push("chain K6 + gadget 5".into(), chain.graph);
    for g in 3..=5 {
        let b = cubic_bases(g).unwrap();
        for (i, base) in [b.g1, b.g2, b.g3].into_iter().enumerate() {
            if let Ok(m) = remove_ham_edge(&base, 3, g) {
                push(format!("base g={g} #{i} minus edge"), m.graph);
            }
            push(format!("base g={g} #{i}"), base);
        }
    }
    let p = FamilyParams::new(3, 3, 1, 0, cubic_bases(3).unwrap()).unwrap();
    push("family g=3 (1,0)".into(), build_family(&p).unwrap().0.graph);
    for (r, base) in [(3, Graph::complete(4)), (4, Graph::complete(5))] {
        let gp = remove_ham_edge(&base, r, 3).unwrap();
        let ring = build_ring(&gp, r, 3).unwrap();
        push(format!("K{} minus edge", r + 1), gp.graph);
        for (name, g) in [("G1", ring.g1), ("G2", ring.g2)] {
            if g.n() <= 24 {
                push(format!("ring r={r} {name}"), g);
            }
        }
    }
    out
}

/// Census stream graphs with at most `max_n` vertices.
pub fn census_corpus(max_n: usize) -> Vec<(String, Graph)> {
    CENSUS_STREAM
        .lines()
        .map(|l| parse_graph6(l).unwrap())
        .filter(|g| g.n() <= max_n)
        .enumerate()
        .map(|(i, g)| (format!("cubic stream #{i} n={}", g.n()), g))
        .collect()
}

/// The full cross-check corpus.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut all = structured_corpus();
    all.extend(census_corpus(14));
    all.extend(random_regular_corpus(80, 0x5eed));
    all
}
