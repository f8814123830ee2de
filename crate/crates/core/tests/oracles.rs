//! Library results against slow, obviously-correct reference code.

mod common;

use std::collections::BTreeSet;

use longcycles::cycle_enum::*;
use longcycles::{canonical_cycle, validate, Cycle, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every simple cycle, each once, in canonical form.
fn all_cycles(g: &Graph) -> BTreeSet<Cycle> {
    fn walk(
        g: &Graph,
        s: usize,
        path: &mut Vec<usize>,
        on: &mut Vec<bool>,
        out: &mut BTreeSet<Cycle>,
    ) {
        let end = *path.last().unwrap();
        for &w in g.neighbors(end) {
            if w == s && path.len() >= 3 {
                out.insert(canonical_cycle(path).unwrap());
            } else if w > s && !on[w] {
                on[w] = true;
                path.push(w);
                walk(g, s, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut out = BTreeSet::new();
    for s in 0..g.n() {
        let mut on = vec![false; g.n()];
        on[s] = true;
        walk(g, s, &mut vec![s], &mut on, &mut out);
    }
    out
}

fn longest(g: &Graph) -> (usize, BTreeSet<Cycle>) {
    let all = all_cycles(g);
    let best = all.iter().map(|c| c.len()).max().unwrap_or(0);
    (best, all.into_iter().filter(|c| c.len() == best).collect())
}

fn connected_without(g: &Graph, skip: Option<usize>) -> bool {
    let alive: Vec<usize> = (0..g.n()).filter(|&v| Some(v) != skip).collect();
    let Some(&first) = alive.first() else {
        return true;
    };
    let mut seen = vec![false; g.n()];
    let mut stack = vec![first];
    seen[first] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if Some(w) != skip && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    alive.iter().all(|&v| seen[v])
}

fn brute_2_connected(g: &Graph) -> bool {
    g.n() >= 3 && connected_without(g, None) && (0..g.n()).all(|v| connected_without(g, Some(v)))
}

fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for b in 1..n {
        for a in 0..b {
            if bits >> k & 1 == 1 {
                edges.push((a, b));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for b in 1..n {
        for a in 0..b {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn small_graphs() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 0..=6usize {
        let pairs = n * n.saturating_sub(1) / 2;
        for bits in 0..1u64 << pairs {
            out.push(graph_from_bits(n, bits));
        }
    }
    out
}

#[test]
fn girth_and_connectivity_exhaustive_to_six_vertices() {
    for g in small_graphs() {
        let s = validate(&g);
        let shortest = all_cycles(&g).iter().map(|c| c.len()).min();
        assert_eq!(s.girth, shortest, "{g:?}");
        assert_eq!(s.is_2_connected, brute_2_connected(&g), "{g:?}");
        assert_eq!(s.is_connected, connected_without(&g, None), "{g:?}");
    }
}

#[test]
fn girth_and_connectivity_random_to_ten_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..400 {
        let n = 7 + i % 4;
        let g = random_graph(n, rng.gen_range(0.15..0.6), &mut rng);
        let s = validate(&g);
        assert_eq!(s.girth, all_cycles(&g).iter().map(|c| c.len()).min());
        assert_eq!(s.is_2_connected, brute_2_connected(&g));
    }
}

#[test]
fn petersen_longest_cycles_match_full_listing() {
    let g = Graph::petersen();
    let (best, want) = longest(&g);
    assert_eq!(best, 9);
    for r in [
        enumerate_longest_cycles_dfs(&g).unwrap(),
        enumerate_longest_cycles_dp(&g).unwrap(),
    ] {
        assert_eq!(r.circumference, 9);
        assert_eq!(r.cycles.iter().cloned().collect::<BTreeSet<_>>(), want);
    }
}

#[test]
fn longest_cycles_match_full_listing_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..300 {
        let n = 3 + i % 9;
        let g = random_graph(n, rng.gen_range(0.2..0.8), &mut rng);
        let (best, want) = longest(&g);
        for opts in [
            DfsOptions {
                prune_by_best: true,
            },
            DfsOptions {
                prune_by_best: false,
            },
        ] {
            let r = enumerate_longest_cycles_dfs_with(&g, opts).unwrap();
            assert_eq!(r.circumference, best);
            assert_eq!(r.cycles.iter().cloned().collect::<BTreeSet<_>>(), want);
        }
        let r = enumerate_longest_cycles_dp(&g).unwrap();
        assert_eq!(r.cycles.iter().cloned().collect::<BTreeSet<_>>(), want);
    }
}

/// Hamiltonian cycles and paths by trying every vertex ordering.
#[test]
fn hamiltonian_counts_match_permutations() {
    fn perms(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            perms(items, k + 1, f);
            items.swap(k, i);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..120 {
        let n = 3 + i % 6;
        let g = random_graph(n, rng.gen_range(0.3..0.9), &mut rng);
        let mut cycles = BTreeSet::new();
        let mut paths_03 = 0u64;
        let mut rest: Vec<usize> = (1..n).collect();
        perms(&mut rest, 0, &mut |p| {
            let seq: Vec<usize> = std::iter::once(0).chain(p.iter().copied()).collect();
            if seq.windows(2).all(|w| g.has_edge(w[0], w[1])) {
                if g.has_edge(seq[n - 1], 0) {
                    cycles.insert(canonical_cycle(&seq).unwrap());
                }
                if seq[n - 1] == n - 1 {
                    paths_03 += 1;
                }
            }
        });
        assert_eq!(
            count_hamiltonian_cycles(&g, None).unwrap(),
            (cycles.len() as u64).into()
        );
        assert_eq!(
            count_st_ham_paths(&g, 0, n - 1, None).unwrap(),
            paths_03.into()
        );
        for e in g.edges() {
            let through = cycles.iter().filter(|c| c.edges().contains(&e)).count() as u64;
            assert_eq!(
                count_hamiltonian_cycles(&g, Some(e)).unwrap(),
                through.into(),
                "{e:?}"
            );
        }
    }
}

#[test]
fn census_matches_direct_enumeration() {
    let graphs = common::census_corpus(14);
    let filters = CensusFilters {
        non_hamiltonian: true,
        ..Default::default()
    };
    let got = census(
        graphs.iter().map(|(_, g)| Ok(g.clone())),
        &filters,
        &CensusOptions::default(),
    )
    .unwrap();
    for (&n, min) in &got.per_order {
        let direct = graphs
            .iter()
            .filter(|(_, g)| g.n() == n)
            .map(|(_, g)| enumerate_longest_cycles_dfs(g).unwrap())
            .filter(|r| r.circumference < n)
            .map(|r| r.count())
            .min();
        assert_eq!(Some(min.min_count), direct);
    }
}
