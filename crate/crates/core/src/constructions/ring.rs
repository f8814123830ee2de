//! Edge removal from a hamiltonian regular graph, and the ring
//! constructions that produce two hamiltonian `r`-regular graphs of the
//! same girth whose orders differ by 1 (even `r`) or 2 (odd `r`).
//!
//! Wherever a choice of edge is free, the lexicographically smallest
//! qualifying edge is taken, and every output is validated afterwards.

use std::collections::BTreeSet;

use crate::cycle_enum::{find_hamiltonian_cycle, find_st_ham_path};
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, MarkedGraph};
use crate::structure::{distance, girth, shortest_cycle};

fn path_edges(path: &[usize]) -> Vec<Edge> {
    path.windows(2).map(|w| edge(w[0], w[1])).collect()
}

fn cycle_edges(seq: &[usize]) -> Vec<Edge> {
    let k = seq.len();
    (0..k).map(|i| edge(seq[i], seq[(i + 1) % k])).collect()
}

/// Removes an edge `uv` that lies on a hamiltonian cycle but not on a
/// chosen shortest cycle.
///
/// The result has `deg(u) = deg(v) = r - 1`, `u` and `v` at distance at
/// least `girth - 1`, a hamiltonian `uv`-path, and the original girth.
/// If the graph is itself a cycle every edge lies on the shortest cycle;
/// the smallest edge is removed and the girth condition is dropped.
pub fn remove_ham_edge(g: &Graph, r: usize, gth: usize) -> Result<MarkedGraph> {
    if g.regular_degree() != Some(r) {
        return Err(Error::Precondition(format!("graph is not {r}-regular")));
    }
    if girth(g) != Some(gth) {
        return Err(Error::Precondition(format!(
            "graph has girth {:?}, expected {gth}",
            girth(g)
        )));
    }
    let ham = find_hamiltonian_cycle(g)?
        .ok_or_else(|| Error::Precondition("graph is not hamiltonian".into()))?;
    let short = shortest_cycle(g).expect("girth is defined");
    let short_edges: BTreeSet<Edge> = short.edges().into_iter().collect();
    let mut ham_edges = cycle_edges(&ham);
    ham_edges.sort_unstable();
    let degenerate = gth == g.n();
    let (u, v) = if degenerate {
        ham_edges[0]
    } else {
        *ham_edges
            .iter()
            .find(|e| !short_edges.contains(e))
            .expect("a hamiltonian cycle is longer than a girth cycle")
    };
    let out = g.without_edge(u, v)?;
    let marked = MarkedGraph::new(out, u, v, None)?;
    check_removed(&marked, r, gth, degenerate)?;
    Ok(marked)
}

fn check_removed(m: &MarkedGraph, r: usize, gth: usize, degenerate: bool) -> Result<()> {
    let g = &m.graph;
    for x in 0..g.n() {
        let want = if x == m.u || x == m.v { r - 1 } else { r };
        if g.degree(x) != want {
            return Err(Error::Construction(format!(
                "vertex {x} has degree {}",
                g.degree(x)
            )));
        }
    }
    if distance(g, m.u, m.v).is_none_or(|d| d + 1 < gth) {
        return Err(Error::Construction("marked vertices too close".into()));
    }
    if find_st_ham_path(g, m.u, m.v)?.is_none() {
        return Err(Error::Construction(
            "no hamiltonian path between marked vertices".into(),
        ));
    }
    if !degenerate && girth(g) != Some(gth) {
        return Err(Error::Construction(format!(
            "girth changed to {:?}",
            girth(g)
        )));
    }
    Ok(())
}

/// Output of [`build_ring`].
#[derive(Clone, Debug)]
pub struct RingPair {
    pub g1: Graph,
    pub g2: Graph,
    /// Hamiltonian cycle of `g1`: the copies' paths plus the ring edges.
    pub g1_cycle: Vec<Edge>,
    /// Hamiltonian cycle of `g2`, rerouted through the new vertices.
    pub g2_cycle: Vec<Edge>,
    /// Index of the added vertex `w`, and `x` for odd `r`.
    pub added: Vec<usize>,
}

/// Neighbors of the added vertices, as `(copy, which)` pairs where
/// `which` selects the smaller (`S`) or larger (`T`) end of the removed
/// edge in that copy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    S,
    T,
}

/// `(copy, end)` pairs joined to one added vertex.
pub type Attachments = Vec<(usize, End)>;

/// Attachment lists `(w, x)` for the added vertices. For even `r` there
/// is no `x`. For odd `r` the indices `4, 6, .., r-1` go to `w` and
/// `r+1, .., 2r-4` to `x`; at `r = 3` both ranges are empty and each new
/// vertex takes its own removed path edge plus one end of `b2`.
pub fn attachment_lists(r: usize) -> (Attachments, Attachments) {
    if r.is_multiple_of(2) {
        let mut w = vec![(0, End::S), (0, End::T)];
        for i in (2..=r - 2).step_by(2) {
            w.extend([(i, End::S), (i, End::T)]);
        }
        (w, Vec::new())
    } else {
        let mut w = vec![(0, End::S), (0, End::T), (2, End::T)];
        for i in (4..r).step_by(2) {
            w.extend([(i, End::S), (i, End::T)]);
        }
        let mut x = vec![(2 * r - 2, End::S), (2 * r - 2, End::T), (2, End::S)];
        for i in (r + 1..=2 * r - 4).step_by(2) {
            x.extend([(i, End::S), (i, End::T)]);
        }
        (w, x)
    }
}

/// Joins `r` (even `r`) or `2r` (odd `r`) copies of `G'` into a ring to
/// get `G1`, then adds one or two vertices to get `G2`.
pub fn build_ring(g_prime: &MarkedGraph, r: usize, gth: usize) -> Result<RingPair> {
    if r < 3 {
        return Err(Error::Precondition("ring construction needs r >= 3".into()));
    }
    let base = &g_prime.graph;
    let np = base.n();
    let h = find_st_ham_path(base, g_prime.u, g_prime.v)?
        .ok_or_else(|| Error::Precondition("no hamiltonian path between marked vertices".into()))?;
    let mut h_edges = path_edges(&h);
    h_edges.sort_unstable();
    let h_set: BTreeSet<Edge> = h_edges.iter().copied().collect();
    // a: on the path, b: off the path (local labels, smaller end first).
    let a = h_edges[0];
    let b = base
        .edges()
        .into_iter()
        .find(|e| !h_set.contains(e))
        .ok_or_else(|| Error::Precondition("every edge lies on the hamiltonian path".into()))?;

    let copies = if r.is_multiple_of(2) { r } else { 2 * r };
    let mut g1 = Graph::empty(0);
    for _ in 0..copies {
        g1.append(base);
    }
    let at = |copy: usize, local: usize| copy * np + local;
    let mut g1_cycle = Vec::new();
    for i in 0..copies {
        let j = (i + 1) % copies;
        g1.add_edge(at(i, g_prime.v), at(j, g_prime.u));
        g1_cycle.push(edge(at(i, g_prime.v), at(j, g_prime.u)));
        g1_cycle.extend(h_edges.iter().map(|&(p, q)| (at(i, p), at(i, q))));
    }

    let (w_list, x_list) = attachment_lists(r);
    // Copies whose path edge a is cut; the rest lose b.
    let path_copies: Vec<usize> = if r.is_multiple_of(2) {
        vec![0]
    } else {
        vec![0, 2 * r - 2]
    };
    let removed_in = |copy: usize| if path_copies.contains(&copy) { a } else { b };
    let mut g2 = g1.clone();
    let mut removed: BTreeSet<usize> = BTreeSet::new();
    let mut added = Vec::new();
    let mut g2_cycle: BTreeSet<Edge> = g1_cycle.iter().copied().collect();
    for list in [&w_list, &x_list] {
        if list.is_empty() {
            continue;
        }
        let hub = g2.add_vertex();
        added.push(hub);
        for &(copy, end) in list.iter() {
            let (s, t) = removed_in(copy);
            if removed.insert(copy) {
                g2.remove_edge(at(copy, s), at(copy, t));
            }
            let target = match end {
                End::S => at(copy, s),
                End::T => at(copy, t),
            };
            g2.add_edge(hub, target);
            if path_copies.contains(&copy) {
                g2_cycle.insert(edge(hub, target));
            }
        }
    }
    for &copy in &path_copies {
        g2_cycle.remove(&(at(copy, a.0), at(copy, a.1)));
    }
    let g2_cycle: Vec<Edge> = g2_cycle.into_iter().collect();
    g1_cycle.sort_unstable();

    for (name, g, cyc) in [("G1", &g1, &g1_cycle), ("G2", &g2, &g2_cycle)] {
        if g.regular_degree() != Some(r) {
            return Err(Error::Construction(format!("{name} is not {r}-regular")));
        }
        if girth(g) != Some(gth) {
            return Err(Error::Construction(format!(
                "{name} has girth {:?}",
                girth(g)
            )));
        }
        if !is_hamiltonian_cycle(g, cyc) {
            return Err(Error::Construction(format!(
                "{name}: listed edges are not a hamiltonian cycle"
            )));
        }
    }
    Ok(RingPair {
        g1,
        g2,
        g1_cycle,
        g2_cycle,
        added,
    })
}

/// Walk check: `edges` are edges of `g` and form one cycle through all
/// vertices.
pub fn is_hamiltonian_cycle(g: &Graph, edges: &[Edge]) -> bool {
    let n = g.n();
    if n < 3 || edges.len() != n || edges.iter().any(|&(a, b)| !g.has_edge(a, b)) {
        return false;
    }
    let mut nbrs = vec![Vec::with_capacity(2); n];
    for &(a, b) in edges {
        nbrs[a].push(b);
        nbrs[b].push(a);
    }
    if nbrs.iter().any(|l| l.len() != 2) {
        return false;
    }
    let (mut prev, mut cur) = (0, nbrs[0][0]);
    let mut steps = 1;
    while cur != 0 {
        let next = if nbrs[cur][0] == prev {
            nbrs[cur][1]
        } else {
            nbrs[cur][0]
        };
        prev = cur;
        cur = next;
        steps += 1;
        if steps > n {
            return false;
        }
    }
    steps == n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_loses_an_edge_off_the_triangle() {
        let m = remove_ham_edge(&Graph::complete(4), 3, 3).unwrap();
        assert_eq!((m.u, m.v), (0, 3));
        assert_eq!(m.graph.edge_count(), 5);
        assert_eq!(distance(&m.graph, m.u, m.v), Some(2));
    }

    #[test]
    fn prism_keeps_girth() {
        let m = remove_ham_edge(&Graph::prism(3), 3, 3).unwrap();
        assert_eq!(m.graph.n(), 6);
        assert_eq!(girth(&m.graph), Some(3));
    }

    #[test]
    fn cycle_degenerates_to_path() {
        let m = remove_ham_edge(&Graph::cycle(5), 2, 5).unwrap();
        assert_eq!(m.graph.edge_count(), 4);
        assert!(find_st_ham_path(&m.graph, m.u, m.v).unwrap().is_some());
    }

    #[test]
    fn preconditions() {
        assert!(remove_ham_edge(&Graph::complete(4), 3, 4).is_err());
        assert!(remove_ham_edge(&Graph::petersen(), 3, 5).is_err());
        assert!(remove_ham_edge(&Graph::path(4), 2, 3).is_err());
    }

    #[test]
    fn attachment_degrees() {
        for r in 3..=11 {
            let (w, x) = attachment_lists(r);
            assert_eq!(w.len(), r);
            if r % 2 == 1 {
                assert_eq!(x.len(), r);
                // every removed edge gives each end to exactly one hub
                let mut all: Vec<_> = w
                    .iter()
                    .chain(x.iter())
                    .map(|&(c, e)| (c, e as u8))
                    .collect();
                all.sort();
                all.dedup();
                assert_eq!(all.len(), 2 * r);
            } else {
                assert!(x.is_empty());
            }
        }
    }

    #[test]
    fn walk_check() {
        let g = Graph::cycle(5);
        assert!(is_hamiltonian_cycle(&g, &g.edges()));
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_hamiltonian_cycle(&two, &two.edges()));
    }
}
