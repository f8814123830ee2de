//! Structural checks: degrees, girth, connectivity.

use std::collections::VecDeque;

use serde::Serialize;

use crate::cycle::Cycle;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub n: usize,
    pub edges: usize,
    pub degrees: Vec<usize>,
    /// `Some(r)` when every vertex has degree `r`.
    pub regular: Option<usize>,
    /// Length of a shortest cycle; `None` for forests.
    pub girth: Option<usize>,
    pub is_connected: bool,
    pub is_2_connected: bool,
}

impl StructureReport {
    pub fn is_regular(&self, r: usize) -> bool {
        self.regular == Some(r)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.girth.is_none_or(|g| g > 3)
    }
}

pub fn validate(g: &Graph) -> StructureReport {
    let is_connected = is_connected(g);
    StructureReport {
        n: g.n(),
        edges: g.edge_count(),
        degrees: g.degrees(),
        regular: g.regular_degree(),
        girth: girth(g),
        is_connected,
        is_2_connected: is_connected && g.n() >= 3 && articulation_points(g).is_empty(),
    }
}

/// Breadth-first distances from `src`; unreachable vertices get `None`.
pub fn distances(g: &Graph, src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    let mut queue = VecDeque::new();
    dist[src] = Some(0);
    queue.push_back(src);
    while let Some(x) = queue.pop_front() {
        let d = dist[x].unwrap();
        for &y in g.neighbors(x) {
            if dist[y].is_none() {
                dist[y] = Some(d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

pub fn distance(g: &Graph, a: usize, b: usize) -> Option<usize> {
    distances(g, a)[b]
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() == 0 || distances(g, 0).iter().all(Option::is_some)
}

/// Number of connected components left after deleting `removed`.
pub fn components_without(g: &Graph, removed: &[usize]) -> usize {
    let mut seen = vec![false; g.n()];
    for &v in removed {
        seen[v] = true;
    }
    let mut count = 0;
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        count += 1;
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Shortest cycle length via one BFS per root. A non-tree edge `xy`
/// seen from root `s` closes a closed walk of length
/// `d(x) + d(y) + 1`; the minimum over all roots is the girth.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[x] + 1 >= b {
                    break;
                }
            }
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Cut vertices, in increasing order.
pub fn articulation_points(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbor index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (x, parent, ref mut i)) = stack.last_mut() {
            if let Some(&y) = g.neighbors(x).get(*i) {
                *i += 1;
                if y == parent {
                    continue;
                }
                if disc[y] == usize::MAX {
                    disc[y] = time;
                    low[y] = time;
                    time += 1;
                    if x == root {
                        root_children += 1;
                    }
                    stack.push((y, x, 0));
                } else {
                    low[x] = low[x].min(disc[y]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[x]);
                    if parent != root && low[x] >= disc[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// The lexicographically smallest canonical cycle of minimum length.
pub fn shortest_cycle(g: &Graph) -> Option<Cycle> {
    let len = girth(g)?;
    let n = g.n();
    let mut path = Vec::with_capacity(len);
    let mut used = vec![false; n];
    // Canonical cycles start at their minimum vertex and have second < last,
    // so scanning starts and neighbors in increasing order finds the
    // smallest one first.
    for s in 0..n {
        path.clear();
        path.push(s);
        used[s] = true;
        if let Some(c) = extend_to_length(g, s, len, &mut path, &mut used) {
            return Some(c);
        }
        used[s] = false;
    }
    None
}

fn extend_to_length(
    g: &Graph,
    s: usize,
    len: usize,
    path: &mut Vec<usize>,
    used: &mut [bool],
) -> Option<Cycle> {
    let end = *path.last().unwrap();
    if path.len() == len {
        if g.has_edge(end, s) && path[1] < path[len - 1] {
            return Some(Cycle::from_distinct(path));
        }
        return None;
    }
    for &w in g.neighbors(end) {
        if w > s && !used[w] {
            used[w] = true;
            path.push(w);
            let found = extend_to_length(g, s, len, path, used);
            path.pop();
            used[w] = false;
            if found.is_some() {
                return found;
            }
        }
    }
    None
}
