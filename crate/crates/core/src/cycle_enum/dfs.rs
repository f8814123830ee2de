//! Longest cycles by growing paths through the highest vertex.
//!
//! For each vertex `v` in turn, only the subgraph induced by `0..=v` is
//! considered, and every cycle whose maximum vertex is `v` is generated
//! exactly once: as a path `a, v, b, ...` with `a < b` that is extended
//! at its far end until it closes back to `a`. A branch stops as soon as
//! the unvisited vertices offer no route from the far end back to `a`.

use crate::cycle::{Cycle, CycleSet};
use crate::graph::Graph;

pub(crate) struct LongestDfs {
    adj: Vec<u128>,
    prune: bool,
    best: CycleSet,
    path: Vec<usize>,
}

#[inline]
fn bit(v: usize) -> u128 {
    1u128 << v
}

impl LongestDfs {
    pub(crate) fn run(g: &Graph, prune: bool) -> CycleSet {
        let mut s = LongestDfs {
            adj: g.masks(),
            prune,
            best: CycleSet::default(),
            path: Vec::with_capacity(g.n()),
        };
        for v in 2..g.n() {
            if prune && v + 1 < s.best.length() {
                continue;
            }
            let allowed = bit(v) - 1;
            let nbrs = s.adj[v] & allowed;
            let mut outer = nbrs;
            while outer != 0 {
                let a = outer.trailing_zeros() as usize;
                outer &= outer - 1;
                let mut inner = outer;
                while inner != 0 {
                    let b = inner.trailing_zeros() as usize;
                    inner &= inner - 1;
                    s.path.clear();
                    s.path.extend([a, v, b]);
                    s.extend(allowed & !bit(a) & !bit(b), a, b);
                }
            }
        }
        s.best
    }

    /// `free`: unvisited vertices of the current induced subgraph.
    fn extend(&mut self, free: u128, a: usize, end: usize) {
        if self.adj[end] & bit(a) != 0 {
            let len = self.path.len();
            if !self.prune || len >= self.best.length() {
                self.best.offer(Cycle::from_distinct(&self.path));
            }
        }
        let mut next = self.adj[end] & free;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            let rest = free & !bit(w);
            // Unvisited vertices reachable from w.
            let reach = self.component(w, rest);
            if self.adj[w] & bit(a) == 0 && !self.touches(reach, a) {
                continue;
            }
            let bound = self.path.len() + 1 + reach.count_ones() as usize;
            if self.prune && bound < self.best.length() {
                continue;
            }
            self.path.push(w);
            self.extend(rest, a, w);
            self.path.pop();
        }
    }

    fn touches(&self, set: u128, a: usize) -> bool {
        self.adj[a] & set != 0
    }

    fn component(&self, from: usize, free: u128) -> u128 {
        let mut reach = self.adj[from] & free;
        let mut frontier = reach;
        while frontier != 0 {
            let mut next = 0u128;
            let mut f = frontier;
            while f != 0 {
                let x = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[x];
            }
            next &= free & !reach;
            reach |= next;
            frontier = next;
        }
        reach
    }
}
