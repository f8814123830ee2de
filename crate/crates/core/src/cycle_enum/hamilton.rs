//! Backtracking search for hamiltonian paths and cycles.
//!
//! A branch is cut as soon as the unvisited vertices cannot be strung
//! onto the current path: they must be reachable from the path end, and
//! every one of them needs enough free neighbors to be passed through.
//! A vertex with exactly two free neighbors, one of them the path end,
//! forces the next step.

use crate::graph::{Edge, Graph};

pub(crate) const MAX_VERTICES: usize = 128;

#[derive(Clone, Copy, Debug)]
pub(crate) enum Goal {
    /// Hamiltonian path ending at `target`.
    Path { target: usize },
    /// Hamiltonian path that closes back to the start vertex.
    Cycle,
}

pub(crate) struct HamSearch<'a, F: FnMut(&[usize]) -> bool + ?Sized> {
    adj: Vec<u128>,
    full: u128,
    start: usize,
    goal: Goal,
    via: Option<Edge>,
    path: Vec<usize>,
    stopped: bool,
    on_found: &'a mut F,
}

#[inline]
fn bit(v: usize) -> u128 {
    1u128 << v
}

impl<'a, F: FnMut(&[usize]) -> bool + ?Sized> HamSearch<'a, F> {
    /// Runs the search from `start`, optionally forcing the first step, and
    /// calls `on_found` with every complete vertex sequence until it
    /// returns false.
    pub(crate) fn run(
        g: &Graph,
        start: usize,
        first: Option<usize>,
        goal: Goal,
        via: Option<Edge>,
        on_found: &'a mut F,
    ) {
        assert!(g.n() <= MAX_VERTICES, "checked by callers");
        let n = g.n();
        let full = if n == 128 { u128::MAX } else { bit(n) - 1 };
        let mut s = HamSearch {
            adj: g.masks(),
            full,
            start,
            goal,
            via,
            path: Vec::with_capacity(n),
            stopped: false,
            on_found,
        };
        s.path.push(start);
        let visited = bit(start);
        if n == 1 {
            if let Goal::Path { target } = goal {
                if target == start {
                    (s.on_found)(&s.path);
                }
            }
            return;
        }
        match first {
            Some(w) => {
                if s.adj[start] & bit(w) != 0 {
                    s.step(visited, start, w, false);
                }
            }
            None => s.extend(visited, start, false),
        }
    }

    fn via_hit(&self, a: usize, b: usize) -> bool {
        matches!(self.via, Some((p, q)) if (p == a && q == b) || (p == b && q == a))
    }

    fn step(&mut self, visited: u128, end: usize, w: usize, used: bool) {
        let used = used || self.via_hit(end, w);
        self.path.push(w);
        self.extend(visited | bit(w), w, used);
        self.path.pop();
    }

    fn extend(&mut self, visited: u128, end: usize, used: bool) {
        if self.stopped {
            return;
        }
        let free = self.full & !visited;
        if free == 0 {
            let closes = match self.goal {
                Goal::Path { target } => end == target,
                Goal::Cycle => self.adj[end] & bit(self.start) != 0,
            };
            let via_ok = used
                || self.via.is_none()
                || self.via_hit(end, self.start) && matches!(self.goal, Goal::Cycle);
            if closes && via_ok && !(self.on_found)(&self.path) {
                self.stopped = true;
            }
            return;
        }
        if let Some((p, q)) = self.via {
            // Both endpoints placed without the edge between them.
            if !used && visited & bit(p) != 0 && visited & bit(q) != 0 {
                let closing = matches!(self.goal, Goal::Cycle)
                    && ((p == self.start && q == end) || (q == self.start && p == end));
                if !closing {
                    return;
                }
            }
        }
        let Some(forced) = self.feasible(free, end) else {
            return;
        };
        let mut candidates = self.adj[end] & free;
        if let Goal::Path { target } = self.goal {
            if free != bit(target) {
                candidates &= !bit(target);
            }
        }
        if let Some(x) = forced {
            if candidates & bit(x) != 0 {
                self.step(visited, end, x, used);
            }
            return;
        }
        while candidates != 0 {
            let w = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            self.step(visited, end, w, used);
        }
    }

    /// Returns `None` if the branch is dead, `Some(Some(x))` if the next
    /// vertex is forced to be `x`.
    fn feasible(&self, free: u128, end: usize) -> Option<Option<usize>> {
        // Vertices that can still take a path neighbor besides `free`.
        let (anchor, target) = match self.goal {
            Goal::Path { target } => (bit(end), Some(target)),
            Goal::Cycle => (bit(end) | bit(self.start), None),
        };
        if let Goal::Cycle = self.goal {
            if self.adj[self.start] & free == 0 {
                return None;
            }
        }
        let at_start = matches!(self.goal, Goal::Cycle) && end == self.start;
        let mut forced = None;
        let mut rest = free;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let avail = self.adj[x] & (free | anchor);
            let need = if Some(x) == target { 1 } else { 2 };
            let deg = avail.count_ones();
            if deg < need {
                return None;
            }
            // At the very start both cycle neighbors of `start` look
            // forced; they are the first and last vertex, not a conflict.
            if deg == 2
                && need == 2
                && avail & bit(end) != 0
                && !(at_start && avail & bit(self.start) != 0)
            {
                match forced {
                    None => forced = Some(x),
                    Some(_) => return None,
                }
            }
        }
        // Everything unvisited must hang off the path end.
        let mut reach = self.adj[end] & free;
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
        if reach != free {
            return None;
        }
        Some(forced)
    }
}
