//! Longest cycles by subset dynamic programming.
//!
//! For an anchor vertex `a`, `reach[S]` holds the set of endpoints `t`
//! such that some path starts at `a`, ends at `t` and visits exactly
//! `{a} ∪ S`, where `S` ranges over subsets of the vertices above `a`.
//! A cycle through `a` as its minimum vertex is a path whose endpoint is
//! adjacent to `a`. Cycles are then listed by walking the table backwards,
//! which never hits a dead end because every table entry is realizable.

use crate::cycle::{Cycle, CycleSet};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count the table supports by default.
pub const DEFAULT_VERTEX_LIMIT: usize = 28;
/// Default ceiling on the size of one anchor's table.
pub const DEFAULT_MEMORY_CEILING: u64 = 1 << 30;
/// Environment variable overriding [`DEFAULT_MEMORY_CEILING`] (bytes).
pub const MEMORY_ENV: &str = "LONGCYCLES_DP_MEMORY";

/// Bytes needed by the largest (anchor 0) table for `n` vertices.
pub fn table_bytes(n: usize) -> u64 {
    if n <= 1 {
        return 4;
    }
    (1u64 << (n - 1)) * std::mem::size_of::<u32>() as u64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DpLimits {
    pub max_vertices: usize,
    pub memory_ceiling: u64,
}

impl Default for DpLimits {
    fn default() -> Self {
        DpLimits {
            max_vertices: DEFAULT_VERTEX_LIMIT,
            memory_ceiling: DEFAULT_MEMORY_CEILING,
        }
    }
}

impl DpLimits {
    /// Defaults, with the memory ceiling taken from the environment if set.
    pub fn from_env() -> Self {
        let mut limits = DpLimits::default();
        if let Some(bytes) = std::env::var(MEMORY_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
        {
            limits.memory_ceiling = bytes;
        }
        limits
    }

    pub fn check(&self, n: usize) -> Result<()> {
        // Endpoint sets are u32 masks.
        if n > self.max_vertices || n > 32 {
            return Err(Error::Capacity {
                algorithm: "subset dynamic program",
                n,
                limit: self.max_vertices.min(32),
            });
        }
        let needed = table_bytes(n);
        if needed > self.memory_ceiling {
            return Err(Error::Memory {
                needed,
                ceiling: self.memory_ceiling,
            });
        }
        Ok(())
    }
}

pub(crate) fn longest_cycles(g: &Graph, limits: &DpLimits) -> Result<CycleSet> {
    let n = g.n();
    limits.check(n)?;
    let mut best = CycleSet::default();
    let mut table: Vec<u32> = Vec::new();
    for a in 0..n {
        // Cycles anchored at a use only vertices a..n.
        if n - a < 3 || n - a < best.length() {
            break;
        }
        let m = n - 1 - a;
        // Local index i stands for vertex a + 1 + i.
        let local: Vec<u32> = (0..m)
            .map(|i| {
                g.neighbors(a + 1 + i)
                    .iter()
                    .filter(|&&w| w > a)
                    .fold(0u32, |acc, &w| acc | 1 << (w - a - 1))
            })
            .collect();
        let to_anchor: u32 = g
            .neighbors(a)
            .iter()
            .filter(|&&w| w > a)
            .fold(0u32, |acc, &w| acc | 1 << (w - a - 1));
        if to_anchor.count_ones() < 2 {
            continue;
        }
        table.clear();
        table.resize(1usize << m, 0);
        let mut rest = to_anchor;
        while rest != 0 {
            let i = rest.trailing_zeros();
            rest &= rest - 1;
            table[1 << i] |= 1 << i;
        }
        let mut longest = 0usize;
        for s in 1usize..(1 << m) {
            let ends = table[s];
            if ends == 0 {
                continue;
            }
            let size = s.count_ones() as usize;
            if size >= 2 && ends & to_anchor != 0 {
                longest = longest.max(size + 1);
            }
            let mut e = ends;
            while e != 0 {
                let t = e.trailing_zeros() as usize;
                e &= e - 1;
                let mut out = local[t] & !(s as u32);
                while out != 0 {
                    let w = out.trailing_zeros();
                    out &= out - 1;
                    table[s | 1 << w] |= 1 << w;
                }
            }
        }
        if longest < 3 || longest < best.length() {
            continue;
        }
        let mut lister = Lister {
            table: &table,
            local: &local,
            anchor: a,
            path: Vec::with_capacity(longest),
            found: Vec::new(),
        };
        for (s, &ends) in table.iter().enumerate().skip(1) {
            if s.count_ones() as usize != longest - 1 {
                continue;
            }
            let mut e = ends & to_anchor;
            while e != 0 {
                let t = e.trailing_zeros() as usize;
                e &= e - 1;
                lister.path.clear();
                lister.path.push(t);
                lister.walk(s, t);
            }
        }
        for c in lister.found {
            best.offer(c);
        }
    }
    Ok(best)
}

struct Lister<'t> {
    table: &'t [u32],
    local: &'t [u32],
    anchor: usize,
    /// Local indices, from the closing end back towards the anchor.
    path: Vec<usize>,
    found: Vec<Cycle>,
}

impl Lister<'_> {
    fn walk(&mut self, s: usize, t: usize) {
        let rest = s & !(1 << t);
        if rest == 0 {
            // path holds t_last, ..., t_first; the cycle is
            // anchor, t_first, ..., t_last. Keep one orientation.
            let first = *self.path.last().unwrap();
            let last = self.path[0];
            if first < last {
                let mut seq = Vec::with_capacity(self.path.len() + 1);
                seq.push(self.anchor);
                seq.extend(self.path.iter().rev().map(|&i| self.anchor + 1 + i));
                self.found.push(Cycle::from_distinct(&seq));
            }
            return;
        }
        let mut prev = self.table[rest] & self.local[t];
        while prev != 0 {
            let p = prev.trailing_zeros() as usize;
            prev &= prev - 1;
            self.path.push(p);
            self.walk(rest, p);
            self.path.pop();
        }
    }
}
