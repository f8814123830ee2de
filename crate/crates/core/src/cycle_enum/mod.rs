//! Exact longest-cycle enumeration and hamiltonian counting.
//!
//! Two independent longest-cycle enumerators are provided: a pruned path
//! extension search ([`enumerate_longest_cycles_dfs`]) and a subset
//! dynamic program ([`enumerate_longest_cycles_dp`]). They share nothing
//! but the canonical cycle form, so agreement between them is a real
//! check.

mod census;
mod dfs;
mod hamilton;
mod held_karp;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde::Serialize;

use crate::cycle::CycleSet;
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};
use hamilton::{Goal, HamSearch, MAX_VERTICES};

pub use census::{census, CensusFilters, CensusOptions, CensusResult, OrderMinimum};
pub use held_karp::{
    table_bytes, DpLimits, DEFAULT_MEMORY_CEILING, DEFAULT_VERTEX_LIMIT, MEMORY_ENV,
};

/// Exact, never-saturating count.
pub type BigCount = BigUint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Dfs,
    Dp,
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Algorithm::Dfs => "dfs",
            Algorithm::Dp => "dp",
        })
    }
}

/// All longest cycles of a graph.
#[derive(Clone, Debug)]
pub struct EnumResult {
    /// Length of a longest cycle, 0 for forests.
    pub circumference: usize,
    pub cycles: CycleSet,
    pub algorithm: Algorithm,
    pub elapsed: Duration,
}

impl EnumResult {
    pub fn count(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_hamiltonian(&self, g: &Graph) -> bool {
        g.n() >= 3 && self.circumference == g.n()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DfsOptions {
    /// Skip branches that cannot reach the best length found so far.
    pub prune_by_best: bool,
}

impl Default for DfsOptions {
    fn default() -> Self {
        DfsOptions {
            prune_by_best: true,
        }
    }
}

fn check_size(g: &Graph, algorithm: &'static str) -> Result<()> {
    if g.n() > MAX_VERTICES {
        return Err(Error::Capacity {
            algorithm,
            n: g.n(),
            limit: MAX_VERTICES,
        });
    }
    Ok(())
}

fn finish(cycles: CycleSet, algorithm: Algorithm, started: Instant) -> EnumResult {
    EnumResult {
        circumference: cycles.length(),
        cycles,
        algorithm,
        elapsed: started.elapsed(),
    }
}

/// Longest cycles by path extension with reachability pruning.
pub fn enumerate_longest_cycles_dfs(g: &Graph) -> Result<EnumResult> {
    enumerate_longest_cycles_dfs_with(g, DfsOptions::default())
}

pub fn enumerate_longest_cycles_dfs_with(g: &Graph, options: DfsOptions) -> Result<EnumResult> {
    check_size(g, "path extension search")?;
    let started = Instant::now();
    let cycles = dfs::LongestDfs::run(g, options.prune_by_best);
    Ok(finish(cycles, Algorithm::Dfs, started))
}

/// Longest cycles by subset dynamic programming, under the default
/// limits (or the memory ceiling from [`MEMORY_ENV`]).
pub fn enumerate_longest_cycles_dp(g: &Graph) -> Result<EnumResult> {
    enumerate_longest_cycles_dp_with(g, &DpLimits::from_env())
}

pub fn enumerate_longest_cycles_dp_with(g: &Graph, limits: &DpLimits) -> Result<EnumResult> {
    let started = Instant::now();
    let cycles = held_karp::longest_cycles(g, limits)?;
    Ok(finish(cycles, Algorithm::Dp, started))
}

pub fn enumerate_longest_cycles(g: &Graph, algorithm: Algorithm) -> Result<EnumResult> {
    match algorithm {
        Algorithm::Dfs => enumerate_longest_cycles_dfs(g),
        Algorithm::Dp => enumerate_longest_cycles_dp(g),
    }
}

fn min_degree_vertex(g: &Graph) -> usize {
    (0..g.n()).min_by_key(|&v| g.degree(v)).unwrap_or(0)
}

/// Number of hamiltonian cycles, optionally only those through `via_edge`.
pub fn count_hamiltonian_cycles(g: &Graph, via_edge: Option<Edge>) -> Result<BigCount> {
    check_size(g, "hamiltonian search")?;
    if let Some(e) = via_edge {
        g.check_edge(e)?;
    }
    if g.n() < 3 {
        return Ok(BigCount::default());
    }
    let mut count: u128 = 0;
    let mut tally = |_: &[usize]| {
        count += 1;
        true
    };
    match via_edge {
        // Starting along the edge fixes the orientation.
        Some((a, b)) => HamSearch::run(g, a, Some(b), Goal::Cycle, None, &mut tally),
        None => {
            HamSearch::run(g, min_degree_vertex(g), None, Goal::Cycle, None, &mut tally);
            count /= 2;
        }
    }
    Ok(BigCount::from(count))
}

/// Hamiltonian `s`–`t` paths, optionally only those using `via_edge`.
/// Paths are listed (with `s` first) when `list` is set.
pub fn enumerate_st_ham_paths(
    g: &Graph,
    s: usize,
    t: usize,
    via_edge: Option<Edge>,
    list: bool,
) -> Result<(BigCount, Option<Vec<Vec<usize>>>)> {
    check_size(g, "hamiltonian search")?;
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::SameEndpoints(s));
    }
    if let Some(e) = via_edge {
        g.check_edge(e)?;
    }
    let mut count: u128 = 0;
    let mut paths = Vec::new();
    let mut on_found = |p: &[usize]| {
        count += 1;
        if list {
            paths.push(p.to_vec());
        }
        true
    };
    HamSearch::run(
        g,
        s,
        None,
        Goal::Path { target: t },
        via_edge.map(|(a, b)| edge(a, b)),
        &mut on_found,
    );
    Ok((BigCount::from(count), list.then_some(paths)))
}

pub fn count_st_ham_paths(
    g: &Graph,
    s: usize,
    t: usize,
    via_edge: Option<Edge>,
) -> Result<BigCount> {
    Ok(enumerate_st_ham_paths(g, s, t, via_edge, false)?.0)
}

/// For every edge, the number of hamiltonian cycles through it.
pub fn edge_cycle_incidence(g: &Graph) -> Result<BTreeMap<Edge, BigCount>> {
    check_size(g, "hamiltonian search")?;
    let mut counts: BTreeMap<Edge, u128> = g.edges().into_iter().map(|e| (e, 0)).collect();
    if g.n() >= 3 {
        let n = g.n();
        let mut on_found = |p: &[usize]| {
            // Each cycle is seen in both directions; keep one.
            if p[1] < p[n - 1] {
                for i in 0..n {
                    *counts.get_mut(&edge(p[i], p[(i + 1) % n])).unwrap() += 1;
                }
            }
            true
        };
        HamSearch::run(
            g,
            min_degree_vertex(g),
            None,
            Goal::Cycle,
            None,
            &mut on_found,
        );
    }
    Ok(counts
        .into_iter()
        .map(|(e, c)| (e, BigCount::from(c)))
        .collect())
}

/// Finds one hamiltonian cycle, the first in search order from vertex 0.
pub fn find_hamiltonian_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    check_size(g, "hamiltonian search")?;
    if g.n() < 3 {
        return Ok(None);
    }
    Ok(first_match(|f| {
        HamSearch::run(g, 0, None, Goal::Cycle, None, f)
    }))
}

/// Finds one hamiltonian `s`–`t` path.
pub fn find_st_ham_path(g: &Graph, s: usize, t: usize) -> Result<Option<Vec<usize>>> {
    check_size(g, "hamiltonian search")?;
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::SameEndpoints(s));
    }
    Ok(first_match(|f| {
        HamSearch::run(g, s, None, Goal::Path { target: t }, None, f)
    }))
}

fn first_match(run: impl FnOnce(&mut dyn FnMut(&[usize]) -> bool)) -> Option<Vec<usize>> {
    let mut found: Option<Vec<usize>> = None;
    let mut keep = |p: &[usize]| {
        found = Some(p.to_vec());
        false
    };
    run(&mut keep);
    found
}
