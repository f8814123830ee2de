//! Minimum longest-cycle counts over a stream of graphs.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{enumerate_longest_cycles, find_hamiltonian_cycle, Algorithm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::structure::validate;

/// Which graphs of the stream take part. Unset fields do not filter.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusFilters {
    pub regular: Option<usize>,
    /// Exact girth.
    pub girth: Option<usize>,
    pub two_connected: bool,
    pub triangle_free: bool,
    pub non_hamiltonian: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    pub algorithm: Algorithm,
    pub workers: usize,
    /// Skip unparsable records instead of failing on the first one.
    pub skip_unreadable: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            algorithm: Algorithm::Dfs,
            workers: 1,
            skip_unreadable: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderMinimum {
    /// Fewest longest cycles among the passing graphs of this order.
    pub min_count: usize,
    pub circumference: usize,
    /// Smallest graph6 string among the graphs attaining the minimum.
    pub witness: String,
    pub graphs: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusResult {
    pub per_order: BTreeMap<usize, OrderMinimum>,
    pub records: usize,
    pub passed: usize,
    pub filtered_out: usize,
    /// `(record index, reason)` for skipped unreadable records.
    pub unreadable: Vec<(usize, String)>,
}

struct Outcome {
    n: usize,
    count: usize,
    circumference: usize,
    graph6: String,
}

fn examine(g: &Graph, filters: &CensusFilters, algorithm: Algorithm) -> Result<Option<Outcome>> {
    let s = validate(g);
    let structural = filters.regular.is_none_or(|r| s.is_regular(r))
        && filters.girth.is_none_or(|gi| s.girth == Some(gi))
        && (!filters.two_connected || s.is_2_connected)
        && (!filters.triangle_free || s.is_triangle_free());
    if !structural {
        return Ok(None);
    }
    // One hamiltonian cycle settles the filter without full enumeration.
    if filters.non_hamiltonian && find_hamiltonian_cycle(g)?.is_some() {
        return Ok(None);
    }
    let result = enumerate_longest_cycles(g, algorithm)?;
    Ok(Some(Outcome {
        n: g.n(),
        count: result.count(),
        circumference: result.circumference,
        graph6: write_graph6(g),
    }))
}

/// Runs the census. The result does not depend on stream order or on the
/// number of workers.
pub fn census<I>(
    stream: I,
    filters: &CensusFilters,
    options: &CensusOptions,
) -> Result<CensusResult>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    let mut result = CensusResult::default();
    let mut graphs = Vec::new();
    for (index, record) in stream.into_iter().enumerate() {
        result.records += 1;
        match record {
            Ok(g) => graphs.push(g),
            Err(e) if options.skip_unreadable => result.unreadable.push((index, e.to_string())),
            Err(e) => {
                return Err(Error::Record {
                    index,
                    reason: e.to_string(),
                })
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers.max(1))
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let outcomes: Vec<Result<Option<Outcome>>> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| examine(g, filters, options.algorithm))
            .collect()
    });
    for outcome in outcomes {
        let Some(o) = outcome? else {
            result.filtered_out += 1;
            continue;
        };
        result.passed += 1;
        let entry = result.per_order.entry(o.n).or_insert_with(|| OrderMinimum {
            min_count: o.count,
            circumference: o.circumference,
            witness: o.graph6.clone(),
            graphs: 0,
        });
        entry.graphs += 1;
        if (o.count, &o.graph6) < (entry.min_count, &entry.witness) {
            entry.min_count = o.count;
            entry.circumference = o.circumference;
            entry.witness = o.graph6;
        }
    }
    Ok(result)
}
