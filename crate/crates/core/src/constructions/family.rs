//! The 2-connected non-hamiltonian family `G(l, m)`: `l` blocks of type
//! `H1` and `m` of type `H2` strung between two copies of `G3'`.
//!
//! A block is `r - 2` copies of an edge-removed base plus two hubs. One
//! hub is joined to the first degree-`(r-1)` vertex of every copy, the
//! other hub to the second. Consecutive blocks are linked hub to hub, so
//! each hub ends with `r - 2` copy edges and two chain edges.

use super::bases::BaseTriple;
use super::ring::remove_ham_edge;
use super::Prediction;
use crate::cycle_enum::{count_st_ham_paths, find_hamiltonian_cycle};
use crate::error::{Error, Result};
use crate::graph::{Graph, MarkedGraph};
use crate::structure::{components_without, girth, validate};

#[derive(Clone, Debug)]
pub struct FamilyParams {
    pub r: usize,
    pub g: usize,
    pub ell: usize,
    pub m: usize,
    pub bases: BaseTriple,
}

/// 1 for even `r`, 2 for odd `r`.
pub fn order_gap(r: usize) -> usize {
    if r.is_multiple_of(2) {
        1
    } else {
        2
    }
}

impl FamilyParams {
    /// Validates the base graphs: each is `r`-regular, has girth `g` and
    /// is hamiltonian; `|G2| - |G1|` is the order gap and `|G3| > |G2|`.
    pub fn new(r: usize, g: usize, ell: usize, m: usize, bases: BaseTriple) -> Result<Self> {
        if r < 3 || g < 3 {
            return Err(Error::Precondition(format!(
                "need r >= 3 and g >= 3, got r={r} g={g}"
            )));
        }
        if ell + m == 0 {
            return Err(Error::Precondition("need at least one block".into()));
        }
        for (name, h) in [("G1", &bases.g1), ("G2", &bases.g2), ("G3", &bases.g3)] {
            let s = validate(h);
            if !s.is_regular(r) || s.girth != Some(g) {
                return Err(Error::Precondition(format!(
                    "{name} is not {r}-regular of girth {g}"
                )));
            }
            if find_hamiltonian_cycle(h)?.is_none() {
                return Err(Error::Precondition(format!("{name} is not hamiltonian")));
            }
        }
        let (n1, n2, n3) = (bases.g1.n(), bases.g2.n(), bases.g3.n());
        if n2 != n1 + order_gap(r) || n3 <= n2 {
            return Err(Error::Precondition(format!(
                "base orders {n1}, {n2}, {n3} do not fit degree {r}"
            )));
        }
        Ok(FamilyParams {
            r,
            g,
            ell,
            m,
            bases,
        })
    }

    pub fn with_blocks(&self, ell: usize, m: usize) -> Result<Self> {
        if ell + m == 0 {
            return Err(Error::Precondition("need at least one block".into()));
        }
        Ok(FamilyParams {
            ell,
            m,
            ..self.clone()
        })
    }

    /// Order of an `H1` block.
    pub fn block_size(&self) -> usize {
        (self.r - 2) * self.bases.g1.n() + 2
    }

    pub fn order(&self) -> usize {
        2 * self.bases.g3.n() + (self.ell + self.m) * self.block_size() + order_gap(self.r) * self.m
    }

    /// Smallest order from which every admissible order is covered.
    pub fn threshold(&self) -> usize {
        2 * self.bases.g3.n() + self.block_size().pow(2)
    }
}

/// Predicted statistics of `G(l, m)`, with `h` computed by enumeration on
/// the edge-removed `G3`.
pub fn predicted_family_stats(p: &FamilyParams) -> Result<Prediction> {
    let g3 = remove_ham_edge(&p.bases.g3, p.r, p.g)?;
    let h = count_st_ham_paths(&g3.graph, g3.u, g3.v, None)?;
    Ok(Prediction {
        order: p.order(),
        circumference: 2 * (p.ell + p.m + g3.graph.n()),
        count: &h * &h,
        formula: "h^2".into(),
    })
}

/// Appends one block: hubs first, then `r - 2` copies. Returns the hubs.
fn append_block(out: &mut Graph, copies: &[&MarkedGraph]) -> (usize, usize) {
    let w = out.add_vertex();
    let x = out.add_vertex();
    for c in copies {
        let off = out.append(&c.graph);
        out.add_edge(w, c.u + off);
        out.add_edge(x, c.v + off);
    }
    (w, x)
}

/// Builds `G(l, m)`. The result is marked with the 2-cut `w1, x1`.
pub fn build_family(p: &FamilyParams) -> Result<(MarkedGraph, Prediction)> {
    let r = p.r;
    let g1 = remove_ham_edge(&p.bases.g1, r, p.g)?;
    let g2 = remove_ham_edge(&p.bases.g2, r, p.g)?;
    let g3 = remove_ham_edge(&p.bases.g3, r, p.g)?;

    let mut out = Graph::empty(0);
    let off = out.append(&g3.graph);
    let mut chain = vec![(g3.u + off, g3.v + off)];
    let h1: Vec<&MarkedGraph> = vec![&g1; r - 2];
    let mut h2 = h1.clone();
    h2[0] = &g2;
    for _ in 0..p.ell {
        chain.push(append_block(&mut out, &h1));
    }
    for _ in 0..p.m {
        chain.push(append_block(&mut out, &h2));
    }
    let off = out.append(&g3.graph);
    chain.push((g3.u + off, g3.v + off));
    for pair in chain.windows(2) {
        out.add_edge(pair[0].0, pair[1].0);
        out.add_edge(pair[0].1, pair[1].1);
    }

    let prediction = predicted_family_stats(p)?;
    if out.n() != prediction.order {
        return Err(Error::Construction(format!(
            "order {} differs from predicted {}",
            out.n(),
            prediction.order
        )));
    }
    let s = validate(&out);
    if !s.is_regular(r) || girth(&out) != Some(p.g) || !s.is_2_connected {
        return Err(Error::Construction("family graph failed validation".into()));
    }
    // A hamiltonian graph loses at most k components to k deleted
    // vertices; the hubs of a block cut off r - 2 copies and both sides.
    let (w, x) = chain[1];
    if components_without(&out, &[w, x]) <= 2 {
        return Err(Error::Construction(
            "block hubs do not separate the graph".into(),
        ));
    }
    let (w1, x1) = chain[0];
    Ok((MarkedGraph::new(out, w1, x1, None)?, prediction))
}

/// Chooses `(l, m)` so that `G(l, m)` has exactly `n` vertices.
///
/// Writes `n - 2|G3'| = q B + s` with `B` the block size and `0 <= s < B`,
/// then takes `l = q - s/a` and `m = s/a`.
pub fn solve_family_order(n: usize, p: &FamilyParams) -> Result<(usize, usize)> {
    if n < p.threshold() {
        return Err(Error::Precondition(format!(
            "order {n} is below the threshold {}",
            p.threshold()
        )));
    }
    if !(n * p.r).is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "n*r must be even, got n={n} r={}",
            p.r
        )));
    }
    let a = order_gap(p.r);
    let b = p.block_size();
    let rest = n - 2 * p.bases.g3.n();
    let (q, s) = (rest / b, rest % b);
    if s % a != 0 {
        return Err(Error::Construction(format!(
            "remainder {s} is not divisible by {a}"
        )));
    }
    Ok((q - s / a, s / a))
}
