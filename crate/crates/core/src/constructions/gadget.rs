//! The `(3r+1)`-vertex gadget with two degree-`(r-1)` attachment vertices.
//!
//! Vertex layout (0-based):
//!
//! | vertex        | index                       |
//! |---------------|-----------------------------|
//! | `u`, `v`      | 0, 1                        |
//! | `z1`..`z4`    | 2..=5                       |
//! | `u'`, `z1'`   | 6, 7                        |
//! | `x1`..`x(r-2)`| 8 ..                        |
//! | `y1`..`y(r-4)`| after the `x` block         |
//! | `t1`..`t(r-1)`| after the `y` block         |
//!
//! `u'`, `z1'` and the `t` vertices induce a clique on `r + 1` vertices
//! minus the edge `u'z1'`. The marked edge is `z1z2`.

use num_bigint::BigUint;
use serde::Serialize;

use crate::bounds::factorial;
use crate::cycle_enum::BigCount;
use crate::error::{Error, Result};
use crate::graph::{Graph, MarkedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetSpec {
    r: usize,
}

impl GadgetSpec {
    pub fn new(r: usize) -> Result<Self> {
        if r < 5 {
            return Err(Error::Precondition(format!("gadget needs r >= 5, got {r}")));
        }
        Ok(GadgetSpec { r })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn order(&self) -> usize {
        3 * self.r + 1
    }
}

/// Named vertex indices of a gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetLayout {
    pub r: usize,
}

impl GadgetLayout {
    pub const U: usize = 0;
    pub const V: usize = 1;
    pub const U_PRIME: usize = 6;
    pub const Z1_PRIME: usize = 7;

    /// `z_i`, 1-based as in the usual naming.
    pub fn z(&self, i: usize) -> usize {
        debug_assert!((1..=4).contains(&i));
        1 + i
    }

    pub fn x(&self, i: usize) -> usize {
        debug_assert!((1..=self.r - 2).contains(&i));
        7 + i
    }

    pub fn y(&self, i: usize) -> usize {
        debug_assert!((1..=self.r - 4).contains(&i));
        7 + (self.r - 2) + i
    }

    pub fn t(&self, i: usize) -> usize {
        debug_assert!((1..=self.r - 1).contains(&i));
        7 + (self.r - 2) + (self.r - 4) + i
    }

    pub fn xs(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.r - 2).map(|i| self.x(i))
    }

    pub fn ys(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.r - 4).map(|i| self.y(i))
    }

    pub fn ts(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.r - 1).map(|i| self.t(i))
    }
}

/// Builds the gadget `H` with `u`, `v` and marked edge `z1z2`.
pub fn build_gadget(spec: GadgetSpec) -> MarkedGraph {
    let r = spec.r;
    let l = GadgetLayout { r };
    let (u, v) = (GadgetLayout::U, GadgetLayout::V);
    let (up, z1p) = (GadgetLayout::U_PRIME, GadgetLayout::Z1_PRIME);
    let [z1, z2, z3, z4] = [l.z(1), l.z(2), l.z(3), l.z(4)];
    let mut g = Graph::empty(spec.order());

    g.add_edge(u, up);
    for x in l.xs() {
        g.add_edge(u, x);
        g.add_edge(z1, x);
    }
    g.add_edge(v, z3);
    g.add_edge(v, z4);
    for i in 2..=r - 2 {
        g.add_edge(v, l.x(i));
    }
    g.add_edge(z1, z1p);
    g.add_edge(z1, z2);
    g.add_edge(z2, z3);
    g.add_edge(z2, z4);
    for i in 1..=r - 3 {
        g.add_edge(z2, l.x(i));
    }
    g.add_edge(z3, z4);
    g.add_edge(z3, l.x(1));
    g.add_edge(z4, l.x(r - 2));
    for y in l.ys() {
        g.add_edge(z3, y);
        g.add_edge(z4, y);
        for x in l.xs() {
            g.add_edge(x, y);
        }
    }
    let ts: Vec<usize> = l.ts().collect();
    for (k, &t) in ts.iter().enumerate() {
        g.add_edge(up, t);
        g.add_edge(z1p, t);
        for &t2 in &ts[k + 1..] {
            g.add_edge(t, t2);
        }
    }
    MarkedGraph::new(g, u, v, Some((z1, z2))).expect("gadget layout is consistent")
}

/// `(2r-8) ((r-4)!)^2 (r-1)!`: hamiltonian `uv`-paths of the gadget
/// through its marked edge.
pub fn gadget_path_count_formula(r: usize) -> Result<BigCount> {
    Ok(subgraph_i_formula(r)? * factorial(r - 1))
}

/// `(2r-8) ((r-4)!)^2`: hamiltonian `z2v`-paths of the subgraph `I`.
pub fn subgraph_i_formula(r: usize) -> Result<BigCount> {
    GadgetSpec::new(r)?;
    let f = factorial(r - 4);
    Ok(BigUint::from(2 * r - 8) * &f * &f)
}

/// The subgraph `I` of the gadget induced by `z2, z3, z4, v` and the `x`
/// and `y` vertices, with the path endpoints `z2` and `v`.
#[derive(Clone, Debug)]
pub struct SubgraphI {
    pub graph: Graph,
    pub z2: usize,
    pub v: usize,
    pub formula: BigCount,
}

pub fn subgraph_i(r: usize) -> Result<SubgraphI> {
    let spec = GadgetSpec::new(r)?;
    let l = GadgetLayout { r };
    let h = build_gadget(spec);
    let mut vertices = vec![l.z(2), l.z(3), l.z(4), GadgetLayout::V];
    vertices.extend(l.xs());
    vertices.extend(l.ys());
    Ok(SubgraphI {
        graph: h.graph.induced_subgraph(&vertices)?,
        z2: 0,
        v: 3,
        formula: subgraph_i_formula(r)?,
    })
}

/// The clique on `r + 1` vertices minus one edge, with that edge's
/// endpoints returned as `(graph, s, t)`.
pub fn clique_minus_edge(r: usize) -> (Graph, usize, usize) {
    let mut g = Graph::complete(r + 1);
    g.remove_edge(0, 1);
    (g, 0, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::validate;

    #[test]
    fn rejects_small_r() {
        assert!(GadgetSpec::new(4).is_err());
        assert!(gadget_path_count_formula(4).is_err());
        assert!(subgraph_i(3).is_err());
    }

    #[test]
    fn order_and_degrees() {
        for r in 5..=9 {
            let h = build_gadget(GadgetSpec::new(r).unwrap());
            assert_eq!(h.graph.n(), 3 * r + 1);
            let d = h.graph.degrees();
            assert_eq!(d[GadgetLayout::U], r - 1);
            assert_eq!(d[GadgetLayout::V], r - 1);
            assert_eq!(d.iter().filter(|&&x| x == r).count(), 3 * r - 1);
            assert_eq!(h.special_edge, Some((2, 3)));
        }
        let s = validate(&build_gadget(GadgetSpec::new(5).unwrap()).graph);
        assert_eq!(s.degrees.iter().filter(|&&x| x == 4).count(), 2);
        assert_eq!(s.degrees.iter().filter(|&&x| x == 5).count(), 14);
    }

    /// Neighborhoods row by row. `x(r-2)` is adjacent to `v` and not to
    /// `z2`: the `z2` row stops at `x(r-3)` and the `v` row runs to
    /// `x(r-2)`.
    #[test]
    fn neighborhoods_match_table() {
        let r = 7;
        let l = GadgetLayout { r };
        let h = build_gadget(GadgetSpec::new(r).unwrap()).graph;
        let set = |v: Vec<usize>| {
            let mut v = v;
            v.sort();
            v
        };
        let xs: Vec<usize> = l.xs().collect();
        let ys: Vec<usize> = l.ys().collect();
        let ts: Vec<usize> = l.ts().collect();
        let (u, v) = (GadgetLayout::U, GadgetLayout::V);
        let (up, z1p) = (GadgetLayout::U_PRIME, GadgetLayout::Z1_PRIME);
        let cat = |a: &[usize], b: &[usize]| [a, b].concat();

        assert_eq!(h.neighbors(u), set(cat(&[up], &xs)).as_slice());
        assert_eq!(
            h.neighbors(v),
            set(cat(&[l.z(3), l.z(4)], &xs[1..])).as_slice()
        );
        assert_eq!(
            h.neighbors(l.z(1)),
            set(cat(&[z1p, l.z(2)], &xs)).as_slice()
        );
        assert_eq!(
            h.neighbors(l.z(2)),
            set(cat(&[l.z(1), l.z(3), l.z(4)], &xs[..r - 3])).as_slice()
        );
        assert_eq!(
            h.neighbors(l.z(3)),
            set(cat(&[l.z(2), l.z(4), v, l.x(1)], &ys)).as_slice()
        );
        assert_eq!(
            h.neighbors(l.z(4)),
            set(cat(&[l.z(2), l.z(3), v, l.x(r - 2)], &ys)).as_slice()
        );
        assert_eq!(h.neighbors(up), set(cat(&[u], &ts)).as_slice());
        assert_eq!(h.neighbors(z1p), set(cat(&[l.z(1)], &ts)).as_slice());
        assert_eq!(
            h.neighbors(l.x(1)),
            set(cat(&[u, l.z(1), l.z(2), l.z(3)], &ys)).as_slice()
        );
        for i in 2..=r - 3 {
            assert_eq!(
                h.neighbors(l.x(i)),
                set(cat(&[u, l.z(1), l.z(2), v], &ys)).as_slice()
            );
        }
        assert_eq!(
            h.neighbors(l.x(r - 2)),
            set(cat(&[u, l.z(1), v, l.z(4)], &ys)).as_slice()
        );
        for &y in &ys {
            assert_eq!(h.neighbors(y), set(cat(&[l.z(3), l.z(4)], &xs)).as_slice());
        }
        for &t in &ts {
            let others: Vec<usize> = ts.iter().copied().filter(|&s| s != t).collect();
            assert_eq!(h.neighbors(t), set(cat(&[up, z1p], &others)).as_slice());
        }
    }

    #[test]
    fn formula_values() {
        let vals: Vec<u64> = (5..=8)
            .map(|r| gadget_path_count_formula(r).unwrap().try_into().unwrap())
            .collect();
        assert_eq!(vals, vec![48, 1920, 155_520, 23_224_320]);
        assert_eq!(subgraph_i_formula(5).unwrap(), BigUint::from(2u32));
        assert_eq!(subgraph_i_formula(6).unwrap(), BigUint::from(16u32));
        assert_eq!(subgraph_i_formula(7).unwrap(), BigUint::from(216u32));
    }

    #[test]
    fn subgraph_i_shape() {
        let i = subgraph_i(5).unwrap();
        assert_eq!(i.graph.n(), 2 * 5 - 2);
        assert!(i.graph.has_edge(0, 1) && i.graph.has_edge(0, 2));
    }
}
