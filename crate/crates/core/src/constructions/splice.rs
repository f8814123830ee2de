//! Splicing a two-terminal gadget into an edge of a regular graph.

use crate::error::{Error, Result};
use crate::graph::{edge, Graph, MarkedGraph};

/// Checks that `h` has degree `r - 1` at `u` and `v` and `r` elsewhere.
fn check_gadget(h: &MarkedGraph, r: usize) -> Result<()> {
    for x in 0..h.graph.n() {
        let want = if x == h.u || x == h.v { r - 1 } else { r };
        if h.graph.degree(x) != want {
            return Err(Error::Precondition(format!(
                "gadget vertex {x} has degree {}, expected {want}",
                h.graph.degree(x)
            )));
        }
    }
    Ok(())
}

fn regular_degree(g: &Graph) -> Result<usize> {
    match g.regular_degree() {
        Some(r) if r >= 1 => Ok(r),
        _ => Err(Error::Precondition("host graph is not regular".into())),
    }
}

/// Removes the marked edge `ab` of `g` and joins `a` to `h.u` and `b` to
/// `h.v` in the disjoint union. The result is marked by the image of
/// `h`'s marked edge.
pub fn splice_once(g: &MarkedGraph, h: &MarkedGraph) -> Result<MarkedGraph> {
    let (a, b) = g
        .special_edge
        .ok_or_else(|| Error::Precondition("host graph has no marked edge".into()))?;
    let r = regular_degree(&g.graph)?;
    check_gadget(h, r)?;
    let (p, q) = h
        .special_edge
        .ok_or_else(|| Error::Precondition("gadget has no marked edge".into()))?;
    let mut out = g.graph.clone();
    let offset = out.append(&h.graph);
    out.remove_edge(a, b);
    out.add_edge(a, h.u + offset);
    out.add_edge(b, h.v + offset);
    let marked = edge(p + offset, q + offset);
    MarkedGraph::from_edge(out, marked)
}

/// `k`-fold splice: each round replaces the current marked edge with a
/// fresh copy of `h`. Order is `|g| + k |h|`.
pub fn build_chain(g: &MarkedGraph, h: &MarkedGraph, k: usize) -> Result<MarkedGraph> {
    if k == 0 {
        return Err(Error::Precondition(
            "chain length must be at least 1".into(),
        ));
    }
    let mut cur = splice_once(g, h)?;
    for _ in 1..k {
        cur = splice_once(&cur, h)?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::gadget::{build_gadget, GadgetSpec};

    fn k6() -> MarkedGraph {
        MarkedGraph::from_edge(Graph::complete(6), (0, 1)).unwrap()
    }

    #[test]
    fn single_splice_is_regular() {
        let h = build_gadget(GadgetSpec::new(5).unwrap());
        let g1 = splice_once(&k6(), &h).unwrap();
        assert_eq!(g1.graph.n(), 22);
        assert_eq!(g1.graph.regular_degree(), Some(5));
        assert_eq!(g1.special_edge, Some((8, 9)));
        assert!(!g1.graph.has_edge(0, 1));
        assert!(g1.graph.has_edge(0, 6) && g1.graph.has_edge(1, 7));
    }

    #[test]
    fn chain_orders() {
        let h = build_gadget(GadgetSpec::new(5).unwrap());
        assert_eq!(build_chain(&k6(), &h, 2).unwrap().graph.n(), 38);
        assert_eq!(
            build_chain(&k6(), &h, 1).unwrap(),
            splice_once(&k6(), &h).unwrap()
        );
        assert!(build_chain(&k6(), &h, 0).is_err());
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let h = build_gadget(GadgetSpec::new(6).unwrap());
        assert!(matches!(
            splice_once(&k6(), &h),
            Err(Error::Precondition(_))
        ));
        let unmarked = MarkedGraph::new(Graph::complete(6), 0, 1, None).unwrap();
        let h5 = build_gadget(GadgetSpec::new(5).unwrap());
        assert!(splice_once(&unmarked, &h5).is_err());
    }
}
