//! Simple undirected graphs on dense vertex indices `0..n`.

use crate::error::{Error, Result};

/// An undirected edge stored with its smaller endpoint first.
pub type Edge = (usize, usize);

/// Normalizes an edge so the smaller endpoint comes first.
pub fn edge(a: usize, b: usize) -> Edge {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Simple undirected graph with sorted adjacency lists.
///
/// Adjacency is always symmetric and free of loops and parallel edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: a.max(b),
                    n,
                });
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            if g.has_edge(a, b) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({a}, {b})")));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge(a, b);
            }
        }
        g
    }

    /// `K_{p,q}` with sides `0..p` and `p..p+q`.
    pub fn complete_bipartite(p: usize, q: usize) -> Self {
        let mut g = Graph::empty(p + q);
        for a in 0..p {
            for b in p..p + q {
                g.add_edge(a, b);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for a in 0..n {
            let b = (a + 1) % n;
            if a != b && !g.has_edge(a, b) {
                g.add_edge(a, b);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for a in 1..n {
            g.add_edge(a - 1, a);
        }
        g
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    /// Prism over a `k`-cycle (the cartesian product of `C_k` and `K_2`).
    pub fn prism(k: usize) -> Self {
        let mut g = Graph::empty(2 * k);
        for i in 0..k {
            g.add_edge(i, (i + 1) % k);
            g.add_edge(k + i, k + (i + 1) % k);
            g.add_edge(i, k + i);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (a, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&b| b > a).map(|&b| (a, b)));
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn check_edge(&self, e: Edge) -> Result<()> {
        self.check_vertex(e.0)?;
        self.check_vertex(e.1)?;
        if self.has_edge(e.0, e.1) {
            Ok(())
        } else {
            Err(Error::NotAnEdge(e.0, e.1))
        }
    }

    /// Returns `r` if every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adj.first().map(Vec::len)?;
        self.adj.iter().all(|a| a.len() == first).then_some(first)
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert!(a != b);
        if let Err(pos) = self.adj[a].binary_search(&b) {
            self.adj[a].insert(pos, b);
        }
        if let Err(pos) = self.adj[b].binary_search(&a) {
            self.adj[b].insert(pos, a);
        }
    }

    pub(crate) fn remove_edge(&mut self, a: usize, b: usize) -> bool {
        match self.adj[a].binary_search(&b) {
            Ok(pos) => {
                self.adj[a].remove(pos);
                let pos = self.adj[b].binary_search(&a).expect("symmetric adjacency");
                self.adj[b].remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    /// Appends a fresh isolated vertex and returns its index.
    pub(crate) fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Appends a copy of `other`; returns the index offset of the copy.
    pub(crate) fn append(&mut self, other: &Graph) -> usize {
        let offset = self.n();
        self.adj.extend(
            other
                .adj
                .iter()
                .map(|nbrs| nbrs.iter().map(|&w| w + offset).collect()),
        );
        offset
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        g.append(other);
        g
    }

    /// Subgraph induced by `vertices`, relabeled in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            if index[v] != usize::MAX {
                return Err(Error::InvalidGraph(format!("vertex {v} listed twice")));
            }
            index[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX && index[w] > i {
                    g.add_edge(i, index[w]);
                }
            }
        }
        Ok(g)
    }

    /// Graph with vertex `v` removed and later vertices shifted down.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&w| w != v).collect();
        self.induced_subgraph(&keep).expect("valid vertex list")
    }

    /// Copy of the graph without edge `(a, b)`.
    pub fn without_edge(&self, a: usize, b: usize) -> Result<Graph> {
        self.check_edge(edge(a, b))?;
        let mut g = self.clone();
        g.remove_edge(a, b);
        Ok(g)
    }

    /// Copy of the graph with edge `(a, b)` added.
    pub fn with_edge(&self, a: usize, b: usize) -> Result<Graph> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b || self.has_edge(a, b) {
            return Err(Error::InvalidGraph(format!("cannot add edge ({a}, {b})")));
        }
        let mut g = self.clone();
        g.add_edge(a, b);
        Ok(g)
    }

    /// Neighborhoods as 128-bit masks, for the enumerators.
    pub(crate) fn masks(&self) -> Vec<u128> {
        self.adj
            .iter()
            .map(|nbrs| nbrs.iter().fold(0u128, |m, &w| m | (1u128 << w)))
            .collect()
    }
}

/// A graph with two distinguished vertices and an optional marked edge.
///
/// Gadgets use `u`, `v` as their attachment vertices and the marked edge
/// as the edge that the next splice replaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedGraph {
    pub graph: Graph,
    pub u: usize,
    pub v: usize,
    pub special_edge: Option<Edge>,
}

impl MarkedGraph {
    pub fn new(graph: Graph, u: usize, v: usize, special_edge: Option<Edge>) -> Result<Self> {
        graph.check_vertex(u)?;
        graph.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidGraph(format!(
                "marked vertices coincide ({u})"
            )));
        }
        let special_edge = special_edge.map(|(a, b)| edge(a, b));
        if let Some(e) = special_edge {
            graph.check_edge(e)?;
        }
        Ok(MarkedGraph {
            graph,
            u,
            v,
            special_edge,
        })
    }

    /// A regular graph marked only by one of its edges, as used for the
    /// starting graph of a splice chain.
    pub fn from_edge(graph: Graph, e: Edge) -> Result<Self> {
        MarkedGraph::new(graph, e.0, e.1, Some(e))
    }
}
