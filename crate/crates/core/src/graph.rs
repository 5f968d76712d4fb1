//! Immutable simple undirected graphs and the four modification operators:
//! edge removal, edge contraction, vertex removal and vertex contraction.
//!
//! Vertices are always `0..n`. Operators that drop a vertex renumber the
//! survivors compactly while preserving their relative order, so applying the
//! same operator to equal graphs yields equal graphs, not merely isomorphic ones.

use std::fmt;

use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("edge {0} is not in the graph")]
    MissingEdge(Edge),
}

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Canonicalizes the endpoint order. Rejects loops.
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Self { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Self { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(a)),
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// There is no way to mutate a graph in place; every operator returns a new
/// value, so graphs can be shared freely across worker threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::new(n); n],
        }
    }

    /// Builds a graph from `(u, v)` pairs. Loops, duplicate edges (in either
    /// orientation) and out-of-range endpoints are errors, never repaired.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::new(n); n];
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, order: n });
                }
            }
            let e = Edge::new(a, b)?;
            if !adj[e.u].insert(e.v) {
                return Err(GraphError::DuplicateEdge(e));
            }
            adj[e.v].insert(e.u);
        }
        let g = Self { adj };
        g.debug_check();
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(VertexSet::is_empty)
    }

    /// Open neighbourhood N(v).
    pub fn neighbors(&self, v: usize) -> Result<&VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(&self.adj[v])
    }

    /// Closed neighbourhood N[v] = N(v) ∪ {v}.
    pub fn closed_neighbors(&self, v: usize) -> Result<VertexSet, GraphError> {
        let mut set = self.neighbors(v)?.clone();
        set.insert(v);
        Ok(set)
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        Ok(self.neighbors(v)?.len())
    }

    pub fn is_pendant(&self, v: usize) -> Result<bool, GraphError> {
        Ok(self.degree(v)? == 1)
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        e.v < self.order() && self.adj[e.u].contains(e.v)
    }

    /// All edges in ascending `(u, v)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&v| v > u).map(|v| Edge { u, v }));
        }
        out
    }

    /// G − e.
    pub fn remove_edge(&self, e: Edge) -> Result<Self, GraphError> {
        self.require_edge(e)?;
        let mut adj = self.adj.clone();
        adj[e.u].remove(e.v);
        adj[e.v].remove(e.u);
        Ok(Self::checked(adj))
    }

    /// G + e, the inverse of [`Graph::remove_edge`].
    pub fn add_edge(&self, e: Edge) -> Result<Self, GraphError> {
        self.check_vertex(e.v)?;
        if self.has_edge(e) {
            return Err(GraphError::DuplicateEdge(e));
        }
        let mut adj = self.adj.clone();
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
        Ok(Self::checked(adj))
    }

    /// G / e. The merged vertex keeps index `e.u()` (the smaller endpoint);
    /// vertices above `e.v()` shift down by one.
    pub fn contract_edge(&self, e: Edge) -> Result<Self, GraphError> {
        self.require_edge(e)?;
        let mut merged = self.adj[e.u].union(&self.adj[e.v]);
        merged.remove(e.u);
        merged.remove(e.v);
        let mut adj = self.adj.clone();
        for w in merged.iter() {
            adj[w].insert(e.u);
        }
        adj[e.u] = merged;
        Ok(Self::checked(delete_vertex(&adj, e.v)))
    }

    /// G − v. Vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(v)?;
        Ok(Self::checked(delete_vertex(&self.adj, v)))
    }

    /// G / v: delete `v` and make N(v) a clique. For an isolated `v` this is
    /// exactly [`Graph::remove_vertex`].
    pub fn contract_vertex(&self, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(v)?;
        let nbrs = &self.adj[v];
        let mut adj = self.adj.clone();
        for a in nbrs.iter() {
            adj[a] = adj[a].union(nbrs);
            adj[a].remove(a);
        }
        Ok(Self::checked(delete_vertex(&adj, v)))
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = VertexSet::new(n);
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new(n);
            seen.insert(start);
            stack.push(start);
            while let Some(x) = stack.pop() {
                comp.insert(x);
                for y in self.adj[x].iter() {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `vertices`, relabeled `0..k` in ascending order.
    pub fn induced(&self, vertices: &VertexSet) -> Self {
        let ids = vertices.to_vec();
        let k = ids.len();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in ids.iter().enumerate() {
            index[v] = i;
        }
        let adj = ids
            .iter()
            .map(|&v| {
                VertexSet::from_vertices(
                    k,
                    self.adj[v].iter().filter(|&w| vertices.contains(w)).map(|w| index[w]),
                )
            })
            .collect();
        Self::checked(adj)
    }

    /// Disjoint union; `other`'s vertices are offset by `self.order()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let offset = self.order();
        let n = offset + other.order();
        let adj = self
            .adj
            .iter()
            .map(|s| VertexSet::from_vertices(n, s.iter()))
            .chain(
                other
                    .adj
                    .iter()
                    .map(|s| VertexSet::from_vertices(n, s.iter().map(|w| w + offset))),
            )
            .collect();
        Self::checked(adj)
    }

    /// Adjacency rows as 64-bit masks. Requires `order() <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.order() <= 64, "mask view needs order <= 64");
        self.adj.iter().map(VertexSet::as_mask).collect()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    fn require_edge(&self, e: Edge) -> Result<(), GraphError> {
        self.check_vertex(e.v)?;
        if self.has_edge(e) {
            Ok(())
        } else {
            Err(GraphError::MissingEdge(e))
        }
    }

    fn checked(adj: Vec<VertexSet>) -> Self {
        let g = Self { adj };
        g.debug_check();
        g
    }

    fn debug_check(&self) {
        if cfg!(debug_assertions) {
            if let Err(msg) = self.validate() {
                panic!("graph invariant violated: {msg}");
            }
        }
    }

    /// Checks the simple-graph invariants: no loops, symmetric adjacency.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.order();
        for (v, nbrs) in self.adj.iter().enumerate() {
            if nbrs.universe() != n {
                return Err(format!("row {v} has universe {}", nbrs.universe()));
            }
            if nbrs.contains(v) {
                return Err(format!("loop at {v}"));
            }
            if let Some(w) = nbrs.iter().find(|&w| !self.adj[w].contains(v)) {
                return Err(format!("asymmetric edge {v}->{w}"));
            }
        }
        Ok(())
    }
}

fn delete_vertex(adj: &[VertexSet], v: usize) -> Vec<VertexSet> {
    let n = adj.len() - 1;
    let shift = |w: usize| if w < v { w } else { w - 1 };
    adj.iter()
        .enumerate()
        .filter(|&(x, _)| x != v)
        .map(|(_, row)| VertexSet::from_vertices(n, row.iter().filter(|&w| w != v).map(shift)))
        .collect()
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}
