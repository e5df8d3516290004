//! Undirected simple graphs over dense vertex ids `0..n`.
//!
//! Two small traits decouple the algorithms from storage. [`EdgeSet`]
//! enumerates edges and is what colouring checks need; [`Adjacency`] answers
//! point queries and is what homomorphism checks need on the target side.
//! Implicit graphs (random geometric graphs behind a bucket grid, clique
//! grids defined by an index rule) implement them without materialising
//! their edge lists.

use std::ops::ControlFlow;

use crate::error::{Error, Result};

/// Vertex identifier. Always in `0..vertex_count()`.
pub type Vertex = usize;

/// Anything that can enumerate the edges of an undirected simple graph.
pub trait EdgeSet {
    fn vertex_count(&self) -> usize;

    /// Visits every edge exactly once as `(u, v)` with `u < v`, stopping
    /// early when the callback breaks.
    fn try_for_each_edge<B, F>(&self, f: F) -> ControlFlow<B>
    where
        F: FnMut(Vertex, Vertex) -> ControlFlow<B>;

    fn for_each_edge<F>(&self, mut f: F)
    where
        F: FnMut(Vertex, Vertex),
    {
        let _ = self.try_for_each_edge::<(), _>(|u, v| {
            f(u, v);
            ControlFlow::Continue(())
        });
    }

    fn edge_count(&self) -> usize {
        let mut count = 0;
        self.for_each_edge(|_, _| count += 1);
        count
    }
}

/// Point adjacency queries.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;
    fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool;
}

/// Undirected simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    n_edges: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            n_edges: 0,
        }
    }

    /// Builds a graph, rejecting self-loops, duplicate edges (in either
    /// orientation) and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut n_edges = 0;
        for (u, v) in edges {
            check_endpoint(u, n)?;
            check_endpoint(v, n)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            n_edges += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Self { adj, n_edges })
    }

    /// Builds a graph from edges that are known to be simple, deduplicating
    /// repeated pairs. Used by constructors whose output is simple by
    /// construction.
    pub(crate) fn from_adjacency_unchecked(mut adj: Vec<Vec<Vertex>>) -> Self {
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Self {
            adj,
            n_edges: twice / 2,
        }
    }

    /// Complete graph on `k` vertices.
    pub fn complete(k: usize) -> Self {
        let adj = (0..k)
            .map(|u| (0..k).filter(|&v| v != u).collect())
            .collect();
        Self::from_adjacency_unchecked(adj)
    }

    /// Path on `k` vertices, `0 - 1 - ... - k-1`.
    pub fn path(k: usize) -> Self {
        let edges = (1..k).map(|v| (v - 1, v));
        Self::from_edges(k, edges).expect("path edges are simple")
    }

    pub fn n_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn n_edges(&self) -> usize {
        self.n_edges
    }

    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&v| v <= u);
            list[start..].iter().map(move |&v| (u, v))
        })
    }

    /// Copies any edge source into an explicit graph.
    pub fn from_edge_set<E: EdgeSet>(source: &E) -> Self {
        let mut adj = vec![Vec::new(); source.vertex_count()];
        source.for_each_edge(|u, v| {
            adj[u].push(v);
            adj[v].push(u);
        });
        Self::from_adjacency_unchecked(adj)
    }
}

fn check_endpoint(v: Vertex, n: usize) -> Result<()> {
    if v >= n {
        Err(Error::VertexOutOfRange {
            vertex: v,
            n_vertices: n,
        })
    } else {
        Ok(())
    }
}

impl EdgeSet for Graph {
    fn vertex_count(&self) -> usize {
        self.n_vertices()
    }

    fn try_for_each_edge<B, F>(&self, mut f: F) -> ControlFlow<B>
    where
        F: FnMut(Vertex, Vertex) -> ControlFlow<B>,
    {
        for (u, v) in self.edges() {
            f(u, v)?;
        }
        ControlFlow::Continue(())
    }

    fn edge_count(&self) -> usize {
        self.n_edges
    }
}

impl Adjacency for Graph {
    fn vertex_count(&self) -> usize {
        self.n_vertices()
    }

    fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }
}
