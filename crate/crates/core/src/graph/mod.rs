//! Simple undirected graphs and the graph operations used to build the
//! families studied here (complement, cartesian and tensor products, line
//! graphs).
//!
//! A [`Graph`] is immutable once built. Vertices are `0..n`, the edge list is
//! normalized (`u < v`, sorted, deduplicated) and adjacency lists are sorted,
//! so two graphs built from the same edge set compare equal.

mod families;
mod io;

pub use families::*;
pub use io::{read_edge_list, write_edge_list, EdgeListError};

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

/// Errors raised while building graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least two vertices, got {0}")]
    TooFewVertices(usize),
    #[error("edge ({0}, {1}) is a loop")]
    Loop(usize, usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("invalid parameters for {family}: {constraint}")]
    Parameter {
        family: &'static str,
        constraint: String,
    },
}

impl GraphError {
    pub(crate) fn param(family: &'static str, constraint: impl Into<String>) -> Self {
        GraphError::Parameter {
            family,
            constraint: constraint.into(),
        }
    }
}

/// A finite simple undirected graph on vertices `0..n`, with `n >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges and both
    /// orientations of the same edge collapse to one.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::TooFewVertices(n));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u, v));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self::from_normalized(n, set.into_iter().collect()))
    }

    fn from_normalized(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edges `(u, v)` with `u < v`, in increasing order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// The set of distinct vertex degrees.
    pub fn degree_set(&self) -> BTreeSet<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Returns the common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        self.adj.iter().all(|l| l.len() == k).then_some(k)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.n && self.is_connected()
    }

    /// Two-colors the graph if it is bipartite.
    pub fn is_bipartite(&self) -> bool {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap_or(false);
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Applies a vertex relabeling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }
}

/// Builds a graph from a vertex count and edge list, rejecting loops and
/// out-of-range endpoints.
pub fn make_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    Graph::new(n, edges.iter().copied())
}

/// The complement: same vertices, edges exactly the non-edges of `g`.
pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let mut edges = Vec::with_capacity(n * (n - 1) / 2 - g.size());
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_normalized(n, edges)
}

/// Cartesian product `g □ h`; vertex `(u, u')` has index `u * |h| + u'`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.order();
    let mut edges = Vec::with_capacity(g.order() * h.size() + nh * g.size());
    for u in 0..g.order() {
        for &(a, b) in h.edges() {
            edges.push((u * nh + a, u * nh + b));
        }
    }
    for &(a, b) in g.edges() {
        for w in 0..nh {
            edges.push((a * nh + w, b * nh + w));
        }
    }
    edges.sort_unstable();
    Graph::from_normalized(g.order() * nh, edges)
}

/// Tensor (categorical) product `g × h`; same index convention as
/// [`cartesian_product`].
pub fn tensor_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.order();
    let mut edges = Vec::with_capacity(2 * g.size() * h.size());
    for &(a, b) in g.edges() {
        for &(c, d) in h.edges() {
            let (x, y) = (a * nh + c, b * nh + d);
            edges.push((x.min(y), x.max(y)));
            let (x, y) = (a * nh + d, b * nh + c);
            edges.push((x.min(y), x.max(y)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_normalized(g.order() * nh, edges)
}

/// Line graph: one vertex per edge of `g` (in `g.edges()` order), adjacent
/// when the edges share an endpoint. Fails when `g` has fewer than two edges.
pub fn line_graph(g: &Graph) -> Result<Graph, GraphError> {
    let m = g.size();
    if m < 2 {
        return Err(GraphError::TooFewVertices(m));
    }
    let mut incident = vec![Vec::new(); g.order()];
    for (idx, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(idx);
        incident[v].push(idx);
    }
    let mut edges = BTreeSet::new();
    for list in &incident {
        for (i, &a) in list.iter().enumerate() {
            for &b in &list[i + 1..] {
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    Ok(Graph::from_normalized(m, edges.into_iter().collect()))
}
