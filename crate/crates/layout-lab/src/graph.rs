//! Undirected simple graphs, BFS sequencing, adjacency feature encoding, and
//! hop-distance matrices. Everything downstream (generators, layout engines,
//! metrics, the model) is built on these types.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("graph must have at least one node")]
    EmptyGraph,
    #[error("edge ({0}, {1}) out of range for {2} nodes")]
    EdgeOutOfRange(usize, usize, usize),
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("start node {0} out of range for {1} nodes")]
    InvalidStart(usize, usize),
    #[error(
        "graph is disconnected: {unreachable} of {total} nodes unreachable from node {start} (e.g. node {example})"
    )]
    Disconnected {
        start: usize,
        unreachable: usize,
        total: usize,
        example: usize,
    },
    #[error("order is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("feature width k must be at least 1")]
    ZeroFeatureWidth,
    #[error("layout has {got} coordinates but the graph has {want} nodes")]
    LayoutSizeMismatch { got: usize, want: usize },
    #[error("non-finite coordinate at node {0}")]
    NonFiniteCoord(usize),
}

/// Immutable undirected simple graph over nodes `0..n`.
///
/// Edges are normalized to `(min, max)` and kept sorted, so two graphs with
/// the same edge set compare equal regardless of input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges, and endpoints
    /// outside `0..n`.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| if u <= v { (u, v) } else { (v, u) })
            .collect();
        edges.sort_unstable();
        for i in 0..edges.len() {
            let (u, v) = edges[i];
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if v >= n {
                return Err(GraphError::EdgeOutOfRange(u, v, n));
            }
            if i > 0 && edges[i - 1] == (u, v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for neighbors in &mut adjacency {
            neighbors.sort_unstable();
        }
        Ok(Self { n, edges, adjacency })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v` in ascending index order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        bfs_order(self, 0).is_ok()
    }

    /// True when the graph is connected and has exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_connected()
    }
}

/// Per-node 2D coordinates. All coordinates are finite; the length is checked
/// against the paired graph at every use site.
#[derive(Debug, Clone, PartialEq)]
pub struct Layout {
    coords: Vec<[f64; 2]>,
}

impl Layout {
    pub fn new(coords: Vec<[f64; 2]>) -> Result<Self, GraphError> {
        if coords.is_empty() {
            return Err(GraphError::EmptyGraph);
        }
        for (i, c) in coords.iter().enumerate() {
            if !c[0].is_finite() || !c[1].is_finite() {
                return Err(GraphError::NonFiniteCoord(i));
            }
        }
        Ok(Self { coords })
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[[f64; 2]] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> [f64; 2] {
        self.coords[i]
    }

    pub fn matches(&self, g: &Graph) -> Result<(), GraphError> {
        if self.len() != g.n() {
            return Err(GraphError::LayoutSizeMismatch {
                got: self.len(),
                want: g.n(),
            });
        }
        Ok(())
    }
}

/// A graph linearized by BFS: the visit order plus, per position, a binary
/// adjacency vector of width `k` marking edges back to the `k` previously
/// visited nodes (slot `j` refers to the node `j + 1` positions earlier).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedSequence {
    pub order: Vec<usize>,
    pub features: Vec<Vec<u8>>,
    pub k: usize,
}

impl EncodedSequence {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Symmetric matrix of graph-theoretic (hop) distances. Construction succeeds
/// only for connected graphs, so every entry is finite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dist(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn max_dist(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// BFS visit order from `start`, visiting neighbors in ascending node index.
///
/// Fails on disconnected graphs, naming an unreachable node.
pub fn bfs_order(g: &Graph, start: usize) -> Result<Vec<usize>, GraphError> {
    if start >= g.n() {
        return Err(GraphError::InvalidStart(start, g.n()));
    }
    let mut visited = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut queue = VecDeque::new();
    visited[start] = true;
    queue.push_back(start);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                visited[w] = true;
                queue.push_back(w);
            }
        }
    }
    if order.len() != g.n() {
        let example = visited.iter().position(|&b| !b).unwrap();
        return Err(GraphError::Disconnected {
            start,
            unreachable: g.n() - order.len(),
            total: g.n(),
            example,
        });
    }
    Ok(order)
}

/// Encodes a visit order into fixed-width adjacency feature vectors.
/// Adjacency to nodes more than `k` positions back is dropped.
pub fn encode_features(g: &Graph, order: &[usize], k: usize) -> Result<EncodedSequence, GraphError> {
    if k == 0 {
        return Err(GraphError::ZeroFeatureWidth);
    }
    let n = g.n();
    if order.len() != n {
        return Err(GraphError::NotAPermutation(n));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(GraphError::NotAPermutation(n));
        }
        seen[v] = true;
    }
    let mut features = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![0u8; k];
        for (j, slot) in row.iter_mut().enumerate() {
            if j + 1 > i {
                break;
            }
            if g.are_adjacent(order[i], order[i - 1 - j]) {
                *slot = 1;
            }
        }
        features.push(row);
    }
    Ok(EncodedSequence {
        order: order.to_vec(),
        features,
        k,
    })
}

/// All-pairs hop distances via one BFS per node. Errors on disconnected input.
pub fn shortest_path_matrix(g: &Graph) -> Result<DistanceMatrix, GraphError> {
    let n = g.n();
    let mut d = vec![0u32; n * n];
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    for src in 0..n {
        dist.iter_mut().for_each(|x| *x = u32::MAX);
        dist[src] = 0;
        queue.clear();
        queue.push_back(src);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached != n {
            let example = dist.iter().position(|&x| x == u32::MAX).unwrap();
            return Err(GraphError::Disconnected {
                start: src,
                unreachable: n - reached,
                total: n,
                example,
            });
        }
        d[src * n..(src + 1) * n].copy_from_slice(&dist);
    }
    Ok(DistanceMatrix { n, d })
}
