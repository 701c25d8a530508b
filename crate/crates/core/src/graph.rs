//! Immutable simple undirected graphs on the vertex set `0..vertex_count`.
//!
//! A [`Graph`] never contains loops or parallel edges. Neighbour lists are
//! kept sorted, so adjacency queries are a binary search and every
//! traversal is deterministic.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex identifier. Vertices of a graph on `n` vertices are `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list, collapsing duplicate pairs.
    ///
    /// Loops and endpoints outside `0..vertex_count` are rejected.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: edge_count / 2,
        })
    }

    /// Graph on `vertex_count` vertices and no edges.
    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); vertex_count],
            edge_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    /// Sorted neighbours of `v`.
    ///
    /// Panics if `v` is out of range.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        n == 0 || self.edge_count == n * (n - 1) / 2
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    /// Membership mask for a vertex subset, validating every element.
    pub(crate) fn vertex_mask(&self, vertices: &[Vertex]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.vertex_count()];
        for &v in vertices {
            self.check_vertex(v)?;
            mask[v] = true;
        }
        Ok(mask)
    }

    /// Minimum degree δ(G). Rejects the graph on zero vertices.
    pub fn min_degree(&self) -> Result<usize> {
        self.adjacency
            .iter()
            .map(Vec::len)
            .min()
            .ok_or(Error::TooFewVertices {
                required: 1,
                actual: 0,
            })
    }

    /// Smallest-index vertex attaining the minimum degree.
    pub fn min_degree_vertex(&self) -> Result<Vertex> {
        let delta = self.min_degree()?;
        Ok(self
            .vertices()
            .find(|&v| self.degree(v) == delta)
            .expect("some vertex attains the minimum"))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        self.components_avoiding(&vec![false; self.vertex_count()])
    }

    /// Components of `G - removed`, where `removed` is a membership mask.
    pub(crate) fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<Vertex>> {
        let n = self.vertex_count();
        let mut seen = removed.to_vec();
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut component = Vec::new();
            while let Some(u) = queue.pop_front() {
                component.push(u);
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// True when the graph has exactly one component. The graph on zero
    /// vertices is not connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Two-colours every component, or returns an odd cycle found at the
    /// first colouring conflict.
    pub fn odd_cycle_status(&self) -> OddCycleStatus {
        let n = self.vertex_count();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &w in self.neighbors(u) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => {
                            return OddCycleStatus::OddCycle(tree_cycle(u, w, &parent, &depth));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let (left, right) = (0..n).partition(|&v| colour[v] == Some(false));
        OddCycleStatus::Bipartition { left, right }
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.odd_cycle_status(), OddCycleStatus::Bipartition { .. })
    }

    /// `G - u` with the remaining vertices relabelled to `0..m-1` in their
    /// original order. The second value maps new labels to old ones.
    pub fn delete_vertex(&self, u: Vertex) -> Result<(Graph, Vec<Vertex>)> {
        if self.vertex_count() < 2 {
            return Err(Error::TooFewVertices {
                required: 2,
                actual: self.vertex_count(),
            });
        }
        self.check_vertex(u)?;
        let keep: Vec<Vertex> = self.vertices().filter(|&v| v != u).collect();
        let graph = self.induced_subgraph(&keep)?;
        Ok((graph, keep))
    }

    /// Subgraph induced on `vertices`, relabelled by rank in sorted order.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<Graph> {
        let mut keep = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut new_label = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            new_label[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(a, b)| new_label[a] != usize::MAX && new_label[b] != usize::MAX)
            .map(|(a, b)| (new_label[a], new_label[b]));
        Graph::new(keep.len(), edges)
    }
}

/// Walks both endpoints of a conflict edge up the BFS tree to their common
/// ancestor. Equal colours mean equal depth parity, so the cycle is odd.
fn tree_cycle(u: Vertex, w: Vertex, parent: &[usize], depth: &[usize]) -> Vec<Vertex> {
    let (mut a, mut b) = (u, w);
    let mut from_u = vec![a];
    let mut from_w = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        from_u.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        from_w.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        from_u.push(a);
        from_w.push(b);
    }
    // the common ancestor sits at the end of both paths
    from_w.pop();
    from_u.extend(from_w.into_iter().rev());
    from_u
}

/// Certificate of bipartiteness or of an odd cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OddCycleStatus {
    Bipartition {
        left: Vec<Vertex>,
        right: Vec<Vertex>,
    },
    OddCycle(Vec<Vertex>),
}

impl OddCycleStatus {
    /// Checks the certificate against `graph`.
    pub fn is_valid_for(&self, graph: &Graph) -> bool {
        match self {
            OddCycleStatus::Bipartition { left, right } => {
                let mut side = vec![None; graph.vertex_count()];
                for (&v, s) in left
                    .iter()
                    .map(|v| (v, false))
                    .chain(right.iter().map(|v| (v, true)))
                {
                    if v >= side.len() || side[v].is_some() {
                        return false;
                    }
                    side[v] = Some(s);
                }
                side.iter().all(Option::is_some) && graph.edges().all(|(a, b)| side[a] != side[b])
            }
            OddCycleStatus::OddCycle(cycle) => {
                let len = cycle.len();
                if len < 3 || len % 2 == 0 {
                    return false;
                }
                let mut sorted = cycle.clone();
                sorted.sort_unstable();
                sorted.dedup();
                sorted.len() == len
                    && (0..len).all(|i| graph.has_edge(cycle[i], cycle[(i + 1) % len]))
            }
        }
    }
}

/// Small named graphs used throughout tests, examples and benchmarks.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph edges are valid")
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    /// K_{a,b} with classes `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::new(a + b, edges).expect("bipartite edges are valid")
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).expect("petersen edges are valid")
    }

    /// Disjoint union of two graphs; vertices of `b` are shifted by `|a|`.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let shift = a.vertex_count();
        let edges = a
            .edges()
            .chain(b.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::new(shift + b.vertex_count(), edges).expect("union edges are valid")
    }
}
