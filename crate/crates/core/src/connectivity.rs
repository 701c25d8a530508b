//! Exact vertex connectivity.
//!
//! `kappa` reduces to local `s`-`t` connectivities computed as unit-capacity
//! max flows on the vertex-split network (`v_in -> v_out` of capacity one,
//! every edge `u_out -> w_in` uncapacitated). Only a minimum-degree vertex
//! `v` against each non-neighbour, and pairs of non-adjacent neighbours of
//! `v`, need to be tried: a minimum separator either misses `v`, or contains
//! it and then `v` has neighbours in two different residual components.
//!
//! `brute_force_kappa` is the independent oracle: increasing-size subset
//! enumeration against the separator predicate.

use std::collections::VecDeque;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_BRUTE_FORCE_CAP: usize = 12;

/// What is left after removing a separator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Residual {
    Disconnected,
    Trivial,
}

/// A vertex set whose removal disconnects the host graph or leaves a single
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutWitness {
    pub vertices: Vec<Vertex>,
    pub residual: Residual,
}

impl CutWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Certifies `vertices` against `graph`; `None` if it is not a separator.
    pub fn certify(graph: &Graph, mut vertices: Vec<Vertex>) -> Result<Option<CutWitness>> {
        vertices.sort_unstable();
        vertices.dedup();
        Ok(residual_of(graph, &vertices)?.map(|residual| CutWitness { vertices, residual }))
    }
}

fn residual_of(graph: &Graph, separator: &[Vertex]) -> Result<Option<Residual>> {
    let removed = graph.vertex_mask(separator)?;
    let remaining = removed.iter().filter(|&&r| !r).count();
    Ok(match remaining {
        0 => None,
        1 => Some(Residual::Trivial),
        _ if graph.components_avoiding(&removed).len() > 1 => Some(Residual::Disconnected),
        _ => None,
    })
}

/// True iff `G - separator` is disconnected or has exactly one vertex.
pub fn is_separator(graph: &Graph, separator: &[Vertex]) -> Result<bool> {
    Ok(residual_of(graph, separator)?.is_some())
}

fn require_nonempty(graph: &Graph) -> Result<()> {
    if graph.vertex_count() == 0 {
        return Err(Error::TooFewVertices {
            required: 1,
            actual: 0,
        });
    }
    Ok(())
}

/// Vertex connectivity κ(G). κ(K_1) = 0, κ(K_t) = t - 1, and κ = 0 for
/// disconnected graphs.
pub fn kappa(graph: &Graph) -> Result<usize> {
    require_nonempty(graph)?;
    let n = graph.vertex_count();
    if graph.is_complete() {
        return Ok(n - 1);
    }
    if !graph.is_connected() {
        return Ok(0);
    }
    let v = graph.min_degree_vertex()?;
    let mut best = graph.degree(v);
    let mut network = SplitNetwork::new(graph, &[], &[]);
    for t in graph.vertices() {
        if t != v && !graph.has_edge(v, t) {
            best = best.min(network.local_connectivity(v, t, best));
        }
    }
    for (&a, &b) in graph.neighbors(v).iter().tuple_combinations() {
        if best == 0 {
            break;
        }
        if !graph.has_edge(a, b) {
            best = best.min(network.local_connectivity(a, b, best));
        }
    }
    Ok(best)
}

/// A minimum separator. Among all separators of size κ(G) the
/// lexicographically smallest sorted vertex sequence is returned.
pub fn min_vertex_cut(graph: &Graph) -> Result<CutWitness> {
    let k = kappa(graph)?;
    let n = graph.vertex_count();
    if graph.is_complete() {
        return Ok(CutWitness {
            vertices: (0..n - 1).collect(),
            residual: Residual::Trivial,
        });
    }
    // Greedy over positions: the next element is the smallest vertex `v`
    // for which some size-k separator extends the chosen prefix, contains
    // `v`, and avoids every unchosen vertex below `v`.
    let mut chosen: Vec<Vertex> = Vec::with_capacity(k);
    let mut next = 0;
    while chosen.len() < k {
        let v = (next..n)
            .find(|&v| {
                let mut prefix = chosen.clone();
                prefix.push(v);
                let forbidden: Vec<Vertex> = (0..v).filter(|u| !chosen.contains(u)).collect();
                separator_extends(graph, k, &prefix, &forbidden)
            })
            .expect("a minimum separator extends every feasible prefix");
        chosen.push(v);
        next = v + 1;
    }
    let witness = CutWitness::certify(graph, chosen)?.expect("greedy result separates");
    debug_assert_eq!(witness.len(), k);
    Ok(witness)
}

/// Is there a separator `T` of size `k = κ(G)` with `prefix ⊆ T` and
/// `T ∩ forbidden = ∅`? Only meaningful for non-complete graphs, where every
/// size-κ separator leaves a disconnected residual.
fn separator_extends(graph: &Graph, k: usize, prefix: &[Vertex], forbidden: &[Vertex]) -> bool {
    let budget = k - prefix.len();
    let removed = {
        let mut mask = vec![false; graph.vertex_count()];
        prefix.iter().for_each(|&v| mask[v] = true);
        mask
    };
    let alive: Vec<Vertex> = graph.vertices().filter(|&v| !removed[v]).collect();
    // Some vertex outside T lies on each side. Any `budget + 1` alive
    // vertices contain one outside T; a forbidden vertex is outside T
    // by definition.
    let anchors: Vec<Vertex> = match forbidden.first() {
        Some(&f) => vec![f],
        None => alive.iter().copied().take(budget + 1).collect(),
    };
    let mut network = SplitNetwork::new(graph, prefix, forbidden);
    anchors.iter().any(|&s| {
        alive.iter().any(|&t| {
            t != s
                && !graph.has_edge(s, t)
                && network.local_connectivity(s, t, budget + 1) <= budget
        })
    })
}

/// Smallest `k` such that some `k`-subset is a separator, by enumeration.
pub fn brute_force_kappa(graph: &Graph, cap: usize) -> Result<usize> {
    require_nonempty(graph)?;
    let n = graph.vertex_count();
    if n > cap {
        return Err(Error::OracleCapExceeded { actual: n, cap });
    }
    for k in 0..n {
        for subset in (0..n).combinations(k) {
            if is_separator(graph, &subset)? {
                return Ok(k);
            }
        }
    }
    unreachable!("removing all but one vertex always leaves a trivial graph")
}

const INF: u32 = u32::MAX;

struct Arc {
    to: usize,
    cap: u32,
}

/// Vertex-split flow network. Node `2v` is `v_in`, `2v + 1` is `v_out`.
/// Removed vertices carry no arcs; uncuttable vertices get an
/// uncapacitated split arc.
struct SplitNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    base_caps: Vec<u32>,
    split_arc: Vec<Option<usize>>,
    parent_arc: Vec<usize>,
    queue: VecDeque<usize>,
}

impl SplitNetwork {
    fn new(graph: &Graph, removed: &[Vertex], uncuttable: &[Vertex]) -> Self {
        let n = graph.vertex_count();
        let mut dead = vec![false; n];
        removed.iter().for_each(|&v| dead[v] = true);
        let mut hard = vec![false; n];
        uncuttable.iter().for_each(|&v| hard[v] = true);
        let mut network = SplitNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); 2 * n],
            base_caps: Vec::new(),
            split_arc: vec![None; n],
            parent_arc: vec![usize::MAX; 2 * n],
            queue: VecDeque::new(),
        };
        for v in graph.vertices().filter(|&v| !dead[v]) {
            let cap = if hard[v] { INF } else { 1 };
            network.split_arc[v] = Some(network.add_arc(2 * v, 2 * v + 1, cap));
        }
        for (u, w) in graph.edges() {
            if !dead[u] && !dead[w] {
                network.add_arc(2 * u + 1, 2 * w, INF);
                network.add_arc(2 * w + 1, 2 * u, INF);
            }
        }
        network.base_caps = network.arcs.iter().map(|a| a.cap).collect();
        network
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap });
        self.arcs.push(Arc { to: from, cap: 0 });
        self.out[from].push(id);
        self.out[to].push(id + 1);
        id
    }

    /// Number of internally vertex-disjoint `s`-`t` paths, counting at most
    /// `limit`. `s` and `t` must be distinct, non-adjacent and alive.
    fn local_connectivity(&mut self, s: Vertex, t: Vertex, limit: usize) -> usize {
        for (arc, &cap) in self.arcs.iter_mut().zip(&self.base_caps) {
            arc.cap = cap;
        }
        // endpoints themselves are never cut
        for v in [s, t] {
            let id = self.split_arc[v].expect("endpoint is alive");
            self.arcs[id].cap = INF;
        }
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        while flow < limit && self.augment(source, sink) {
            flow += 1;
        }
        flow
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        self.parent_arc.iter_mut().for_each(|p| *p = usize::MAX);
        self.queue.clear();
        self.queue.push_back(source);
        let mut reached = false;
        'search: while let Some(x) = self.queue.pop_front() {
            for &id in &self.out[x] {
                let arc = &self.arcs[id];
                if arc.cap > 0 && arc.to != source && self.parent_arc[arc.to] == usize::MAX {
                    self.parent_arc[arc.to] = id;
                    if arc.to == sink {
                        reached = true;
                        break 'search;
                    }
                    self.queue.push_back(arc.to);
                }
            }
        }
        if !reached {
            return false;
        }
        let mut x = sink;
        while x != source {
            let id = self.parent_arc[x];
            if self.arcs[id].cap != INF {
                self.arcs[id].cap -= 1;
            }
            if self.arcs[id ^ 1].cap != INF {
                self.arcs[id ^ 1].cap += 1;
            }
            x = self.arcs[id ^ 1].to;
        }
        true
    }
}
