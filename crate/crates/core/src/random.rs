//! Seeded graph generators and exhaustive labeled-graph enumeration.
//!
//! All generators draw from `ChaCha8Rng`, so identical arguments produce
//! identical graphs on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

const CONNECT_RETRIES: usize = 100;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Mixes a base seed with an instance index (SplitMix64 finaliser), so each
/// instance of a sweep has its own stream regardless of execution order.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "edge probability {p} outside [0, 1]"
        )))
    }
}

fn sample_pairs<R: Rng + ?Sized>(
    vertex_count: usize,
    pairs: impl Iterator<Item = (Vertex, Vertex)>,
    p: f64,
    rng: &mut R,
) -> Graph {
    let edges: Vec<_> = pairs.filter(|_| rng.random_bool(p)).collect();
    Graph::new(vertex_count, edges).expect("generated pairs are valid")
}

fn all_pairs(n: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    Ok(sample_pairs(n, all_pairs(n), p, &mut rng_from_seed(seed)))
}

/// `G(n, p)` conditioned on connectivity: resamples up to a retry budget,
/// then joins the remaining components along a uniform random spanning tree
/// of `K_n`.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    if n == 0 {
        return Err(Error::ConnectivityUnreachable("no vertices".into()));
    }
    let mut rng = rng_from_seed(seed);
    let mut last = Graph::empty(n);
    for _ in 0..CONNECT_RETRIES {
        last = sample_pairs(n, all_pairs(n), p, &mut rng);
        if last.is_connected() {
            return Ok(last);
        }
    }
    if p == 0.0 {
        return Err(Error::ConnectivityUnreachable(format!(
            "p = 0 never connects {n} vertices"
        )));
    }
    let tree = uniform_spanning_tree(n, &mut rng);
    Ok(join_components(&last, tree))
}

/// Bipartite graph with classes `0..a` and `a..a+b`; only cross pairs are
/// drawn.
pub fn random_bipartite_graph(a: usize, b: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let pairs = (0..a).flat_map(move |u| (a..a + b).map(move |v| (u, v)));
    Ok(sample_pairs(a + b, pairs, p, &mut rng_from_seed(seed)))
}

/// Connected bipartite graph on classes of sizes `a, b >= 1`: resamples,
/// then joins components with cross edges taken in random order.
pub fn random_connected_bipartite_graph(a: usize, b: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    if a == 0 || b == 0 {
        if a + b == 1 {
            return Ok(Graph::empty(1));
        }
        return Err(Error::ConnectivityUnreachable(format!(
            "bipartite classes {a} and {b} cannot form a connected graph"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let cross = || (0..a).flat_map(move |u| (a..a + b).map(move |v| (u, v)));
    let mut last = Graph::empty(a + b);
    for _ in 0..CONNECT_RETRIES {
        last = sample_pairs(a + b, cross(), p, &mut rng);
        if last.is_connected() {
            return Ok(last);
        }
    }
    if p == 0.0 {
        return Err(Error::ConnectivityUnreachable("p = 0 adds no edges".into()));
    }
    let mut extra: Vec<_> = cross().collect();
    extra.shuffle(&mut rng);
    Ok(join_components(&last, extra))
}

/// Uniform labeled tree on `n` vertices via a random Prüfer sequence.
fn uniform_spanning_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<(Vertex, Vertex)> {
    if n < 2 {
        return Vec::new();
    }
    let code: Vec<Vertex> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    code.iter().for_each(|&v| degree[v] += 1);
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &code {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<Vertex> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Adds the candidate edges that merge two different components of `graph`.
fn join_components(graph: &Graph, candidates: Vec<(Vertex, Vertex)>) -> Graph {
    let n = graph.vertex_count();
    let mut label = vec![0; n];
    for (c, members) in graph.connected_components().iter().enumerate() {
        members.iter().for_each(|&v| label[v] = c);
    }
    let mut edges: Vec<_> = graph.edges().collect();
    for (u, v) in candidates {
        let (lu, lv) = (label[u], label[v]);
        if lu != lv {
            label.iter_mut().filter(|l| **l == lv).for_each(|l| *l = lu);
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).expect("joined edges are valid")
}

/// Number of labeled simple graphs on `m` vertices, `2^C(m, 2)`.
pub fn labeled_graph_count(m: usize) -> u64 {
    1u64 << (m * m.saturating_sub(1) / 2)
}

/// The labeled graph on `m` vertices encoded by `mask`: bit `k` selects the
/// `k`-th pair in lexicographic order.
pub fn labeled_graph(m: usize, mask: u64) -> Graph {
    let edges = all_pairs(m)
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e);
    Graph::new(m, edges).expect("pairs are valid")
}

/// Every labeled graph on `m` vertices, `m <= 11`.
pub fn labeled_graphs(m: usize) -> impl Iterator<Item = Graph> {
    assert!(m <= 11, "labeled enumeration beyond 11 vertices overflows");
    (0..labeled_graph_count(m)).map(move |mask| labeled_graph(m, mask))
}
