//! Direct (Kronecker) products and their layers.
//!
//! The product vertex `(i, j)` with `i` in the left factor and `j` in the
//! right factor has index `i * right_count + j`. This row-major labeling is
//! part of the public contract: the layer `{i} x V(H)` is the contiguous
//! range `i * right_count .. (i + 1) * right_count`.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::{named, Graph, Vertex};
use crate::report::{checks, ReportInputs, VerificationReport};

/// Complete graph `K_n`, `n >= 1`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::TooFewVertices {
            required: 1,
            actual: 0,
        });
    }
    Ok(named::complete(n))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    graph: Graph,
    left_count: usize,
    right_count: usize,
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn left_count(&self) -> usize {
        self.left_count
    }

    pub fn right_count(&self) -> usize {
        self.right_count
    }

    pub fn index(&self, left: Vertex, right: Vertex) -> Vertex {
        debug_assert!(left < self.left_count && right < self.right_count);
        left * self.right_count + right
    }

    pub fn pair(&self, index: Vertex) -> (Vertex, Vertex) {
        (index / self.right_count, index % self.right_count)
    }

    /// The layer `S_i = {u_i} x V(H)`.
    pub fn layer(&self, i: usize) -> Result<Layer> {
        if i >= self.left_count {
            return Err(Error::LayerOutOfRange {
                index: i,
                left_count: self.left_count,
            });
        }
        Ok(Layer {
            left_index: i,
            vertices: i * self.right_count..(i + 1) * self.right_count,
        })
    }

    pub fn layers(&self) -> impl Iterator<Item = Layer> + '_ {
        (0..self.left_count).map(|i| self.layer(i).expect("in range"))
    }
}

/// Product vertices sharing the left coordinate `left_index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    pub left_index: usize,
    pub vertices: Range<Vertex>,
}

impl Layer {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }
}

/// `G x H`: `(a, b) ~ (c, d)` iff `a ~ c` in `G` and `b ~ d` in `H`.
pub fn direct_product(left: &Graph, right: &Graph) -> Result<ProductGraph> {
    for factor in [left, right] {
        if factor.vertex_count() == 0 {
            return Err(Error::TooFewVertices {
                required: 1,
                actual: 0,
            });
        }
    }
    let r = right.vertex_count();
    let mut edges = Vec::with_capacity(2 * left.edge_count() * right.edge_count());
    for (a, c) in left.edges() {
        for (b, d) in right.edges() {
            edges.push((a * r + b, c * r + d));
            edges.push((a * r + d, c * r + b));
        }
    }
    Ok(ProductGraph {
        graph: Graph::new(left.vertex_count() * r, edges)?,
        left_count: left.vertex_count(),
        right_count: r,
    })
}

/// `G x K_n`.
pub fn product_with_complete(left: &Graph, n: usize) -> Result<ProductGraph> {
    direct_product(left, &complete_graph(n)?)
}

/// Compares connectivity of `G x H` with the factor condition: both factors
/// connected and at least one containing an odd cycle.
pub fn check_weichsel(left: &Graph, right: &Graph) -> Result<VerificationReport> {
    for factor in [left, right] {
        if factor.vertex_count() < 2 {
            return Err(Error::Precondition(format!(
                "both factors must be nontrivial, got a factor on {} vertices",
                factor.vertex_count()
            )));
        }
    }
    let product = direct_product(left, right)?;
    let product_connected = product.graph().is_connected();
    let left_connected = left.is_connected();
    let right_connected = right.is_connected();
    let left_odd = !left.is_bipartite();
    let right_odd = !right.is_bipartite();
    let factor_condition = left_connected && right_connected && (left_odd || right_odd);
    Ok(VerificationReport::new(
        checks::WEICHSEL,
        ReportInputs::graph(left).with_right(right),
    )
    .flag("product_connected", product_connected)
    .flag("left_connected", left_connected)
    .flag("right_connected", right_connected)
    .flag("left_has_odd_cycle", left_odd)
    .flag("right_has_odd_cycle", right_odd)
    .flag("factor_condition", factor_condition)
    .verdict(product_connected == factor_condition))
}

/// Compares `δ(G x H)` with `δ(G) * δ(H)`.
pub fn check_degree_product(left: &Graph, right: &Graph) -> Result<VerificationReport> {
    let product = direct_product(left, right)?;
    let product_delta = product.graph().min_degree()?;
    let left_delta = left.min_degree()?;
    let right_delta = right.min_degree()?;
    Ok(VerificationReport::new(
        checks::DEGREE_PRODUCT,
        ReportInputs::graph(left).with_right(right),
    )
    .int("product_min_degree", product_delta)
    .int("left_min_degree", left_delta)
    .int("right_min_degree", right_delta)
    .int("factor_product", left_delta * right_delta)
    .verdict(product_delta == left_delta * right_delta))
}
