//! Instance factories: the recursive `G_k` family with its known fractional
//! optima, apex graphs over triangle-free graphs, named graphs, seeded
//! random multigraphs and all small simple graphs up to isomorphism.

mod gk;
mod named;
mod small;

pub use gk::{
    fractional_packing_fk, fractional_transversal_gka, gen_gk, gk_value, wheel_values, Height, TerminalGraph,
    MAX_K,
};
pub use named::{
    complete, cycle, gen_random, gen_random_connected, gen_random_triangle_free, octahedron, petersen,
    stacked, wheel, NamedGraph,
};
pub use small::{nonisomorphic_graphs, MAX_SMALL};

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Joins a new vertex `n` to every vertex of the triangle-free graph `h`
/// with weight-1 edges.
pub fn gen_apex(h: &Multigraph) -> Result<Multigraph> {
    if let Some(t) = h.first_triangle() {
        return Err(Error::NotTriangleFree(t));
    }
    let n = h.n();
    let old = h.edges().iter().map(|e| (e.key.0, e.key.1, e.w));
    let spokes = (0..n).map(|v| (v, n, 1));
    Multigraph::new(n + 1, old.chain(spokes))
}
