//! The recursive wheel family `G_k`.
//!
//! `G_0` is a single edge. `G_k` is the 5-wheel with every one of its ten
//! edges replaced by a copy of `G_{k-1}` whose terminal edge is that wheel
//! edge. The fractional optimum of `G_k` is `(5/2^k)(20^k - 1)/19`, and
//! `2^k` times it is odd, so no fixed denominator captures every graph.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::certificate::{FractionalPacking, FractionalTransversal};
use crate::error::{Error, Result};
use crate::graph::{EdgeKey, Multigraph, Triangle};
use crate::rational::{self, Rational};

/// Largest `k` accepted by [`gen_gk`]; `G_4` already has 10^4 edges.
pub const MAX_K: u32 = 4;

/// A graph with two distinguished terminal vertices joined by an edge.
#[derive(Clone, Debug)]
pub struct TerminalGraph {
    pub graph: Multigraph,
    pub terminals: (usize, usize),
}

impl TerminalGraph {
    pub fn terminal_edge(&self) -> EdgeKey {
        EdgeKey::new(self.terminals.0, self.terminals.1)
    }
}

/// Height of every triangle: the smallest level of the recursion whose copy
/// contains it.
pub type Height = BTreeMap<Triangle, u32>;

/// Recursion tree of `G_k`: leaves are edges, inner nodes are wheels.
#[derive(Clone, Debug)]
enum Block {
    Edge(usize, usize),
    Wheel {
        level: u32,
        /// hub `u`, then rim `v1..v5`
        verts: [usize; 6],
        /// copies on the ten wheel edges, in [`wheel_edges`] order
        children: Vec<Block>,
    },
}

/// Wheel edges as index pairs into `verts`: rims `r1..r5` with
/// `r_i = v_i v_{i+1}`, then spokes `s1..s5` with `s_i = u v_i`.
fn wheel_edges() -> [(usize, usize); 10] {
    [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]
}

/// Builds `G_level` with terminals `x`, `y`. Fresh vertices come from
/// `next`: hub first, then `v3, v4, v5`, then the copies in edge order.
fn build(level: u32, x: usize, y: usize, next: &mut usize) -> Block {
    if level == 0 {
        return Block::Edge(x, y);
    }
    let mut fresh = || {
        let v = *next;
        *next += 1;
        v
    };
    let u = fresh();
    let (v3, v4, v5) = (fresh(), fresh(), fresh());
    let verts = [u, x, y, v3, v4, v5];
    let children = wheel_edges().iter().map(|&(a, b)| build(level - 1, verts[a], verts[b], next)).collect();
    Block::Wheel { level, verts, children }
}

fn top(k: u32) -> (Block, usize) {
    if k == 0 {
        return (Block::Edge(0, 1), 2);
    }
    // top level: u = 0, v1..v5 = 1..5
    let verts = [0, 1, 2, 3, 4, 5];
    let mut next = 6;
    let children = wheel_edges().iter().map(|&(a, b)| build(k - 1, verts[a], verts[b], &mut next)).collect();
    (Block::Wheel { level: k, verts, children }, next)
}

fn collect_edges(b: &Block, out: &mut Vec<(usize, usize)>) {
    match b {
        Block::Edge(x, y) => out.push((*x, *y)),
        Block::Wheel { children, .. } => children.iter().for_each(|c| collect_edges(c, out)),
    }
}

fn collect_heights(b: &Block, out: &mut Height) {
    if let Block::Wheel { level, verts, children } = b {
        for i in 1..=5 {
            let j = i % 5 + 1;
            out.insert(Triangle::new(verts[0], verts[i], verts[j]), *level);
        }
        children.iter().for_each(|c| collect_heights(c, out));
    }
}

fn check_k(k: u32) -> Result<()> {
    if k > MAX_K {
        return Err(Error::TooLarge(format!("G_{k} has 10^{k} edges; limit is k <= {MAX_K}")));
    }
    Ok(())
}

/// `G_k` with terminals `v1, v2` and the height of every triangle.
pub fn gen_gk(k: u32) -> Result<(TerminalGraph, Height)> {
    check_k(k)?;
    let (root, n) = top(k);
    let mut edges = Vec::new();
    collect_edges(&root, &mut edges);
    let graph = Multigraph::simple(n, edges)?;
    let mut heights = Height::new();
    collect_heights(&root, &mut heights);
    let terminals = if k == 0 { (0, 1) } else { (1, 2) };
    Ok((TerminalGraph { graph, terminals }, heights))
}

/// `f_k(t) = 2^-height(t)`, a fractional packing of `G_k`.
pub fn fractional_packing_fk(k: u32) -> Result<FractionalPacking> {
    let (_, heights) = gen_gk(k)?;
    let values = heights
        .into_iter()
        .map(|(t, h)| (t, Rational::new(1.into(), num_bigint::BigInt::from(1u64 << h))))
        .collect();
    Ok(FractionalPacking { values })
}

/// `g_{k,a}`: a fractional transversal of `G_k` giving the terminal edge
/// the value `a`. On each wheel the values are
/// `r1 = a`, `r2..r5 = 0`, `s1 = s2 = s4 = (1-a)/2`, `s3 = s5 = (1+a)/2`,
/// and each wheel edge's value is passed on to the copy below it.
pub fn fractional_transversal_gka(k: u32, a: &Rational) -> Result<FractionalTransversal> {
    check_k(k)?;
    if *a < Rational::zero() || *a > rational::int(1) {
        return Err(Error::BadParam(format!("a = {} must lie in [0, 1]", rational::to_pq(a))));
    }
    let (root, _) = top(k);
    let mut values = BTreeMap::new();
    assign(&root, a, &mut values);
    values.retain(|_, v: &mut Rational| !v.is_zero());
    Ok(FractionalTransversal { values })
}

/// Values of the ten wheel edges, in [`wheel_edges`] order.
pub fn wheel_values(a: &Rational) -> [Rational; 10] {
    let zero = Rational::zero();
    let lo = (rational::int(1) - a) / rational::int(2);
    let hi = (rational::int(1) + a) / rational::int(2);
    [a.clone(), zero.clone(), zero.clone(), zero.clone(), zero, lo.clone(), lo.clone(), hi.clone(), lo, hi]
}

fn assign(b: &Block, a: &Rational, out: &mut BTreeMap<EdgeKey, Rational>) {
    match b {
        Block::Edge(x, y) => {
            out.insert(EdgeKey::new(*x, *y), a.clone());
        }
        Block::Wheel { children, .. } => {
            for (child, v) in children.iter().zip(wheel_values(a)) {
                assign(child, &v, out);
            }
        }
    }
}

/// Closed form `(5/2^k)(20^k - 1)/19`.
pub fn gk_value(k: u32) -> Rational {
    let twenty = num_bigint::BigInt::from(20).pow(k);
    let two = num_bigint::BigInt::from(2).pow(k);
    Rational::new(5 * (twenty - 1), two * 19)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let (g0, h0) = gen_gk(0).unwrap();
        assert_eq!((g0.graph.n(), g0.graph.edge_count()), (2, 1));
        assert!(h0.is_empty());

        let (g1, h1) = gen_gk(1).unwrap();
        assert_eq!((g1.graph.n(), g1.graph.edge_count()), (6, 10));
        assert_eq!(g1.graph.triangles().len(), 5);
        assert!(h1.values().all(|&h| h == 1));

        let (g2, h2) = gen_gk(2).unwrap();
        assert_eq!((g2.graph.n(), g2.graph.edge_count()), (46, 100));
        let tris = g2.graph.triangles();
        assert_eq!(tris.len(), 55);
        assert_eq!(h2.len(), 55);
        assert!(tris.iter().all(|t| h2.contains_key(t)));
        assert_eq!(h2.values().filter(|&&h| h == 1).count(), 50);
        assert_eq!(h2.values().filter(|&&h| h == 2).count(), 5);
        assert!(g2.graph.has_edge(1, 2));
    }

    #[test]
    fn height_counts_k3() {
        let (g3, h3) = gen_gk(3).unwrap();
        assert_eq!(g3.graph.edge_count(), 1000);
        assert_eq!(g3.graph.triangles().len(), 5 * (1000 - 1) / 9);
        for j in 1..=3u32 {
            let want = 5 * 10usize.pow(3 - j);
            assert_eq!(h3.values().filter(|&&h| h == j).count(), want);
        }
    }

    #[test]
    fn too_large() {
        assert!(matches!(gen_gk(MAX_K + 1), Err(Error::TooLarge(_))));
    }

    #[test]
    fn closed_form() {
        assert_eq!(gk_value(0), rational::int(0));
        assert_eq!(gk_value(1), rational::ratio(5, 2));
        assert_eq!(gk_value(2), rational::ratio(105, 4));
    }

    #[test]
    fn wheel_assignment_matches_recursion() {
        // each wheel triangle (u, v_i, v_{i+1}) uses r_i, s_i, s_{i+1}
        for (p, q) in [(0, 1), (1, 3), (1, 2), (2, 5), (1, 1)] {
            let a = rational::ratio(p, q);
            let vals = wheel_values(&a);
            for i in 0..5 {
                let sum = &vals[i] + &vals[5 + i] + &vals[5 + (i + 1) % 5];
                assert_eq!(sum, rational::int(1), "a = {a}, triangle {i}");
            }
            let lo = (rational::int(1) - &a) / rational::int(2);
            let hi = (rational::int(1) + &a) / rational::int(2);
            let mut got: Vec<Rational> = vals.to_vec();
            let mut want =
                vec![a.clone(), Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
            want.extend([lo.clone(), lo.clone(), lo, hi.clone(), hi]);
            got.sort();
            want.sort();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn fk_k1_loads() {
        let (g1, _) = gen_gk(1).unwrap();
        let f = fractional_packing_fk(1).unwrap();
        assert!(f.values.values().all(|v| *v == rational::ratio(1, 2)));
        assert_eq!(f.value(), rational::ratio(5, 2));
        for e in g1.graph.edges() {
            let want = if e.key.0 == 0 { rational::int(1) } else { rational::ratio(1, 2) };
            assert_eq!(f.load(e.key), want, "edge {}", e.key);
        }
    }

    #[test]
    fn gka_values() {
        let g00 = fractional_transversal_gka(0, &rational::ratio(1, 3)).unwrap();
        assert_eq!(g00.values.len(), 1);
        assert_eq!(g00.get(EdgeKey(0, 1)), rational::ratio(1, 3));
        let (g1, _) = gen_gk(1).unwrap();
        let g10 = fractional_transversal_gka(1, &rational::int(0)).unwrap();
        assert_eq!(g10.value(&g1.graph).unwrap(), rational::ratio(5, 2));
        let g11 = fractional_transversal_gka(1, &rational::int(1)).unwrap();
        assert_eq!(g11.value(&g1.graph).unwrap(), rational::int(3));
        assert!(fractional_transversal_gka(1, &rational::int(2)).is_err());
    }
}
