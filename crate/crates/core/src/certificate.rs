//! Integral and fractional solutions, and their exact feasibility checks.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{EdgeKey, Multigraph, Triangle};
use crate::rational::{self, Rational};

/// Triangle multiplicities `x`; every edge `e` may carry at most `w(e)`
/// of them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PackingCertificate {
    pub multiplicities: BTreeMap<Triangle, u64>,
}

impl PackingCertificate {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, t: Triangle, count: u64) {
        if count > 0 {
            *self.multiplicities.entry(t).or_insert(0) += count;
        }
    }

    pub fn value(&self) -> u64 {
        self.multiplicities.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// Number of packed triangles through `e`.
    pub fn load(&self, e: EdgeKey) -> u64 {
        self.multiplicities.iter().filter(|(t, _)| t.contains_pair(e)).map(|(_, &x)| x).sum()
    }
}

/// An edge set meeting every triangle. Only membership is recorded: taking
/// an edge twice never helps a covering constraint.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TransversalCertificate {
    pub edges: BTreeSet<EdgeKey>,
}

impl TransversalCertificate {
    pub fn new(edges: impl IntoIterator<Item = EdgeKey>) -> Self {
        TransversalCertificate { edges: edges.into_iter().collect() }
    }

    pub fn weight(&self, g: &Multigraph) -> Result<u64> {
        weight(g, &self.edges)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn hits(&self, t: Triangle) -> bool {
        t.pairs().iter().any(|p| self.edges.contains(p))
    }
}

/// Sum of capacities over an edge set.
pub fn weight<'a>(g: &Multigraph, edges: impl IntoIterator<Item = &'a EdgeKey>) -> Result<u64> {
    edges.into_iter().map(|&e| g.weight_of(e).ok_or(Error::UnknownEdge(e))).sum()
}

/// True iff no edge carries more packed triangles than its capacity.
pub fn verify_packing(g: &Multigraph, p: &PackingCertificate) -> Result<bool> {
    let mut load = vec![0u64; g.edge_count()];
    for (&t, &x) in &p.multiplicities {
        let ids = g.triangle_edge_ids(t).ok_or(Error::UnknownTriangle(t))?;
        for i in ids {
            load[i] += x;
        }
    }
    Ok(load.iter().zip(g.edges()).all(|(&l, e)| l <= e.w))
}

/// True iff every triangle of `g` contains an edge of the certificate.
pub fn verify_transversal(g: &Multigraph, c: &TransversalCertificate) -> Result<bool> {
    if let Some(&e) = c.edges.iter().find(|&&e| g.edge_id(e).is_none()) {
        return Err(Error::UnknownEdge(e));
    }
    Ok(g.triangles().into_iter().all(|t| c.hits(t)))
}

/// Fractional packing `f` on triangles.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FractionalPacking {
    pub values: BTreeMap<Triangle, Rational>,
}

impl FractionalPacking {
    pub fn value(&self) -> Rational {
        self.values.values().sum()
    }

    pub fn get(&self, t: Triangle) -> Rational {
        self.values.get(&t).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn load(&self, e: EdgeKey) -> Rational {
        self.values.iter().filter(|(t, _)| t.contains_pair(e)).map(|(_, v)| v).sum()
    }

    /// Nonnegative, supported on triangles of `g`, and within every
    /// capacity.
    pub fn is_feasible(&self, g: &Multigraph) -> Result<bool> {
        let mut load = vec![Rational::zero(); g.edge_count()];
        for (&t, v) in &self.values {
            let ids = g.triangle_edge_ids(t).ok_or(Error::UnknownTriangle(t))?;
            if v.is_negative() {
                return Ok(false);
            }
            for i in ids {
                load[i] += v;
            }
        }
        Ok(load.iter().zip(g.edges()).all(|(l, e)| *l <= rational::from_u64(e.w)))
    }
}

/// Fractional transversal `g` on edges; its value is `sum w(e) g(e)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FractionalTransversal {
    pub values: BTreeMap<EdgeKey, Rational>,
}

impl FractionalTransversal {
    pub fn get(&self, e: EdgeKey) -> Rational {
        self.values.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn value(&self, g: &Multigraph) -> Result<Rational> {
        let mut total = Rational::zero();
        for (&e, v) in &self.values {
            let w = g.weight_of(e).ok_or(Error::UnknownEdge(e))?;
            total += v * rational::from_u64(w);
        }
        Ok(total)
    }

    pub fn triangle_sum(&self, t: Triangle) -> Rational {
        t.pairs().iter().map(|&p| self.get(p)).sum()
    }

    /// Nonnegative, supported on edges of `g`, and every triangle sums to
    /// at least one.
    pub fn is_feasible(&self, g: &Multigraph) -> Result<bool> {
        for (&e, v) in &self.values {
            if g.edge_id(e).is_none() {
                return Err(Error::UnknownEdge(e));
            }
            if v.is_negative() {
                return Ok(false);
            }
        }
        let one = rational::int(1);
        Ok(g.triangles().into_iter().all(|t| self.triangle_sum(t) >= one))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4(w: u64) -> Multigraph {
        let pairs = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b, w)));
        Multigraph::new(4, pairs).unwrap()
    }

    fn w5() -> Multigraph {
        let rim = (1..=5).map(|i| (i, i % 5 + 1));
        let spokes = (1..=5).map(|i| (0, i));
        Multigraph::simple(6, rim.chain(spokes)).unwrap()
    }

    #[test]
    fn packing_examples() {
        let g = k4(1);
        let mut p = PackingCertificate::new();
        p.add(Triangle([0, 1, 2]), 1);
        assert!(verify_packing(&g, &p).unwrap());
        p.add(Triangle([0, 1, 3]), 1);
        assert!(!verify_packing(&g, &p).unwrap());

        let g2 = k4(2);
        let mut all = PackingCertificate::new();
        for t in g2.triangles() {
            all.add(t, 1);
        }
        assert!(verify_packing(&g2, &all).unwrap());
        assert_eq!(all.value(), 4);
    }

    #[test]
    fn packing_unknown_triangle() {
        let g = Multigraph::simple(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let mut p = PackingCertificate::new();
        p.add(Triangle([1, 2, 3]), 1);
        assert_eq!(verify_packing(&g, &p), Err(Error::UnknownTriangle(Triangle([1, 2, 3]))));
    }

    #[test]
    fn transversal_examples() {
        let t = Multigraph::simple(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(verify_transversal(&t, &TransversalCertificate::new([EdgeKey(1, 2)])).unwrap());

        let matching = TransversalCertificate::new([EdgeKey(0, 1), EdgeKey(2, 3)]);
        assert!(verify_transversal(&k4(1), &matching).unwrap());

        let spokes = TransversalCertificate::new([EdgeKey(0, 1), EdgeKey(0, 3)]);
        assert!(!verify_transversal(&w5(), &spokes).unwrap());

        let bogus = TransversalCertificate::new([EdgeKey(1, 3)]);
        assert_eq!(verify_transversal(&w5(), &bogus), Err(Error::UnknownEdge(EdgeKey(1, 3))));
    }

    #[test]
    fn weights() {
        let none: Vec<EdgeKey> = vec![];
        assert_eq!(weight(&k4(1), &none).unwrap(), 0);
        let m = [EdgeKey(0, 1), EdgeKey(2, 3)];
        assert_eq!(weight(&k4(1), &m).unwrap(), 2);
        assert_eq!(weight(&k4(2), &m).unwrap(), 4);
    }

    /// Exhaustive cross-check against a per-edge counting oracle on every
    /// labelled graph with at most 6 vertices and a few packings each.
    #[test]
    fn verify_packing_matches_counting_oracle() {
        for n in 3..=6usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(i, &(a, b))| (a, b, (i % 2) as u64 + 1));
                let g = Multigraph::new(n, edges).unwrap();
                let tris = g.triangles();
                for sel in 0u32..(1 << tris.len().min(4)) {
                    let mut p = PackingCertificate::new();
                    for (j, &t) in tris.iter().enumerate().take(4) {
                        p.add(t, (sel >> j & 1) as u64);
                    }
                    let oracle = g.edges().iter().all(|e| {
                        let c: u64 = tris
                            .iter()
                            .take(4)
                            .enumerate()
                            .filter(|(j, t)| sel >> j & 1 == 1 && t.contains_pair(e.key))
                            .count() as u64;
                        c <= e.w
                    });
                    assert_eq!(verify_packing(&g, &p).unwrap(), oracle);
                }
            }
        }
    }
}
