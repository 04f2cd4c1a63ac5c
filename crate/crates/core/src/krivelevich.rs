//! Integral transversals of weight at most `2 nu* - sqrt(nu*)/4` built from
//! an optimal LP pair.
//!
//! Edges are split by their dual value `g(e)` into `Z` (zero), `A` (below
//! one half), `B` (exactly one half) and `C` (above one half). With `H` the
//! graph on `B` whose edges join two `B`-edges of a common tight triangle,
//! `I` a large independent set of `H` and `R` the complement of a large cut
//! of `G[A ∪ I]`, the set `L = (B \ I) ∪ C ∪ R` meets every triangle.
//!
//! Sizes `a`, `b`, `c` count edges with multiplicity, i.e. they are weights.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::certificate::{verify_transversal, TransversalCertificate};
use crate::cuts::{cut_large, independent_set_weighted};
use crate::error::{Error, Result};
use crate::exact::{lp_optimal, tight_sets, LpSolution};
use crate::graph::{EdgeKey, Multigraph, Triangle};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgePartition {
    pub z: BTreeSet<EdgeKey>,
    pub a: BTreeSet<EdgeKey>,
    pub b: BTreeSet<EdgeKey>,
    pub c: BTreeSet<EdgeKey>,
    /// Total weight of `A`.
    pub a_weight: u64,
    pub b_weight: u64,
    pub c_weight: u64,
}

/// Tight triangles by how they meet the partition: `t1..t3` have exactly
/// one, two, three edges in `A`; `t4` has two edges in `Z` and one in `C`;
/// `t5` has one edge in `Z` and two in `B`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TightTrianglePartition {
    pub t1: BTreeSet<Triangle>,
    pub t2: BTreeSet<Triangle>,
    pub t3: BTreeSet<Triangle>,
    pub t4: BTreeSet<Triangle>,
    pub t5: BTreeSet<Triangle>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Class {
    Z,
    A,
    B,
    C,
}

pub fn classify(g: &Multigraph, s: &LpSolution) -> Result<(EdgePartition, TightTrianglePartition)> {
    let tight = tight_sets(g, s)?;
    let half = rational::ratio(1, 2);
    let mut part = EdgePartition::default();
    let mut class = BTreeMap::new();
    for e in g.edges() {
        let v = s.transversal.get(e.key);
        let k = if v.is_zero() {
            part.z.insert(e.key);
            Class::Z
        } else if v < half {
            part.a.insert(e.key);
            part.a_weight += e.w;
            Class::A
        } else if v == half {
            part.b.insert(e.key);
            part.b_weight += e.w;
            Class::B
        } else {
            part.c.insert(e.key);
            part.c_weight += e.w;
            Class::C
        };
        class.insert(e.key, k);
    }

    let mut tri = TightTrianglePartition::default();
    for &t in &tight.triangles {
        let ks = t.pairs().map(|p| class[&p]);
        let count = |k: Class| ks.iter().filter(|&&x| x == k).count();
        let slot = match (count(Class::A), count(Class::Z), count(Class::B), count(Class::C)) {
            (1, ..) => &mut tri.t1,
            (2, ..) => &mut tri.t2,
            (3, ..) => &mut tri.t3,
            (0, 2, 0, 1) => &mut tri.t4,
            (0, 1, 2, 0) => &mut tri.t5,
            _ => return Err(Error::Invariant(format!("tight triangle {t} fits no class"))),
        };
        slot.insert(t);
    }

    let f = |set: &BTreeSet<Triangle>| set.iter().map(|&t| s.packing.get(t)).sum::<Rational>();
    let (f1, f2, f3, f4, f5) = (f(&tri.t1), f(&tri.t2), f(&tri.t3), f(&tri.t4), f(&tri.t5));
    let a = rational::from_u64(part.a_weight);
    let bc = rational::from_u64(part.b_weight + part.c_weight);
    if a != &f1 + &f2 * rational::int(2) + &f3 * rational::int(3) {
        return Err(Error::Invariant("a != f(T1) + 2f(T2) + 3f(T3)".into()));
    }
    if bc != &f1 + &f2 + &f4 + &f5 * rational::int(2) {
        return Err(Error::Invariant("b + c != f(T1) + f(T2) + f(T4) + 2f(T5)".into()));
    }
    Ok((part, tri))
}

/// Everything the construction produced, for reporting.
#[derive(Clone, Debug)]
pub struct Construction {
    pub nustar: Rational,
    pub partition: EdgePartition,
    pub tight: TightTrianglePartition,
    /// The independent set `I` of `H`, as `B`-edges.
    pub independent: BTreeSet<EdgeKey>,
    /// Non-cut edges `R` of `G[A ∪ I]`.
    pub residual: BTreeSet<EdgeKey>,
    pub transversal: TransversalCertificate,
    pub weight: u64,
    /// Whether `a >= c`. Optimal duals with `a < c` exist (a single
    /// triangle with `g = (1, 0, 0)`), and then only the final bound is
    /// guaranteed.
    pub a_ge_c: bool,
    /// Whether `|L| <= 2X - sqrt(X)/4` for `X = a/4 + (b+c)/2`.
    pub within_partition_bound: bool,
}

impl Construction {
    /// `a/4 + (b+c)/2`, a lower bound on `nu*`.
    pub fn partition_bound(&self) -> Rational {
        let p = &self.partition;
        rational::ratio(p.a_weight as i64, 4) + rational::ratio((p.b_weight + p.c_weight) as i64, 2)
    }
}

/// Runs the construction with the solver's optimal pair.
pub fn construct(g: &Multigraph) -> Result<Construction> {
    construct_with(g, &lp_optimal(g))
}

/// Runs the construction with a caller-supplied optimal pair.
pub fn construct_with(g: &Multigraph, s: &LpSolution) -> Result<Construction> {
    let (partition, tight) = classify(g, s)?;
    let nustar = s.value.clone();

    let mut x = Construction {
        nustar: nustar.clone(),
        partition,
        tight,
        independent: BTreeSet::new(),
        residual: BTreeSet::new(),
        transversal: TransversalCertificate::default(),
        weight: 0,
        a_ge_c: false,
        within_partition_bound: false,
    };
    x.a_ge_c = x.partition.a_weight >= x.partition.c_weight;
    if x.partition_bound() > nustar {
        return Err(Error::Invariant("nu* < a/4 + (b+c)/2".into()));
    }

    // H on the B-edges, weighted by multiplicity
    let bs: Vec<EdgeKey> = x.partition.b.iter().copied().collect();
    let index: BTreeMap<EdgeKey, usize> = bs.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut h_edges = BTreeSet::new();
    for t in x.tight.t1.iter().chain(&x.tight.t2).chain(&x.tight.t3).chain(&x.tight.t4).chain(&x.tight.t5) {
        let ids: Vec<usize> = t.pairs().iter().filter_map(|p| index.get(p).copied()).collect();
        for i in 0..ids.len() {
            for j in i + 1..ids.len() {
                h_edges.insert((ids[i], ids[j]));
            }
        }
    }
    let h = Multigraph::simple(bs.len(), h_edges)?;
    if let Some(t) = h.first_triangle() {
        let [p, q, r] = t.vertices();
        return Err(Error::Invariant(format!("H has a triangle on {}, {}, {}", bs[p], bs[q], bs[r])));
    }
    let weights: Vec<u64> = bs.iter().map(|&e| g.weight_of(e).expect("edge of g")).collect();
    x.independent = independent_set_weighted(&h, &weights)?.into_iter().map(|i| bs[i]).collect();

    // G' = G[A ∪ I] with full multiplicities
    let members: BTreeSet<EdgeKey> = x.partition.a.union(&x.independent).copied().collect();
    let g_prime = g.filter_edges(|e| members.contains(&e.key));
    if g_prime.total_weight() > 0 {
        let cut = cut_large(&g_prime)?;
        x.residual = members.iter().copied().filter(|&e| !cut.contains(e)).collect();
    } else {
        x.residual = members.clone();
    }

    let l: BTreeSet<EdgeKey> =
        x.partition.b.difference(&x.independent).chain(&x.partition.c).chain(&x.residual).copied().collect();
    x.transversal = TransversalCertificate { edges: l };
    if !verify_transversal(g, &x.transversal)? {
        return Err(Error::Invariant("L misses a triangle".into()));
    }
    x.weight = x.transversal.weight(g)?;
    let w = rational::from_u64(x.weight);
    if nustar.is_zero() {
        x.within_partition_bound = x.weight == 0;
        if x.weight != 0 {
            return Err(Error::Invariant(format!("nu* = 0 but |L| = {}", x.weight)));
        }
    } else {
        x.within_partition_bound = rational::le_two_x_minus_quarter_sqrt(&w, &x.partition_bound());
        if x.a_ge_c && !x.within_partition_bound {
            return Err(Error::Invariant(format!("|L| = {} exceeds 2X - sqrt(X)/4 with a >= c", x.weight)));
        }
        if !rational::le_two_x_minus_quarter_sqrt(&w, &nustar) {
            return Err(Error::Invariant(format!(
                "|L| = {} exceeds 2nu* - sqrt(nu*)/4 at nu* = {}",
                x.weight,
                rational::to_pq(&nustar)
            )));
        }
    }
    Ok(x)
}

/// A transversal of weight at most `2 nu* - sqrt(nu*)/4`.
pub fn transversal_2nustar(g: &Multigraph) -> Result<TransversalCertificate> {
    construct(g).map(|x| x.transversal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{FractionalPacking, FractionalTransversal};
    use crate::generators::{complete, cycle, gen_gk, wheel};

    fn w5_half_spokes() -> (Multigraph, LpSolution) {
        let g = wheel(5).unwrap();
        let half = rational::ratio(1, 2);
        let s = LpSolution {
            packing: FractionalPacking {
                values: g.triangles().into_iter().map(|t| (t, half.clone())).collect(),
            },
            transversal: FractionalTransversal {
                values: (1..=5).map(|i| (EdgeKey(0, i), half.clone())).collect(),
            },
            value: rational::ratio(5, 2),
        };
        (g, s)
    }

    #[test]
    fn classify_single_triangle() {
        let g = complete(3);
        let third = rational::ratio(1, 3);
        let s = LpSolution {
            packing: FractionalPacking { values: [(Triangle([0, 1, 2]), rational::int(1))].into() },
            transversal: FractionalTransversal {
                values: g.edges().iter().map(|e| (e.key, third.clone())).collect(),
            },
            value: rational::int(1),
        };
        let (p, t) = classify(&g, &s).unwrap();
        assert!(p.z.is_empty() && p.b.is_empty() && p.c.is_empty());
        assert_eq!(p.a.len(), 3);
        assert_eq!(t.t3.len(), 1);
        assert!(t.t1.is_empty() && t.t2.is_empty() && t.t4.is_empty() && t.t5.is_empty());
    }

    #[test]
    fn classify_w5() {
        let (g, s) = w5_half_spokes();
        let (p, t) = classify(&g, &s).unwrap();
        assert!(p.a.is_empty() && p.c.is_empty());
        assert_eq!(p.b, (1..=5).map(|i| EdgeKey(0, i)).collect());
        assert_eq!(p.z.len(), 5);
        assert_eq!(t.t5.len(), 5);
    }

    #[test]
    fn classify_triangle_free() {
        let g = cycle(5).unwrap();
        let (p, t) = classify(&g, &lp_optimal(&g)).unwrap();
        assert_eq!(p.z.len(), 5);
        assert_eq!(t, TightTrianglePartition::default());
    }

    #[test]
    fn classify_rejects_non_optimal() {
        let g = complete(3);
        let mut s = lp_optimal(&g);
        s.value = rational::int(7);
        s.packing.values.clear();
        assert!(matches!(classify(&g, &s), Err(Error::NotOptimal { .. })));
    }

    #[test]
    fn w5_gives_three_spokes() {
        let (g, s) = w5_half_spokes();
        let x = construct_with(&g, &s).unwrap();
        assert_eq!(x.independent, BTreeSet::from([EdgeKey(0, 2), EdgeKey(0, 5)]));
        assert!(x.residual.is_empty());
        assert_eq!(x.transversal.edges, BTreeSet::from([EdgeKey(0, 1), EdgeKey(0, 3), EdgeKey(0, 4)]));
        assert!(x.weight <= 4);
    }

    #[test]
    fn examples() {
        assert!(transversal_2nustar(&cycle(5).unwrap()).unwrap().is_empty());
        let t = transversal_2nustar(&complete(3)).unwrap();
        assert_eq!(t.len(), 1);
        let w5 = wheel(5).unwrap();
        assert!(transversal_2nustar(&w5).unwrap().weight(&w5).unwrap() <= 4);
        let (g1, _) = gen_gk(1).unwrap();
        construct(&g1.graph).unwrap();
        for n in 4..=6 {
            construct(&complete(n)).unwrap();
        }
    }

    #[test]
    fn vertex_dual_with_a_below_c() {
        let g = complete(3);
        let s = LpSolution {
            packing: FractionalPacking { values: [(Triangle([0, 1, 2]), rational::int(1))].into() },
            transversal: FractionalTransversal { values: [(EdgeKey(0, 1), rational::int(1))].into() },
            value: rational::int(1),
        };
        let x = construct_with(&g, &s).unwrap();
        assert!(!x.a_ge_c);
        assert!(!x.within_partition_bound);
        assert_eq!(x.weight, 1);
        assert!(rational::le_two_x_minus_quarter_sqrt(&rational::int(1), &x.nustar));
    }

    #[test]
    fn zero_weight_edges_cost_nothing() {
        let g = Multigraph::new(4, [(0, 1, 0), (1, 2, 2), (0, 2, 2), (2, 3, 1), (1, 3, 1)]).unwrap();
        let x = construct(&g).unwrap();
        assert!(verify_transversal(&g, &x.transversal).unwrap());
    }
}
