//! Exact optimisers: integral packing and transversal numbers by
//! branch-and-bound, and the common fractional optimum by rational simplex.

mod packing;
mod simplex;

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

pub use packing::{max_packing, PackingProblem, Predicate, SearchLimits};
pub use simplex::{lp_optimal, LpSolution};

use crate::certificate::{PackingCertificate, TransversalCertificate};
use crate::error::{Error, Result};
use crate::graph::{EdgeKey, Multigraph, Triangle};
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug)]
pub struct NuOptions {
    /// Stop as soon as a packing of size `floor(nu*)` is found.
    pub lp_ceiling: bool,
    pub budget: Option<u64>,
}

impl Default for NuOptions {
    fn default() -> Self {
        NuOptions { lp_ceiling: true, budget: None }
    }
}

/// Maximum weighted packing `nu_w(g)` with a certificate.
pub fn nu_exact(g: &Multigraph) -> (u64, PackingCertificate) {
    nu_exact_with(g, NuOptions { budget: None, ..NuOptions::default() })
        .expect("unbounded search cannot exceed its budget")
}

pub fn nu_exact_with(g: &Multigraph, opts: NuOptions) -> Result<(u64, PackingCertificate)> {
    let triangles = g.triangles();
    if triangles.is_empty() {
        return Ok((0, PackingCertificate::new()));
    }
    let problem = PackingProblem {
        caps: g.edges().iter().map(|e| e.w).collect(),
        ends: g.edges().iter().map(|e| (e.key.0, e.key.1)).collect(),
        items: triangles.iter().map(|&t| g.triangle_edge_ids(t).expect("enumerated triangle")).collect(),
        max_mult: u64::MAX,
    };
    let ceiling = opts.lp_ceiling.then(|| {
        let v = lp_optimal(g).value;
        v.numer().div_floor(v.denom()).to_u64().expect("nu* fits in u64")
    });
    let limits = SearchLimits { budget: opts.budget, ceiling };
    let mult = max_packing(&problem, None, limits)?.expect("empty packing is admissible");
    let mut cert = PackingCertificate::new();
    for (t, m) in triangles.into_iter().zip(mult) {
        cert.add(t, m);
    }
    Ok((cert.value(), cert))
}

/// Minimum-weight transversal `tau_w(g)` with a certificate.
pub fn tau_exact(g: &Multigraph) -> (u64, TransversalCertificate) {
    let triangles: Vec<[usize; 3]> =
        g.triangles().into_iter().map(|t| g.triangle_edge_ids(t).expect("enumerated triangle")).collect();
    let w: Vec<u64> = g.edges().iter().map(|e| e.w).collect();
    let mut s = TauSearch {
        triangles: &triangles,
        w: &w,
        state: vec![Slot::Free; w.len()],
        cost: 0,
        best_cost: w.iter().sum::<u64>() + 1,
        best: Vec::new(),
        used: vec![false; w.len()],
    };
    // zero-weight edges are free cover
    for (i, &wi) in w.iter().enumerate() {
        if wi == 0 && triangles.iter().any(|t| t.contains(&i)) {
            s.state[i] = Slot::Chosen;
        }
    }
    s.visit(0);
    let cert = TransversalCertificate::new(s.best.iter().map(|&i| g.edges()[i].key));
    (s.best_cost, cert)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Free,
    Chosen,
    Excluded,
}

struct TauSearch<'a> {
    triangles: &'a [[usize; 3]],
    w: &'a [u64],
    state: Vec<Slot>,
    cost: u64,
    best_cost: u64,
    best: Vec<usize>,
    used: Vec<bool>,
}

impl TauSearch<'_> {
    fn covered(&self, t: &[usize; 3]) -> bool {
        t.iter().any(|&e| self.state[e] == Slot::Chosen)
    }

    fn visit(&mut self, from: usize) {
        let Some(i) = (from..self.triangles.len()).find(|&i| !self.covered(&self.triangles[i])) else {
            if self.cost < self.best_cost {
                self.best_cost = self.cost;
                self.best = (0..self.w.len()).filter(|&e| self.state[e] == Slot::Chosen).collect();
            }
            return;
        };
        match self.lower_bound(i) {
            Some(lb) if self.cost + lb < self.best_cost => {}
            _ => return,
        }
        let t = self.triangles[i];
        let free: Vec<usize> = t.iter().copied().filter(|&e| self.state[e] == Slot::Free).collect();
        for (k, &e) in free.iter().enumerate() {
            for &x in &free[..k] {
                self.state[x] = Slot::Excluded;
            }
            self.state[e] = Slot::Chosen;
            self.cost += self.w[e];
            self.visit(i + 1);
            self.cost -= self.w[e];
            self.state[e] = Slot::Free;
            for &x in &free[..k] {
                self.state[x] = Slot::Free;
            }
        }
    }

    /// Cost of a greedy family of uncovered triangles with pairwise
    /// disjoint free edges; `None` if some triangle cannot be covered.
    fn lower_bound(&mut self, from: usize) -> Option<u64> {
        self.used.iter_mut().for_each(|u| *u = false);
        let mut lb = 0;
        for t in &self.triangles[from..] {
            if self.covered(t) {
                continue;
            }
            let mut cheapest = None;
            let mut clash = false;
            for &e in t {
                if self.state[e] == Slot::Free {
                    clash |= self.used[e];
                    cheapest = Some(cheapest.map_or(self.w[e], |c: u64| c.min(self.w[e])));
                }
            }
            let cheapest = cheapest?;
            if !clash {
                lb += cheapest;
                for &e in t {
                    if self.state[e] == Slot::Free {
                        self.used[e] = true;
                    }
                }
            }
        }
        Some(lb)
    }
}

/// Edges and triangles whose LP constraints hold with equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TightSets {
    /// Edges whose packing load equals their capacity.
    pub edges: BTreeSet<EdgeKey>,
    /// Triangles whose transversal sum equals one.
    pub triangles: BTreeSet<Triangle>,
}

/// Tight constraints of an optimal pair, checking complementary slackness.
pub fn tight_sets(g: &Multigraph, s: &LpSolution) -> Result<TightSets> {
    let primal = s.packing.value();
    let dual = s.transversal.value(g)?;
    if primal != dual {
        return Err(Error::NotOptimal { primal: rational::to_pq(&primal), dual: rational::to_pq(&dual) });
    }
    let inc = g.incidence();
    let mut load = vec![Rational::zero(); g.edge_count()];
    for (j, t) in inc.triangles.iter().enumerate() {
        let f = s.packing.get(*t);
        if f.is_negative() {
            return Err(Error::Slackness(format!("negative packing value on {t}")));
        }
        for &e in &inc.cols[j] {
            load[e] += &f;
        }
    }
    let mut out = TightSets::default();
    for (e, edge) in g.edges().iter().enumerate() {
        if load[e] == rational::from_u64(edge.w) {
            out.edges.insert(edge.key);
        } else if s.transversal.get(edge.key).is_positive() {
            return Err(Error::Slackness(format!("edge {} has positive dual but is not tight", edge.key)));
        }
    }
    let one = rational::int(1);
    for &t in &inc.triangles {
        if s.transversal.triangle_sum(t) == one {
            out.triangles.insert(t);
        } else if s.packing.get(t).is_positive() {
            return Err(Error::Slackness(format!("triangle {t} has positive value but is not tight")));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
