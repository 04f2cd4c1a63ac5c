//! Branch-and-bound for capacitated triangle packing.
//!
//! Items are triangles given by the ids of their three edge elements; each
//! element has a capacity. The search visits items in order and tries the
//! largest feasible multiplicity first, so the first optimum found is the
//! lexicographically largest one and results do not depend on timing.

use crate::error::{Error, Result};

pub struct PackingProblem {
    /// Capacity of each edge element.
    pub caps: Vec<u64>,
    /// Endpoints of each edge element, used by the degree bound.
    pub ends: Vec<(usize, usize)>,
    /// Edge element ids of each item.
    pub items: Vec<[usize; 3]>,
    /// Upper limit on any single multiplicity (1 for plain families).
    pub max_mult: u64,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SearchLimits {
    /// Maximum number of search nodes, `None` for unlimited.
    pub budget: Option<u64>,
    /// Known upper bound on the optimum; the search stops once reached.
    pub ceiling: Option<u64>,
}

pub type Predicate<'a> = &'a (dyn Fn(&[u64]) -> bool + Sync);

struct Search<'a> {
    p: &'a PackingProblem,
    accept: Option<Predicate<'a>>,
    limits: SearchLimits,
    residual: Vec<u64>,
    mult: Vec<u64>,
    value: u64,
    best: Option<(u64, Vec<u64>)>,
    nodes: u64,
    n_vertices: usize,
    stamp: Vec<u32>,
    epoch: u32,
    vertex_cap: Vec<u64>,
    done: bool,
}

/// Maximum total multiplicity subject to capacities and, if given, the
/// predicate on the multiplicity vector. Returns the multiplicities of an
/// optimal solution; the empty solution is always admissible when it
/// satisfies the predicate, and `None` is returned if nothing does.
pub fn max_packing(
    p: &PackingProblem,
    accept: Option<Predicate<'_>>,
    limits: SearchLimits,
) -> Result<Option<Vec<u64>>> {
    let n_vertices = p.ends.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
    let mut s = Search {
        p,
        accept,
        limits,
        residual: p.caps.clone(),
        mult: vec![0; p.items.len()],
        value: 0,
        best: None,
        nodes: 0,
        n_vertices,
        stamp: vec![0; p.caps.len()],
        epoch: 0,
        vertex_cap: vec![0; n_vertices],
        done: false,
    };
    s.visit(0)?;
    Ok(s.best.map(|(_, m)| m))
}

impl Search<'_> {
    fn visit(&mut self, i: usize) -> Result<()> {
        self.nodes += 1;
        if let Some(b) = self.limits.budget {
            if self.nodes > b {
                return Err(Error::BudgetExceeded(b));
            }
        }
        let improves = self.best.as_ref().is_none_or(|(v, _)| self.value > *v);
        if improves && self.accept.is_none_or(|f| f(&self.mult)) {
            self.best = Some((self.value, self.mult.clone()));
            if self.limits.ceiling == Some(self.value) {
                self.done = true;
                return Ok(());
            }
        }
        if i == self.p.items.len() {
            return Ok(());
        }
        if let Some(best) = self.best.as_ref().map(|(v, _)| *v) {
            if self.value + self.bound(i) <= best {
                return Ok(());
            }
        }
        let item = self.p.items[i];
        let top = item.iter().map(|&e| self.residual[e]).min().unwrap().min(self.p.max_mult);
        for m in (0..=top).rev() {
            for &e in &item {
                self.residual[e] -= m;
            }
            self.mult[i] = m;
            self.value += m;
            let r = self.visit(i + 1);
            self.value -= m;
            self.mult[i] = 0;
            for &e in &item {
                self.residual[e] += m;
            }
            r?;
            if self.done {
                return Ok(());
            }
        }
        Ok(())
    }

    /// Upper bound on what items `i..` can still add.
    fn bound(&mut self, i: usize) -> u64 {
        self.epoch += 1;
        let epoch = self.epoch;
        let mut single = 0u64;
        let mut elem_total = 0u64;
        self.vertex_cap[..self.n_vertices].iter_mut().for_each(|c| *c = 0);
        for item in &self.p.items[i..] {
            let m = item.iter().map(|&e| self.residual[e]).min().unwrap().min(self.p.max_mult);
            if m == 0 {
                continue;
            }
            single += m;
            for &e in item {
                if self.stamp[e] != epoch {
                    self.stamp[e] = epoch;
                    let c = self.residual[e];
                    elem_total += c;
                    let (a, b) = self.p.ends[e];
                    self.vertex_cap[a] += c;
                    self.vertex_cap[b] += c;
                }
            }
        }
        // each triangle uses two capacity units at each of its vertices
        let by_vertex: u64 = self.vertex_cap[..self.n_vertices].iter().map(|c| c / 2).sum();
        single.min(elem_total / 3).min(by_vertex / 3)
    }
}
