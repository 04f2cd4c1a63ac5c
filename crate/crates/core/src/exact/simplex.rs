//! Primal simplex over exact rationals for the fractional packing LP
//!
//! ```text
//! maximise  sum_t x_t   subject to  sum_{t ∋ e} x_t <= w(e),  x >= 0
//! ```
//!
//! Slack variables give a feasible starting basis because `w >= 0`. Pivots
//! follow Bland's rule, so the method terminates on degenerate instances.
//! The optimal dual (a fractional transversal) is read off the objective
//! row at the slack columns.

use num_traits::{Signed, Zero};

use crate::certificate::{FractionalPacking, FractionalTransversal};
use crate::graph::Multigraph;
use crate::rational::{self, Rational};

/// A primal/dual optimal pair with equal value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub packing: FractionalPacking,
    pub transversal: FractionalTransversal,
    pub value: Rational,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    obj: Vec<Rational>,
    obj_rhs: Rational,
    basis: Vec<usize>,
}

impl Tableau {
    fn entering(&self) -> Option<usize> {
        self.obj.iter().position(|c| c.is_negative())
    }

    fn leaving(&self, col: usize) -> Option<usize> {
        let mut best: Option<(usize, Rational)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            if !row[col].is_positive() {
                continue;
            }
            let ratio = &self.rhs[r] / &row[col];
            let better = match &best {
                None => true,
                Some((b, br)) => ratio < *br || (ratio == *br && self.basis[r] < self.basis[*b]),
            };
            if better {
                best = Some((r, ratio));
            }
        }
        best.map(|(r, _)| r)
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let inv = self.rows[r][col].recip();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        self.rhs[r] *= &inv;
        let support: Vec<usize> = (0..self.rows[r].len()).filter(|&c| !self.rows[r][c].is_zero()).collect();
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for k in 0..self.rows.len() {
            if k == r || self.rows[k][col].is_zero() {
                continue;
            }
            let factor = self.rows[k][col].clone();
            for &c in &support {
                let d = &factor * &prow[c];
                self.rows[k][c] -= d;
            }
            self.rhs[k] -= &factor * &prhs;
        }
        if !self.obj[col].is_zero() {
            let factor = self.obj[col].clone();
            for &c in &support {
                let d = &factor * &prow[c];
                self.obj[c] -= d;
            }
            self.obj_rhs -= &factor * &prhs;
        }
        self.basis[r] = col;
    }
}

/// Exact optimal primal/dual pair of the fractional packing LP of `g`.
/// Variables are ordered canonically (triangles, then edges), so the
/// returned pair is deterministic.
pub fn lp_optimal(g: &Multigraph) -> LpSolution {
    let inc = g.incidence();
    let t = inc.triangles.len();
    let m = g.edge_count();
    if t == 0 {
        return LpSolution {
            packing: FractionalPacking::default(),
            transversal: FractionalTransversal::default(),
            value: Rational::zero(),
        };
    }
    let cols = t + m;
    let mut rows = vec![vec![Rational::zero(); cols]; m];
    for (e, row) in rows.iter_mut().enumerate() {
        for &j in &inc.rows[e] {
            row[j] = rational::int(1);
        }
        row[t + e] = rational::int(1);
    }
    let mut obj = vec![Rational::zero(); cols];
    for c in obj.iter_mut().take(t) {
        *c = rational::int(-1);
    }
    let mut tab = Tableau {
        rows,
        rhs: g.edges().iter().map(|e| rational::from_u64(e.w)).collect(),
        obj,
        obj_rhs: Rational::zero(),
        basis: (t..t + m).collect(),
    };

    while let Some(col) = tab.entering() {
        // the packing LP is bounded by sum w / 3, so a leaving row exists
        let r = tab.leaving(col).expect("packing LP is bounded");
        tab.pivot(r, col);
    }

    let mut packing = FractionalPacking::default();
    for (r, &b) in tab.basis.iter().enumerate() {
        if b < t && !tab.rhs[r].is_zero() {
            packing.values.insert(inc.triangles[b], tab.rhs[r].clone());
        }
    }
    let mut transversal = FractionalTransversal::default();
    for (e, edge) in g.edges().iter().enumerate() {
        let y = &tab.obj[t + e];
        if !y.is_zero() {
            transversal.values.insert(edge.key, y.clone());
        }
    }
    let value = tab.obj_rhs.clone();
    debug_assert_eq!(packing.value(), value);
    debug_assert_eq!(transversal.value(g).unwrap(), value);
    LpSolution { packing, transversal, value }
}
