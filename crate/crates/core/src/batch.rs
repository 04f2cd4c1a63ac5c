//! Evaluation of whole corpora: exact parameters, the `2 nu*` construction
//! and the inequality chain for every instance, one independent job each.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certificate::verify_transversal;
use crate::error::Result;
use crate::exact::{lp_optimal, nu_exact, tau_exact};
use crate::generators::{gen_gk, gen_random, nonisomorphic_graphs, wheel, MAX_SMALL};
use crate::graph::Multigraph;
use crate::krivelevich;
use crate::par::{self, Mode};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub name: String,
    pub graph: Multigraph,
}

impl Instance {
    pub fn new(name: impl Into<String>, graph: Multigraph) -> Self {
        Instance { name: name.into(), graph }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceReport {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub total_weight: u64,
    pub triangles: usize,
    pub nu: u64,
    pub tau: u64,
    pub nustar: Rational,
    pub kriv_weight: u64,
    /// The construction's transversal is valid and within
    /// `2 nu* - sqrt(nu*)/4`.
    pub kriv_ok: bool,
    /// `tau >= tau* = nu* >= nu` and `2 nu >= tau*`.
    pub chain_ok: bool,
}

impl InstanceReport {
    pub fn passed(&self) -> bool {
        self.kriv_ok && self.chain_ok
    }
}

/// Checks `tau >= tau* = nu* >= nu` and `2 nu >= tau*`; the dual value is
/// recomputed from the transversal side of the LP certificate.
pub fn chain_holds(g: &Multigraph, nu: u64, tau: u64) -> Result<bool> {
    let lp = lp_optimal(g);
    let taustar = lp.transversal.value(g)?;
    let nustar = lp.packing.value();
    let (nu, tau) = (rational::from_u64(nu), rational::from_u64(tau));
    Ok(taustar == nustar
        && lp.packing.is_feasible(g)?
        && lp.transversal.is_feasible(g)?
        && tau >= taustar
        && nustar >= nu
        && nu * rational::int(2) >= taustar)
}

pub fn evaluate(inst: &Instance) -> Result<InstanceReport> {
    let g = &inst.graph;
    let (nu, _) = nu_exact(g);
    let (tau, _) = tau_exact(g);
    let kriv = krivelevich::construct(g)?;
    let kriv_ok = verify_transversal(g, &kriv.transversal)?
        && (kriv.nustar.is_zero()
            || rational::le_two_x_minus_quarter_sqrt(&rational::from_u64(kriv.weight), &kriv.nustar));
    Ok(InstanceReport {
        name: inst.name.clone(),
        n: g.n(),
        m: g.edge_count(),
        total_weight: g.total_weight(),
        triangles: g.triangles().len(),
        nu,
        tau,
        nustar: kriv.nustar,
        kriv_weight: kriv.weight,
        kriv_ok,
        chain_ok: chain_holds(g, nu, tau)?,
    })
}

/// Evaluates every instance; results are in corpus order in both modes.
pub fn evaluate_all(corpus: &[Instance], mode: Mode) -> Vec<Result<InstanceReport>> {
    par::map(mode, corpus, evaluate)
}

/// All simple graphs on at most `max_n` vertices that contain a triangle,
/// one per isomorphism class.
pub fn small_graphs(max_n: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        for (i, g) in nonisomorphic_graphs(n)?.into_iter().enumerate() {
            if !g.is_triangle_free() {
                out.push(Instance::new(format!("small-{n}-{i}"), g));
            }
        }
    }
    Ok(out)
}

/// `count` random multigraphs on 3 to 8 vertices with weights up to 3.
pub fn random_multigraphs(count: usize, seed: u64) -> Result<Vec<Instance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(3..=8);
            let m = rng.gen_range(n..=n * (n - 1) / 2);
            let s = rng.gen();
            Ok(Instance::new(format!("random-{i}-n{n}-m{m}"), gen_random(n, m, 3, s)?))
        })
        .collect()
}

/// The small graphs on up to six vertices, `random` random multigraphs,
/// `W5` and `G_1`.
pub fn standard_corpus(random: usize, seed: u64) -> Result<Vec<Instance>> {
    let mut out = small_graphs(MAX_SMALL)?;
    out.extend(random_multigraphs(random, seed)?);
    out.push(Instance::new("W5", wheel(5)?));
    out.push(Instance::new("G1", gen_gk(1)?.0.graph));
    Ok(out)
}
