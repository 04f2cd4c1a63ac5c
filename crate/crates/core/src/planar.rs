//! Reduction engine for `tau_w <= 2 nu_w` on planar inputs.
//!
//! A graph is reduced by local rules until none applies, then the trace is
//! unwound from the triangle-free residual, extending a packing `P` and a
//! transversal `C` with `w(C) <= 2|P|` at every level. The rules are tried
//! in this order, each on its lexicographically first witness:
//!
//! 1. an edge of weight zero is deleted;
//! 2. an edge in exactly one triangle has that triangle's three weights
//!    decremented;
//! 3. an edge of weight at least two in exactly two triangles loses two, its
//!    four flank edges one each;
//! 4. a vertex whose neighbourhood induces a single cycle `u1..uk` with all
//!    spokes of weight one is deleted, and `u1u2, u3u4, ...` are decremented;
//! 5. while triangles remain, an edge in no triangle is deleted.
//!
//! Planarity guarantees that some rule applies while triangles remain; the
//! engine does not test planarity and reports [`Status::Incomplete`] when it
//! gets stuck.

use std::collections::{BTreeMap, BTreeSet};

use crate::certificate::{verify_packing, verify_transversal, PackingCertificate, TransversalCertificate};
use crate::error::{Error, Result};
use crate::graph::{EdgeKey, Multigraph, Triangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ReductionKind {
    ZeroEdge,
    SingleTriangleEdge,
    DoubleTriangleHeavyEdge,
    CycleNeighborhood,
    IsolatedEdge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub kind: ReductionKind,
    /// Witness edge, absent for [`ReductionKind::CycleNeighborhood`].
    pub edge: Option<EdgeKey>,
    /// Witness vertex of [`ReductionKind::CycleNeighborhood`].
    pub vertex: Option<usize>,
    /// Cyclic order `u1..uk` of the neighbourhood.
    pub cycle: Vec<usize>,
    /// Triangles the step packs on unwinding.
    pub triangles: Vec<Triangle>,
    pub deltas: BTreeMap<EdgeKey, u64>,
    pub removed: Vec<EdgeKey>,
}

#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub residual: Multigraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// The residual is triangle-free and the certificates are verified.
    Complete,
    /// No rule applies but triangles remain; no bound is claimed and the
    /// certificates are empty.
    Incomplete,
}

#[derive(Clone, Debug)]
pub struct PlanarOutcome {
    pub packing: PackingCertificate,
    pub transversal: TransversalCertificate,
    pub status: Status,
    pub trace: ReductionTrace,
}

fn triangles_by_edge(triangles: &[Triangle]) -> BTreeMap<EdgeKey, Vec<Triangle>> {
    let mut by_edge: BTreeMap<EdgeKey, Vec<Triangle>> = BTreeMap::new();
    for &t in triangles {
        for p in t.pairs() {
            by_edge.entry(p).or_default().push(t);
        }
    }
    by_edge
}

fn edge_step(
    kind: ReductionKind,
    e: EdgeKey,
    triangles: Vec<Triangle>,
    deltas: BTreeMap<EdgeKey, u64>,
) -> ReductionStep {
    let removed = if deltas.is_empty() { vec![e] } else { Vec::new() };
    ReductionStep { kind, edge: Some(e), vertex: None, cycle: Vec::new(), triangles, deltas, removed }
}

/// Cyclic order of `nbrs` if they induce a single cycle: starts at the
/// smallest vertex and continues to its smaller cycle neighbour.
fn induced_cycle(g: &Multigraph, nbrs: &[usize]) -> Option<Vec<usize>> {
    let inside: BTreeSet<usize> = nbrs.iter().copied().collect();
    let adj: BTreeMap<usize, Vec<usize>> = nbrs
        .iter()
        .map(|&u| (u, g.neighbors(u).filter(|y| inside.contains(y)).collect::<Vec<_>>()))
        .collect();
    if adj.values().any(|a| a.len() != 2) {
        return None;
    }
    let start = nbrs[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = adj[&start][0].min(adj[&start][1]);
    while cur != start {
        order.push(cur);
        let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
        prev = cur;
        cur = next;
    }
    (order.len() == nbrs.len()).then_some(order)
}

/// The first applicable reduction, or `None`.
pub fn find_reduction(g: &Multigraph) -> Option<ReductionStep> {
    if let Some(e) = g.edges().iter().find(|e| e.w == 0) {
        return Some(edge_step(ReductionKind::ZeroEdge, e.key, Vec::new(), BTreeMap::new()));
    }
    let triangles = g.triangles();
    let by_edge = triangles_by_edge(&triangles);
    let w = |k: EdgeKey| g.weight_of(k).expect("edge of g");
    let flanks =
        |e: EdgeKey, t: &Triangle| -> Vec<EdgeKey> { t.pairs().into_iter().filter(|&p| p != e).collect() };

    for edge in g.edges() {
        if let Some([t]) = by_edge.get(&edge.key).map(Vec::as_slice) {
            let fl = flanks(edge.key, t);
            if fl.iter().all(|&f| w(f) >= 1) {
                let deltas = std::iter::once(edge.key).chain(fl).map(|k| (k, 1)).collect();
                return Some(edge_step(ReductionKind::SingleTriangleEdge, edge.key, vec![*t], deltas));
            }
        }
    }
    for edge in g.edges() {
        if let Some([t1, t2]) = by_edge.get(&edge.key).map(Vec::as_slice) {
            let fl: Vec<EdgeKey> = flanks(edge.key, t1).into_iter().chain(flanks(edge.key, t2)).collect();
            if edge.w >= 2 && fl.iter().all(|&f| w(f) >= 1) {
                let mut deltas: BTreeMap<EdgeKey, u64> = fl.into_iter().map(|k| (k, 1)).collect();
                deltas.insert(edge.key, 2);
                return Some(edge_step(
                    ReductionKind::DoubleTriangleHeavyEdge,
                    edge.key,
                    vec![*t1, *t2],
                    deltas,
                ));
            }
        }
    }
    for v in 0..g.n() {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        if nbrs.len() < 3 || nbrs.iter().any(|&u| w(EdgeKey::new(v, u)) != 1) {
            continue;
        }
        let Some(cycle) = induced_cycle(g, &nbrs) else { continue };
        let k = cycle.len();
        let rims: Vec<EdgeKey> = (0..k / 2).map(|i| EdgeKey::new(cycle[2 * i], cycle[2 * i + 1])).collect();
        if rims.iter().any(|&r| w(r) == 0) {
            continue;
        }
        let packed = (0..k / 2).map(|i| Triangle::new(v, cycle[2 * i], cycle[2 * i + 1])).collect();
        return Some(ReductionStep {
            kind: ReductionKind::CycleNeighborhood,
            edge: None,
            vertex: Some(v),
            cycle,
            triangles: packed,
            deltas: rims.into_iter().map(|r| (r, 1)).collect(),
            removed: nbrs.iter().map(|&u| EdgeKey::new(v, u)).collect(),
        });
    }
    if !triangles.is_empty() {
        if let Some(e) = g.edges().iter().find(|e| !by_edge.contains_key(&e.key)) {
            return Some(edge_step(ReductionKind::IsolatedEdge, e.key, Vec::new(), BTreeMap::new()));
        }
    }
    None
}

/// The graph after `step`.
pub fn apply(g: &Multigraph, step: &ReductionStep) -> Multigraph {
    let removed: BTreeSet<EdgeKey> = step.removed.iter().copied().collect();
    let edges: Vec<(usize, usize, u64)> = g
        .edges()
        .iter()
        .filter(|e| !removed.contains(&e.key))
        .map(|e| (e.key.0, e.key.1, e.w - step.deltas.get(&e.key).copied().unwrap_or(0)))
        .collect();
    Multigraph::new(g.n(), edges).expect("same vertex set")
}

fn measure(g: &Multigraph) -> u64 {
    g.edge_count() as u64 + g.total_weight()
}

/// Applies reductions until none applies. Returns the intermediate graphs
/// (original first, residual last) with the steps between them.
fn reduce_levels(g: &Multigraph) -> Result<(Vec<Multigraph>, Vec<ReductionStep>)> {
    let mut levels = vec![g.clone()];
    let mut steps = Vec::new();
    while let Some(step) = find_reduction(levels.last().unwrap()) {
        let cur = levels.last().unwrap();
        let next = apply(cur, &step);
        if measure(&next) >= measure(cur) {
            return Err(Error::Invariant(format!("{:?} did not decrease |E| + w(E)", step.kind)));
        }
        steps.push(step);
        levels.push(next);
    }
    Ok((levels, steps))
}

pub fn reduce(g: &Multigraph) -> Result<ReductionTrace> {
    let (mut levels, steps) = reduce_levels(g)?;
    Ok(ReductionTrace { steps, residual: levels.pop().unwrap() })
}

fn hits_all(c: &BTreeSet<EdgeKey>, triangles: &[Triangle]) -> bool {
    triangles.iter().all(|t| t.pairs().iter().any(|p| c.contains(p)))
}

/// Drops edges in lexicographic order while coverage is kept.
fn minimalize(mut c: BTreeSet<EdgeKey>, triangles: &[Triangle]) -> BTreeSet<EdgeKey> {
    for e in c.clone() {
        c.remove(&e);
        if !hits_all(&c, triangles) {
            c.insert(e);
        }
    }
    c
}

fn weight_in(g: &Multigraph, c: &BTreeSet<EdgeKey>) -> u64 {
    c.iter().map(|&e| g.weight_of(e).unwrap_or(0)).sum()
}

/// Spokes `v u_j` covering the wheel triangles `(v, u_j, u_{j+1})` that `c`
/// misses: a minimum vertex cover of the rim when all are missed, otherwise
/// a greedy cover of each run of consecutive missed triangles.
fn spokes(v: usize, cycle: &[usize], c: &BTreeSet<EdgeKey>) -> Vec<EdgeKey> {
    let k = cycle.len();
    let spoke = |j: usize| EdgeKey::new(v, cycle[j % k]);
    let hit: Vec<bool> = (0..k)
        .map(|j| {
            let t = Triangle::new(v, cycle[j], cycle[(j + 1) % k]);
            t.pairs().iter().any(|p| c.contains(p))
        })
        .collect();
    let Some(first_hit) = hit.iter().position(|&h| h) else {
        let mut out: Vec<EdgeKey> = (1..k).step_by(2).map(spoke).collect();
        if k % 2 == 1 {
            out.push(spoke(0));
        }
        return out;
    };
    let mut out = Vec::new();
    let mut j = first_hit + 1;
    while j < first_hit + k {
        if hit[j % k] {
            j += 1;
        } else {
            out.push(spoke(j + 1));
            j += 2;
        }
    }
    out
}

/// Reduces `g`, unwinds the trace and returns a verified packing and
/// transversal with `w(C) <= 2|P|`.
pub fn reduce_and_certify(g: &Multigraph) -> Result<PlanarOutcome> {
    let (levels, steps) = reduce_levels(g)?;
    let residual = levels.last().unwrap().clone();
    let trace = ReductionTrace { steps, residual };
    if !trace.residual.is_triangle_free() {
        return Ok(PlanarOutcome {
            packing: PackingCertificate::new(),
            transversal: TransversalCertificate::default(),
            status: Status::Incomplete,
            trace,
        });
    }

    let mut p = PackingCertificate::new();
    let mut c: BTreeSet<EdgeKey> = BTreeSet::new();
    for (i, step) in trace.steps.iter().enumerate().rev() {
        let (outer, inner) = (&levels[i], &levels[i + 1]);
        let inner_weight = weight_in(inner, &c);
        let slack = match step.kind {
            ReductionKind::ZeroEdge => {
                let e = step.edge.unwrap();
                let tris: Vec<Triangle> =
                    outer.triangles().into_iter().filter(|t| t.contains_pair(e)).collect();
                if !hits_all(&c, &tris) {
                    c.insert(e);
                }
                0
            }
            ReductionKind::IsolatedEdge => 0,
            ReductionKind::SingleTriangleEdge | ReductionKind::DoubleTriangleHeavyEdge => {
                c = minimalize(c, &outer.triangles());
                2 * step.triangles.len() as u64
            }
            ReductionKind::CycleNeighborhood => {
                c.extend(spokes(step.vertex.unwrap(), &step.cycle, &c));
                2 * (step.cycle.len() / 2) as u64
            }
        };
        for &t in &step.triangles {
            p.add(t, 1);
        }
        let outer_weight = weight_in(outer, &c);
        if outer_weight > inner_weight + slack {
            return Err(Error::Invariant(format!(
                "{:?} at level {i}: w(C) = {outer_weight} > {inner_weight} + {slack}",
                step.kind
            )));
        }
        if outer_weight > 2 * p.value() {
            return Err(Error::Invariant(format!(
                "level {i}: w(C) = {outer_weight} > 2|P| = {}",
                2 * p.value()
            )));
        }
    }

    let transversal = TransversalCertificate { edges: c };
    if !verify_packing(g, &p)? || !verify_transversal(g, &transversal)? {
        return Err(Error::Invariant("unwound certificates do not verify".into()));
    }
    Ok(PlanarOutcome { packing: p, transversal, status: Status::Complete, trace })
}
