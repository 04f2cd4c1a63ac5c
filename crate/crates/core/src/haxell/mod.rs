//! Transversals of weight at most `(73/25) nu`.
//!
//! The construction works on the expanded graph where each pair of weight
//! `w` is `w` distinct edges (see [`CopyGraph`]). It fixes a maximum packing
//! `B` and a chain of extremal triangle families derived from it, then
//! builds five explicit transversals. Each one obeys a linear bound in the
//! family sizes, and some convex combination of the five bounds is at most
//! `(73/25) nu`, so the lightest of them is the answer. Every bound and
//! every covering property is checked at run time; a violation is reported
//! as [`Error::Invariant`].
//!
//! Terminology: for a family `F` of edge-disjoint triangles, a triangle `T`
//! is of type `(F, i)` if exactly `i` of its edges lie in `E[F]`. For a
//! type `(F, 1)` triangle, `e(T)` is that edge, `T^` the member of `F`
//! containing it, `v(T)` and `v^(T)` the apexes of `T` and `T^` opposite
//! `e(T)`, and `E'(T)` the edges joining `v(T)` and `v^(T)`.

mod copies;

use std::collections::{BTreeMap, BTreeSet};

pub use copies::{CopyGraph, CopyTriangle, EdgeCopy};

use crate::certificate::{verify_transversal, TransversalCertificate};
use crate::cuts::cut_large;
use crate::error::{Error, Result};
use crate::exact::{nu_exact_with, NuOptions, SearchLimits};
use crate::graph::{EdgeKey, Multigraph};
use crate::par::{self, Mode};
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug)]
pub struct HaxellOptions {
    /// Node budget for each exact search.
    pub budget: Option<u64>,
    /// Largest type-1 family whose switch variants are enumerated.
    pub max_switch: usize,
    pub mode: Mode,
}

impl Default for HaxellOptions {
    fn default() -> Self {
        HaxellOptions { budget: Some(5_000_000), max_switch: 12, mode: Mode::Parallel }
    }
}

/// A type-1 triangle together with its anchor in the reference family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anchored {
    pub triangle: usize,
    pub partner: usize,
    pub shared: usize,
    pub v: usize,
    pub v_hat: usize,
    /// `E'(T)`, restricted to the host graph.
    pub rungs: Vec<usize>,
}

/// Family sizes divided by `nu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalars {
    pub gamma: Rational,
    pub gamma0: Rational,
    pub beta: Rational,
    pub alpha: Rational,
    pub delta: Rational,
    pub eta: Rational,
    pub eta_prime: Rational,
    pub delta0: Rational,
}

/// All families of the construction. Triangles are ids into `copies`.
#[derive(Clone, Debug)]
pub struct HaxellState {
    pub copies: CopyGraph,
    pub nu: u64,
    /// Maximum packing.
    pub b: Vec<usize>,
    /// Maximum family of type `(B, 1)` triangles.
    pub b1: Vec<Anchored>,
    /// Members of `B1` with `E'(T)` inside the first cover's base set.
    pub j: Vec<usize>,
    /// Maximum family of type `(B, 2)` triangles in `G' = G - E[B1]`.
    pub b2: Vec<usize>,
    /// Maximum family in `G'` using at least `|B2|` edges outside `E[B]`,
    /// before switching.
    pub b_prime_initial: Vec<usize>,
    /// Triangles of the initial type-1 family that were switched in.
    pub switched: Vec<usize>,
    pub b_prime: Vec<usize>,
    /// Maximum family of type `(B', 1)` triangles `T` of `G'` with
    /// `e(T)` outside `E[B]`.
    pub b1_prime: Vec<Anchored>,
    pub i: Vec<usize>,
    /// The two rungs assigned to each member of `i`.
    pub f: BTreeMap<usize, [usize; 2]>,
    pub i_prime: Vec<usize>,
    pub k: Vec<usize>,
    /// The packing of `G'` built from `I` and `B'`, disjoint from `B1`.
    pub lifted: Vec<usize>,
}

impl HaxellState {
    pub fn scalars(&self) -> Scalars {
        let nu = self.nu.max(1);
        let r = |x: usize| rational::ratio(x as i64, nu as i64);
        Scalars {
            gamma: r(self.b1.len()),
            gamma0: r(self.j.len()),
            beta: r(self.b2.len()),
            alpha: r(self.b_prime.len()),
            delta: r(self.b1_prime.len()),
            eta: r(self.i.len()),
            eta_prime: r(self.i_prime.len()),
            delta0: r(self.k.len()),
        }
    }

    fn anchor_prime(&self, t: usize) -> &Anchored {
        self.b1_prime.iter().find(|a| a.triangle == t).expect("member of B1'")
    }
}

/// One of the five explicit transversals.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub label: char,
    pub copies: BTreeSet<usize>,
    pub transversal: TransversalCertificate,
    /// Number of copies, checked against `bound`.
    pub size: u64,
    /// Weight of `transversal`, at most `size`.
    pub weight: u64,
    /// The smallest of the linear bounds proved for this candidate.
    pub bound: u64,
}

#[derive(Clone, Debug)]
pub struct HaxellOutcome {
    pub nu: u64,
    pub transversal: TransversalCertificate,
    pub weight: u64,
    pub chosen: char,
    pub candidates: Vec<Candidate>,
    pub state: HaxellState,
}

fn invariant(msg: impl Into<String>) -> Error {
    Error::Invariant(msg.into())
}

/// Triangles of `candidates` with exactly `count` copies in `set`.
fn of_type(cg: &CopyGraph, candidates: &[usize], set: &[bool], count: usize) -> Vec<usize> {
    candidates
        .iter()
        .copied()
        .filter(|&t| cg.triangle(t).edges.iter().filter(|&&e| set[e]).count() == count)
        .collect()
}

fn mask(m: usize, ids: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let mut out = vec![false; m];
    for i in ids {
        out[i] = true;
    }
    out
}

/// Owner of each copy in an edge-disjoint family.
fn owners(cg: &CopyGraph, family: &[usize]) -> Vec<Option<usize>> {
    let mut out = vec![None; cg.copy_count()];
    for &t in family {
        for e in cg.triangle(t).edges {
            out[e] = Some(t);
        }
    }
    out
}

/// Anchors each type-1 triangle of `family` to the member of the reference
/// family owning its shared edge. Rungs are restricted to `alive` copies.
fn anchor_all(
    cg: &CopyGraph,
    family: &[usize],
    owner: &[Option<usize>],
    alive: &[bool],
) -> Result<Vec<Anchored>> {
    let mut out = Vec::with_capacity(family.len());
    let mut partners = BTreeSet::new();
    for &t in family {
        let tri = cg.triangle(t);
        let shared = *tri
            .edges
            .iter()
            .find(|&&e| owner[e].is_some())
            .ok_or_else(|| invariant("type-1 triangle without anchor"))?;
        let partner = owner[shared].unwrap();
        if !partners.insert(partner) {
            return Err(invariant("two type-1 triangles share an anchor"));
        }
        let key = cg.copy(shared).key;
        let v = tri.vertices.apex(key);
        let v_hat = cg.triangle(partner).vertices.apex(key);
        let rungs = cg.copies_between(v, v_hat).iter().copied().filter(|&e| alive[e]).collect();
        out.push(Anchored { triangle: t, partner, shared, v, v_hat, rungs });
    }
    Ok(out)
}

/// Maximum family of type `(F, 1)` triangles of `G'` whose shared edge is
/// outside `E[B]`, anchored in `F`.
fn type1_prime(
    cg: &CopyGraph,
    reference: &[usize],
    in_b: &[bool],
    alive_triangles: &[usize],
    alive: &[bool],
    limits: SearchLimits,
) -> Result<Vec<Anchored>> {
    let in_ref = mask(cg.copy_count(), cg.edges_of(reference.iter().copied()));
    let candidates: Vec<usize> = of_type(cg, alive_triangles, &in_ref, 1)
        .into_iter()
        .filter(|&t| cg.triangle(t).edges.iter().all(|&e| !(in_ref[e] && in_b[e])))
        .collect();
    let sig: Vec<u8> = (0..cg.copy_count())
        .map(|e| in_b[e] as u8 | (alive[e] as u8) << 1 | (in_ref[e] as u8) << 2)
        .collect();
    let family = cg.max_family(&candidates, &sig, None, limits)?;
    anchor_all(cg, &family, &owners(cg, reference), alive)
}

/// Maximum set `I` of members with pairwise disjoint rung pairs `f(T)`
/// outside `E[F]` that also avoid `E(U)` for all `U` in `I`. Returns
/// positions into `members` and their pairs.
fn search_i(
    cg: &CopyGraph,
    members: &[Anchored],
    in_ref: &[bool],
    budget: Option<u64>,
) -> Result<Assignment> {
    struct S<'a> {
        cg: &'a CopyGraph,
        members: &'a [Anchored],
        options: Vec<Vec<[usize; 2]>>,
        used_f: Vec<bool>,
        used_e: Vec<bool>,
        current: Assignment,
        best: Assignment,
        nodes: u64,
        budget: Option<u64>,
    }
    impl S<'_> {
        fn visit(&mut self, j: usize) -> Result<()> {
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                return Err(Error::BudgetExceeded(self.budget.unwrap()));
            }
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            if j == self.members.len() || self.current.len() + self.members.len() - j <= self.best.len() {
                return Ok(());
            }
            let edges = self.cg.triangle(self.members[j].triangle).edges;
            if edges.iter().all(|&e| !self.used_f[e]) {
                for k in 0..self.options[j].len() {
                    let pair = self.options[j][k];
                    if pair.iter().any(|&e| self.used_f[e] || self.used_e[e] || edges.contains(&e)) {
                        continue;
                    }
                    for e in pair {
                        self.used_f[e] = true;
                    }
                    for e in edges {
                        self.used_e[e] = true;
                    }
                    self.current.push((j, pair));
                    self.visit(j + 1)?;
                    self.current.pop();
                    for e in pair {
                        self.used_f[e] = false;
                    }
                    for e in edges {
                        self.used_e[e] = false;
                    }
                }
            }
            self.visit(j + 1)
        }
    }
    let options = members
        .iter()
        .map(|a| {
            let free: Vec<usize> = a.rungs.iter().copied().filter(|&e| !in_ref[e]).collect();
            let mut pairs = Vec::new();
            for x in 0..free.len() {
                for y in x + 1..free.len() {
                    pairs.push([free[x], free[y]]);
                }
            }
            pairs
        })
        .collect();
    let m = cg.copy_count();
    let mut s = S {
        cg,
        members,
        options,
        used_f: vec![false; m],
        used_e: vec![false; m],
        current: Vec::new(),
        best: Vec::new(),
        nodes: 0,
        budget,
    };
    s.visit(0)?;
    Ok(s.best)
}

/// Positions into the type-1 family with their rung pairs.
type Assignment = Vec<(usize, [usize; 2])>;

/// Switch variant: members in `switched` replace their partners.
fn switch(reference: &[usize], members: &[Anchored], bits: u64) -> (Vec<usize>, Vec<Anchored>) {
    let mut fam: BTreeSet<usize> = reference.iter().copied().collect();
    let mut anchored = Vec::with_capacity(members.len());
    for (i, a) in members.iter().enumerate() {
        if bits >> i & 1 == 1 {
            fam.remove(&a.partner);
            fam.insert(a.triangle);
            anchored.push(Anchored {
                triangle: a.partner,
                partner: a.triangle,
                shared: a.shared,
                v: a.v_hat,
                v_hat: a.v,
                rungs: a.rungs.clone(),
            });
        } else {
            anchored.push(a.clone());
        }
    }
    (fam.into_iter().collect(), anchored)
}

/// Computes `nu`, the maximum packing and every derived family.
pub fn build_state(g: &Multigraph, opts: &HaxellOptions) -> Result<HaxellState> {
    let (nu, packing) = nu_exact_with(g, NuOptions { lp_ceiling: true, budget: opts.budget })?;
    let cg = CopyGraph::new(g);
    let m = cg.copy_count();
    let all: Vec<usize> = (0..cg.triangles().len()).collect();

    let mut next: BTreeMap<EdgeKey, usize> = BTreeMap::new();
    let mut b = Vec::new();
    for (&t, &k) in &packing.multiplicities {
        for _ in 0..k {
            let edges = t.pairs().map(|p| {
                let i = next.entry(p).or_insert(0);
                *i += 1;
                cg.copies_between(p.0, p.1)[*i - 1]
            });
            b.push(cg.find(edges).ok_or_else(|| invariant("packing triangle not expanded"))?);
        }
    }
    b.sort_unstable();
    let in_b = mask(m, cg.edges_of(b.iter().copied()));
    let owner_b = owners(&cg, &b);
    let everything = vec![true; m];

    let sig_b: Vec<u8> = in_b.iter().map(|&x| x as u8).collect();
    let limits = |ceiling| SearchLimits { budget: opts.budget, ceiling: Some(ceiling) };
    let b1_family = cg.max_family(&of_type(&cg, &all, &in_b, 1), &sig_b, None, limits(nu))?;
    let b1 = anchor_all(&cg, &b1_family, &owner_b, &everything)?;
    let in_b1 = mask(m, cg.edges_of(b1_family.iter().copied()));
    let alive: Vec<bool> = in_b1.iter().map(|x| !x).collect();
    let alive_triangles: Vec<usize> =
        all.iter().copied().filter(|&t| cg.triangle(t).edges.iter().all(|&e| alive[e])).collect();

    let rest = limits(nu - b1.len() as u64);
    let sig_g: Vec<u8> = (0..m).map(|e| in_b[e] as u8 | (alive[e] as u8) << 1).collect();
    let b2 = cg.max_family(&of_type(&cg, &alive_triangles, &in_b, 2), &sig_g, None, rest)?;

    let not_b: Vec<bool> = in_b.iter().map(|x| !x).collect();
    let need = Some((not_b.as_slice(), b2.len() as u64));
    let b_prime_initial = cg.max_family(&alive_triangles, &sig_g, need, rest)?;

    let initial = type1_prime(&cg, &b_prime_initial, &in_b, &alive_triangles, &alive, rest)?;
    if initial.len() > opts.max_switch {
        return Err(Error::TooLarge(format!("{} type-1 triangles to switch", initial.len())));
    }
    let masks: Vec<u64> = (0..1u64 << initial.len()).collect();
    let results = par::map(opts.mode, &masks, |&bits| -> Result<(u64, Assignment)> {
        let (fam, anchored) = switch(&b_prime_initial, &initial, bits);
        let in_ref = mask(m, cg.edges_of(fam));
        Ok((bits, search_i(&cg, &anchored, &in_ref, opts.budget)?))
    });
    let mut best: Option<(u64, Assignment)> = None;
    for r in results {
        let (bits, found) = r?;
        if best.as_ref().is_none_or(|(_, f)| found.len() > f.len()) {
            best = Some((bits, found));
        }
    }
    let (bits, found) = best.expect("at least the empty switch");
    let (b_prime, b1_prime) = switch(&b_prime_initial, &initial, bits);
    let switched = (0..initial.len()).filter(|i| bits >> i & 1 == 1).map(|i| initial[i].triangle).collect();

    let recomputed = type1_prime(&cg, &b_prime, &in_b, &alive_triangles, &alive, rest)?;
    if recomputed.len() != b1_prime.len() {
        return Err(invariant("switched type-1 family is not maximum"));
    }

    let i: Vec<usize> = found.iter().map(|&(j, _)| b1_prime[j].triangle).collect();
    let f: BTreeMap<usize, [usize; 2]> = found.iter().map(|&(j, p)| (b1_prime[j].triangle, p)).collect();
    let f_all: BTreeSet<usize> = f.values().flatten().copied().collect();
    let i_prime: Vec<usize> = b1_prime
        .iter()
        .map(|a| a.triangle)
        .filter(|t| !f.contains_key(t) && cg.triangle(*t).edges.iter().any(|e| f_all.contains(e)))
        .collect();
    if i_prime.len() > 2 * i.len() {
        return Err(invariant("|I'| > 2|I|"));
    }

    let partners_b1: BTreeSet<usize> = b1.iter().map(|a| a.partner).collect();
    let base_a: BTreeSet<usize> = cg
        .edges_of(b.iter().copied().filter(|t| !partners_b1.contains(t)))
        .into_iter()
        .chain(b1.iter().map(|a| a.shared))
        .collect();
    let j: Vec<usize> =
        b1.iter().filter(|a| a.rungs.iter().all(|e| base_a.contains(e))).map(|a| a.triangle).collect();

    let partners_prime: BTreeSet<usize> = b1_prime.iter().map(|a| a.partner).collect();
    let e0: BTreeSet<usize> = cg
        .edges_of(b_prime.iter().copied().filter(|t| !partners_prime.contains(t)))
        .into_iter()
        .chain(b1_prime.iter().map(|a| a.shared))
        .collect();
    let k: Vec<usize> =
        b1_prime.iter().filter(|a| a.rungs.iter().all(|e| e0.contains(e))).map(|a| a.triangle).collect();

    let mut state = HaxellState {
        copies: cg,
        nu,
        b,
        b1,
        j,
        b2,
        b_prime_initial,
        switched,
        b_prime,
        b1_prime,
        i,
        f,
        i_prime,
        k,
        lifted: Vec::new(),
    };
    state.lifted = lift(&state, &alive)?;
    Ok(state)
}

/// Replaces each `T^` with `T` in `I` by the two triangles through `f(T)`.
fn lift(s: &HaxellState, alive: &[bool]) -> Result<Vec<usize>> {
    let cg = &s.copies;
    let mut out = Vec::new();
    let mut hats = BTreeSet::new();
    for &t in &s.i {
        let a = s.anchor_prime(t);
        hats.insert(a.partner);
        let key = cg.copy(a.shared).key;
        let (tri, hat) = (cg.triangle(t), cg.triangle(a.partner));
        for (x, r) in [(key.0, s.f[&t][0]), (key.1, s.f[&t][1])] {
            let edges = [r, tri.edge_between(a.v, x), hat.edge_between(a.v_hat, x)];
            out.push(cg.find(edges).ok_or_else(|| invariant("lifted triangle missing"))?);
        }
    }
    out.extend(s.b_prime.iter().copied().filter(|t| !hats.contains(t)));
    out.sort_unstable();
    if !cg.is_independent(&out) || cg.edges_of(out.iter().copied()).iter().any(|&e| !alive[e]) {
        return Err(invariant("lifted family is not a packing of G'"));
    }
    if out.len() + s.b1.len() > s.nu as usize {
        return Err(invariant("lifted family exceeds nu"));
    }
    Ok(out)
}

/// The five transversals with their bounds, each checked.
pub fn candidate_transversals(g: &Multigraph, s: &HaxellState) -> Result<Vec<Candidate>> {
    let cg = &s.copies;
    let nu = s.nu as i64;
    let (b1, b2, bp, b1p) =
        (s.b1.len() as i64, s.b2.len() as i64, s.b_prime.len() as i64, s.b1_prime.len() as i64);
    let (i, k, j) = (s.i.len() as i64, s.k.len() as i64, s.j.len() as i64);
    let edges = |it: &mut dyn Iterator<Item = usize>| cg.edges_of(it.collect::<Vec<_>>());
    let e_b = edges(&mut s.b.iter().copied());
    let e_b1 = edges(&mut s.b1.iter().map(|a| a.triangle));
    let e_bp = edges(&mut s.b_prime.iter().copied());
    let mut out = Vec::new();

    // First cover: the unanchored part of B, the shared edges and all rungs.
    let hats1: BTreeSet<usize> = s.b1.iter().map(|a| a.partner).collect();
    let c1: BTreeSet<usize> = edges(&mut s.b.iter().copied().filter(|t| !hats1.contains(t)))
        .into_iter()
        .chain(s.b1.iter().map(|a| a.shared))
        .collect();
    let c2: BTreeSet<usize> = s.b1.iter().flat_map(|a| a.rungs.iter().copied()).collect();
    for a in &s.b1 {
        if a.rungs.iter().filter(|e| !c1.contains(e)).count() > 2 {
            return Err(invariant("more than two new rungs for one anchor"));
        }
    }
    let extra = c2.difference(&c1).count() as i64;
    if extra > 2 * (b1 - j) || extra > b1 + j {
        return Err(invariant("rung count exceeds its bound"));
    }
    let ca: BTreeSet<usize> = c1.union(&c2).copied().collect();
    out.push(('a', ca, (9 * nu - 2 * b1) / 3));

    // Second cover: B1, B2 and the uncut part of the remaining B edges.
    let used: BTreeSet<usize> = e_b1.union(&edges(&mut s.b2.iter().copied())).copied().collect();
    let rest: Vec<usize> = e_b.iter().copied().filter(|e| !used.contains(e)).collect();
    let mut cb = used.clone();
    if !rest.is_empty() {
        let mut w: BTreeMap<EdgeKey, u64> = BTreeMap::new();
        for &e in &rest {
            *w.entry(cg.copy(e).key).or_default() += 1;
        }
        let h = Multigraph::new(g.n(), w.iter().map(|(k, &x)| (k.0, k.1, x)))?;
        let cut = cut_large(&h)?;
        cb.extend(rest.iter().copied().filter(|&e| !cut.contains(cg.copy(e).key)));
    }
    out.push(('b', cb, (3 * nu + 5 * b1 + 4 * b2) / 2));

    // Third cover: B1, B1' and the edges common to B and B'.
    let cc: BTreeSet<usize> = e_b1
        .iter()
        .copied()
        .chain(edges(&mut s.b1_prime.iter().map(|a| a.triangle)))
        .chain(e_b.intersection(&e_bp).copied())
        .collect();
    out.push(('c', cc, 3 * b1 + 3 * b1p + 3 * bp - b2));

    // Fourth cover: B1, B' without the anchors of K, and the shared edges of K.
    let k_set: BTreeSet<usize> = s.k.iter().copied().collect();
    let k_hats: BTreeSet<usize> = s.k.iter().map(|&t| s.anchor_prime(t).partner).collect();
    let cd: BTreeSet<usize> = e_b1
        .iter()
        .copied()
        .chain(edges(&mut s.b_prime.iter().copied().filter(|t| !k_hats.contains(t))))
        .chain(s.k.iter().map(|&t| s.anchor_prime(t).shared))
        .collect();
    out.push(('d', cd, (3 * b1 + 3 * bp - 2 * k).min(3 * nu - 3 * i - 2 * k)));

    // Fifth cover: built around the rung pairs of I.
    let hats_p: BTreeSet<usize> = s.b1_prime.iter().map(|a| a.partner).collect();
    let i_set: BTreeSet<usize> = s.i.iter().copied().collect();
    let ip_set: BTreeSet<usize> = s.i_prime.iter().copied().collect();
    let mut ce: BTreeSet<usize> = e_b1.clone();
    ce.extend(edges(&mut s.b_prime.iter().copied().filter(|t| !hats_p.contains(t))));
    ce.extend(s.b1_prime.iter().map(|a| a.shared));
    for a in &s.b1_prime {
        let t = a.triangle;
        if i_set.contains(&t) {
            ce.extend(cg.triangle(t).edges);
            ce.extend(cg.triangle(a.partner).edges);
            ce.extend(s.f[&t]);
        } else if ip_set.contains(&t) || k_set.contains(&t) {
            ce.extend(cg.triangle(a.partner).edges);
        } else {
            ce.extend(a.rungs.iter().copied());
        }
    }
    out.push(('e', ce, 3 * nu - b1p + 4 * i + k));

    out.into_iter()
        .map(|(label, set, bound)| {
            let size = set.len() as u64;
            if bound < 0 || size > bound as u64 {
                return Err(invariant(format!("cover {label} has {size} edges, bound {bound}")));
            }
            if !cg.hits_all(&set) {
                return Err(invariant(format!("cover {label} misses a triangle")));
            }
            let transversal = cg.to_classes(&set);
            if !verify_transversal(g, &transversal)? {
                return Err(invariant(format!("cover {label} misses a triangle of the multigraph")));
            }
            let weight = transversal.weight(g)?;
            debug_assert!(weight <= size);
            Ok(Candidate { label, copies: set, transversal, size, weight, bound: bound as u64 })
        })
        .collect()
}

/// A transversal of weight at most `floor(73 nu / 25)`.
pub fn transversal_292(g: &Multigraph) -> Result<HaxellOutcome> {
    transversal_292_with(g, &HaxellOptions::default())
}

pub fn transversal_292_with(g: &Multigraph, opts: &HaxellOptions) -> Result<HaxellOutcome> {
    let state = build_state(g, opts)?;
    let candidates = candidate_transversals(g, &state)?;
    let best = candidates.iter().min_by_key(|c| c.weight).expect("five candidates");
    let smallest = candidates.iter().map(|c| c.size).min().unwrap();
    if 25 * smallest > 73 * state.nu || 25 * best.weight > 73 * state.nu {
        return Err(invariant("no candidate within 73/25 nu"));
    }
    Ok(HaxellOutcome {
        nu: state.nu,
        transversal: best.transversal.clone(),
        weight: best.weight,
        chosen: best.label,
        candidates,
        state,
    })
}

#[cfg(test)]
mod tests;
