//! Large independent sets in triangle-free graphs and large edge-cuts in
//! multigraphs.
//!
//! Multiplicities are edge weights; zero-weight edges carry no copies and
//! are ignored by the cut routines.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{EdgeKey, Multigraph};
use crate::rational::{self, Rational};

/// The cut `delta(W)` of a shore `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCut {
    pub shore: BTreeSet<usize>,
    /// Crossing edge classes of positive weight.
    pub cut_edges: Vec<EdgeKey>,
    /// Total multiplicity crossing the cut.
    pub size: u64,
}

impl EdgeCut {
    pub fn from_shore(g: &Multigraph, shore: BTreeSet<usize>) -> Self {
        let mut cut_edges = Vec::new();
        let mut size = 0;
        for e in g.edges() {
            if e.w > 0 && shore.contains(&e.key.0) != shore.contains(&e.key.1) {
                cut_edges.push(e.key);
                size += e.w;
            }
        }
        EdgeCut { shore, cut_edges, size }
    }

    pub fn contains(&self, e: EdgeKey) -> bool {
        self.shore.contains(&e.0) != self.shore.contains(&e.1)
    }
}

/// Independent set of size at least `sqrt(v)/2` in a triangle-free graph:
/// the neighbourhood of a vertex of degree `>= sqrt(v)/2` if one exists,
/// otherwise a greedy lowest-id choice.
pub fn independent_set_triangle_free(h: &Multigraph) -> Result<BTreeSet<usize>> {
    independent_set_weighted(h, &vec![1; h.n()])
}

/// The same algorithm run on the blow-up of `h` in which vertex `x` becomes
/// `weights[x]` pairwise non-adjacent copies. Copies of one vertex always
/// end up together, so the result is a set of original vertices whose total
/// weight is at least `sqrt(sum of weights)/2`.
pub fn independent_set_weighted(h: &Multigraph, weights: &[u64]) -> Result<BTreeSet<usize>> {
    if weights.len() != h.n() {
        return Err(Error::BadParam(format!("{} vertex weights for {} vertices", weights.len(), h.n())));
    }
    if let Some(t) = h.first_triangle() {
        return Err(Error::NotTriangleFree(t));
    }
    let total: u64 = weights.iter().sum();
    let nbr_weight = |x: usize| h.neighbors(x).map(|y| weights[y]).sum::<u64>();
    let hub = (0..h.n()).find(|&x| {
        let d = nbr_weight(x) as u128;
        4 * d * d >= total as u128
    });
    let set: BTreeSet<usize> = match hub {
        Some(x) => h.neighbors(x).collect(),
        None => {
            let mut alive = vec![true; h.n()];
            let mut set = BTreeSet::new();
            for x in 0..h.n() {
                if alive[x] && weights[x] > 0 {
                    set.insert(x);
                    for y in h.neighbors(x) {
                        alive[y] = false;
                    }
                }
            }
            set
        }
    };
    let got: u64 = set.iter().map(|&x| weights[x]).sum();
    if !rational::ge_half_sqrt(&rational::from_u64(got), &rational::from_u64(total)) {
        return Err(Error::Invariant(format!("independent set of weight {got} below sqrt({total})/2")));
    }
    Ok(set)
}

/// Working copy of a connected piece of the multigraph.
#[derive(Clone, Debug)]
struct Piece {
    verts: BTreeSet<usize>,
    w: BTreeMap<EdgeKey, u64>,
}

impl Piece {
    fn of(g: &Multigraph, verts: &[usize]) -> Self {
        let verts: BTreeSet<usize> = verts.iter().copied().collect();
        let w = g
            .edges()
            .iter()
            .filter(|e| e.w > 0 && verts.contains(&e.key.0) && verts.contains(&e.key.1))
            .map(|e| (e.key, e.w))
            .collect();
        Piece { verts, w }
    }

    fn size(&self) -> u64 {
        self.w.values().sum()
    }

    fn degree(&self, x: usize) -> u64 {
        self.w.iter().filter(|(k, _)| k.contains(x)).map(|(_, &m)| m).sum()
    }

    fn induced(&self, verts: BTreeSet<usize>) -> Piece {
        let w = self
            .w
            .iter()
            .filter(|(k, _)| verts.contains(&k.0) && verts.contains(&k.1))
            .map(|(&k, &m)| (k, m))
            .collect();
        Piece { verts, w }
    }

    fn without(&self, x: usize) -> Piece {
        let mut verts = self.verts.clone();
        verts.remove(&x);
        self.induced(verts)
    }

    fn components(&self) -> Vec<BTreeSet<usize>> {
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for k in self.w.keys() {
            adj.entry(k.0).or_default().push(k.1);
            adj.entry(k.1).or_default().push(k.0);
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &s in &self.verts {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = BTreeSet::from([s]);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in adj.get(&x).into_iter().flatten() {
                    if seen.insert(y) {
                        comp.insert(y);
                        queue.push_back(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    fn crossing(&self, shore: &BTreeSet<usize>) -> u64 {
        self.w.iter().filter(|(k, _)| shore.contains(&k.0) != shore.contains(&k.1)).map(|(_, &m)| m).sum()
    }
}

/// Adds `x` to the side of `shore` that gains more crossing edges.
fn place(p: &Piece, x: usize, mut shore: BTreeSet<usize>) -> BTreeSet<usize> {
    let (mut into, mut away) = (0, 0);
    for (k, &m) in &p.w {
        if k.contains(x) {
            if shore.contains(&k.other(x)) {
                into += m;
            } else {
                away += m;
            }
        }
    }
    if away >= into {
        shore.insert(x);
    }
    shore
}

/// Union of shores of pieces meeting only in `x`, each flipped so that it
/// contains `x`.
fn glue(x: usize, parts: Vec<(BTreeSet<usize>, BTreeSet<usize>)>) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for (verts, shore) in parts {
        if shore.contains(&x) {
            out.extend(shore);
        } else {
            out.extend(verts.difference(&shore).copied());
        }
    }
    out
}

fn connected_shore(p: &Piece) -> BTreeSet<usize> {
    let mut it = p.verts.iter();
    match p.verts.len() {
        0 | 1 => return BTreeSet::new(),
        2 => return BTreeSet::from([*it.next().unwrap()]),
        _ => {}
    }
    if let Some(&x) = p.verts.iter().find(|&&x| p.degree(x) % 2 == 1) {
        let rest = p.without(x);
        let comps = rest.components();
        if comps.len() == 1 {
            return place(p, x, connected_shore(&rest));
        }
        let into = |c: &BTreeSet<usize>| {
            p.w.iter().filter(|(k, _)| k.contains(x) && c.contains(&k.other(x))).map(|(_, &m)| m).sum::<u64>()
        };
        let c = comps.iter().find(|c| into(c) % 2 == 1).expect("odd degree splits oddly");
        let mut left = c.clone();
        left.insert(x);
        let right: BTreeSet<usize> = p.verts.difference(c).copied().collect();
        let parts = [left, right]
            .into_iter()
            .map(|vs| {
                let sub = p.induced(vs.clone());
                (vs, connected_shore(&sub))
            })
            .collect();
        return glue(x, parts);
    }
    if p.w.values().all(|m| m % 2 == 0) {
        let half = Piece { verts: p.verts.clone(), w: p.w.iter().map(|(&k, &m)| (k, m / 2)).collect() };
        return connected_shore(&half);
    }
    let (odd, _) = p.w.iter().find(|(_, &m)| m % 2 == 1).expect("some odd multiplicity");
    let x = odd.0;
    let rest = p.without(x);
    let comps = rest.components();
    if comps.len() == 1 {
        return place(p, x, connected_shore(&rest));
    }
    let parts = comps
        .into_iter()
        .map(|mut vs| {
            vs.insert(x);
            let sub = p.induced(vs.clone());
            (vs, connected_shore(&sub))
        })
        .collect();
    glue(x, parts)
}

/// Cut of size at least `e/2 + (v-1)/4` in a connected multigraph, and at
/// least `e/2 + v/4` when some vertex has odd degree. Follows the inductive
/// proof: split off an odd-degree vertex, halve all-even multiplicities, or
/// split off an endpoint of an odd-multiplicity pair, taking the
/// lexicographically smallest choice each time.
pub fn cut_connected(g: &Multigraph) -> Result<EdgeCut> {
    let pos = g.positive_part();
    if pos.total_weight() == 0 {
        return Err(Error::Edgeless);
    }
    if pos.components().len() != 1 {
        return Err(Error::Disconnected);
    }
    let verts: Vec<usize> = (0..g.n()).collect();
    let piece = Piece::of(g, &verts);
    let cut = EdgeCut::from_shore(g, connected_shore(&piece));
    let (e, v) = (piece.size(), g.n() as u64);
    let odd = (0..g.n()).any(|x| g.weighted_degree(x) % 2 == 1);
    let need = 2 * e + v - u64::from(!odd);
    if 4 * cut.size < need {
        return Err(Error::Invariant(format!("cut {} below e/2 + (v-1)/4 for e = {e}, v = {v}", cut.size)));
    }
    Ok(cut)
}

/// Balanced shore of size `floor(v/2)` chosen by conditional expectations
/// under the uniform distribution; ties put the vertex into the shore.
fn balanced_shore(p: &Piece) -> BTreeSet<usize> {
    let order: Vec<usize> = p.verts.iter().copied().collect();
    let mut side: BTreeMap<usize, bool> = BTreeMap::new();
    let mut slots = order.len() / 2;
    for (i, &x) in order.iter().enumerate() {
        let free = order.len() - i;
        let mut best: Option<(Rational, bool)> = None;
        for inside in [true, false] {
            if (inside && slots == 0) || (!inside && free - slots == 0) {
                continue;
            }
            side.insert(x, inside);
            let k = slots - usize::from(inside);
            let value = expected_crossing(p, &side, free - 1, k);
            if best.as_ref().is_none_or(|(b, _)| value > *b) {
                best = Some((value, inside));
            }
        }
        let inside = best.expect("some side has room").1;
        side.insert(x, inside);
        slots -= usize::from(inside);
    }
    side.into_iter().filter(|&(_, s)| s).map(|(x, _)| x).collect()
}

/// Expected crossing multiplicity when `k` of the `free` undecided vertices
/// are drawn uniformly into the shore.
fn expected_crossing(p: &Piece, side: &BTreeMap<usize, bool>, free: usize, k: usize) -> Rational {
    let (r, k) = (free as i64, k as i64);
    let mut total = Rational::zero();
    for (key, &m) in &p.w {
        let prob = match (side.get(&key.0), side.get(&key.1)) {
            (Some(a), Some(b)) => rational::int(i64::from(a != b)),
            (Some(&s), None) | (None, Some(&s)) => {
                if s {
                    rational::ratio(r - k, r)
                } else {
                    rational::ratio(k, r)
                }
            }
            (None, None) => rational::ratio(2 * k * (r - k), r * (r - 1)),
        };
        total += prob * rational::from_u64(m);
    }
    total
}

/// Cut of size at least `e/2 + sqrt(e)/4`. Each component with
/// `v >= 2 sqrt(e)` uses [`cut_connected`]; the others use a derandomized
/// balanced bipartition, which reaches `e/2 + e/(2v)`.
pub fn cut_large(g: &Multigraph) -> Result<EdgeCut> {
    let pos = g.positive_part();
    let e = pos.total_weight();
    if e == 0 {
        return Err(Error::Edgeless);
    }
    let mut shore = BTreeSet::new();
    for comp in pos.components() {
        let piece = Piece::of(&pos, &comp);
        let (ec, vc) = (piece.size(), comp.len() as u64);
        if ec == 0 {
            continue;
        }
        if vc * vc >= 4 * ec {
            shore.extend(connected_shore(&piece));
        } else {
            let s = balanced_shore(&piece);
            let got = piece.crossing(&s);
            if 2 * vc * got < ec * (vc + 1) {
                return Err(Error::Invariant(format!("balanced cut {got} below e/2 + e/(2v)")));
            }
            shore.extend(s);
        }
    }
    let cut = EdgeCut::from_shore(g, shore);
    if !rational::ge_half_plus_quarter_sqrt(&rational::from_u64(cut.size), &rational::from_u64(e)) {
        return Err(Error::Invariant(format!("cut {} below e/2 + sqrt(e)/4 for e = {e}", cut.size)));
    }
    Ok(cut)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, gen_random_connected, gen_random_triangle_free, petersen};
    use proptest::prelude::*;

    fn max_cut(g: &Multigraph) -> u64 {
        (0u32..1 << g.n())
            .map(|mask| {
                let shore = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
                EdgeCut::from_shore(g, shore).size
            })
            .max()
            .unwrap_or(0)
    }

    fn independent(h: &Multigraph, s: &BTreeSet<usize>) -> bool {
        s.iter().all(|&a| s.iter().all(|&b| !h.has_edge(a, b)))
    }

    fn max_independent(h: &Multigraph) -> usize {
        (0u32..1 << h.n())
            .filter_map(|mask| {
                let s: BTreeSet<usize> = (0..h.n()).filter(|&v| mask >> v & 1 == 1).collect();
                independent(h, &s).then_some(s.len())
            })
            .max()
            .unwrap()
    }

    #[test]
    fn independent_set_examples() {
        let one = Multigraph::new(1, []).unwrap();
        assert_eq!(independent_set_triangle_free(&one).unwrap(), BTreeSet::from([0]));
        let c5 = cycle(5).unwrap();
        let s = independent_set_triangle_free(&c5).unwrap();
        assert_eq!(s.len(), 2);
        assert!(independent(&c5, &s));
        let p = petersen();
        let s = independent_set_triangle_free(&p).unwrap();
        assert!(s.len() >= 2 && independent(&p, &s));
        assert_eq!(max_independent(&p), 4);
        assert!(matches!(independent_set_triangle_free(&complete(3)), Err(Error::NotTriangleFree(_))));
    }

    #[test]
    fn weighted_independent_set_is_closed_under_copies() {
        // path 0-1-2 with a heavy middle vertex
        let h = Multigraph::simple(3, [(0, 1), (1, 2)]).unwrap();
        let s = independent_set_weighted(&h, &[1, 9, 1]).unwrap();
        assert!(independent(&h, &s));
        assert!(s.iter().map(|&x| [1, 9, 1][x]).sum::<u64>() * 2 >= 4);
    }

    #[test]
    fn cut_connected_examples() {
        assert_eq!(cut_connected(&complete(3)).unwrap().size, 2);
        let m3 = Multigraph::new(2, [(0, 1, 3)]).unwrap();
        assert_eq!(cut_connected(&m3).unwrap().size, 3);
        assert_eq!(cut_connected(&complete(4)).unwrap().size, 4);
        let two = Multigraph::simple(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(cut_connected(&two), Err(Error::Disconnected));
        assert_eq!(cut_connected(&Multigraph::new(2, []).unwrap()), Err(Error::Edgeless));
    }

    #[test]
    fn cut_large_examples() {
        assert_eq!(cut_large(&Multigraph::simple(2, [(0, 1)]).unwrap()).unwrap().size, 1);
        assert_eq!(cut_large(&complete(4)).unwrap().size, 4);
        let two = Multigraph::simple(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(cut_large(&two).unwrap().size, 4);
        // dense component takes the balanced branch
        let heavy = Multigraph::new(3, [(0, 1, 3), (1, 2, 3), (0, 2, 3)]).unwrap();
        let c = cut_large(&heavy).unwrap();
        assert_eq!(c.size, 6);
        assert_eq!(cut_large(&Multigraph::new(3, []).unwrap()), Err(Error::Edgeless));
    }

    #[test]
    fn cut_edges_match_shore() {
        let g = Multigraph::new(4, [(0, 1, 2), (1, 2, 1), (2, 3, 0), (0, 3, 1)]).unwrap();
        let c = EdgeCut::from_shore(&g, BTreeSet::from([0, 2]));
        assert_eq!(c.cut_edges, vec![EdgeKey(0, 1), EdgeKey(0, 3), EdgeKey(1, 2)]);
        assert_eq!(c.size, 4);
        assert!(c.contains(EdgeKey(2, 3)));
    }

    proptest! {
        #[test]
        fn connected_cut_bounds(n in 2usize..9, extra in 0usize..12, mult in 1u64..4, seed in any::<u64>()) {
            let g = gen_random_connected(n, extra, mult, seed).unwrap();
            let c = cut_connected(&g).unwrap();
            let e = g.total_weight();
            prop_assert!(4 * c.size + 1 >= 2 * e + n as u64);
            prop_assert!(c.size <= max_cut(&g));
            let l = cut_large(&g).unwrap();
            prop_assert!(l.size <= max_cut(&g));
        }

        #[test]
        fn independent_set_bound(n in 1usize..25, p in 0.05f64..0.9, seed in any::<u64>()) {
            let h = gen_random_triangle_free(n, p, seed);
            let s = independent_set_triangle_free(&h).unwrap();
            prop_assert!(independent(&h, &s));
            prop_assert!(4 * s.len() * s.len() >= n);
        }
    }
}
