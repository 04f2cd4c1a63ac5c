//! Edge-weighted graphs standing in for multigraphs.
//!
//! A [`Multigraph`] stores each unordered vertex pair at most once together
//! with an integer multiplicity `w`. Parallel edges are never materialised;
//! a pair with `w = 3` is three parallel edges, and a pair with `w = 0` is
//! still an edge for triangle enumeration but costs nothing to cover.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Unordered vertex pair, normalised so that `.0 < .1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeKey(pub usize, pub usize);

impl EdgeKey {
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "edge endpoints must differ");
        if a < b {
            EdgeKey(a, b)
        } else {
            EdgeKey(b, a)
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`.
    pub fn other(&self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            debug_assert_eq!(self.1, v);
            self.0
        }
    }
}

impl fmt::Display for EdgeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A vertex triple in canonical (sorted) order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle(pub [usize; 3]);

impl Triangle {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        assert!(v[0] != v[1] && v[1] != v[2], "triangle vertices must differ");
        Triangle(v)
    }

    pub fn vertices(&self) -> [usize; 3] {
        self.0
    }

    /// The three vertex pairs, in lexicographic order.
    pub fn pairs(&self) -> [EdgeKey; 3] {
        let [a, b, c] = self.0;
        [EdgeKey(a, b), EdgeKey(a, c), EdgeKey(b, c)]
    }

    pub fn contains_pair(&self, e: EdgeKey) -> bool {
        self.0.contains(&e.0) && self.0.contains(&e.1)
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    /// The vertex opposite to `e`; `e` must be a pair of this triangle.
    pub fn apex(&self, e: EdgeKey) -> usize {
        debug_assert!(self.contains_pair(e));
        *self.0.iter().find(|&&v| !e.contains(v)).unwrap()
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub key: EdgeKey,
    pub w: u64,
}

/// Vertex set `0..n` plus a weighted edge list, one entry per vertex pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<BTreeMap<usize, usize>>,
}

impl Multigraph {
    /// Builds a graph from `(u, v, w)` triples. Repeated pairs have their
    /// weights summed.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut weights: BTreeMap<EdgeKey, u64> = BTreeMap::new();
        for (u, v, w) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            *weights.entry(EdgeKey::new(u, v)).or_insert(0) += w;
        }
        Ok(Self::from_map(n, weights))
    }

    /// Graph with every listed pair at weight 1.
    pub fn simple<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(n, pairs.into_iter().map(|(u, v)| (u, v, 1)))
    }

    fn from_map(n: usize, weights: BTreeMap<EdgeKey, u64>) -> Self {
        let edges: Vec<Edge> = weights.into_iter().map(|(key, w)| Edge { key, w }).collect();
        let mut adj = vec![BTreeMap::new(); n];
        for (i, e) in edges.iter().enumerate() {
            adj[e.key.0].insert(e.key.1, i);
            adj[e.key.1].insert(e.key.0, i);
        }
        Multigraph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges in canonical (lexicographic) order; the position is the edge id.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn total_weight(&self) -> u64 {
        self.edges.iter().map(|e| e.w).sum()
    }

    pub fn edge_id(&self, key: EdgeKey) -> Option<usize> {
        self.adj.get(key.0)?.get(&key.1).copied()
    }

    pub fn weight_of(&self, key: EdgeKey) -> Option<u64> {
        self.edge_id(key).map(|i| self.edges[i].w)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && a < self.n && self.adj[a].contains_key(&b)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].keys().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Degree counting multiplicities.
    pub fn weighted_degree(&self, v: usize) -> u64 {
        self.adj[v].values().map(|&i| self.edges[i].w).sum()
    }

    /// Every vertex triple whose three pairs are edges, whatever their
    /// weights, in lexicographic order.
    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for (&b, _) in self.adj[a].range(a + 1..) {
                for (&c, _) in self.adj[b].range(b + 1..) {
                    if self.adj[a].contains_key(&c) {
                        out.push(Triangle([a, b, c]));
                    }
                }
            }
        }
        out
    }

    pub fn is_triangle(&self, t: Triangle) -> bool {
        t.0.iter().all(|&v| v < self.n) && t.pairs().iter().all(|&p| self.edge_id(p).is_some())
    }

    pub fn triangle_edge_ids(&self, t: Triangle) -> Option<[usize; 3]> {
        let [p, q, r] = t.pairs();
        Some([self.edge_id(p)?, self.edge_id(q)?, self.edge_id(r)?])
    }

    pub fn is_triangle_free(&self) -> bool {
        self.first_triangle().is_none()
    }

    pub fn first_triangle(&self) -> Option<Triangle> {
        for a in 0..self.n {
            for (&b, _) in self.adj[a].range(a + 1..) {
                for (&c, _) in self.adj[b].range(b + 1..) {
                    if self.adj[a].contains_key(&c) {
                        return Some(Triangle([a, b, c]));
                    }
                }
            }
        }
        None
    }

    /// Edge-triangle incidence in sparse form.
    pub fn incidence(&self) -> Incidence {
        let triangles = self.triangles();
        let mut rows = vec![Vec::new(); self.edges.len()];
        let mut cols = Vec::with_capacity(triangles.len());
        for (j, &t) in triangles.iter().enumerate() {
            let ids = self.triangle_edge_ids(t).expect("enumerated triangle");
            for &i in &ids {
                rows[i].push(j);
            }
            cols.push(ids);
        }
        Incidence { triangles, rows, cols }
    }

    /// Same vertex set and edges, weights replaced by `f(key, w)`.
    pub fn map_weights(&self, mut f: impl FnMut(EdgeKey, u64) -> u64) -> Self {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.w = f(e.key, e.w);
        }
        g
    }

    /// Keeps only the edges for which `keep` holds.
    pub fn filter_edges(&self, mut keep: impl FnMut(&Edge) -> bool) -> Self {
        let map = self.edges.iter().filter(|e| keep(e)).map(|e| (e.key, e.w)).collect();
        Self::from_map(self.n, map)
    }

    pub fn without_edge(&self, key: EdgeKey) -> Self {
        self.filter_edges(|e| e.key != key)
    }

    /// Removes every edge at `v`; vertex ids are unchanged.
    pub fn without_vertex_edges(&self, v: usize) -> Self {
        self.filter_edges(|e| !e.key.contains(v))
    }

    /// Edges of positive weight only.
    pub fn positive_part(&self) -> Self {
        self.filter_edges(|e| e.w > 0)
    }

    /// Connected components over the listed edges, isolated vertices
    /// included; each component is sorted and components are ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let map = self.edges.iter().map(|e| (EdgeKey::new(perm[e.key.0], perm[e.key.1]), e.w)).collect();
        Self::from_map(self.n, map)
    }
}

/// Sparse edge-triangle incidence: `rows[e]` lists the triangles through
/// edge `e`, `cols[t]` the three edge ids of triangle `t`.
#[derive(Clone, Debug)]
pub struct Incidence {
    pub triangles: Vec<Triangle>,
    pub rows: Vec<Vec<usize>>,
    pub cols: Vec<[usize; 3]>,
}

impl Incidence {
    pub fn entry(&self, edge: usize, triangle: usize) -> bool {
        self.cols[triangle].contains(&edge)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn k(n: usize) -> Multigraph {
        let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Multigraph::simple(n, pairs).unwrap()
    }

    #[test]
    fn k4_has_four_triangles() {
        assert_eq!(k(4).triangles().len(), 4);
    }

    #[test]
    fn c5_has_none() {
        let c5 = Multigraph::simple(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(c5.triangles().is_empty());
        assert!(c5.is_triangle_free());
    }

    #[test]
    fn zero_weight_edges_still_form_triangles() {
        let g = Multigraph::new(3, [(0, 1, 0), (1, 2, 1), (0, 2, 2)]).unwrap();
        assert_eq!(g.triangles(), vec![Triangle([0, 1, 2])]);
    }

    #[test]
    fn duplicates_sum_and_errors() {
        let g = Multigraph::new(2, [(0, 1, 1), (1, 0, 2)]).unwrap();
        assert_eq!(g.weight_of(EdgeKey(0, 1)), Some(3));
        assert_eq!(g.edge_count(), 1);
        assert!(matches!(Multigraph::new(2, [(0, 5, 1)]), Err(Error::VertexOutOfRange { vertex: 5, n: 2 })));
        assert_eq!(Multigraph::new(2, [(1, 1, 1)]), Err(Error::LoopEdge(1)));
    }

    #[test]
    fn incidence_shapes() {
        let t = k(3).incidence();
        assert_eq!(t.rows.len(), 3);
        assert_eq!(t.cols.len(), 1);
        assert!((0..3).all(|e| t.entry(e, 0)));

        let k4 = k(4).incidence();
        assert_eq!((k4.rows.len(), k4.cols.len()), (6, 4));
        assert!(k4.rows.iter().all(|r| r.len() == 2));

        let path = Multigraph::simple(3, [(0, 1), (1, 2)]).unwrap().incidence();
        assert!(path.cols.is_empty());
        assert!(path.rows.iter().all(|r| r.is_empty()));
    }

    fn arb_graph() -> impl Strategy<Value = (Multigraph, Vec<usize>)> {
        (3usize..8).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
            let m = pairs.len();
            (
                proptest::collection::vec(0u64..3, m),
                Just(pairs),
                Just(n),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            )
                .prop_map(|(ws, pairs, n, perm)| {
                    let edges =
                        pairs.into_iter().zip(ws).filter(|(_, w)| *w > 0).map(|((a, b), w)| (a, b, w - 1));
                    (Multigraph::new(n, edges).unwrap(), perm)
                })
        })
    }

    proptest! {
        #[test]
        fn triangles_follow_relabeling((g, perm) in arb_graph()) {
            let h = g.relabel(&perm);
            let mut mapped: Vec<Triangle> = g
                .triangles()
                .into_iter()
                .map(|t| Triangle::new(perm[t.0[0]], perm[t.0[1]], perm[t.0[2]]))
                .collect();
            mapped.sort();
            prop_assert_eq!(mapped, h.triangles());
        }
    }
}
