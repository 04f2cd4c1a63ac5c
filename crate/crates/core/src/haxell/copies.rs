//! Parallel edges made explicit.
//!
//! Every pair of weight `w` becomes `w` distinct edge copies and every
//! triangle of the multigraph becomes one triangle per choice of copies.
//! Pairs of weight zero have no copies, so they carry no copy triangles.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::certificate::TransversalCertificate;
use crate::error::{Error, Result};
use crate::exact::{max_packing, PackingProblem, Predicate, SearchLimits};
use crate::graph::{EdgeKey, Multigraph, Triangle};

/// A single parallel copy of a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeCopy {
    pub key: EdgeKey,
    pub index: u64,
}

impl fmt::Display for EdgeCopy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.key, self.index)
    }
}

/// Triangle of the expanded graph. `edges[i]` is a copy of
/// `vertices.pairs()[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CopyTriangle {
    pub vertices: Triangle,
    pub edges: [usize; 3],
}

impl CopyTriangle {
    /// The copy joining `a` and `b`.
    pub fn edge_between(&self, a: usize, b: usize) -> usize {
        let key = EdgeKey::new(a, b);
        let i = self.vertices.pairs().iter().position(|&p| p == key).expect("pair of triangle");
        self.edges[i]
    }

    pub fn has_edge(&self, copy: usize) -> bool {
        self.edges.contains(&copy)
    }
}

#[derive(Clone, Debug)]
pub struct CopyGraph {
    copies: Vec<EdgeCopy>,
    by_key: BTreeMap<EdgeKey, Vec<usize>>,
    triangles: Vec<CopyTriangle>,
    lookup: HashMap<[usize; 3], usize>,
    zero_in_triangles: BTreeSet<EdgeKey>,
}

impl CopyGraph {
    pub fn new(g: &Multigraph) -> Self {
        let mut copies = Vec::new();
        let mut by_key = BTreeMap::new();
        for e in g.edges() {
            let ids: Vec<usize> = (0..e.w)
                .map(|index| {
                    copies.push(EdgeCopy { key: e.key, index });
                    copies.len() - 1
                })
                .collect();
            by_key.insert(e.key, ids);
        }
        let mut triangles = Vec::new();
        let mut zero_in_triangles = BTreeSet::new();
        for t in g.triangles() {
            let [p, q, r] = t.pairs().map(|k| &by_key[&k]);
            for k in t.pairs() {
                if by_key[&k].is_empty() {
                    zero_in_triangles.insert(k);
                }
            }
            for &x in p {
                for &y in q {
                    for &z in r {
                        triangles.push(CopyTriangle { vertices: t, edges: [x, y, z] });
                    }
                }
            }
        }
        let lookup = triangles
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let mut k = t.edges;
                k.sort_unstable();
                (k, i)
            })
            .collect();
        CopyGraph { copies, by_key, triangles, lookup, zero_in_triangles }
    }

    pub fn copy_count(&self) -> usize {
        self.copies.len()
    }

    pub fn copy(&self, id: usize) -> EdgeCopy {
        self.copies[id]
    }

    pub fn triangles(&self) -> &[CopyTriangle] {
        &self.triangles
    }

    pub fn triangle(&self, id: usize) -> &CopyTriangle {
        &self.triangles[id]
    }

    /// All copies of the pair `{a, b}`; empty if it is not an edge.
    pub fn copies_between(&self, a: usize, b: usize) -> &[usize] {
        if a == b {
            return &[];
        }
        self.by_key.get(&EdgeKey::new(a, b)).map_or(&[], |v| v.as_slice())
    }

    /// Id of the triangle with exactly these three copies.
    pub fn find(&self, mut edges: [usize; 3]) -> Option<usize> {
        edges.sort_unstable();
        self.lookup.get(&edges).copied()
    }

    pub fn hits_all(&self, set: &BTreeSet<usize>) -> bool {
        self.triangles.iter().all(|t| t.edges.iter().any(|e| set.contains(e)))
    }

    /// The pairs all of whose copies lie in `set`, together with every
    /// weight-zero pair that lies in a triangle.
    pub fn to_classes(&self, set: &BTreeSet<usize>) -> TransversalCertificate {
        let full = self
            .by_key
            .iter()
            .filter(|(_, ids)| !ids.is_empty() && ids.iter().all(|i| set.contains(i)))
            .map(|(&k, _)| k);
        TransversalCertificate::new(full.chain(self.zero_in_triangles.iter().copied()))
    }

    /// Maximum edge-disjoint subfamily of `candidates`.
    ///
    /// Copies of one pair with equal `signature` are treated as
    /// interchangeable, so `candidates` must be closed under swapping them.
    /// The search then runs on groups of copies with capacities instead of
    /// single copies. With `outside = Some((flag, need))` the family must
    /// use at least `need` flagged copies; the flag must be constant on
    /// each group. A `ceiling` in `limits` must be a valid upper bound.
    pub fn max_family(
        &self,
        candidates: &[usize],
        signature: &[u8],
        outside: Option<(&[bool], u64)>,
        limits: SearchLimits,
    ) -> Result<Vec<usize>> {
        let mut index: BTreeMap<(EdgeKey, u8), usize> = BTreeMap::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        let mut group_of = vec![0; self.copies.len()];
        for (id, c) in self.copies.iter().enumerate() {
            let gid = *index.entry((c.key, signature[id])).or_insert_with(|| {
                members.push(Vec::new());
                members.len() - 1
            });
            members[gid].push(id);
            group_of[id] = gid;
        }
        let items: Vec<[usize; 3]> = candidates
            .iter()
            .map(|&t| self.triangles[t].edges.map(|e| group_of[e]))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let problem = PackingProblem {
            caps: members.iter().map(|m| m.len() as u64).collect(),
            ends: members
                .iter()
                .map(|m| {
                    let k = self.copies[m[0]].key;
                    (k.0, k.1)
                })
                .collect(),
            items,
            max_mult: u64::MAX,
        };
        let gain: Vec<u64> = match outside {
            Some((flag, _)) => problem
                .items
                .iter()
                .map(|it| it.iter().filter(|&&g| flag[members[g][0]]).count() as u64)
                .collect(),
            None => Vec::new(),
        };
        let need = outside.map_or(0, |(_, n)| n);
        let accept = |mult: &[u64]| mult.iter().zip(&gain).map(|(m, g)| m * g).sum::<u64>() >= need;
        let pred: Option<Predicate<'_>> = outside.map(|_| &accept as Predicate<'_>);
        let mult = max_packing(&problem, pred, limits)?
            .ok_or_else(|| Error::Invariant("no admissible triangle family".into()))?;
        let allowed: BTreeSet<usize> = candidates.iter().copied().collect();
        let mut next = vec![0; members.len()];
        let mut out = Vec::new();
        for (item, k) in problem.items.iter().zip(mult) {
            for _ in 0..k {
                let edges = item.map(|g| {
                    next[g] += 1;
                    members[g][next[g] - 1]
                });
                let t = self
                    .find(edges)
                    .filter(|t| allowed.contains(t))
                    .ok_or_else(|| Error::Invariant("candidate set is not closed under copy swaps".into()))?;
                out.push(t);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Copies used by the triangles of `family`.
    pub fn edges_of(&self, family: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
        family.into_iter().flat_map(|t| self.triangles[t].edges).collect()
    }

    pub fn is_independent(&self, family: &[usize]) -> bool {
        self.edges_of(family.iter().copied()).len() == 3 * family.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_counts() {
        let g = Multigraph::new(3, [(0, 1, 2), (0, 2, 3), (1, 2, 1)]).unwrap();
        let c = CopyGraph::new(&g);
        assert_eq!(c.copy_count(), 6);
        assert_eq!(c.triangles().len(), 6);
        let t = c.triangle(0);
        assert_eq!(c.copy(t.edge_between(2, 0)).key, EdgeKey(0, 2));
        assert_eq!(c.find(t.edges), Some(0));
        assert_eq!(
            c.max_family(&(0..6).collect::<Vec<_>>(), &[0; 6], None, SearchLimits::default()).unwrap().len(),
            1
        );
    }

    #[test]
    fn zero_pairs_vanish_but_are_kept_in_classes() {
        let g = Multigraph::new(3, [(0, 1, 0), (0, 2, 1), (1, 2, 1)]).unwrap();
        let c = CopyGraph::new(&g);
        assert!(c.triangles().is_empty());
        assert!(c.hits_all(&BTreeSet::new()));
        let cert = c.to_classes(&BTreeSet::new());
        assert_eq!(cert.edges.into_iter().collect::<Vec<_>>(), vec![EdgeKey(0, 1)]);
    }

    #[test]
    fn partial_classes_are_dropped() {
        let g = Multigraph::new(3, [(0, 1, 2), (0, 2, 1), (1, 2, 1)]).unwrap();
        let c = CopyGraph::new(&g);
        let one = BTreeSet::from([0usize]);
        assert!(c.to_classes(&one).is_empty());
        let both = BTreeSet::from([0usize, 1]);
        assert_eq!(c.to_classes(&both).len(), 1);
    }
}
