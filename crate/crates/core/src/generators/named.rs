use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

pub fn complete(n: usize) -> Multigraph {
    Multigraph::simple(n, all_pairs(n)).expect("valid pairs")
}

/// Hub `0` joined to the cycle `1..=k`.
pub fn wheel(k: usize) -> Result<Multigraph> {
    if k < 3 {
        return Err(Error::BadParam(format!("wheel needs a rim of length >= 3, got {k}")));
    }
    let rim = (1..=k).map(|i| (i, i % k + 1));
    let spokes = (1..=k).map(|i| (0, i));
    Multigraph::simple(k + 1, rim.chain(spokes))
}

pub fn cycle(n: usize) -> Result<Multigraph> {
    if n < 3 {
        return Err(Error::BadParam(format!("cycle needs >= 3 vertices, got {n}")));
    }
    Multigraph::simple(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn petersen() -> Multigraph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, 5 + i));
    Multigraph::simple(10, outer.chain(inner).chain(spokes)).expect("valid pairs")
}

/// `K_{2,2,2}`: all pairs except `{0,1}`, `{2,3}`, `{4,5}`.
pub fn octahedron() -> Multigraph {
    let pairs = all_pairs(6).into_iter().filter(|&(a, b)| !(a % 2 == 0 && b == a + 1));
    Multigraph::simple(6, pairs).expect("valid pairs")
}

/// Stacked (Apollonian) triangulation: start from a triangle and insert
/// each new vertex into a uniformly chosen face.
pub fn stacked(n: usize, seed: u64) -> Result<Multigraph> {
    if n < 3 {
        return Err(Error::BadParam(format!("stacked triangulation needs >= 3 vertices, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // inner and outer face of the starting triangle
    let mut faces = vec![[0, 1, 2], [0, 1, 2]];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    Multigraph::simple(n, edges)
}

/// `m` distinct random pairs on `n` vertices, each with a weight drawn
/// uniformly from `1..=max_mult`.
pub fn gen_random(n: usize, m: usize, max_mult: u64, seed: u64) -> Result<Multigraph> {
    let mut pairs = all_pairs(n);
    if m > pairs.len() {
        return Err(Error::BadParam(format!("{m} edges do not fit on {n} vertices")));
    }
    if max_mult == 0 {
        return Err(Error::BadParam("max_mult must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pairs.shuffle(&mut rng);
    let edges: Vec<(usize, usize, u64)> =
        pairs.into_iter().take(m).map(|(a, b)| (a, b, rng.gen_range(1..=max_mult))).collect();
    Multigraph::new(n, edges)
}

/// Random spanning tree plus `extra` further distinct pairs; weights as in
/// [`gen_random`].
pub fn gen_random_connected(n: usize, extra: usize, max_mult: u64, seed: u64) -> Result<Multigraph> {
    if n == 0 || max_mult == 0 {
        return Err(Error::BadParam("need n >= 1 and max_mult >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut chosen = std::collections::BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i].min(order[j]), order[i].max(order[j]));
        chosen.insert((a, b));
    }
    let mut rest: Vec<(usize, usize)> = all_pairs(n).into_iter().filter(|p| !chosen.contains(p)).collect();
    rest.shuffle(&mut rng);
    chosen.extend(rest.into_iter().take(extra));
    let edges: Vec<(usize, usize, u64)> =
        chosen.into_iter().map(|(a, b)| (a, b, rng.gen_range(1..=max_mult))).collect();
    Multigraph::new(n, edges)
}

/// Random triangle-free simple graph: pairs are visited in random order and
/// each is kept with probability `p` unless it would close a triangle.
pub fn gen_random_triangle_free(n: usize, p: f64, seed: u64) -> Multigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = all_pairs(n);
    pairs.shuffle(&mut rng);
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for (a, b) in pairs {
        if !rng.gen_bool(p) || (0..n).any(|c| adj[a][c] && adj[b][c]) {
            continue;
        }
        adj[a][b] = true;
        adj[b][a] = true;
        edges.push((a, b));
    }
    Multigraph::simple(n, edges).expect("valid pairs")
}

/// Named factories, parsed from strings such as `K5`, `W5`, `C5`,
/// `petersen`, `octahedron` or `stacked:10:3` (vertices, seed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Complete(usize),
    Wheel(usize),
    Cycle(usize),
    Petersen,
    Octahedron,
    Stacked { n: usize, seed: u64 },
}

impl NamedGraph {
    pub fn build(&self) -> Result<Multigraph> {
        match *self {
            NamedGraph::Complete(n) => Ok(complete(n)),
            NamedGraph::Wheel(k) => wheel(k),
            NamedGraph::Cycle(n) => cycle(n),
            NamedGraph::Petersen => Ok(petersen()),
            NamedGraph::Octahedron => Ok(octahedron()),
            NamedGraph::Stacked { n, seed } => stacked(n, seed),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParam(format!("unknown graph name {s:?}"));
        let lower = s.to_ascii_lowercase();
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        match lower.as_str() {
            "petersen" => return Ok(NamedGraph::Petersen),
            "octahedron" => return Ok(NamedGraph::Octahedron),
            _ => {}
        }
        if let Some(rest) = lower.strip_prefix("stacked:") {
            let (n, seed) = rest.split_once(':').ok_or_else(bad)?;
            return Ok(NamedGraph::Stacked { n: num(n)?, seed: seed.parse().map_err(|_| bad())? });
        }
        let (head, tail) = lower.split_at(1.min(lower.len()));
        match head {
            "k" => Ok(NamedGraph::Complete(num(tail)?)),
            "w" => Ok(NamedGraph::Wheel(num(tail)?)),
            "c" => Ok(NamedGraph::Cycle(num(tail)?)),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let k4 = complete(4);
        assert_eq!((k4.n(), k4.edge_count()), (4, 6));
        let w5 = wheel(5).unwrap();
        assert_eq!((w5.n(), w5.edge_count(), w5.triangles().len()), (6, 10, 5));
        assert_eq!(petersen().edge_count(), 15);
        assert!(petersen().is_triangle_free());
        let oct = octahedron();
        assert_eq!((oct.edge_count(), oct.triangles().len()), (12, 8));
        let st = stacked(10, 3).unwrap();
        assert_eq!(st.edge_count(), 3 * 10 - 6);
        assert!(wheel(2).is_err());
    }

    #[test]
    fn names() {
        assert_eq!("K4".parse::<NamedGraph>().unwrap(), NamedGraph::Complete(4));
        assert_eq!("w5".parse::<NamedGraph>().unwrap().build().unwrap(), wheel(5).unwrap());
        assert_eq!("stacked:8:1".parse::<NamedGraph>().unwrap(), NamedGraph::Stacked { n: 8, seed: 1 });
        assert!("Q3".parse::<NamedGraph>().is_err());
    }

    #[test]
    fn random_is_reproducible() {
        let a = gen_random(6, 10, 3, 1).unwrap();
        let b = gen_random(6, 10, 3, 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_count(), 10);
        assert!(a.edges().iter().all(|e| (1..=3).contains(&e.w)));
        assert!(gen_random(3, 4, 1, 0).is_err());
    }

    #[test]
    fn random_connected_and_triangle_free() {
        for seed in 0..20 {
            let g = gen_random_connected(9, 5, 3, seed).unwrap();
            assert_eq!(g.components().len(), 1);
            let h = gen_random_triangle_free(15, 0.5, seed);
            assert!(h.is_triangle_free());
        }
    }
}
