use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Largest order accepted by [`nonisomorphic_graphs`].
pub const MAX_SMALL: usize = 6;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative of every isomorphism class of simple graphs on `n`
/// vertices, each the lexicographically smallest edge mask in its class.
pub fn nonisomorphic_graphs(n: usize) -> Result<Vec<Multigraph>> {
    if n > MAX_SMALL {
        return Err(Error::TooLarge(format!("enumerating graphs on {n} vertices")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let maps: Vec<Vec<u32>> = permutations(n)
        .iter()
        .map(|p| pairs.iter().map(|&(a, b)| 1u32 << index(p[a], p[b])).collect())
        .collect();
    let canonical = |mask: u32| {
        maps.iter()
            .map(|m| {
                m.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(0, |acc, (_, bit)| acc | bit)
            })
            .min()
            .unwrap()
    };
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        if canonical(mask) == mask {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
            out.push(Multigraph::simple(n, edges)?);
        }
    }
    Ok(out)
}
