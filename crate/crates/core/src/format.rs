//! Plain-text graph format.
//!
//! ```text
//! # a triangle with one doubled edge
//! p 3
//! e 0 1 2
//! e 1 2 1
//! e 0 2 1
//! ```
//!
//! The `p <n>` line must come before any edge. Vertex ids are 0-based,
//! weights are non-negative integers, and repeated pairs are summed.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<u64> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    if tok.starts_with('-') {
        return Err(err(line, format!("negative {what} `{tok}`")));
    }
    tok.parse().map_err(|_| err(line, format!("malformed {what} `{tok}`")))
}

pub fn parse(text: &str) -> Result<Multigraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let mut toks = body.split_whitespace();
        match toks.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(err(line, "duplicate `p` line"));
                }
                n = Some(number(toks.next(), line, "vertex count")? as usize);
            }
            Some("e") => {
                let n = n.ok_or_else(|| err(line, "edge before `p` line"))?;
                let u = number(toks.next(), line, "vertex id")? as usize;
                let v = number(toks.next(), line, "vertex id")? as usize;
                let w = number(toks.next(), line, "weight")?;
                if let Some(&bad) = [u, v].iter().find(|&&x| x >= n) {
                    return Err(err(line, format!("vertex id {bad} out of range for n = {n}")));
                }
                if u == v {
                    return Err(err(line, format!("loop at vertex {u}")));
                }
                edges.push((u, v, w));
            }
            Some(other) => return Err(err(line, format!("unknown line type `{other}`"))),
            None => unreachable!(),
        }
        if let Some(extra) = toks.next() {
            return Err(err(line, format!("unexpected token `{extra}`")));
        }
    }
    let n = n.ok_or_else(|| err(text.lines().count().max(1), "missing `p` line"))?;
    Multigraph::new(n, edges)
}

pub fn emit(g: &Multigraph) -> String {
    let mut out = format!("p {}\n", g.n());
    for e in g.edges() {
        writeln!(out, "e {} {} {}", e.key.0, e.key.1, e.w).unwrap();
    }
    out
}
