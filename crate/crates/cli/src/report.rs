use serde::Serialize;
use tuza_core::{
    rational, EdgeKey, Multigraph, PackingCertificate, Rational, TransversalCertificate, Triangle,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unchecked,
}

impl From<bool> for Status {
    fn from(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Bound {
    pub name: String,
    pub claim: String,
    pub bound: String,
    pub achieved: String,
    pub status: Status,
}

impl Bound {
    pub fn new(
        name: &str,
        claim: &str,
        bound: impl ToString,
        achieved: impl ToString,
        status: impl Into<Status>,
    ) -> Self {
        Bound {
            name: name.into(),
            claim: claim.into(),
            bound: bound.to_string(),
            achieved: achieved.to_string(),
            status: status.into(),
        }
    }

    pub fn unchecked(name: &str, claim: &str) -> Self {
        Bound::new(name, claim, "", "", Status::Unchecked)
    }
}

#[derive(Debug, Serialize)]
pub struct InstanceSummary {
    pub n: usize,
    pub m: usize,
    pub total_weight: u64,
    pub triangles: usize,
}

impl InstanceSummary {
    pub fn of(g: &Multigraph) -> Self {
        InstanceSummary {
            n: g.n(),
            m: g.edge_count(),
            total_weight: g.total_weight(),
            triangles: g.triangles().len(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Packed {
    pub triangle: [usize; 3],
    pub count: u64,
}

#[derive(Debug, Serialize)]
pub struct FractionalTriangle {
    pub triangle: [usize; 3],
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct FractionalEdge {
    pub edge: [usize; 2],
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct CandidateEntry {
    pub label: char,
    pub size: u64,
    pub weight: u64,
    pub bound: u64,
    pub transversal: Vec<[usize; 2]>,
}

#[derive(Debug, Default, Serialize)]
pub struct Certificates {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub packing: Option<Vec<Packed>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transversal: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fractional_packing: Option<Vec<FractionalTriangle>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fractional_transversal: Option<Vec<FractionalEdge>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidates: Option<Vec<CandidateEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reductions: Option<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub instance: InstanceSummary,
    pub nu: Option<u64>,
    pub tau: Option<u64>,
    pub nustar: Option<String>,
    pub bounds: Vec<Bound>,
    pub certificates: Certificates,
    pub ok: bool,
}

impl Report {
    pub fn new(command: &str, g: &Multigraph) -> Self {
        Report {
            command: command.into(),
            instance: InstanceSummary::of(g),
            nu: None,
            tau: None,
            nustar: None,
            bounds: Vec::new(),
            certificates: Certificates::default(),
            ok: true,
        }
    }

    pub fn finish(mut self) -> Self {
        self.ok = self.bounds.iter().all(|b| b.status != Status::Fail);
        self
    }
}

pub fn pq(r: &Rational) -> String {
    rational::to_pq(r)
}

pub fn pair(e: &EdgeKey) -> [usize; 2] {
    [e.0, e.1]
}

pub fn tri(t: &Triangle) -> [usize; 3] {
    t.0
}

pub fn packing(p: &PackingCertificate) -> Vec<Packed> {
    p.multiplicities
        .iter()
        .filter(|(_, &c)| c > 0)
        .map(|(t, &count)| Packed { triangle: tri(t), count })
        .collect()
}

pub fn transversal(c: &TransversalCertificate) -> Vec<[usize; 2]> {
    c.edges.iter().map(pair).collect()
}
