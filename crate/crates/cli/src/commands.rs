use num_traits::Zero;
use tuza_core::exact::{nu_exact_with, NuOptions};
use tuza_core::generators::{
    gen_apex, gen_gk, gen_random, gen_random_connected, gen_random_triangle_free, NamedGraph,
};
use tuza_core::haxell::{transversal_292_with, HaxellOptions};
use tuza_core::planar::{reduce_and_certify, Status as PlanarStatus};
use tuza_core::{
    krivelevich, lp_optimal, rational, tau_exact, verify_packing, verify_transversal, Error, Multigraph,
    Rational, Result,
};

use crate::report::{self, Bound, CandidateEntry, FractionalEdge, FractionalTriangle, Report};

pub struct Settings {
    pub skip_exact: bool,
    pub budget: Option<u64>,
}

impl Settings {
    fn nu(&self, g: &Multigraph) -> Result<(u64, tuza_core::PackingCertificate)> {
        nu_exact_with(g, NuOptions { lp_ceiling: true, budget: self.budget })
    }

    fn haxell(&self) -> HaxellOptions {
        let mut o = HaxellOptions::default();
        if self.budget.is_some() {
            o.budget = self.budget;
        }
        o
    }
}

fn kriv_bound_text(nustar: &Rational) -> String {
    let x = report::pq(nustar);
    format!("2*{x} - sqrt({x})/4")
}

pub fn solve(g: &Multigraph, s: &Settings) -> Result<Report> {
    let mut r = Report::new("solve", g);
    r.nustar = Some(report::pq(&lp_optimal(g).value));
    if s.skip_exact {
        r.bounds.push(Bound::unchecked("packing", "P is a packing of value nu"));
        r.bounds.push(Bound::unchecked("transversal", "C is a transversal of weight tau"));
        return Ok(r.finish());
    }
    let (nu, p) = s.nu(g)?;
    let (tau, c) = tau_exact(g);
    r.bounds.push(Bound::new("packing", "P is a packing of value nu", nu, p.value(), verify_packing(g, &p)?));
    r.bounds.push(Bound::new(
        "transversal",
        "C is a transversal of weight tau",
        tau,
        c.weight(g)?,
        verify_transversal(g, &c)? && c.weight(g)? == tau,
    ));
    r.nu = Some(nu);
    r.tau = Some(tau);
    r.certificates.packing = Some(report::packing(&p));
    r.certificates.transversal = Some(report::transversal(&c));
    Ok(r.finish())
}

pub fn lp(g: &Multigraph) -> Result<Report> {
    let mut r = Report::new("lp", g);
    let s = lp_optimal(g);
    let dual = s.transversal.value(g)?;
    r.nustar = Some(report::pq(&s.value));
    r.bounds.push(Bound::new(
        "primal",
        "fractional packing is feasible",
        "",
        report::pq(&s.packing.value()),
        s.packing.is_feasible(g)?,
    ));
    r.bounds.push(Bound::new(
        "dual",
        "fractional transversal is feasible",
        "",
        report::pq(&dual),
        s.transversal.is_feasible(g)?,
    ));
    r.bounds.push(Bound::new(
        "duality",
        "nu* = tau*",
        report::pq(&s.packing.value()),
        report::pq(&dual),
        s.packing.value() == dual && dual == s.value,
    ));
    r.certificates.fractional_packing = Some(
        s.packing
            .values
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(t, v)| FractionalTriangle { triangle: report::tri(t), value: report::pq(v) })
            .collect(),
    );
    r.certificates.fractional_transversal = Some(
        s.transversal
            .values
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(e, v)| FractionalEdge { edge: report::pair(e), value: report::pq(v) })
            .collect(),
    );
    Ok(r.finish())
}

fn kriv_into(r: &mut Report, g: &Multigraph) -> Result<krivelevich::Construction> {
    let k = krivelevich::construct(g)?;
    let within =
        k.nustar.is_zero() || rational::le_two_x_minus_quarter_sqrt(&rational::from_u64(k.weight), &k.nustar);
    r.bounds.push(Bound::new(
        "krivelevich",
        "w(C) <= 2 nu* - sqrt(nu*)/4",
        kriv_bound_text(&k.nustar),
        k.weight,
        within && verify_transversal(g, &k.transversal)?,
    ));
    Ok(k)
}

pub fn kriv(g: &Multigraph, s: &Settings) -> Result<Report> {
    let mut r = Report::new("kriv", g);
    let k = kriv_into(&mut r, g)?;
    r.nustar = Some(report::pq(&k.nustar));
    if s.skip_exact {
        r.bounds.push(Bound::unchecked("tau", "tau <= w(C)"));
    } else {
        let (tau, _) = tau_exact(g);
        r.tau = Some(tau);
        r.bounds.push(Bound::new("tau", "tau <= w(C)", k.weight, tau, tau <= k.weight));
    }
    r.certificates.transversal = Some(report::transversal(&k.transversal));
    Ok(r.finish())
}

fn haxell_into(r: &mut Report, g: &Multigraph, s: &Settings) -> Result<u64> {
    let out = transversal_292_with(g, &s.haxell())?;
    for c in &out.candidates {
        r.bounds.push(Bound::new(
            &format!("haxell-{}", c.label),
            "candidate size within its linear bound",
            c.bound,
            c.size,
            c.size <= c.bound,
        ));
    }
    let limit = rational::ratio(73 * out.nu as i64, 25);
    r.bounds.push(Bound::new(
        "haxell",
        "w(C) <= 73 nu / 25",
        report::pq(&limit),
        out.weight,
        rational::from_u64(out.weight) <= limit && verify_transversal(g, &out.transversal)?,
    ));
    r.certificates.candidates = Some(
        out.candidates
            .iter()
            .map(|c| CandidateEntry {
                label: c.label,
                size: c.size,
                weight: c.weight,
                bound: c.bound,
                transversal: report::transversal(&c.transversal),
            })
            .collect(),
    );
    r.certificates.transversal = Some(report::transversal(&out.transversal));
    Ok(out.nu)
}

pub fn haxell(g: &Multigraph, s: &Settings) -> Result<Report> {
    let mut r = Report::new("haxell", g);
    r.nu = Some(haxell_into(&mut r, g, s)?);
    Ok(r.finish())
}

pub fn planar(g: &Multigraph, s: &Settings) -> Result<Report> {
    let mut r = Report::new("planar", g);
    let out = reduce_and_certify(g)?;
    r.certificates.reductions = Some(out.trace.steps.iter().map(|st| format!("{:?}", st.kind)).collect());
    if out.status == PlanarStatus::Incomplete {
        r.bounds.push(Bound::unchecked("planar", "reduction incomplete, no bound claimed"));
        return Ok(r.finish());
    }
    let (p, c) = (out.packing.value(), out.transversal.weight(g)?);
    r.bounds.push(Bound::new(
        "planar",
        "w(C) <= 2 |P|",
        2 * p,
        c,
        c <= 2 * p && verify_packing(g, &out.packing)? && verify_transversal(g, &out.transversal)?,
    ));
    if s.skip_exact {
        r.bounds.push(Bound::unchecked("planar-nu", "|P| <= nu"));
        r.bounds.push(Bound::unchecked("planar-tau", "w(C) >= tau"));
    } else {
        let (nu, _) = s.nu(g)?;
        let (tau, _) = tau_exact(g);
        r.nu = Some(nu);
        r.tau = Some(tau);
        r.bounds.push(Bound::new("planar-nu", "|P| <= nu", nu, p, p <= nu));
        r.bounds.push(Bound::new("planar-tau", "w(C) >= tau", tau, c, c >= tau));
    }
    r.certificates.packing = Some(report::packing(&out.packing));
    r.certificates.transversal = Some(report::transversal(&out.transversal));
    Ok(r.finish())
}

pub fn certify_chain(g: &Multigraph, s: &Settings) -> Result<Report> {
    let mut r = Report::new("certify-chain", g);
    let lp = lp_optimal(g);
    let nustar = lp.packing.value();
    let taustar = lp.transversal.value(g)?;
    r.nustar = Some(report::pq(&nustar));
    r.bounds.push(Bound::new(
        "duality",
        "tau* = nu*",
        report::pq(&nustar),
        report::pq(&taustar),
        nustar == taustar && lp.packing.is_feasible(g)? && lp.transversal.is_feasible(g)?,
    ));
    kriv_into(&mut r, g)?;
    if s.skip_exact {
        for (name, claim) in [("tau", "tau >= tau*"), ("nu", "nu* >= nu"), ("two-nu", "2 nu >= tau*")] {
            r.bounds.push(Bound::unchecked(name, claim));
        }
        r.bounds.push(Bound::unchecked("haxell", "w(C) <= 73 nu / 25"));
        return Ok(r.finish());
    }
    let (nu, _) = s.nu(g)?;
    let (tau, _) = tau_exact(g);
    let (nu_r, tau_r) = (rational::from_u64(nu), rational::from_u64(tau));
    r.nu = Some(nu);
    r.tau = Some(tau);
    r.bounds.push(Bound::new("tau", "tau >= tau*", report::pq(&taustar), tau, tau_r >= taustar));
    r.bounds.push(Bound::new("nu", "nu* >= nu", report::pq(&nustar), nu, nustar >= nu_r));
    r.bounds.push(Bound::new(
        "two-nu",
        "2 nu >= tau*",
        report::pq(&taustar),
        2 * nu,
        &nu_r * rational::int(2) >= taustar,
    ));
    haxell_into(&mut r, g, s)?;
    r.certificates.transversal = None;
    r.certificates.candidates = None;
    Ok(r.finish())
}

pub struct GenerateArgs {
    pub family: String,
    pub k: Option<u32>,
    pub seed: u64,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub mult: u64,
    pub p: f64,
}

/// `gk`, `random`, `connected`, `triangle-free`, `apex:<name>` or a
/// named graph such as `K5`.
pub fn generate(a: &GenerateArgs) -> Result<Multigraph> {
    let need = |x: Option<usize>, flag: &str| {
        x.ok_or_else(|| Error::BadParam(format!("`{}` needs --{flag}", a.family)))
    };
    match a.family.as_str() {
        "gk" => {
            let k = a.k.ok_or_else(|| Error::BadParam("`gk` needs --k".into()))?;
            Ok(gen_gk(k)?.0.graph)
        }
        "random" => gen_random(need(a.n, "n")?, need(a.m, "m")?, a.mult, a.seed),
        "connected" => gen_random_connected(need(a.n, "n")?, a.m.unwrap_or(0), a.mult, a.seed),
        "triangle-free" => Ok(gen_random_triangle_free(need(a.n, "n")?, a.p, a.seed)),
        name => match name.strip_prefix("apex:") {
            Some(base) => gen_apex(&base.parse::<NamedGraph>()?.build()?),
            None => name.parse::<NamedGraph>()?.build(),
        },
    }
}
