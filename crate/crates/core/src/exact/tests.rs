use super::*;
use crate::certificate::{verify_packing, verify_transversal, FractionalPacking, FractionalTransversal};
use crate::generators::{complete, cycle, gen_gk, wheel};
use crate::rational::ratio;

fn k4w(w: u64) -> Multigraph {
    complete(4).map_weights(|_, _| w)
}

#[test]
fn nu_examples() {
    assert_eq!(nu_exact(&complete(4)).0, 1);
    assert_eq!(nu_exact(&wheel(5).unwrap()).0, 2);
    let (v, cert) = nu_exact(&k4w(2));
    assert_eq!(v, 4);
    assert!(verify_packing(&k4w(2), &cert).unwrap());
    assert_eq!(nu_exact(&cycle(5).unwrap()), (0, PackingCertificate::new()));
}

#[test]
fn nu_without_lp_ceiling_agrees() {
    for g in [complete(5), complete(6), wheel(6).unwrap(), k4w(3)] {
        let plain = nu_exact_with(&g, NuOptions { lp_ceiling: false, budget: None }).unwrap();
        assert_eq!(plain.0, nu_exact(&g).0);
    }
}

#[test]
fn tau_examples() {
    let (t, c) = tau_exact(&complete(4));
    assert_eq!(t, 2);
    assert!(verify_transversal(&complete(4), &c).unwrap());
    assert_eq!(tau_exact(&complete(5)).0, 4);
    assert_eq!(tau_exact(&wheel(5).unwrap()).0, 3);
    assert_eq!(tau_exact(&cycle(5).unwrap()).0, 0);
}

#[test]
fn tau_uses_zero_weight_edges_for_free() {
    let g = Multigraph::new(3, [(0, 1, 0), (1, 2, 5), (0, 2, 5)]).unwrap();
    let (t, c) = tau_exact(&g);
    assert_eq!(t, 0);
    assert_eq!(c.edges.into_iter().collect::<Vec<_>>(), vec![EdgeKey(0, 1)]);
}

#[test]
fn lp_examples() {
    assert_eq!(lp_optimal(&complete(4)).value, rational::int(2));
    let (g1, _) = gen_gk(1).unwrap();
    assert_eq!(lp_optimal(&g1.graph).value, ratio(5, 2));
    assert_eq!(lp_optimal(&cycle(5).unwrap()).value, rational::int(0));
}

#[test]
fn lp_pair_is_feasible_and_equal() {
    for g in [complete(4), complete(5), wheel(5).unwrap(), k4w(2), complete(6)] {
        let s = lp_optimal(&g);
        assert!(s.packing.is_feasible(&g).unwrap());
        assert!(s.transversal.is_feasible(&g).unwrap());
        assert_eq!(s.packing.value(), s.value);
        assert_eq!(s.transversal.value(&g).unwrap(), s.value);
        tight_sets(&g, &s).unwrap();
    }
}

fn single_triangle() -> Multigraph {
    complete(3)
}

#[test]
fn tight_sets_single_triangle() {
    let g = single_triangle();
    let t = Triangle([0, 1, 2]);
    let s = LpSolution {
        packing: FractionalPacking { values: [(t, rational::int(1))].into() },
        transversal: FractionalTransversal { values: t.pairs().iter().map(|&p| (p, ratio(1, 3))).collect() },
        value: rational::int(1),
    };
    let ts = tight_sets(&g, &s).unwrap();
    assert_eq!(ts.edges.len(), 3);
    assert_eq!(ts.triangles.len(), 1);
}

#[test]
fn tight_sets_w5() {
    let g = wheel(5).unwrap();
    let half = ratio(1, 2);
    let s = LpSolution {
        packing: FractionalPacking { values: g.triangles().into_iter().map(|t| (t, half.clone())).collect() },
        transversal: FractionalTransversal {
            values: (1..=5).map(|i| (EdgeKey(0, i), half.clone())).collect(),
        },
        value: ratio(5, 2),
    };
    let ts = tight_sets(&g, &s).unwrap();
    let spokes: BTreeSet<EdgeKey> = (1..=5).map(|i| EdgeKey(0, i)).collect();
    assert_eq!(ts.edges, spokes);
    assert_eq!(ts.triangles.len(), 5);
}

#[test]
fn tight_sets_rejects_bad_pairs() {
    let g = cycle(4).unwrap();
    let s = lp_optimal(&g);
    let ts = tight_sets(&g, &s).unwrap();
    assert!(ts.triangles.is_empty());

    let g = single_triangle();
    let mut s = lp_optimal(&g);
    s.packing.values.clear();
    assert!(matches!(tight_sets(&g, &s), Err(Error::NotOptimal { .. })));

    // equal values but a positive dual on a non-tight edge
    let t = Triangle([0, 1, 2]);
    let s = LpSolution {
        packing: FractionalPacking { values: [(t, ratio(1, 2))].into() },
        transversal: FractionalTransversal { values: [(EdgeKey(0, 1), ratio(1, 2))].into() },
        value: ratio(1, 2),
    };
    assert!(matches!(tight_sets(&g, &s), Err(Error::Slackness(_))));
}

#[test]
fn budget_is_enforced() {
    let opts = NuOptions { lp_ceiling: false, budget: Some(3) };
    assert_eq!(nu_exact_with(&complete(6), opts), Err(Error::BudgetExceeded(3)));
}
