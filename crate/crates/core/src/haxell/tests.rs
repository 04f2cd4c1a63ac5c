use super::*;
use crate::exact::tau_exact;
use crate::generators::{complete, gen_random, wheel};

fn opts(mode: Mode) -> HaxellOptions {
    HaxellOptions { mode, ..HaxellOptions::default() }
}

#[test]
fn k4_families() {
    let g = complete(4);
    let s = build_state(&g, &HaxellOptions::default()).unwrap();
    assert_eq!(s.nu, 1);
    assert_eq!(s.b.len(), 1);
    assert_eq!(s.b1.len(), 1);
    let a = &s.b1[0];
    assert_ne!(a.v, a.v_hat);
    assert_eq!(a.rungs.len(), 1);
    assert!(s.b2.is_empty());
    let c = candidate_transversals(&g, &s).unwrap();
    assert_eq!(c.len(), 5);
    assert!(c[0].size <= 2);
}

#[test]
fn examples() {
    for (g, nu, tau) in
        [(complete(4), 1, 2), (complete(5), 2, 4), (wheel(5).unwrap(), 2, 3), (complete(6), 4, 9)]
    {
        let out = transversal_292(&g).unwrap();
        assert_eq!(out.nu, nu);
        assert!(verify_transversal(&g, &out.transversal).unwrap());
        assert!(out.weight >= tau);
        assert!(25 * out.weight <= 73 * nu);
    }
    assert!(transversal_292(&complete(5)).unwrap().weight <= 5);
    assert!(transversal_292(&wheel(5).unwrap()).unwrap().weight <= 5);
}

#[test]
fn triangle_free_is_empty() {
    let g = crate::generators::cycle(6).unwrap();
    let out = transversal_292(&g).unwrap();
    assert_eq!(out.nu, 0);
    assert!(out.transversal.is_empty());
}

#[test]
fn zero_weight_pairs_are_free() {
    let g = Multigraph::new(4, [(0, 1, 0), (0, 2, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]).unwrap();
    let out = transversal_292(&g).unwrap();
    assert_eq!(out.nu, 1);
    assert!(out.transversal.edges.contains(&EdgeKey(0, 1)));
    assert!(verify_transversal(&g, &out.transversal).unwrap());
}

#[test]
fn multigraph_weights() {
    let g = Multigraph::new(4, [(0, 1, 2), (0, 2, 2), (1, 2, 2), (1, 3, 1), (2, 3, 1), (0, 3, 1)]).unwrap();
    let out = transversal_292(&g).unwrap();
    assert_eq!(out.nu, 2);
    assert!(out.weight >= tau_exact(&g).0);
    assert!(out.candidates.iter().all(|c| c.weight <= c.size && c.size <= c.bound));
}

#[test]
fn lifted_family_is_a_packing() {
    let s = build_state(&wheel(7).unwrap(), &HaxellOptions::default()).unwrap();
    assert!(s.copies.is_independent(&s.lifted));
    assert_eq!(s.lifted.len(), s.b_prime.len() + s.i.len());
    assert!(s.i_prime.len() <= 2 * s.i.len());
}

#[test]
fn modes_agree() {
    for seed in 0..6 {
        let g = gen_random(7, 13, 2, seed).unwrap();
        let a = transversal_292_with(&g, &opts(Mode::Parallel)).unwrap();
        let b = transversal_292_with(&g, &opts(Mode::Sequential)).unwrap();
        assert_eq!(a.transversal, b.transversal);
        assert_eq!(a.state.switched, b.state.switched);
    }
}

#[test]
fn switch_limit() {
    let g = complete(6);
    let o = HaxellOptions { max_switch: 0, ..HaxellOptions::default() };
    match transversal_292_with(&g, &o) {
        Ok(out) => assert!(out.state.b1_prime.is_empty()),
        Err(e) => assert!(matches!(e, Error::TooLarge(_))),
    }
}

#[test]
fn scalars_are_fractions_of_nu() {
    let s = build_state(&complete(5), &HaxellOptions::default()).unwrap();
    let x = s.scalars();
    assert_eq!(x.gamma, rational::ratio(s.b1.len() as i64, 2));
    assert!(x.eta_prime <= x.eta.clone() * rational::int(2));
}

mod random {
    use super::*;
    use proptest::prelude::*;

    fn weighted(n: usize, weights: &[u64]) -> Multigraph {
        let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Multigraph::new(n, pairs.zip(weights).filter(|(_, &w)| w < 4).map(|((a, b), &w)| (a, b, w))).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn within_bound_and_above_tau(n in 3usize..7, weights in proptest::collection::vec(0u64..6, 15)) {
            let g = weighted(n, &weights);
            let out = transversal_292(&g).unwrap();
            prop_assert!(verify_transversal(&g, &out.transversal).unwrap());
            prop_assert!(out.weight >= tau_exact(&g).0);
            prop_assert!(25 * out.weight <= 73 * out.nu);
        }
    }
}
