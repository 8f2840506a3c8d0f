use maclagan::constructions::{
    seq_exp, seq_maclagan, seq_track_product, verify_bad, Badness, IdealSequence,
};
use maclagan::hierarchy::{fgh, fgh_inverse, param_eval, ParamFn};
use maclagan::ideals::{contains, degree_ideal, degree_set, minimalize, Monomial, MonomialIdeal};
use maclagan::ordinals::Ordinal;
use maclagan::ramsey::reduce_to_coloring;
use maclagan::search::{max_bad_length, SearchBudget, SearchOptions};
use num_bigint::BigUint;
use proptest::prelude::*;

fn monomial(nvars: usize) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0u32..4, nvars)
}

fn gens(nvars: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    proptest::collection::vec(monomial(nvars), 0..5)
}

fn ideal(nvars: usize, g: &[Vec<u32>]) -> MonomialIdeal {
    MonomialIdeal::new(nvars, g.iter().cloned().map(Monomial::new)).unwrap()
}

fn in_ideal(g: &[Vec<u32>], m: &[u32]) -> bool {
    g.iter().any(|h| h.iter().zip(m).all(|(a, b)| a <= b))
}

fn every_monomial(nvars: usize, max_each: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..nvars {
        out = out
            .into_iter()
            .flat_map(|m: Vec<u32>| {
                (0..=max_each).map(move |e| {
                    let mut m = m.clone();
                    m.push(e);
                    m
                })
            })
            .collect();
    }
    out
}

fn ord(s: &str) -> Ordinal {
    s.parse().unwrap()
}

proptest! {
    #[test]
    fn contains_matches_membership_scan(a in gens(3), b in gens(3)) {
        let brute = every_monomial(3, 3).iter().all(|m| !in_ideal(&b, m) || in_ideal(&a, m));
        prop_assert_eq!(contains(&ideal(3, &a), &ideal(3, &b)).unwrap(), brute);
    }

    #[test]
    fn containment_is_transitive(a in gens(2), b in gens(2), c in gens(2)) {
        let (a, b, c) = (ideal(2, &a), ideal(2, &b), ideal(2, &c));
        prop_assert!(contains(&a, &a).unwrap());
        if contains(&a, &b).unwrap() && contains(&b, &c).unwrap() {
            prop_assert!(contains(&a, &c).unwrap());
        }
    }

    #[test]
    fn minimal_generators_have_least_degree(g in gens(3)) {
        let monos: Vec<Monomial> = g.iter().cloned().map(Monomial::new).collect();
        let m = minimalize(3, monos.clone()).unwrap();
        prop_assert!(degree_ideal(&m) <= degree_set(&monos));
        prop_assert!(m.gens().iter().all(|x| monos.contains(x)));
    }

    #[test]
    fn inverse_characterization(i in 0u64..100_000, c in 1u32..4) {
        let g = |f: &ParamFn, j: u64| -> u128 {
            match f {
                ParamFn::Log => 1u128.checked_shl(j as u32).unwrap_or(u128::MAX),
                ParamFn::RootLog(c) => j
                    .checked_pow(*c)
                    .and_then(|e| 1u128.checked_shl(e as u32).filter(|_| e < 128))
                    .unwrap_or(u128::MAX),
                ParamFn::DivBy(c) => u128::from(*c) * u128::from(j),
                _ => unreachable!(),
            }
        };
        for f in [ParamFn::Log, ParamFn::RootLog(c), ParamFn::DivBy(u64::from(c))] {
            let j = param_eval(&f, i);
            prop_assert!(g(&f, j) <= u128::from(i) || j == 0, "{f} at {i}");
            prop_assert!(g(&f, j + 1) > u128::from(i), "{f} at {i}");
        }
    }

    #[test]
    fn fgh_inverse_undoes_fgh(k in 0usize..6, j in 0u64..12) {
        let alpha = ord(["0", "1", "2", "3", "w", "w+1"][k]);
        if let Some(v) = fgh(&alpha, j, &BigUint::from(1u64 << 40)).to_u64() {
            prop_assert!(fgh_inverse(&alpha, v) >= j);
        }
    }

    #[test]
    fn planted_containment_is_reported(i in 0usize..30, gap in 1usize..30) {
        let mut s = seq_maclagan(&ord("2"), 2, 0, &BigUint::from(1_000u32)).unwrap();
        let j = (i + gap).min(s.len() - 1);
        prop_assume!(i < j);
        s.ideals[j] = s.ideals[i].clone();
        prop_assert_eq!(verify_bad(&s), Badness::Violation(i, j));
    }
}

#[test]
fn track_products_of_bad_sequences_are_bad() {
    let inputs: Vec<IdealSequence> = (0..4).map(|j| seq_exp(j).unwrap()).collect();
    for a in &inputs {
        for b in &inputs {
            assert_eq!(verify_bad(a), Badness::Ok);
            let p = seq_track_product(a, b).unwrap();
            assert_eq!(p.len(), a.len() * b.len());
            assert_eq!(verify_bad(&p), Badness::Ok);
            assert!(p.max_degree() <= a.max_degree().max(b.max_degree()) + 1);
        }
    }
}

#[test]
fn certificates_fit_under_the_search_value() {
    // a bad sequence of degree ≤ D is one of the sequences the search counts
    let cap = BigUint::from(1_000u32);
    let certs = [
        seq_maclagan(&ord("0"), 0, 0, &cap).unwrap(),
        seq_maclagan(&ord("0"), 1, 0, &cap).unwrap(),
        seq_maclagan(&ord("1"), 0, 0, &cap).unwrap(),
        seq_exp(0).unwrap(),
        seq_exp(1).unwrap(),
    ];
    for s in &certs {
        let r = max_bad_length(
            s.d,
            s.max_degree(),
            &ParamFn::Const(0),
            &SearchOptions::default(),
            &SearchBudget::default(),
        )
        .unwrap();
        assert!(r.exhausted);
        assert!(s.len() as u64 <= r.value.unwrap(), "{} > {:?}", s.len(), r.value);
        assert_eq!(verify_bad(&r.witness), Badness::Ok);
    }
}

#[test]
fn search_value_grows_with_l() {
    let v = |l| {
        max_bad_length(0, l, &ParamFn::Const(0), &SearchOptions::default(), &SearchBudget::default())
            .unwrap()
            .value
            .unwrap()
    };
    let values: Vec<u64> = (0..5).map(v).collect();
    assert!(values.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(values, [2, 5, 14, 42, 132]);
}

#[test]
fn reductions_are_bounded_after_shift() {
    let cap = BigUint::from(10_000u32);
    for (a, l) in [("0", 2), ("1", 2), ("2", 1), ("w", 1), ("w+1", 1), ("w^2", 1)] {
        let alpha = ord(a);
        let s = seq_maclagan(&alpha, l, alpha.min_dimension(), &cap).unwrap();
        let c = reduce_to_coloring(&s).unwrap();
        let h = alpha.h(s.d).unwrap();
        assert!(c.shifted(l + h).is_bounded(), "Seq({a}, {l})");
    }
}
