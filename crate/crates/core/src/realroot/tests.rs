use std::prelude::rust_2021::*;


use super::*;
use crate::number::{int, rat};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::Rng;

fn u(c: &[i64]) -> RealUnivariate {
    RealUnivariate::from_ints(c)
}

const ALL: (Bound, Bound) = (Bound::NegInfinity, Bound::PosInfinity);

#[test]
fn sturm_examples() {
    assert_eq!(sturm_count(&u(&[-1, 0, 1]), &ALL.0, &ALL.1).unwrap(), 2);
    assert_eq!(sturm_count(&u(&[1, 0, 1]), &ALL.0, &ALL.1).unwrap(), 0);
    // (z - 1)^2 z
    assert_eq!(sturm_count(&u(&[0, 1, -2, 1]), &ALL.0, &ALL.1).unwrap(), 2);
    // half-open: (0, 1] contains 1 but not 0
    let p = u(&[0, 1, -2, 1]);
    assert_eq!(sturm_count(&p, &Bound::Finite(int(0)), &Bound::Finite(int(1))).unwrap(), 1);
    assert_eq!(sturm_count(&RealUnivariate::zero(), &ALL.0, &ALL.1), Err(Error::ZeroPolynomial));
}

#[test]
fn real_rooted_examples() {
    assert!(!is_real_rooted(&u(&[1, 0, 1])).unwrap());
    assert!(is_real_rooted(&u(&[2, -3, 1])).unwrap());
    assert!(is_real_rooted(&u(&[1, -1, -1, 1])).unwrap());
    assert!(!is_real_rooted(&u(&[1, 0, 0, 1])).unwrap());
    assert!(is_real_rooted(&u(&[5])).unwrap());
    assert_eq!(is_real_rooted(&RealUnivariate::zero()), Err(Error::ZeroPolynomial));
}

#[test]
fn isolate_examples() {
    let mut iv = isolate_roots(&u(&[-2, 0, 1])).unwrap();
    iv.refine(&rat(1, 4));
    let cells: Vec<_> = iv.iter().map(|(lo, hi, m)| (lo.clone(), hi.clone(), m)).collect();
    assert_eq!(cells.len(), 2);
    let (lo, hi, _) = &cells[0];
    assert!(*lo >= int(-2) && *hi <= int(-1));
    let (lo, hi, _) = &cells[1];
    assert!(*lo >= int(1) && *hi <= int(2));

    let iv = isolate_roots(&u(&[0, 1])).unwrap();
    let (lo, hi, m) = iv.iter().next().unwrap();
    assert!(*lo < int(0) && *hi >= int(0) && m == 1);

    let iv = isolate_roots(&u(&[1, -2, 1])).unwrap();
    assert_eq!(iv.len(), 1);
    let (lo, hi, m) = iv.iter().next().unwrap();
    assert!(*lo < int(1) && *hi >= int(1) && m == 2);
}

#[test]
fn refine_shrinks_intervals() {
    let mut iv = isolate_roots(&u(&[-2, 0, 1])).unwrap();
    iv.refine(&rat(1, 1000));
    for (lo, hi, _) in iv.iter() {
        assert!(hi - lo <= rat(1, 1000));
        let p = u(&[-2, 0, 1]);
        assert!(p.eval(lo) * p.eval(hi) <= int(0));
    }
}

#[test]
fn wronskian_examples() {
    assert_eq!(wronskian(&u(&[1]), &u(&[0, 1])), u(&[-1]));
    assert!(wronskian(&u(&[0, 1]), &u(&[0, 1])).is_zero());
    assert_eq!(wronskian(&u(&[0, 1]), &u(&[0, 0, 1])), u(&[0, 0, -1]));
}

#[test]
fn interlacing_examples() {
    assert!(interlaces(&u(&[0, 1]), &u(&[-1, 0, 1])).unwrap());
    assert!(!interlaces(&u(&[-3, 1]), &u(&[-1, 0, 1])).unwrap());
    assert!(interlaces(&RealUnivariate::zero(), &u(&[-1, 0, 1])).unwrap());
    assert!(interlaces(&u(&[3]), &u(&[4, 1])).unwrap());
    // a constant does not interlace a polynomial with two roots
    assert!(!interlaces(&u(&[1]), &u(&[-1, 0, 1])).unwrap());
    // shared roots with multiplicity: (z-1)^2 and (z-1)
    assert!(interlaces(&u(&[1, -2, 1]), &u(&[-1, 1])).unwrap());
    assert_eq!(interlaces(&u(&[1, 0, 1]), &u(&[0, 1])), Err(Error::NotRealRooted));
}

#[test]
fn proper_position_examples() {
    assert!(proper_position(&u(&[1]), &u(&[0, 1])));
    assert!(!proper_position(&u(&[0, 1]), &u(&[1])));
    let g = u(&[-1, 0, 1]);
    let h = u(&[0, -3, 0, 1]);
    // W = -z^4 - 3 ≤ 0 and roots -√3, -1, 0, 1, √3 alternate
    assert_eq!(wronskian(&g, &h), u(&[-3, 0, 0, 0, -1]));
    assert!(proper_position(&g, &h));
    assert!(!proper_position(&h, &g));
}

#[test]
fn hermite_biehler_examples() {
    assert!(hermite_biehler_stable(&u(&[0, 1]), &u(&[1])).unwrap());
    assert!(!hermite_biehler_stable(&u(&[0, 1]), &u(&[-1])).unwrap());
    assert!(hermite_biehler_stable(&u(&[0, 0, 1]), &u(&[0, 1])).unwrap());
    // z^3 + i
    assert!(!hermite_biehler_stable(&u(&[0, 0, 0, 1]), &u(&[1])).unwrap());
    assert_eq!(
        hermite_biehler_stable(&RealUnivariate::zero(), &RealUnivariate::zero()),
        Err(Error::BothZero)
    );
    // real-rooted h with g = 0
    assert!(hermite_biehler_stable(&u(&[-1, 0, 1]), &RealUnivariate::zero()).unwrap());
    assert!(!hermite_biehler_stable(&u(&[1, 0, 1]), &RealUnivariate::zero()).unwrap());
}

#[test]
fn squarefree_decomposition_recombines() {
    // (z-1)^3 (z+2)^2 z
    let p = &(&RealUnivariate::from_roots(&[int(1), int(1), int(1)]) * &RealUnivariate::from_roots(&[int(-2), int(-2)]))
        * &RealUnivariate::x();
    let parts = p.squarefree_decomposition();
    let mut back = RealUnivariate::constant(int(1));
    for (q, k) in &parts {
        for _ in 0..*k {
            back = &back * q;
        }
    }
    assert_eq!(back.monic(), p.monic());
    assert_eq!(isolate_roots(&p).unwrap().total_multiplicity(), 6);
}

/// Durand–Kerner iteration for the roots of a monic-normalized complex
/// polynomial (coefficients lowest degree first).
fn float_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let c: Vec<Complex64> = coeffs.iter().map(|x| x / lead).collect();
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.l1_norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    roots
}

fn arb_univariate(max_deg: usize) -> impl Strategy<Value = RealUnivariate> {
    proptest::collection::vec(-5i64..=5, 1..=max_deg + 1).prop_map(|c| RealUnivariate::from_ints(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn real_rooted_matches_isolation(p in arb_univariate(6)) {
        prop_assume!(!p.is_zero());
        let iv = isolate_roots(&p).unwrap();
        let rooted = iv.total_multiplicity() as usize == p.degree().unwrap();
        prop_assert_eq!(is_real_rooted(&p).unwrap(), rooted);
    }

    #[test]
    fn products_of_linear_factors_are_real_rooted(roots in proptest::collection::vec((-6i64..=6, 1i64..=3), 1..6)) {
        let rs: Vec<Rational> = roots.iter().map(|&(a, b)| rat(a, b)).collect();
        let p = RealUnivariate::from_roots(&rs);
        prop_assert!(is_real_rooted(&p).unwrap());
        let iv = isolate_roots(&p).unwrap();
        prop_assert_eq!(iv.total_multiplicity() as usize, rs.len());
        for r in &rs {
            prop_assert!(iv.iter().any(|(lo, hi, _)| lo < r && r <= hi));
        }
    }

    #[test]
    fn interlacing_is_symmetric(a in proptest::collection::vec(-5i64..=5, 0..5), b in proptest::collection::vec(-5i64..=5, 0..5)) {
        let g = RealUnivariate::from_roots(&a.iter().map(|&x| int(x)).collect::<Vec<_>>());
        let h = RealUnivariate::from_roots(&b.iter().map(|&x| int(x)).collect::<Vec<_>>());
        prop_assert_eq!(interlaces(&g, &h).unwrap(), interlaces(&h, &g).unwrap());
    }

    #[test]
    fn derivative_interlaces(roots in proptest::collection::vec(-6i64..=6, 2..6)) {
        let p = RealUnivariate::from_roots(&roots.iter().map(|&x| int(x)).collect::<Vec<_>>());
        // p' ≪ p for real-rooted p with positive leading coefficient
        prop_assert!(proper_position(&p.derivative(), &p));
    }

    #[test]
    fn both_directions_iff_wronskian_vanishes(g in arb_univariate(3), h in arb_univariate(3)) {
        prop_assume!(!g.is_zero() && !h.is_zero());
        if proper_position(&g, &h) && proper_position(&h, &g) {
            prop_assert!(wronskian(&g, &h).is_zero());
        }
    }

    #[test]
    fn obreschkoff(g in arb_univariate(4), h in arb_univariate(4), seed in any::<u64>()) {
        prop_assume!(!(g.is_zero() && h.is_zero()));
        if proper_position(&g, &h) || proper_position(&h, &g) {
            let mut rng = crate::rng::stream(seed, 0);
            for _ in 0..100 {
                let a = rat(rng.random_range(-20..=20), rng.random_range(1..=5));
                let b = rat(rng.random_range(-20..=20), rng.random_range(1..=5));
                let c = &h.scale(&a) + &g.scale(&b);
                prop_assert!(c.is_zero() || is_real_rooted(&c).unwrap());
            }
        }
    }

    #[test]
    fn hermite_biehler_matches_float_roots(h in arb_univariate(6), g in arb_univariate(6)) {
        let n = h.coeffs().len().max(g.coeffs().len());
        prop_assume!(n >= 2);
        let coeffs: Vec<Complex64> = (0..n)
            .map(|k| Complex64::new(
                h.coeffs().get(k).map_or(0.0, crate::number::to_f64),
                g.coeffs().get(k).map_or(0.0, crate::number::to_f64),
            ))
            .collect();
        prop_assume!(coeffs[n - 1].l1_norm() > 0.0);
        let roots = float_roots(&coeffs);
        prop_assume!(roots.iter().all(|r| r.im.abs() >= 1e-4));
        let float_stable = roots.iter().all(|r| r.im <= 1e-7);
        prop_assert_eq!(hermite_biehler_stable(&h, &g).unwrap(), float_stable);
    }
}
