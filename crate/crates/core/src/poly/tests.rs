use std::prelude::rust_2021::*;
use std::vec;

use super::*;
use crate::number::{cint, int, rat};
use num_complex::Complex64;
use proptest::prelude::*;

fn p(nvars: usize, terms: &[(&[u32], i64)]) -> Polynomial {
    Polynomial::from_int_terms(nvars, terms)
}

fn support_of(points: &[&[i64]], dim: usize) -> SupportSet {
    SupportSet::new(dim, points.iter().map(|x| x.to_vec())).unwrap()
}

#[test]
fn evaluate_examples() {
    let f = p(2, &[(&[1, 1], 1), (&[0, 0], 1)]);
    let i = Complex64::new(0.0, 1.0);
    let v = f.evaluate(&[i, i]).unwrap();
    assert!(v.l1_norm() < 1e-12);
    assert_eq!(f.evaluate_exact(&[cint(0, 1), cint(0, 1)]).unwrap(), cint(0, 0));
    let one = Polynomial::one(3);
    assert_eq!(one.evaluate(&[Complex64::new(5.0, -2.0); 3]).unwrap(), Complex64::new(1.0, 0.0));
    let lin = p(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
    assert_eq!(lin.evaluate_rational(&[rat(1, 2), rat(1, 2)]).unwrap(), cint(1, 0));
    assert_eq!(lin.evaluate(&[Complex64::new(1.0, 0.0)]), Err(Error::DimensionMismatch { expected: 2, found: 1 }));
}

#[test]
fn derivative_examples() {
    let f = p(2, &[(&[2, 1], 1)]);
    assert_eq!(f.partial_derivative(0).unwrap(), p(2, &[(&[1, 1], 2)]));
    assert!(p(2, &[(&[0, 1], 1)]).partial_derivative(0).unwrap().is_zero());
    let g = p(2, &[(&[0, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]);
    assert_eq!(g.partial_derivative(1).unwrap(), p(2, &[(&[1, 0], 1), (&[0, 1], 2)]));
    assert_eq!(g.partial_derivative(2), Err(Error::VariableOutOfRange { index: 2, nvars: 2 }));
    assert_eq!(g.derivative(&[1, 1]).unwrap(), p(2, &[(&[0, 0], 1)]));
}

#[test]
fn support_examples() {
    assert_eq!(p(2, &[(&[0, 0], 1), (&[1, 1], 1)]).support(), support_of(&[&[0, 0], &[1, 1]], 2));
    assert!(Polynomial::zero(2).support().is_empty());
    assert_eq!(p(2, &[(&[2, 0], 3), (&[0, 1], -1)]).support(), support_of(&[&[2, 0], &[0, 1]], 2));
}

#[test]
fn zero_coefficients_are_not_stored() {
    let f = p(1, &[(&[1], 1), (&[1], -1), (&[0], 0)]);
    assert!(f.is_zero());
    assert_eq!(f.len(), 0);
    let g = &p(1, &[(&[1], 1)]) - &p(1, &[(&[1], 1)]);
    assert!(g.is_zero());
}

#[test]
fn reciprocal_examples() {
    let f = p(1, &[(&[0], 1), (&[1], 1)]);
    assert_eq!(f.reciprocal(&[1]).unwrap(), f);
    let g = p(1, &[(&[0], 3), (&[1], 5)]);
    assert_eq!(g.reciprocal(&[2]).unwrap(), p(1, &[(&[2], 3), (&[1], 5)]));
    let h = p(2, &[(&[0, 0], 1), (&[1, 1], 1)]);
    assert_eq!(h.reciprocal(&[1, 1]).unwrap(), h);
    assert_eq!(g.reciprocal(&[0]), Err(Error::KappaTooSmall { var: 0 }));
}

#[test]
fn interval_restriction_examples() {
    let f = p(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[1, 1], 1), (&[2, 1], 1)]);
    let r = f.interval_restriction(&[1, 0], &[1, 1]).unwrap();
    assert_eq!(r.support(), support_of(&[&[0, 0], &[0, 1]], 2));
    assert!(r.terms().all(|(_, c)| c.im.is_zero() && c.re > int(0)));

    let full = f.interval_restriction(&[0, 0], &f.degree_vector()).unwrap();
    assert_eq!(full.support(), f.support());

    let g = p(1, &[(&[0], 1), (&[2], 1)]);
    assert_eq!(g.interval_restriction(&[1], &[2]).unwrap().support(), support_of(&[&[1]], 1));

    assert!(matches!(f.interval_restriction(&[1, 1], &[0, 1]), Err(Error::InvalidWindow(_))));
}

#[test]
fn restrict_line_examples() {
    let f = p(2, &[(&[1, 1], 1)]);
    assert_eq!(f.restrict_line(&[int(0), int(0)], &[int(1), int(1)]).unwrap(), p(1, &[(&[2], 1)]));
    let g = p(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
    assert_eq!(g.restrict_line(&[int(1), int(0)], &[int(1), int(2)]).unwrap(), p(1, &[(&[0], 1), (&[1], 3)]));
    let h = p(2, &[(&[0, 0], 1), (&[1, 1], 1)]);
    assert_eq!(h.restrict_line(&[int(0), int(0)], &[int(1), int(1)]).unwrap(), p(1, &[(&[0], 1), (&[2], 1)]));
    assert_eq!(
        h.restrict_line(&[int(0), int(0)], &[int(1), int(0)]),
        Err(Error::NonPositiveDirection { index: 1 })
    );
}

#[test]
fn polarize_examples() {
    let sq = p(1, &[(&[2], 1)]);
    let ps = sq.polarize().unwrap();
    assert_eq!(ps.base(), &p(2, &[(&[1, 1], 1)]));
    assert_eq!(ps.collapse(), sq);

    let lin = p(1, &[(&[1], 2)]);
    assert_eq!(lin.polarize().unwrap().base(), &p(1, &[(&[1], 2)]));

    let f = p(1, &[(&[2], 1), (&[1], 2), (&[0], 1)]);
    let pf = f.polarize().unwrap();
    assert_eq!(pf.base(), &p(2, &[(&[1, 1], 1), (&[1, 0], 1), (&[0, 1], 1), (&[0, 0], 1)]));
    assert_eq!(pf.collapse(), f);
    assert_eq!(pf.degrees(), &[2]);
    assert_eq!(pf.index(0, 1), Some(1));
    assert_eq!(pf.index(0, 2), None);

    assert_eq!(Polynomial::zero(1).polarize(), Err(Error::ZeroPolynomial));
}

#[test]
fn polarize_mixed_degrees() {
    // z1^2 z2 + 3 z2^2 has groups of sizes 2 and 2
    let f = p(2, &[(&[2, 1], 1), (&[0, 2], 3)]);
    let pf = f.polarize().unwrap();
    assert_eq!(pf.base().nvars(), 4);
    assert!(pf.base().is_multiaffine());
    assert!(pf.is_group_symmetric());
    assert_eq!(pf.collapse(), f);
    // z2 lifts to (z21 + z22)/2
    assert_eq!(pf.base().coefficient(&[1, 1, 1, 0]), Some(&number::real(rat(1, 2))));
}

#[test]
fn shape_predicates() {
    assert!(p(2, &[(&[0, 0], 1), (&[1, 1], 1)]).is_multiaffine());
    assert!(!p(1, &[(&[2], 1)]).is_multiaffine());
    assert!(p(3, &[(&[1, 1, 0], 1), (&[1, 0, 1], 1)]).is_homogeneous());
    assert!(!p(2, &[(&[0, 0], 1), (&[1, 1], 1)]).is_homogeneous());
    assert_eq!(p(2, &[(&[2, 1], 1), (&[0, 3], 1)]).degree_vector(), vec![2, 3]);
    assert_eq!(p(2, &[(&[2, 1], 1), (&[0, 3], 1)]).total_degree(), Some(3));
}

#[test]
fn phase_normalize_examples() {
    let f = Polynomial::from_terms(2, [(vec![1, 0], cint(0, 1)), (vec![0, 1], cint(0, 2))]).unwrap();
    let n = f.phase_normalize().unwrap();
    assert_eq!(n.polynomial, p(2, &[(&[1, 0], 1), (&[0, 1], 2)]));
    assert_eq!(n.phase, cint(0, 1));

    assert!(p(2, &[(&[1, 0], 1), (&[0, 1], -1)]).phase_normalize().is_none());

    let g = Polynomial::from_terms(3, [(vec![1, 1, 0], cint(1, 1)), (vec![0, 1, 1], cint(1, 1))]).unwrap();
    let n = g.phase_normalize().unwrap();
    assert_eq!(n.polynomial, p(3, &[(&[1, 1, 0], 1), (&[0, 1, 1], 1)]));
    assert_eq!(n.phase, cint(1, 1));
    assert!(Polynomial::zero(1).phase_normalize().is_none());
}

#[test]
fn display_format() {
    let f = p(2, &[(&[0, 0], 1), (&[1, 2], -3)]);
    assert_eq!(format!("{f}"), "1 + -3*z1*z2^2");
    assert_eq!(format!("{}", Polynomial::zero(1)), "0");
}

fn arb_poly(max_vars: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
    (1..=max_vars).prop_flat_map(move |n| {
        proptest::collection::vec(
            (proptest::collection::vec(0..=max_deg, n), -4i64..=4, -2i64..=2),
            1..6,
        )
        .prop_map(move |terms| {
            let mut f = Polynomial::zero(n);
            for (e, re, im) in terms {
                f = &f + &Polynomial::monomial(e, cint(re, im));
            }
            f
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn derivative_support(f in arb_poly(3, 3), i in 0usize..3) {
        prop_assume!(i < f.nvars());
        let expected: std::collections::BTreeSet<Vec<i64>> = f
            .terms()
            .filter(|(e, _)| e[i] >= 1)
            .map(|(e, _)| e.iter().enumerate().map(|(v, &k)| k as i64 - i64::from(v == i)).collect())
            .collect();
        let got: std::collections::BTreeSet<Vec<i64>> = f.partial_derivative(i).unwrap().support().points().cloned().collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn reciprocal_involution(f in arb_poly(3, 3)) {
        let kappa = f.degree_vector();
        prop_assert_eq!(f.reciprocal(&kappa).unwrap().reciprocal(&kappa).unwrap(), f);
    }

    #[test]
    fn polarization_contract(f in arb_poly(3, 3)) {
        prop_assume!(!f.is_zero());
        let pf = f.polarize().unwrap();
        prop_assert!(pf.base().is_multiaffine());
        prop_assert!(pf.is_group_symmetric());
        prop_assert_eq!(pf.collapse(), f);
    }

    #[test]
    fn interval_restriction_support(f in arb_poly(3, 3), seed in proptest::collection::vec((0u32..=3, 0u32..=3), 3)) {
        prop_assume!(!f.is_zero());
        let deg = f.degree_vector();
        let (alpha, beta): (Vec<u32>, Vec<u32>) = seed
            .iter()
            .take(f.nvars())
            .zip(&deg)
            .map(|(&(a, b), &d)| {
                let (lo, hi) = (a.min(b).min(d), a.max(b).min(d));
                (lo, hi)
            })
            .unzip();
        // the postcondition is asserted inside; just make sure it runs
        let r = f.interval_restriction(&alpha, &beta).unwrap();
        prop_assert!(r.nvars() == f.nvars());
    }

    #[test]
    fn float_and_exact_evaluation_agree(f in arb_poly(3, 3), xs in proptest::collection::vec((-8i64..=8, 1i64..=4), 3)) {
        let pt: Vec<Rational> = xs.iter().take(f.nvars()).map(|&(a, b)| rat(a, b)).collect();
        let exact = f.evaluate_rational(&pt).unwrap();
        let fl = f.evaluate(&pt.iter().map(|x| Complex64::new(number::to_f64(x), 0.0)).collect::<Vec<_>>()).unwrap();
        let (er, ei) = (number::to_f64(&exact.re), number::to_f64(&exact.im));
        let scale = 1.0 + er.abs() + ei.abs();
        prop_assert!((fl.re - er).abs() <= 1e-9 * scale && (fl.im - ei).abs() <= 1e-9 * scale);
    }

    #[test]
    fn ring_identities(f in arb_poly(2, 2), g in arb_poly(2, 2)) {
        prop_assume!(f.nvars() == g.nvars());
        prop_assert_eq!(&(&f * &g), &(&g * &f));
        prop_assert_eq!(&(&(&f + &g) - &g), &f);
        // product rule
        let lhs = (&f * &g).partial_derivative(0).unwrap();
        let rhs = &(&f.partial_derivative(0).unwrap() * &g) + &(&f * &g.partial_derivative(0).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
