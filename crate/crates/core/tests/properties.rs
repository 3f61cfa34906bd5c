use num_bigint::BigInt;
use proptest::prelude::*;
use qballot_core::arith::{gcd_euclid, gcd_modular, rat};
use qballot_core::qcore::*;
use qballot_core::{BigRat, QLaurent, QRatFunc};

fn laurent() -> impl Strategy<Value = QLaurent> {
    (-3i64..3, prop::collection::vec(-5i64..=5, 0..5), 1i64..4).prop_map(|(low, cs, den)| {
        QLaurent::from_terms(cs.iter().enumerate().map(|(i, &c)| (low + i as i64, rat(c, den))))
    })
}

fn poly_zq() -> impl Strategy<Value = QLaurent> {
    prop::collection::vec(-4i64..=4, 0..4).prop_map(|cs| QLaurent::from_i64s(0, &cs))
}

fn nonzero_laurent() -> impl Strategy<Value = QLaurent> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = QRatFunc> {
    (laurent(), nonzero_laurent()).prop_map(|(a, b)| QRatFunc::new(a, b).unwrap())
}

fn xpoly(max_deg: usize) -> impl Strategy<Value = XPoly> {
    prop::collection::vec(ratfunc(), 0..=max_deg + 1).prop_map(XPoly::from_coeffs)
}

fn point() -> impl Strategy<Value = BigRat> {
    (-6i64..=6, 1i64..4).prop_filter_map("nonzero", |(a, b)| (a != 0).then(|| rat(a, b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn normalization_ignores_common_factors(a in laurent(), b in nonzero_laurent(), c in nonzero_laurent()) {
        let reduced = QRatFunc::new(a.clone(), b.clone()).unwrap();
        prop_assert_eq!(QRatFunc::new(&a * &c, &b * &c).unwrap(), reduced.clone());
        let den = reduced.denom();
        prop_assert!(den.is_polynomial());
        prop_assert!(den.leading_coeff() > rat(0, 1));
        if !reduced.is_zero() {
            prop_assert!(reduced.numer().gcd(den).unwrap().is_constant());
        }
    }

    #[test]
    fn q_inverse_is_an_involution_and_a_homomorphism(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.subst_q_inverse().subst_q_inverse(), a.clone());
        prop_assert_eq!((&a + &b).subst_q_inverse(), &a.subst_q_inverse() + &b.subst_q_inverse());
        prop_assert_eq!((&a * &b).subst_q_inverse(), &a.subst_q_inverse() * &b.subst_q_inverse());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in laurent(), b in laurent(), v in point()) {
        let (ea, eb) = (a.eval(&v).unwrap(), b.eval(&v).unwrap());
        prop_assert_eq!((&a + &b).eval(&v).unwrap(), &ea + &eb);
        prop_assert_eq!((&a * &b).eval(&v).unwrap(), ea * eb);
    }

    #[test]
    fn field_operations(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
        }
    }

    #[test]
    fn gcd_routes_agree(a in poly_zq(), b in poly_zq(), g in poly_zq()) {
        let to_vec = |p: &QLaurent| -> Vec<BigInt> {
            let lo = p.min_exp().unwrap_or(0);
            (0..=p.max_exp().unwrap_or(-1)).map(|e| if e < lo { BigInt::from(0) } else { p.coeff(e).to_integer() }).collect()
        };
        let (ag, bg) = (&a * &g, &b * &g);
        prop_assume!(!ag.is_zero() || !bg.is_zero());
        prop_assert_eq!(gcd_modular(&to_vec(&ag), &to_vec(&bg)), gcd_euclid(&to_vec(&ag), &to_vec(&bg)));
    }

    #[test]
    fn qbinom_basis_round_trip(f in xpoly(8)) {
        let e = to_qbinom_basis(&f).unwrap();
        prop_assert_eq!(e.coeffs.len(), f.degree().map_or(0, |d| d + 1));
        prop_assert_eq!(from_qbinom_basis(&e), f);
    }

    #[test]
    fn affine_substitution_composes(f in xpoly(4), a in ratfunc(), b in ratfunc(), v in ratfunc()) {
        let g = subst_affine(&f, &a, &b);
        prop_assert_eq!(g.eval(&v), f.eval(&(&(&a * &v) + &b)));
    }

    #[test]
    fn interpolation_recovers_polynomials(f in xpoly(4)) {
        let nodes: Vec<QRatFunc> = (0..5).map(|k| QRatFunc::from_laurent(q_int(k))).collect();
        let values: Vec<QRatFunc> = nodes.iter().map(|x| f.eval(x)).collect();
        prop_assert_eq!(newton_interpolate(&nodes, &values).unwrap(), f);
    }

    /// Integer-valued on `1, q, q^2, ...` means integral coefficients in the
    /// p-basis, and the derivative formula recovers them.
    #[test]
    fn p_basis_coefficients(cs in prop::collection::vec(poly_zq(), 1..=6)) {
        let c: Vec<QRatFunc> = cs.into_iter().map(QRatFunc::from_laurent).collect();
        let f = from_p_basis(&c);
        for n in 0..6 {
            let v = f.eval(&QRatFunc::from_laurent(QLaurent::monomial_int(1, n)));
            prop_assert!(v.as_laurent().is_some_and(|l| l.is_polynomial() && l.is_integral()));
        }
        let mut back = to_p_basis(&f);
        back.resize(c.len(), QRatFunc::zero());
        prop_assert_eq!(back, c);
    }
}

#[test]
fn hahn_lowers_qbinom() {
    for k in 1..=8 {
        assert_eq!(hahn_delta(&qbinom_x(k)).unwrap(), qbinom_x(k - 1), "k={k}");
    }
}

#[test]
fn qbinom_at_q_integers_is_gaussian() {
    for n in 0..=8i64 {
        for k in 0..=n {
            let v = qbinom_x(k as u32).eval(&QRatFunc::from_laurent(q_int(n)));
            assert_eq!(v, QRatFunc::from_laurent(gauss_binom(n, k).shift(k * (k - 1) / 2)));
        }
    }
}

#[test]
fn gaussian_binomials_at_one() {
    for n in 0..=12 {
        for k in 0..=n {
            assert_eq!(gauss_binom(n, k).eval(&rat(1, 1)).unwrap(), BigRat::from_integer(binomial(n, k)));
        }
    }
}

#[test]
fn newton_p_at_q_powers() {
    for k in 0..=8u32 {
        let p = newton_p(k);
        for n in 0..=8i64 {
            let v = p.eval(&QRatFunc::from_laurent(QLaurent::monomial_int(1, n)));
            assert_eq!(v, QRatFunc::from_laurent(gauss_binom(n, k as i64)), "k={k} n={n}");
        }
    }
}

#[test]
fn q_derivative_lowers_newton_p() {
    let q_minus_one = QLaurent::from_i64s(0, &[-1, 1]);
    for k in 1..=6u32 {
        let factor = QRatFunc::new(QLaurent::monomial_int(1, 1 - k as i64), q_minus_one.clone()).unwrap();
        assert_eq!(q_deriv(&newton_p(k)), newton_p(k - 1).scale(&factor), "k={k}");
    }
}

/// With `1 - q` in the denominator the rule is off by a sign.
#[test]
fn q_derivative_sign_convention() {
    let one_minus_q = QLaurent::from_i64s(0, &[1, -1]);
    let factor = QRatFunc::new(QLaurent::monomial_int(1, -1), one_minus_q).unwrap();
    let d = q_deriv(&newton_p(2));
    assert_ne!(d, newton_p(1).scale(&factor));
    assert_eq!(d, -&newton_p(1).scale(&factor));
}

#[test]
fn stirling_from_iterated_differences() {
    for n in 0..=7u32 {
        let e = to_qbinom_basis(&XPoly::one().shift_x(n as usize)).unwrap();
        for k in 0..=7u32 {
            let lhs = e.coeffs.get(k as usize).cloned().unwrap_or_default();
            assert_eq!(lhs, QRatFunc::from_laurent(&q_factorial(k) * &q_stirling(n, k)), "n={n} k={k}");
        }
    }
}
