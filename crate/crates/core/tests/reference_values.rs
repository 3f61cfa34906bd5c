use num_rational::Ratio;
use qballot_core::analysis::{newton_polytope, numerator, theorem1_numerator};
use qballot_core::arith::rat;
use qballot_core::ballot::*;
use qballot_core::csequence::*;
use qballot_core::qcore::*;
use qballot_core::{BallotTable, QLaurent, QRatFunc};

fn lp(low: i64, cs: &[i64]) -> QLaurent {
    QLaurent::from_i64s(low, cs)
}

fn rf(low: i64, cs: &[i64]) -> QRatFunc {
    QRatFunc::from_laurent(lp(low, cs))
}

#[test]
fn laurent_arithmetic() {
    assert_eq!(&lp(1, &[1, 1]) + &lp(0, &[1, -1]), lp(0, &[1, 0, 1]));
    assert_eq!(&lp(0, &[1, 1]) * &lp(0, &[1, 1, 1]), lp(0, &[1, 2, 2, 1]));
    assert_eq!(&lp(-1, &[1]) * &QLaurent::q(), QLaurent::one());
    let a = &lp(2, &[1]) + &lp(-1, &[1]);
    assert_eq!(a.subst_q_inverse(), &lp(-2, &[1]) + &lp(1, &[1]));
    assert_eq!(lp(2, &[1, 1]).subst_q_inverse(), lp(-3, &[1, 1]));
    assert_eq!(lp(0, &[1, 1, 2, 1]).eval(&rat(1, 1)).unwrap(), rat(5, 1));
    assert_eq!(lp(-1, &[1]).eval(&rat(2, 1)).unwrap(), rat(1, 2));
    assert_eq!(lp(2, &[1, 1]).eval(&rat(1, 1)).unwrap(), rat(2, 1));
}

#[test]
fn gcd_and_normalization() {
    assert_eq!(lp(0, &[-1, 0, 1]).gcd(&lp(0, &[-1, 0, 0, 1])).unwrap(), lp(0, &[-1, 1]));
    assert_eq!(lp(0, &[1, 1]).gcd(&lp(4, &[1])).unwrap(), QLaurent::one());
    let p = lp(0, &[2, 4, 2]);
    assert_eq!(p.gcd(&p).unwrap(), lp(0, &[1, 2, 1]));
    let kept = QRatFunc::new(lp(1, &[1, 2, 2]), lp(0, &[1, 1])).unwrap();
    assert_eq!(kept.denom(), &lp(0, &[1, 1]));
    assert_eq!(QRatFunc::new(lp(2, &[1, 1]), lp(1, &[1, 1])).unwrap(), QRatFunc::q());
    let z = QRatFunc::new(QLaurent::zero(), lp(0, &[1, 1])).unwrap();
    assert!(z.is_zero() && z.denom().is_one());
    assert!(QRatFunc::new(QLaurent::one(), QLaurent::zero()).is_err());
}

#[test]
fn q_numbers() {
    assert_eq!(q_int(3), lp(0, &[1, 1, 1]));
    assert!(q_int(0).is_zero());
    assert_eq!(q_int(-2), lp(-2, &[-1, -1]));
    assert_eq!(gauss_binom(4, 2), lp(0, &[1, 1, 2, 1, 1]));
    assert_eq!(gauss_binom(4, 0), QLaurent::one());
    assert!(gauss_binom(2, 3).is_zero());
    assert_eq!(q_stirling(3, 2), lp(0, &[2, 1]));
    for n in 0..=6 {
        assert_eq!(q_stirling(n, n), QLaurent::one());
    }
    assert!(q_stirling(2, 0).is_zero());
}

#[test]
fn difference_operators() {
    let x2 = XPoly::one().shift_x(2);
    assert_eq!(hahn_delta(&x2).unwrap(), XPoly::linear(QRatFunc::one(), rf(0, &[1, 1])));
    assert!(hahn_delta(&XPoly::one()).unwrap().is_zero());
    assert_eq!(q_deriv(&x2), XPoly::linear(QRatFunc::zero(), rf(0, &[1, 1])));
    let c2 = XPoly::linear(QRatFunc::one(), QRatFunc::q());
    assert_eq!(subst_affine(&c2, &QRatFunc::q(), &QRatFunc::one()), XPoly::linear(rf(0, &[1, 1]), rf(2, &[1])));
    assert_eq!(subst_affine(&x2, &QRatFunc::one(), &QRatFunc::zero()), x2);
    assert_eq!(
        subst_affine(&XPoly::x(), &rf(2, &[1]), &rf(0, &[1, 1])),
        XPoly::linear(rf(0, &[1, 1]), rf(2, &[1]))
    );
}

#[test]
fn interpolation_examples() {
    let mut t = BallotTable::new();
    let c3 = c_theorem1(2, &mut t);
    let nodes: Vec<QRatFunc> = (0..3).map(|k| QRatFunc::from_laurent(q_int(k))).collect();
    let values: Vec<QRatFunc> = nodes.iter().map(|x| c3.eval(x)).collect();
    assert_eq!(newton_interpolate(&nodes, &values).unwrap(), c3);
    assert_eq!(newton_interpolate(&[QRatFunc::zero()], &[QRatFunc::from_int(5)]).unwrap(), XPoly::constant(QRatFunc::from_int(5)));
    let x = newton_interpolate(&[QRatFunc::zero(), QRatFunc::one()], &[QRatFunc::zero(), QRatFunc::one()]).unwrap();
    assert_eq!(x, XPoly::x());
    assert!(newton_interpolate(&[QRatFunc::one(), QRatFunc::one()], &[QRatFunc::zero(), QRatFunc::one()]).is_err());
}

#[test]
fn ballot_values() {
    let mut t = BallotTable::new();
    assert_eq!(t.qballot(2, 2), lp(2, &[1, 1]));
    assert_eq!(t.qballot(3, 2), lp(2, &[1, 1, 2, 1]));
    assert_eq!(t.qballot(4, 3), lp(3, &[1, 1, 2, 3, 3, 3, 1]));
    assert_eq!(qballot_paths(1, 1, DEFAULT_PATH_CAP).unwrap(), QLaurent::q());
    assert_eq!(qballot_paths(3, 3, DEFAULT_PATH_CAP).unwrap(), lp(3, &[1, 1, 2, 1]));
    assert_eq!(qcatalan(4, &mut t), lp(0, &[1, 1, 2, 3, 3, 3, 1]));
    assert_eq!(tilde_qcatalan(4, &mut t), lp(0, &[1, 3, 3, 3, 2, 1, 1]));
}

#[test]
fn family_values() {
    let mut t = BallotTable::new();
    assert_eq!(c_theorem1(0, &mut t), XPoly::one());
    assert_eq!(c_theorem1(3, &mut t).coeffs().len(), 4);
    assert_eq!(theorem1_expansion(3, &mut t).coeffs[3], rf(9, &[1]));
    assert_eq!(prop1_value(2, 2, &mut t), lp(0, &[1, 2, 2, 2, 1, 1]));
    let fam = c_recurrence(4, &mut t).unwrap();
    assert_eq!(fam.get(4), Some(&c_theorem1(3, &mut t)));
    let one = rat(1, 1);
    assert_eq!(c_q1(1), XPoly::linear(QRatFunc::one(), QRatFunc::one()));
    assert_eq!(c_q1(3).eval_numeric(&one, &one).unwrap(), rat(14, 1));
}

#[test]
fn numerator_and_polytope_values() {
    let mut t = BallotTable::new();
    let r = numerator(3, &c_theorem1(2, &mut t));
    let p = newton_polytope(&r).unwrap();
    assert_eq!(p.hull, vec![(0, 0), (2, 0), (4, 2), (1, 1)]);
    assert_eq!(p.upper_hull_slopes, vec![Ratio::from_integer(1), Ratio::from_integer(3)]);
    let p2 = newton_polytope(&theorem1_numerator(2, &mut t)).unwrap();
    assert_eq!(p2.points, vec![(0, 0), (1, 1)]);
    let p6 = newton_polytope(&theorem1_numerator(6, &mut t)).unwrap();
    let odd: Vec<Ratio<i64>> = [1, 3, 5, 7, 9].into_iter().map(Ratio::from_integer).collect();
    assert_eq!(p6.upper_hull_slopes, odd);
}
