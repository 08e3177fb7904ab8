use num_complex::Complex64;
use num_traits::{One, Zero};
use proptest::prelude::*;

use kdweyl_core::field::int;
use kdweyl_core::linalg::SparseMatrix;
use kdweyl_core::qarith::{
    qbinomial, qexp_matrix, qfactorial, qnumber, ExactScalar, QExp, QExpVariant, QInteger,
};
use kdweyl_core::Error;

fn q() -> ExactScalar {
    ExactScalar::q_int(1)
}

fn qi(n: i64) -> ExactScalar {
    ExactScalar::q_int(n)
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}

/// Float oracle (q^n - q^-n)/(q - q^-1).
fn float_qnumber(n: i64, x: Complex64) -> Complex64 {
    (x.powi(n as i32) - x.powi(-n as i32)) / (x - 1.0 / x)
}

/// Float oracle by the q-Pascal recursion on the Gaussian binomial in the variable q².
fn float_qbinomial(n: i64, k: i64, x: Complex64) -> Complex64 {
    if k < 0 || k > n {
        return Complex64::zero();
    }
    let mut row = vec![Complex64::one()];
    for m in 1..=n {
        let mut next = vec![Complex64::one(); m as usize + 1];
        for a in 1..m as usize {
            next[a] = row[a - 1] * x.powi(m as i32 - a as i32) + row[a] * x.powi(-(a as i32));
        }
        row = next;
    }
    row[k as usize]
}

fn eval(s: &ExactScalar, x: Complex64) -> Complex64 {
    s.evaluate(x).unwrap().value()
}

#[test]
fn qnumber_small_values() {
    assert!(qnumber(0).is_zero());
    assert!(qnumber(1).is_one());
    assert_eq!(qnumber(2), &q() + &qi(-1));
    assert_eq!(qnumber(3), &(&qi(2) + &ExactScalar::one()) + &qi(-2));
}

#[test]
fn qnumber_matches_float_definition() {
    let x = Complex64::new(1.3, 0.4);
    for n in -7..=7 {
        assert!(close(eval(&qnumber(n), x), float_qnumber(n, x), 1e-12), "n = {n}");
    }
}

#[test]
fn qinteger_records_value_and_expansion() {
    let v = QInteger(5);
    assert_eq!(v.value(), 5);
    assert_eq!(v.expansion(), qnumber(5));
}

#[test]
fn qbinomial_examples() {
    assert_eq!(qbinomial(2, 1), &q() + &qi(-1));
    let three_choose_one = &qfactorial(3) / &(&qfactorial(1) * &qfactorial(2));
    assert_eq!(qbinomial(3, 1), three_choose_one);
    assert_eq!(qbinomial(3, 1), &(&qi(2) + &ExactScalar::one()) + &qi(-2));
    for n in 0..8 {
        assert!(qbinomial(n, 0).is_one());
    }
    assert!(qbinomial(3, 4).is_zero());
    assert!(qbinomial(3, -1).is_zero());
}

#[test]
fn qbinomial_matches_recursion_oracle() {
    let x = Complex64::new(0.8, 0.3);
    for n in 0..=8 {
        for k in 0..=n {
            assert!(close(eval(&qbinomial(n, k), x), float_qbinomial(n, k, x), 1e-11), "({n},{k})");
        }
    }
}

#[test]
fn qbinomial_is_bar_invariant() {
    for n in 0..=7 {
        for k in 0..=n {
            let b = qbinomial(n, k);
            assert_eq!(b.bar(), b);
        }
    }
}

fn jordan(dim: usize) -> SparseMatrix<ExactScalar> {
    SparseMatrix::from_triplets(dim, dim, (0..dim.saturating_sub(1)).map(|i| (i, i + 1, ExactScalar::one())))
}

#[test]
fn qexp_of_zero_is_identity() {
    let z = SparseMatrix::<ExactScalar>::zeros(4, 4);
    assert_eq!(qexp_matrix(QExpVariant::Q, &z).unwrap(), SparseMatrix::identity(4));
}

#[test]
fn qexp_of_size_two_cell() {
    let a = jordan(2);
    let want = SparseMatrix::identity(2).add(&a);
    assert_eq!(qexp_matrix(QExpVariant::Q, &a).unwrap(), want);
}

#[test]
fn qexp_of_size_three_cell() {
    let a = jordan(3);
    let a2 = a.matmul(&a);
    let want = SparseMatrix::identity(3).add(&a).add(&a2.scale(&(&q() / &qnumber(2))));
    let got = qexp_matrix(QExpVariant::Q, &a).unwrap();
    assert_eq!(got, want);
    // Float oracle: Σ q^{n(n-1)/2} A^n/[n]! with entries A = J evaluated at q = 1.7.
    let x = Complex64::new(1.7, 0.0);
    let corner = x / (x + 1.0 / x);
    assert!(close(eval(&got.entry(0, 2), x), corner, 1e-14));
}

#[test]
fn qexp_rejects_non_nilpotent() {
    let a = SparseMatrix::from_triplets(2, 2, [(0, 1, ExactScalar::one()), (1, 0, ExactScalar::one())]);
    assert!(matches!(qexp_matrix(QExpVariant::Q, &a), Err(Error::NotNilpotent { .. })));
}

#[test]
fn evaluate_examples() {
    let s = &q() + &qi(-1);
    assert!(close(eval(&s, Complex64::new(1.0, 0.0)), Complex64::new(2.0, 0.0), 1e-15));
    let half = ExactScalar::q_frac(1, 2);
    let v = half.evaluate_hbar(Complex64::zero()).unwrap().value();
    assert!(close(v, Complex64::one(), 1e-15));
    let three = eval(&qnumber(3), Complex64::new(2.0, 0.0));
    assert!(close(three, Complex64::new(4.0 + 1.0 + 0.25, 0.0), 1e-15));
}

#[test]
fn evaluate_hbar_follows_exponent_continuously() {
    // q^{1/2} at ħ = 2πi·0.75 is e^{0.75πi}, not the principal root of q = e^{1.5πi}.
    let hbar = Complex64::new(0.0, 2.0 * std::f64::consts::PI * 0.75);
    let v = ExactScalar::q_frac(1, 2).evaluate_hbar(hbar).unwrap().value();
    assert!(close(v, (hbar / 2.0).exp(), 1e-14));
}

#[test]
fn evaluate_reports_poles() {
    let s = &ExactScalar::one() / &(&q() - &ExactScalar::one());
    assert!(matches!(s.evaluate(Complex64::one()), Err(Error::Pole { .. })));
}

#[test]
fn canonical_text_uses_common_denominator() {
    let s = &qi(1) + &ExactScalar::q_frac(-1, 2);
    assert_eq!(s.canonical_text(2).unwrap(), "1 * q^(-1/2) + 1 * q^(2/2)");
    assert_eq!(s.canonical_text(6).unwrap(), "1 * q^(-3/6) + 1 * q^(6/6)");
    assert!(s.canonical_text(3).is_err());
}

#[test]
fn division_is_exact_and_reduced() {
    let a = qnumber(6);
    let b = qnumber(3);
    let r = &a / &b;
    assert!(r.is_laurent());
    assert_eq!(r, &qi(3) + &qi(-3));
    assert_eq!(&r * &b, a);
}

fn small_scalar() -> impl Strategy<Value = ExactScalar> {
    prop::collection::vec((-3i64..=3, -4i64..=4, 1i64..=2), 1..4).prop_map(|terms| {
        terms.into_iter().fold(ExactScalar::zero(), |acc, (c, e, d)| {
            &acc + &ExactScalar::monomial(int(c), QExp::new(e, d))
        })
    })
}

proptest! {
    #[test]
    fn qnumber_is_antisymmetric_and_classical(n in -40i64..40) {
        prop_assert_eq!(qnumber(-n), -qnumber(n));
        prop_assert_eq!(qnumber(n).eval_at_one().unwrap(), int(n));
    }

    #[test]
    fn q_pascal(alpha in 2i64..12, a_frac in 0.0f64..1.0) {
        let a = 1 + ((alpha - 2) as f64 * a_frac) as i64;
        let lhs = qbinomial(alpha, a);
        let rhs = &(&qbinomial(alpha - 1, a) * &qi(-a)) + &(&qbinomial(alpha - 1, a - 1) * &qi(alpha - a));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn qexp_inverse_pair(
        dim in 1usize..=6,
        entries in prop::collection::vec((-2i64..=2, -2i64..=2), 15),
    ) {
        let mut trip = Vec::new();
        let mut t = 0;
        for r in 0..dim {
            for c in r + 1..dim {
                let (coef, e) = entries[t];
                t += 1;
                if coef != 0 {
                    trip.push((r, c, &ExactScalar::from_int(coef) * &qi(e)));
                }
            }
        }
        let a = SparseMatrix::from_triplets(dim, dim, trip);
        let p = qexp_matrix(QExpVariant::Q, &a).unwrap();
        let m = qexp_matrix(QExpVariant::QInverse, &a.neg()).unwrap();
        prop_assert_eq!(p.matmul(&m), SparseMatrix::identity(dim));
    }

    #[test]
    fn evaluate_is_multiplicative_and_additive(
        a in small_scalar(),
        b in small_scalar(),
        re in 0.5f64..2.0,
        im in -1.0f64..1.0,
    ) {
        let x = Complex64::new(re, im);
        let (va, vb) = (eval(&a, x), eval(&b, x));
        prop_assert!(close(eval(&(&a * &b), x), va * vb, 1e-12));
        prop_assert!(close(eval(&(&a + &b), x), va + vb, 1e-12));
        if !b.is_zero() && vb.norm() > 1e-6 {
            prop_assert!(close(eval(&(&a / &b), x), va / vb, 1e-9));
        }
    }
}
