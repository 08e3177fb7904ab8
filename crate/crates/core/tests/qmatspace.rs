use std::sync::Arc;

use num_complex::Complex64;
use num_traits::One;
use proptest::prelude::*;

use kdweyl_core::glrep::{gl_generator, Side, YoungDiagram};
use kdweyl_core::qarith::{q_minus_q_inverse, qnumber, ExactScalar};
use kdweyl_core::qmatspace::{
    classical_limit, generate_component, hw_vector, is_row_highest, pieri_kernel, q_cartan_power, straighten, uq_apply,
    uq_gl_k_action, uq_gl_n_action, uq_operator, verify_dual_pair, verify_serre, QGenerator, QMatMonomial,
    QPolynomial, QWord, Strategy as Rewrite,
};
use kdweyl_core::report::all_pass;
use kdweyl_core::{MatrixMonomial, MonomialBasis};

fn mono(rows: &[&[u32]]) -> QMatMonomial {
    MatrixMonomial::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn term(rows: &[&[u32]], c: ExactScalar) -> QPolynomial {
    QPolynomial::monomial(mono(rows), c)
}

fn x(k: usize, n: usize, i: usize, j: usize) -> QPolynomial {
    let mut m = QMatMonomial::zero(k, n);
    m.set(i, j, 1);
    QPolynomial::monomial(m, ExactScalar::one())
}

#[test]
fn straighten_same_column() {
    let got = straighten(2, 1, &QWord(vec![(1, 0), (0, 0)]), Rewrite::Leftmost);
    assert_eq!(got, term(&[&[1], &[1]], ExactScalar::q_int(1)));
}

#[test]
fn straighten_cross_term() {
    let got = straighten(2, 2, &QWord(vec![(1, 1), (0, 0)]), Rewrite::Leftmost);
    let want = term(&[&[1, 0], &[0, 1]], ExactScalar::one()).add(&term(&[&[0, 1], &[1, 0]], q_minus_q_inverse()));
    assert_eq!(got, want);
}

#[test]
fn straighten_other_cases() {
    // Same row: X12 X11 = q X11 X12.
    let got = straighten(1, 2, &QWord(vec![(0, 1), (0, 0)]), Rewrite::Leftmost);
    assert_eq!(got, term(&[&[1, 1]], ExactScalar::q_int(1)));
    // k < i, l > j: X12 X21 = X21 X12.
    let got = straighten(2, 2, &QWord(vec![(0, 1), (1, 0)]), Rewrite::Leftmost);
    assert_eq!(got, term(&[&[0, 1], &[1, 0]], ExactScalar::one()));
}

#[test]
fn straighten_normal_word_is_identity() {
    let w = QWord(vec![(0, 0), (1, 0), (1, 0), (0, 1), (2, 1), (1, 2)]);
    let got = straighten(3, 3, &w, Rewrite::Rightmost);
    assert_eq!(got, term(&[&[1, 1, 0], &[2, 0, 1], &[0, 1, 0]], ExactScalar::one()));
}

#[test]
fn row_action_examples() {
    let m = mono(&[&[2, 1], &[0, 3]]);
    let d = uq_gl_k_action(QGenerator::D(1), &m).unwrap();
    assert_eq!(d, QPolynomial::monomial(m.clone(), ExactScalar::from_int(3)));

    for power in 1..=5u32 {
        let m = mono(&[&[0], &[power]]);
        let got = uq_gl_k_action(QGenerator::E(0), &m).unwrap();
        let want = QPolynomial::monomial(mono(&[&[1], &[power - 1]]), qnumber(power as i64));
        assert_eq!(got, want, "power {power}");
    }

    let m = mono(&[&[0, 0], &[2, 1]]);
    assert!(uq_gl_k_action(QGenerator::F(0), &m).unwrap().is_zero());
}

#[test]
fn column_action_examples() {
    let m = mono(&[&[2, 1], &[0, 3]]);
    let d = uq_gl_n_action(QGenerator::D(0), &m).unwrap();
    assert_eq!(d, QPolynomial::monomial(m.clone(), ExactScalar::from_int(2)));

    for j in 0..3 {
        let mut m = QMatMonomial::zero(1, 4);
        m.set(0, j + 1, 1);
        let mut want = QMatMonomial::zero(1, 4);
        want.set(0, j, 1);
        assert_eq!(uq_gl_n_action(QGenerator::E(j), &m).unwrap(), QPolynomial::monomial(want, ExactScalar::one()));
    }
}

#[test]
fn column_raising_on_highest_weight_vectors() {
    for k in 2..=3 {
        for mu1 in 0..=3u32 {
            for mu2 in 1..=3u32 {
                for i in 0..=mu1.min(mu2 - 1) {
                    let v = hw_vector(k, mu1, mu2, i).unwrap();
                    let got = uq_apply(Side::N, QGenerator::E(0), &v).unwrap();
                    let want = hw_vector(k, mu1 + 1, mu2 - 1, i).unwrap().scale(&qnumber((mu2 - i) as i64));
                    assert_eq!(got, want, "k={k} mu=({mu1},{mu2}) i={i}");
                }
            }
        }
    }
}

#[test]
fn generator_indices_are_checked() {
    let m = mono(&[&[1, 0]]);
    assert!(uq_gl_k_action(QGenerator::E(0), &m).is_err());
    assert!(uq_gl_n_action(QGenerator::E(1), &m).is_err());
}

fn passes(records: &[kdweyl_core::report::CheckRecord], prefix: &str) -> bool {
    let hits: Vec<_> = records.iter().filter(|r| r.identity.starts_with(prefix)).collect();
    !hits.is_empty() && hits.iter().all(|r| r.passed())
}

#[test]
fn serre_examples() {
    let r = verify_serre(Side::K, 2, 2, 3).unwrap();
    assert!(passes(&r, "[D_1,D_2]"));
    assert!(passes(&r, "[E_1,F_1]"));
    let r = verify_serre(Side::N, 2, 2, 3).unwrap();
    assert!(passes(&r, "[E_1,F_1]"));
    let r = verify_serre(Side::K, 3, 2, 3).unwrap();
    assert!(passes(&r, "E_1^2E_2"));
    assert!(passes(&r, "F_2^2F_1"));
    assert!(all_pass(&r));
}

#[test]
fn row_and_column_actions_commute() {
    for (k, n) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        assert!(all_pass(&verify_dual_pair(k, n, 3).unwrap()), "k={k} n={n}");
    }
}

#[test]
fn hw_vector_examples() {
    let v = hw_vector(3, 2, 3, 0).unwrap();
    assert_eq!(v, term(&[&[2, 3], &[0, 0], &[0, 0]], ExactScalar::one()));

    let v = hw_vector(2, 1, 1, 1).unwrap();
    let want = term(&[&[0, 1], &[1, 0]], ExactScalar::one()).add(&term(&[&[1, 0], &[0, 1]], -ExactScalar::q_int(1)));
    assert_eq!(v, want);
    assert!(is_row_highest(&v));

    assert!(hw_vector(2, 1, 2, 2).is_err());
    assert!(hw_vector(1, 2, 2, 1).is_err());
}

#[test]
fn pieri_kernel_count() {
    for k in 2..=3 {
        for mu1 in 0..=3 {
            for mu2 in 0..=3 {
                let (_, kernel) = pieri_kernel(k, mu1, mu2).unwrap();
                assert_eq!(kernel.len(), mu1.min(mu2) as usize + 1);
            }
        }
    }
    assert_eq!(pieri_kernel(1, 3, 2).unwrap().1.len(), 1);
}

#[test]
fn component_examples() {
    for n in 1..=4 {
        let c = generate_component(&x(2, n, 0, 0), Side::N, None).unwrap();
        assert_eq!(c.dim(), n);
    }
    let det = hw_vector(2, 1, 1, 1).unwrap();
    let c = generate_component(&det, Side::N, None).unwrap();
    assert_eq!(c.dim(), 1);
    assert_eq!(c.lambda, YoungDiagram::new(&[1, 1]).unwrap());
    let sym = x(2, 2, 0, 0).mul(&x(2, 2, 0, 1));
    let c = generate_component(&sym, Side::N, None).unwrap();
    assert_eq!(c.dim(), 3);
}

#[test]
fn component_rejects_non_highest_vectors() {
    let v = term(&[&[0, 1], &[1, 0]], ExactScalar::one());
    assert!(generate_component(&v, Side::N, None).is_err());
}

#[test]
fn actions_reduce_to_classical_operators_at_q_one() {
    for (k, n) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        for d in 0..=3 {
            let basis = Arc::new(MonomialBasis::graded(k, n, d).unwrap());
            for side in [Side::K, Side::N] {
                let p = if side == Side::K { k } else { n };
                for i in 0..p {
                    let q = classical_limit(&uq_operator(side, QGenerator::D(i), &basis).unwrap()).unwrap();
                    assert_eq!(q, gl_generator(side, i, i, &basis).unwrap().matrix);
                }
                for i in 0..p - 1 {
                    let q = classical_limit(&uq_operator(side, QGenerator::E(i), &basis).unwrap()).unwrap();
                    assert_eq!(q, gl_generator(side, i, i + 1, &basis).unwrap().matrix);
                    let q = classical_limit(&uq_operator(side, QGenerator::F(i), &basis).unwrap()).unwrap();
                    assert_eq!(q, gl_generator(side, i + 1, i, &basis).unwrap().matrix);
                }
            }
        }
    }
}

#[test]
fn cartan_power_matches_q_to_the_weight() {
    let basis = Arc::new(MonomialBasis::graded(2, 2, 2).unwrap());
    let k = q_cartan_power(Side::N, 0, 2, &basis);
    for (i, m) in basis.elements().iter().enumerate() {
        let d = m.column_degrees();
        assert_eq!(k.matrix.entry(i, i), ExactScalar::q_int(2 * (d[0] as i64 - d[1] as i64)));
    }
}

fn word(k: usize, n: usize, max_len: usize) -> impl Strategy<Value = QWord> {
    prop::collection::vec((0..k, 0..n), 0..=max_len).prop_map(QWord)
}

fn sized_word() -> impl Strategy<Value = (usize, usize, QWord)> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(k, n)| (Just(k), Just(n), word(k, n, 6)))
}

fn weight(side: Side, m: &QMatMonomial) -> Vec<u32> {
    match side {
        Side::K => m.row_sums(),
        Side::N => m.column_degrees(),
    }
}

/// K_i = q^{H_i} applied termwise.
fn cartan(side: Side, i: usize, sign: i64, p: &QPolynomial) -> QPolynomial {
    p.apply(|m| {
        let w = weight(side, m);
        vec![(m.clone(), ExactScalar::q_int(sign * (w[i] as i64 - w[i + 1] as i64)))]
    })
}

fn from_word(k: usize, n: usize, w: &QWord) -> QPolynomial {
    straighten(k, n, w, Rewrite::Leftmost)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn straightening_is_confluent_and_graded((k, n, w) in sized_word()) {
        let a = straighten(k, n, &w, Rewrite::Leftmost);
        let b = straighten(k, n, &w, Rewrite::Rightmost);
        prop_assert_eq!(&a, &b);
        let basis = MonomialBasis::graded(k, n, w.len() as u32).unwrap();
        for m in a.terms().keys() {
            prop_assert!(basis.index_of(m).is_some());
        }
        prop_assert!(!a.is_zero());
    }

    #[test]
    fn product_is_associative(
        (k, n) in (1usize..=3, 1usize..=3),
        seed in prop::collection::vec((0usize..3, 0usize..3), 6),
    ) {
        let letters: Vec<(usize, usize)> = seed.iter().map(|&(i, j)| (i % k, j % n)).collect();
        let a = from_word(k, n, &QWord(letters[0..2].to_vec()));
        let b = from_word(k, n, &QWord(letters[2..4].to_vec()));
        let c = from_word(k, n, &QWord(letters[4..6].to_vec()));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), from_word(k, n, &QWord(letters)));
    }

    /// E(ab) = E(a) K(b) + a E(b) and F(ab) = F(a) b + K^{-1}(a) F(b).
    #[test]
    fn actions_are_module_algebra_actions(
        (k, n, wa, wb) in (2usize..=3, 2usize..=3).prop_flat_map(|(k, n)| (Just(k), Just(n), word(k, n, 2), word(k, n, 2))),
        side_k in any::<bool>(),
    ) {
        let side = if side_k { Side::K } else { Side::N };
        let a = from_word(k, n, &wa);
        let b = from_word(k, n, &wb);
        let p = if side == Side::K { k } else { n };
        for i in 0..p - 1 {
            let e = |x: &QPolynomial| uq_apply(side, QGenerator::E(i), x).unwrap();
            let f = |x: &QPolynomial| uq_apply(side, QGenerator::F(i), x).unwrap();
            prop_assert_eq!(e(&a.mul(&b)), e(&a).mul(&cartan(side, i, 1, &b)).add(&a.mul(&e(&b))));
            prop_assert_eq!(f(&a.mul(&b)), f(&a).mul(&b).add(&cartan(side, i, -1, &a).mul(&f(&b))));
        }
    }

    #[test]
    fn straightening_specializes_to_commutative_product((k, n, w) in sized_word()) {
        let s = straighten(k, n, &w, Rewrite::Leftmost);
        let mut m = QMatMonomial::zero(k, n);
        for &(i, j) in w.letters() {
            m = m.incremented(i, j);
        }
        let one = Complex64::new(1.0, 0.0);
        for (t, c) in s.terms() {
            let v = c.evaluate(one).unwrap().value();
            let want = if *t == m { 1.0 } else { 0.0 };
            prop_assert!((v - Complex64::new(want, 0.0)).norm() < 1e-12);
        }
    }
}
