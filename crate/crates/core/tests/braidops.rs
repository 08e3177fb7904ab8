use std::sync::Arc;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use kdweyl_core::braidops::{
    correction_factor, rmatrix_direct_k2, rvee_coefficient, rvee_equivariant, rvee_family, rvee_j, reverses_cartan,
    s_mu_alpha_identity, s_mu_alpha_recursion_residual, verify_braid_relations, verify_rs, verify_rs_block,
    weyl_element_j, weyl_element_sl2, weyl_element_sl2_matrix, weyl_family, CorrectionFactor,
};
use kdweyl_core::field::int;
use kdweyl_core::glrep::{gl_dimension, sigma_operator, Side, YoungDiagram};
use kdweyl_core::linalg::{SparseMatrix, SparseVec};
use kdweyl_core::qarith::{qnumber, ExactScalar, QExp};
use kdweyl_core::qmatspace::{hw_vector, uq_operator, QGenerator};
use kdweyl_core::report::all_pass;
use kdweyl_core::{MatrixMonomial, MonomialBasis, SparseOperator};

fn q(e: i64) -> ExactScalar {
    ExactScalar::q_int(e)
}

fn signed(parity: i64, num: i64, den: i64) -> ExactScalar {
    ExactScalar::signed_q_pow(parity, QExp::new(num, den))
}

/// Irreducible U_q(sl2) module of highest weight m in the basis u_k = F^{(k)} u_0.
fn string_module(m: i64) -> [SparseMatrix<ExactScalar>; 3] {
    let dim = (m + 1) as usize;
    let e = SparseMatrix::from_triplets(dim, dim, (1..dim).map(|k| (k - 1, k, qnumber(m - k as i64 + 1))));
    let f = SparseMatrix::from_triplets(dim, dim, (0..dim - 1).map(|k| (k + 1, k, qnumber(k as i64 + 1))));
    let h = SparseMatrix::diagonal((0..dim).map(|k| ExactScalar::from_int(m - 2 * k as i64)).collect());
    [e, f, h]
}

#[test]
fn weyl_element_on_two_dimensional_module() {
    let [e, f, h] = string_module(1);
    let s = weyl_element_sl2_matrix(&e, &f, &h).unwrap();
    let want = SparseMatrix::from_triplets(2, 2, [(0, 1, ExactScalar::one()), (1, 0, -q(1))]);
    assert_eq!(s, want);
}

#[test]
fn weyl_element_on_trivial_module() {
    let z = SparseMatrix::<ExactScalar>::zeros(1, 1);
    assert_eq!(weyl_element_sl2_matrix(&z, &z, &z).unwrap(), SparseMatrix::identity(1));
}

#[test]
fn weyl_element_on_string_modules() {
    for m in 0..=6i64 {
        let [e, f, h] = string_module(m);
        let s = weyl_element_sl2_matrix(&e, &f, &h).unwrap();
        for k in 0..=m {
            let want = signed(m - k, (k + 1) * (m - k), 1);
            assert_eq!(s.entry((m - k) as usize, k as usize), want, "m={m} k={k}");
        }
        assert_eq!(s.nnz(), (m + 1) as usize);
        assert!(reverses_cartan(&s, &h));
    }
}

#[test]
fn weyl_element_rejects_non_integer_cartan() {
    let h = SparseMatrix::diagonal(vec![ExactScalar::q_frac(1, 2)]);
    let z = SparseMatrix::<ExactScalar>::zeros(1, 1);
    assert!(weyl_element_sl2_matrix(&z, &z, &h).is_err());
}

#[test]
fn weyl_element_needs_endomorphisms() {
    let basis = Arc::new(MonomialBasis::block(2, 2, &[1, 1]).unwrap());
    let e = uq_operator(Side::N, QGenerator::E(0), &basis).unwrap();
    let h = SparseOperator::identity(Arc::clone(&basis));
    assert!(weyl_element_sl2(&e, &e, &h).is_err());
}

fn vector_on(basis: &MonomialBasis, k: usize, mu1: u32, mu2: u32, i: u32) -> SparseVec<ExactScalar> {
    hw_vector(k, mu1, mu2, i).unwrap().to_vector(basis).unwrap()
}

fn scaled(v: &SparseVec<ExactScalar>, c: &ExactScalar) -> SparseVec<ExactScalar> {
    v.iter().map(|(r, x)| (*r, x * c)).collect()
}

#[test]
fn weyl_element_on_highest_weight_vectors() {
    for k in 2..=3 {
        for d in 0..=4u32 {
            let basis = Arc::new(MonomialBasis::graded(k, 2, d).unwrap());
            let s = weyl_element_j(0, &basis).unwrap().op;
            for mu1 in 0..=d {
                let mu2 = d - mu1;
                for i in 0..=mu1.min(mu2) {
                    let v = vector_on(&basis, k, mu1, mu2, i);
                    let (a, b, i_) = (mu1 as i64, mu2 as i64, i as i64);
                    let c = signed(a - i_, (a - i_) * (b - i_ + 1), 1);
                    let want = scaled(&vector_on(&basis, k, mu2, mu1, i), &c);
                    assert_eq!(s.apply(&v), want, "k={k} mu=({mu1},{mu2}) i={i}");
                }
            }
        }
    }
}

#[test]
fn weyl_element_on_vector_representation() {
    let basis = Arc::new(MonomialBasis::graded(1, 2, 1).unwrap());
    let s = weyl_element_j(0, &basis).unwrap().op;
    let x11 = basis.index_of(&MatrixMonomial::from_rows(&[vec![1, 0]])).unwrap();
    let x12 = basis.index_of(&MatrixMonomial::from_rows(&[vec![0, 1]])).unwrap();
    assert_eq!(s.matrix.entry(x12, x11), -q(1));
    assert_eq!(s.matrix.entry(x11, x12), ExactScalar::one());
    assert_eq!(s.matrix.nnz(), 2);
}

#[test]
fn rvee_on_top_vector() {
    for k in 2..=3usize {
        for mu1 in 0..=3u32 {
            for mu2 in 0..=3u32 {
                let r = rvee_equivariant(mu1, mu2, k).unwrap();
                let v = hw_vector(k, mu1, mu2, 0).unwrap().to_vector(&r.domain).unwrap();
                let w = hw_vector(k, mu2, mu1, 0).unwrap().to_vector(&r.codomain).unwrap();
                let p = (mu1 * mu2) as i64;
                let c = ExactScalar::q_pow(QExp::new(p * (k as i64 - 1), k as i64));
                assert_eq!(r.apply(&v), scaled(&w, &c));
            }
        }
    }
}

#[test]
fn rvee_rejects_k_one() {
    assert!(rvee_equivariant(1, 1, 1).is_err());
}

#[test]
fn rvee_squared_on_symmetric_blocks() {
    for k in 2..=3 {
        for mu in 0..=3u32 {
            let r = rvee_equivariant(mu, mu, k).unwrap();
            let r2 = r.compose(&r).unwrap();
            for i in 0..=mu {
                let v = hw_vector(k, mu, mu, i).unwrap().to_vector(&r.domain).unwrap();
                let c = rvee_coefficient(mu, mu, i, k);
                assert_eq!(r2.apply(&v), scaled(&v, &(&c * &c)));
            }
        }
    }
}

#[test]
fn rvee_vector_representation_has_hecke_spectrum() {
    let r = rvee_equivariant(1, 1, 2).unwrap().matrix;
    let central = ExactScalar::q_frac(1, 2);
    let rp = r.scale(&central);
    let id = SparseMatrix::identity(4);
    let hecke = rp.sub(&id.scale(&q(1))).matmul(&rp.add(&id.scale(&q(-1))));
    assert!(hecke.is_zero());
    let trace = (0..4).fold(ExactScalar::zero(), |acc, i| &acc + &rp.entry(i, i));
    assert_eq!(trace, &(&q(1) * &ExactScalar::from_int(3)) - &q(-1));
}

#[test]
fn direct_k2_matches_equivariant() {
    for mu1 in 0..=3 {
        for mu2 in 0..=3 {
            let a = rvee_equivariant(mu1, mu2, 2).unwrap();
            let b = rmatrix_direct_k2(mu1, mu2).unwrap();
            assert_eq!(a.matrix, b.matrix, "mu=({mu1},{mu2})");
        }
    }
}

#[test]
fn direct_k2_on_highest_weight_vectors() {
    for mu1 in 0..=3u32 {
        for mu2 in 0..=3u32 {
            let r = rmatrix_direct_k2(mu1, mu2).unwrap();
            for i in 0..=mu1.min(mu2) {
                let v = hw_vector(2, mu1, mu2, i).unwrap().to_vector(&r.domain).unwrap();
                let w = hw_vector(2, mu2, mu1, i).unwrap().to_vector(&r.codomain).unwrap();
                assert_eq!(r.apply(&v), scaled(&w, &rvee_coefficient(mu1, mu2, i, 2)));
            }
        }
    }
}

#[test]
fn direct_k2_with_empty_second_factor_is_flip() {
    for mu in 0..=4u32 {
        let r = rmatrix_direct_k2(mu, 0).unwrap();
        for (c, m) in r.domain.elements().iter().enumerate() {
            let row = r.codomain.index_of(&m.swap_columns(0)).unwrap();
            assert_eq!(r.matrix.entry(row, c), ExactScalar::one());
        }
        assert_eq!(r.matrix.nnz(), r.domain.len());
    }
}

/// Float evaluation of the defining sum of S^μ_α at q = x.
fn float_s(mu: i64, alpha: i64, x: f64) -> f64 {
    let qn = |n: i64| (x.powi(n as i32) - x.powi(-n as i32)) / (x - 1.0 / x);
    let fact = |n: i64| (1..=n).map(qn).product::<f64>();
    let binom = |n: i64, k: i64| fact(n) / (fact(k) * fact(n - k));
    let mut s = 0.0;
    for n in 0..=alpha {
        let term = (-1f64).powi(n as i32)
            * binom(alpha, n)
            * fact(mu - alpha + n)
            / fact(mu - alpha)
            * x.powi(((alpha - n) * (mu - alpha + n + 1) + n * (n - 1) / 2) as i32)
            * (x - 1.0 / x).powi(n as i32);
        s += term;
    }
    s * x.powi((alpha * (mu - alpha + 1)) as i32)
}

#[test]
fn s_mu_alpha_examples() {
    for mu in 0..=8 {
        assert!(s_mu_alpha_identity(mu, 0).is_one());
    }
    assert!(s_mu_alpha_identity(3, 1).is_one());
    for mu in 1..=6u32 {
        for alpha in 1..=mu {
            assert!(s_mu_alpha_recursion_residual(mu, alpha).is_zero(), "{mu} {alpha}");
        }
    }
}

#[test]
fn s_mu_alpha_float_oracle() {
    for mu in 0..=6i64 {
        for alpha in 0..=mu {
            let v = float_s(mu, alpha, 1.21);
            assert!((v - 1.0).abs() < 1e-9, "S^{mu}_{alpha} = {v}");
        }
    }
}

#[test]
fn correction_examples() {
    let c = CorrectionFactor { j: 0, k: 2 };
    let m = |rows: &[Vec<u32>]| MatrixMonomial::from_rows(rows);
    assert!(c.coefficient(&m(&[vec![0, 3], vec![0, 1]])).is_one());
    assert_eq!(c.coefficient(&m(&[vec![1, 0], vec![0, 1]])), signed(1, -3, 2));
    for k in 1..=4usize {
        let c = CorrectionFactor { j: 1, k };
        let mut x = MatrixMonomial::zero(k, 3);
        x.set(0, 1, k as u32);
        assert_eq!(c.coefficient(&x), signed(k as i64, -(k as i64), 1));
    }
    let basis = Arc::new(MonomialBasis::graded(2, 2, 2).unwrap());
    let op = correction_factor(0, 2, &basis).unwrap();
    assert!(op.op.matrix.as_diagonal().is_some());
    assert!(correction_factor(1, 2, &basis).is_err());
}

#[test]
fn rs_identity_small() {
    let r = verify_rs(2, 2, 4, false).unwrap();
    assert!(!r.is_empty());
    assert!(all_pass(&r));
    assert!(all_pass(&verify_rs_block(3, 2, &[0, 3], 0).unwrap()));
    assert!(all_pass(&verify_rs_block(2, 2, &[2, 0], 0).unwrap()));
}

#[test]
fn rs_identity_on_highest_weight_vectors() {
    for k in 2..=3usize {
        for d in 0..=4u32 {
            let basis = Arc::new(MonomialBasis::graded(k, 2, d).unwrap());
            let r = rvee_j(0, &basis).unwrap().op;
            let s = weyl_element_j(0, &basis).unwrap().op;
            for mu1 in 0..=d {
                let mu2 = d - mu1;
                for i in 0..=mu1.min(mu2) {
                    let v = vector_on(&basis, k, mu1, mu2, i);
                    let (a, b) = (mu1 as i64, mu2 as i64);
                    let c = ExactScalar::signed_q_pow(a, -(QExp::from_integer(a) + QExp::new(a * b, k as i64)));
                    assert_eq!(r.apply(&v), s.apply(&scaled(&v, &c)), "k={k} mu=({mu1},{mu2}) i={i}");
                }
            }
        }
    }
}

#[test]
fn braid_relation_examples() {
    let basis = Arc::new(MonomialBasis::graded(2, 3, 2).unwrap());
    let ops: Vec<_> = weyl_family(&basis).unwrap().into_iter().map(|o| o.op).collect();
    assert!(all_pass(&verify_braid_relations(&ops, "S", "k=2 n=3 deg=2").unwrap()));

    let basis = Arc::new(MonomialBasis::graded(2, 2, 3).unwrap());
    let ops: Vec<_> = weyl_family(&basis).unwrap().into_iter().map(|o| o.op).collect();
    let r = verify_braid_relations(&ops, "S", "n=2").unwrap();
    assert!(all_pass(&r));

    let basis = Arc::new(MonomialBasis::graded(1, 3, 1).unwrap());
    let sig: Vec<SparseOperator<BigRational>> = (0..2).map(|j| sigma_operator(j, &basis).unwrap()).collect();
    assert!(all_pass(&verify_braid_relations(&sig, "sigma", "vector").unwrap()));
}

#[test]
fn braid_relation_failure_is_reported() {
    let basis = Arc::new(MonomialBasis::graded(1, 3, 1).unwrap());
    let a = sigma_operator(0, &basis).unwrap();
    let b = SparseOperator::diagonal(Arc::clone(&basis), |m| int(1 + m.get(0, 2) as i64));
    let r = verify_braid_relations(&[a, b], "x", "vector").unwrap();
    assert!(!all_pass(&r));
    assert!(r.iter().any(|c| c.residual_certificate.is_some()));
}

#[test]
fn corrected_weyl_family_satisfies_braid_relations() {
    for k in 2..=3 {
        for d in 0..=3 {
            let basis = Arc::new(MonomialBasis::graded(k, 3, d).unwrap());
            let s = weyl_family(&basis).unwrap();
            let ops: Vec<_> = s
                .iter()
                .enumerate()
                .map(|(j, sj)| sj.op.compose(&correction_factor(j, k, &basis).unwrap().op).unwrap())
                .collect();
            assert!(all_pass(&verify_braid_relations(&ops, "SC", "x").unwrap()));
            let rv: Vec<_> = rvee_family(&basis).unwrap().into_iter().map(|o| o.op).collect();
            for (a, b) in rv.iter().zip(&ops) {
                assert_eq!(a.matrix, b.matrix);
            }
        }
    }
}

/// Π_i (R - c_i) = 0 on the (μ, μ) block and tr R = Σ_i c_i dim V_{(2μ-i, i)}.
#[test]
fn rvee_eigenvalue_ledger() {
    for k in 2..=3usize {
        for mu in 0..=3u32 {
            let r = rvee_equivariant(mu, mu, k).unwrap().matrix;
            let dim = r.rows();
            let id = SparseMatrix::identity(dim);
            let mut prod = SparseMatrix::identity(dim);
            let mut trace = ExactScalar::zero();
            for i in 0..=mu {
                let c = rvee_coefficient(mu, mu, i, k);
                prod = prod.matmul(&r.sub(&id.scale(&c)));
                let lambda = YoungDiagram::new(&[2 * mu - i, i]).unwrap();
                trace = &trace + &(&c * &ExactScalar::from_int(gl_dimension(&lambda, k) as i64));
            }
            assert!(prod.is_zero(), "k={k} mu={mu}");
            let tr = (0..dim).fold(ExactScalar::zero(), |acc, i| &acc + &r.entry(i, i));
            assert_eq!(tr, trace);
        }
    }
}

#[test]
fn rvee_numeric_entries_are_finite() {
    let r = rvee_equivariant(2, 1, 3).unwrap();
    for (_, _, x) in r.matrix.triplets() {
        let v = x.evaluate(Complex64::new(1.1, 0.2)).unwrap().value();
        assert!(v.norm().is_finite());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn weyl_element_reverses_cartan_and_swaps_blocks(k in 1usize..=3, d in 0u32..=3, j in 0usize..2) {
        let basis = Arc::new(MonomialBasis::graded(k, 3, d).unwrap());
        let s = weyl_element_j(j, &basis).unwrap().op;
        let h = SparseMatrix::diagonal(
            basis.elements().iter().map(|m| {
                let c = m.column_degrees();
                ExactScalar::from_int(c[j] as i64 - c[j + 1] as i64)
            }).collect(),
        );
        prop_assert!(reverses_cartan(&s.matrix, &h));
        for (r, c, _) in s.matrix.triplets() {
            let mut want = basis.element(c).column_degrees();
            want.swap(j, j + 1);
            prop_assert_eq!(basis.element(r).column_degrees(), want);
        }
    }

    #[test]
    fn rvee_intertwines_row_action(k in 2usize..=3, mu1 in 0u32..=3, mu2 in 0u32..=3) {
        let r = rvee_equivariant(mu1, mu2, k).unwrap();
        for a in 0..k {
            let mut gens = vec![QGenerator::D(a)];
            if a + 1 < k {
                gens.push(QGenerator::E(a));
                gens.push(QGenerator::F(a));
            }
            for g in gens {
                let gd = uq_operator(Side::K, g, &r.domain).unwrap();
                let gc = uq_operator(Side::K, g, &r.codomain).unwrap();
                prop_assert_eq!(r.matrix.matmul(&gd.matrix), gc.matrix.matmul(&r.matrix));
            }
        }
    }
}
