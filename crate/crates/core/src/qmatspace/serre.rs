use std::sync::Arc;

use super::action::{side_rank, uq_operator, QGenerator};
use crate::basis::MonomialBasis;
use crate::error::Result;
use crate::glrep::Side;
use crate::operator::SparseOperator;
use crate::qarith::{qnumber, ExactScalar};
use crate::report::CheckRecord;

type Op = SparseOperator<ExactScalar>;

fn certificate(residual: &Op) -> Option<String> {
    residual
        .first_nonzero()
        .map(|(r, c, x)| format!("<{r}| residual |{c}> = {x}"))
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::K => "gl_k",
        Side::N => "gl_n",
    }
}

/// Checks the defining relations of U_q(gl_p) on every graded piece of
/// degree ≤ `degree_bound`, for the row (gl_k) or column (gl_n) action:
///
/// 1. [D_i, D_j] = 0
/// 2. [D_i, E_j] = (δ_ij - δ_{i,j+1}) E_j and [D_i, F_j] = -(δ_ij - δ_{i,j+1}) F_j
/// 3. [E_i, F_j] = δ_ij [H_i], H_i = D_i - D_{i+1}
/// 4. E_i²E_j - [2]E_iE_jE_i + E_jE_i² = 0 for |i-j| = 1, likewise for F
/// 5. [E_i, E_j] = [F_i, F_j] = 0 for |i-j| > 1
pub fn verify_serre(side: Side, k: usize, n: usize, degree_bound: u32) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for d in 0..=degree_bound {
        let basis = Arc::new(MonomialBasis::graded(k, n, d)?);
        out.extend(serre_on_basis(side, &basis)?);
    }
    Ok(out)
}

/// The relations of [`verify_serre`] on one basis closed under the generators.
pub fn serre_on_basis(side: Side, basis: &Arc<MonomialBasis>) -> Result<Vec<CheckRecord>> {
    let p = side_rank(side, basis.k(), basis.n());
    let dim = basis.len();
    let deg = basis.blocks().iter().next().map_or(0, |b| b.iter().sum::<u32>());
    let block = format!("{} k={} n={} deg={}", side_name(side), basis.k(), basis.n(), deg);
    let d: Vec<Op> = (0..p)
        .map(|i| uq_operator(side, QGenerator::D(i), basis))
        .collect::<Result<_>>()?;
    let e: Vec<Op> = (0..p.saturating_sub(1))
        .map(|i| uq_operator(side, QGenerator::E(i), basis))
        .collect::<Result<_>>()?;
    let f: Vec<Op> = (0..p.saturating_sub(1))
        .map(|i| uq_operator(side, QGenerator::F(i), basis))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut record = |identity: String, residual: Op| {
        out.push(CheckRecord::exact(identity, block.clone(), dim, certificate(&residual)));
    };

    for i in 0..p {
        for j in i + 1..p {
            record(format!("[D_{},D_{}]=0", i + 1, j + 1), d[i].commutator(&d[j])?);
        }
    }
    for i in 0..p {
        for j in 0..p.saturating_sub(1) {
            let c = (i == j) as i64 - (i == j + 1) as i64;
            let c = ExactScalar::from_int(c);
            record(
                format!("[D_{},E_{}]=c*E", i + 1, j + 1),
                d[i].commutator(&e[j])?.sub(&e[j].scale(&c))?,
            );
            record(
                format!("[D_{},F_{}]=-c*F", i + 1, j + 1),
                d[i].commutator(&f[j])?.add(&f[j].scale(&c))?,
            );
        }
    }
    for i in 0..p.saturating_sub(1) {
        for j in 0..p.saturating_sub(1) {
            let lhs = e[i].commutator(&f[j])?;
            let residual = if i == j {
                let h = SparseOperator::diagonal(Arc::clone(basis), |m| {
                    let w = match side {
                        Side::K => m.row_sums(),
                        Side::N => m.column_degrees(),
                    };
                    qnumber(w[i] as i64 - w[i + 1] as i64)
                });
                lhs.sub(&h)?
            } else {
                lhs
            };
            record(format!("[E_{},F_{}]=delta*[H]", i + 1, j + 1), residual);
        }
    }
    let two = qnumber(2);
    for i in 0..p.saturating_sub(1) {
        for j in 0..p.saturating_sub(1) {
            if i == j {
                continue;
            }
            if i.abs_diff(j) == 1 {
                for (name, x) in [("E", &e), ("F", &f)] {
                    let a = x[i].compose(&x[i])?.compose(&x[j])?;
                    let b = x[i].compose(&x[j])?.compose(&x[i])?.scale(&two);
                    let c = x[j].compose(&x[i])?.compose(&x[i])?;
                    record(
                        format!("{name}_{i1}^2{name}_{j1}-[2]{name}_{i1}{name}_{j1}{name}_{i1}+{name}_{j1}{name}_{i1}^2=0", i1 = i + 1, j1 = j + 1),
                        a.sub(&b)?.add(&c)?,
                    );
                }
            } else if i < j {
                record(format!("[E_{},E_{}]=0", i + 1, j + 1), e[i].commutator(&e[j])?);
                record(format!("[F_{},F_{}]=0", i + 1, j + 1), f[i].commutator(&f[j])?);
            }
        }
    }
    Ok(out)
}

/// Checks that every row generator commutes with every column generator on each
/// graded piece of degree ≤ `degree_bound`.
pub fn verify_dual_pair(k: usize, n: usize, degree_bound: u32) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let gens = |p: usize| -> Vec<QGenerator> {
        let mut g: Vec<QGenerator> = (0..p).map(QGenerator::D).collect();
        for i in 0..p.saturating_sub(1) {
            g.push(QGenerator::E(i));
            g.push(QGenerator::F(i));
        }
        g
    };
    for d in 0..=degree_bound {
        let basis = Arc::new(MonomialBasis::graded(k, n, d)?);
        let block = format!("k={k} n={n} deg={d}");
        for gk in gens(k) {
            let a = uq_operator(Side::K, gk, &basis)?;
            for gn in gens(n) {
                let b = uq_operator(Side::N, gn, &basis)?;
                let r = a.commutator(&b)?;
                out.push(CheckRecord::exact(
                    format!("[{gk}^(k),{gn}^(n)]=0"),
                    block.clone(),
                    basis.len(),
                    certificate(&r),
                ));
            }
        }
    }
    Ok(out)
}

/// Evaluates every entry at q = 1; `None` if some entry has a pole there.
pub fn classical_limit(op: &Op) -> Option<crate::linalg::SparseMatrix<num_rational::BigRational>> {
    let mut trip = Vec::new();
    for (r, c, x) in op.matrix.triplets() {
        trip.push((r, c, x.eval_at_one()?));
    }
    Some(crate::linalg::SparseMatrix::from_triplets(
        op.matrix.rows(),
        op.matrix.cols(),
        trip,
    ))
}
