use std::collections::BTreeSet;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::BigRational;

use crate::basis::MonomialBasis;
use crate::braidops::weyl_element_j;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::glrep::{
    casimir_truncated, gl_action, omega_operators, raising_kernel, sigma_operator, weight_multiplicity,
    OmegaVariant, Side, YoungDiagram,
};
use crate::linalg::{restrict_to_subspace, SparseMatrix, SparseVec};
use crate::operator::SparseOperator;
use crate::qarith::ExactScalar;
use crate::qmatspace::{uq_action, QGenerator};

/// Residue operators indexed by the pair (i, j), i < j.
pub type PairOperators = Vec<((usize, usize), SparseMatrix<BigRational>)>;

/// Distinct permutations of `mu`, sorted.
pub fn weight_orbit(mu: &[u32]) -> Vec<Vec<u32>> {
    let mut v = mu.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // Next lexicographic permutation.
    while let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) {
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("successor exists");
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

/// Restriction of `op` to the sub-basis `sub`, failing if a column of `sub`
/// has an entry outside `sub`.
pub(crate) fn restrict_closed<T: Field>(op: &SparseOperator<T>, sub: &Arc<MonomialBasis>) -> Result<SparseOperator<T>> {
    let restricted = op.restrict(Arc::clone(sub), Arc::clone(sub))?;
    let full: usize = sub
        .elements()
        .iter()
        .map(|m| op.domain.index_of(m).map_or(0, |c| op.matrix.column(c).len()))
        .sum();
    if full != restricted.matrix.nnz() {
        return Err(Error::NotInvariant(format!(
            "operator leaves the blocks {:?}",
            sub.blocks()
        )));
    }
    Ok(restricted)
}

fn check_fibre_dim(found: usize, lambda: &YoungDiagram, orbit: &[Vec<u32>], context: &str) -> Result<()> {
    let expected: u64 = orbit.iter().map(|nu| weight_multiplicity(lambda, nu)).sum();
    if found as u64 != expected {
        return Err(Error::ComponentDimension {
            found,
            expected: expected as usize,
            context: context.into(),
        });
    }
    Ok(())
}

/// The fibre ⊕_{ν ∈ S_n·μ} V_λ[ν], realized as gl_k highest-weight vectors of
/// weight λ in the blocks ν of polynomials on k×n matrices.
#[derive(Clone, Debug)]
pub struct ClassicalFibre {
    pub k: usize,
    pub n: usize,
    pub lambda: YoungDiagram,
    pub orbit: Vec<Vec<u32>>,
    pub basis: Arc<MonomialBasis>,
    pub vectors: Vec<SparseVec<BigRational>>,
    /// Column degrees of each fibre vector.
    pub weights: Vec<Vec<u32>>,
    /// κ_ij in fibre coordinates.
    pub kappa: PairOperators,
    /// σ(T_j) in fibre coordinates.
    pub sigma: Vec<SparseMatrix<BigRational>>,
}

impl ClassicalFibre {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

fn orbit_basis(k: usize, n: usize, lambda: &YoungDiagram, mu: &[u32]) -> Result<(Vec<Vec<u32>>, Arc<MonomialBasis>)> {
    if mu.len() != n || lambda.size() != mu.iter().sum::<u32>() {
        return Err(Error::Contract(format!("weight {mu:?} does not fit λ = {lambda} with n = {n}")));
    }
    if lambda.rows() > k.min(n) {
        return Err(Error::Contract(format!("λ = {lambda} has more than min(k, n) rows")));
    }
    let orbit = weight_orbit(mu);
    let basis = Arc::new(MonomialBasis::from_blocks(k, n, orbit.clone())?);
    Ok((orbit, basis))
}

/// Classical fibre with its Casimir residues and σ operators.
pub fn classical_fibre(k: usize, n: usize, lambda: &YoungDiagram, mu: &[u32]) -> Result<ClassicalFibre> {
    let (orbit, basis) = orbit_basis(k, n, lambda, mu)?;
    let row_weight = lambda.padded(k)?;
    let mut vectors = Vec::new();
    let mut weights = Vec::new();
    for nu in &orbit {
        for v in raising_kernel(&basis, nu, &row_weight, |a, m| gl_action(Side::K, a, a + 1, m)) {
            vectors.push(v);
            weights.push(nu.clone());
        }
    }
    check_fibre_dim(vectors.len(), lambda, &orbit, "classical fibre")?;
    let mut kappa = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let op = casimir_truncated(i, j, &basis)?;
            kappa.push(((i, j), restrict_to_subspace(&op.matrix, &vectors)?));
        }
    }
    let graded = Arc::new(MonomialBasis::graded(k, n, lambda.size())?);
    let sigma = (0..n - 1)
        .map(|j| {
            let s = restrict_closed(&sigma_operator(j, &graded)?, &basis)?;
            restrict_to_subspace(&s.matrix, &vectors)
        })
        .collect::<Result<_>>()?;
    Ok(ClassicalFibre {
        k,
        n,
        lambda: lambda.clone(),
        orbit,
        basis,
        vectors,
        weights,
        kappa,
        sigma,
    })
}

/// The same fibre in quantum matrix space: U_q(gl_k) highest-weight vectors of
/// weight λ, with the quantum Weyl group elements S_j acting on them.
#[derive(Clone, Debug)]
pub struct QuantumFibre {
    pub basis: Arc<MonomialBasis>,
    pub vectors: Vec<SparseVec<ExactScalar>>,
    pub weights: Vec<Vec<u32>>,
    /// S_j in fibre coordinates.
    pub weyl: Vec<SparseMatrix<ExactScalar>>,
}

impl QuantumFibre {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

pub fn quantum_fibre(k: usize, n: usize, lambda: &YoungDiagram, mu: &[u32]) -> Result<QuantumFibre> {
    let (orbit, basis) = orbit_basis(k, n, lambda, mu)?;
    let row_weight = lambda.padded(k)?;
    let mut vectors = Vec::new();
    let mut weights = Vec::new();
    for nu in &orbit {
        for v in raising_kernel(&basis, nu, &row_weight, |a, m| uq_action(Side::K, QGenerator::E(a), m)) {
            vectors.push(v);
            weights.push(nu.clone());
        }
    }
    check_fibre_dim(vectors.len(), lambda, &orbit, "quantum fibre")?;
    let graded = Arc::new(MonomialBasis::graded(k, n, lambda.size())?);
    let weyl = (0..n - 1)
        .map(|j| {
            let s = restrict_closed(&weyl_element_j(j, &graded)?.op, &basis)?;
            restrict_to_subspace(&s.matrix, &vectors)
        })
        .collect::<Result<_>>()?;
    Ok(QuantumFibre {
        basis,
        vectors,
        weights,
        weyl,
    })
}

/// Exact matrix evaluated at q = e^ħ, with q^e = e^{eħ}.
pub fn evaluate_matrix(m: &SparseMatrix<ExactScalar>, hbar: Complex64) -> Result<DMatrix<Complex64>> {
    let mut out = DMatrix::zeros(m.rows(), m.cols());
    for (r, c, x) in m.triplets() {
        out[(r, c)] = x.evaluate_hbar(hbar)?.value();
    }
    Ok(out)
}

/// κ_ij for all i < j on `basis`.
pub fn casimir_residues(basis: &Arc<MonomialBasis>) -> Result<PairOperators> {
    let n = basis.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(((i, j), casimir_truncated(i, j, basis)?.matrix));
        }
    }
    Ok(out)
}

/// Ω_ij (sl_k form) for all i < j on `basis`.
pub fn kz_residues(basis: &Arc<MonomialBasis>) -> Result<PairOperators> {
    let n = basis.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(((i, j), omega_operators(i, j, basis, OmegaVariant::Sl)?.matrix));
        }
    }
    Ok(out)
}

/// Blocks with column degrees summing to `d` in which λ occurs, as a set.
pub fn dominant_weights(lambda: &YoungDiagram, n: usize) -> BTreeSet<Vec<u32>> {
    crate::basis::compositions(lambda.size(), n)
        .into_iter()
        .filter(|nu| nu.windows(2).all(|w| w[0] >= w[1]) && weight_multiplicity(lambda, nu) > 0)
        .collect()
}
