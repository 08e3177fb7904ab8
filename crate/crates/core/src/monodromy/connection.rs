use std::collections::BTreeSet;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rank, SparseMatrix};
use crate::report::CheckRecord;

/// Which family of residues a connection carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConnectionKind {
    Casimir,
    Kz,
    Custom,
}

/// One logarithmic term (dφ/φ)·r of a Fuchsian connection.
#[derive(Clone, Debug)]
pub struct ConnectionTerm {
    /// Linear form φ on ℂⁿ.
    pub covector: Vec<BigRational>,
    /// Residue before multiplication by the coupling.
    pub residue: SparseMatrix<BigRational>,
    pub label: String,
}

/// ∇ = d - coupling · Σ_i (dφ_i/φ_i) r_i on the trivial bundle with fibre ℂ^dim.
#[derive(Clone, Debug)]
pub struct ConnectionForm {
    pub kind: ConnectionKind,
    pub ambient: usize,
    pub fibre_dim: usize,
    pub coupling: Complex64,
    pub terms: Vec<ConnectionTerm>,
}

/// The root covector z_i - z_j on ℂⁿ.
pub fn root_covector(n: usize, i: usize, j: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); n];
    v[i] = BigRational::from_integer(1.into());
    v[j] = BigRational::from_integer((-1).into());
    v
}

fn proportional(a: &[BigRational], b: &[BigRational]) -> bool {
    rank(vec![a.to_vec(), b.to_vec()], a.len()) < 2
}

pub(crate) fn to_complex(m: &SparseMatrix<BigRational>) -> DMatrix<Complex64> {
    let mut out = DMatrix::zeros(m.rows(), m.cols());
    for (r, c, x) in m.triplets() {
        out[(r, c)] = Complex64::new(x.to_f64().unwrap_or(f64::NAN), 0.0);
    }
    out
}

impl ConnectionForm {
    pub fn new(
        kind: ConnectionKind,
        ambient: usize,
        coupling: Complex64,
        terms: Vec<ConnectionTerm>,
    ) -> Result<Self> {
        let fibre_dim = terms.first().map_or(0, |t| t.residue.rows());
        for t in &terms {
            if t.covector.len() != ambient {
                return Err(Error::Dimension(format!(
                    "covector of {} has length {}, ambient dimension {ambient}",
                    t.label,
                    t.covector.len()
                )));
            }
            if !t.residue.is_square() || t.residue.rows() != fibre_dim {
                return Err(Error::Dimension(format!(
                    "residue {} is {}x{}, fibre dimension {fibre_dim}",
                    t.label,
                    t.residue.rows(),
                    t.residue.cols()
                )));
            }
        }
        for (a, ta) in terms.iter().enumerate() {
            for tb in &terms[a + 1..] {
                if proportional(&ta.covector, &tb.covector) {
                    return Err(Error::Contract(format!(
                        "covectors of {} and {} are proportional",
                        ta.label, tb.label
                    )));
                }
            }
        }
        Ok(Self {
            kind,
            ambient,
            fibre_dim,
            coupling,
            terms,
        })
    }

    /// Residues multiplied by the coupling, as dense complex matrices.
    pub fn numeric_residues(&self) -> Vec<DMatrix<Complex64>> {
        self.terms
            .iter()
            .map(|t| to_complex(&t.residue) * self.coupling)
            .collect()
    }

    pub fn covectors_f64(&self) -> Vec<Vec<f64>> {
        self.terms
            .iter()
            .map(|t| t.covector.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect())
            .collect()
    }

    /// Same residues with another coupling.
    pub fn with_coupling(&self, coupling: Complex64) -> Self {
        Self {
            coupling,
            ..self.clone()
        }
    }
}

fn pair_terms(
    n: usize,
    ops: Vec<((usize, usize), SparseMatrix<BigRational>)>,
    name: &str,
) -> Result<Vec<ConnectionTerm>> {
    ops.into_iter()
        .map(|((i, j), r)| {
            if i >= j || j >= n {
                return Err(Error::Index(format!("pair ({i},{j}) for n = {n}")));
            }
            Ok(ConnectionTerm {
                covector: root_covector(n, i, j),
                residue: r,
                label: format!("{name}_{}{}", i + 1, j + 1),
            })
        })
        .collect()
}

/// d - h Σ_{i<j} d(z_i - z_j)/(z_i - z_j) κ_ij.
pub fn casimir_connection(
    n: usize,
    kappas: Vec<((usize, usize), SparseMatrix<BigRational>)>,
    h: Complex64,
) -> Result<ConnectionForm> {
    ConnectionForm::new(ConnectionKind::Casimir, n, h, pair_terms(n, kappas, "kappa")?)
}

/// d - ħ̄ Σ_{i<j} d(z_i - z_j)/(z_i - z_j) Ω_ij.
pub fn kz_connection(
    n: usize,
    omegas: Vec<((usize, usize), SparseMatrix<BigRational>)>,
    hbar_bar: Complex64,
) -> Result<ConnectionForm> {
    ConnectionForm::new(ConnectionKind::Kz, n, hbar_bar, pair_terms(n, omegas, "Omega")?)
}

/// Maximal families of terms whose covectors span a common plane, with at least two members.
pub fn codimension_two_families(c: &ConnectionForm) -> Vec<Vec<usize>> {
    let mut families = BTreeSet::new();
    let m = c.terms.len();
    for a in 0..m {
        for b in a + 1..m {
            let plane = [c.terms[a].covector.clone(), c.terms[b].covector.clone()];
            let family: Vec<usize> = (0..m)
                .filter(|&x| {
                    let mut rows = plane.to_vec();
                    rows.push(c.terms[x].covector.clone());
                    rank(rows, c.ambient) == 2
                })
                .collect();
            families.insert(family);
        }
    }
    families.into_iter().collect()
}

/// Flatness test: [r_j, Σ_{j' ∈ J} r_{j'}] = 0 exactly for every codimension-2
/// family J and every j ∈ J.
pub fn kohno_flatness(c: &ConnectionForm, block: &str) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for family in codimension_two_families(c) {
        let sum = family
            .iter()
            .skip(1)
            .fold(c.terms[family[0]].residue.clone(), |acc, &x| acc.add(&c.terms[x].residue));
        let names: Vec<&str> = family.iter().map(|&x| c.terms[x].label.as_str()).collect();
        for &j in &family {
            let comm = c.terms[j].residue.commutator(&sum);
            let cert = comm
                .first_nonzero()
                .map(|(r, col, x)| format!("family {{{}}}, entry ({r},{col}) = {x}", names.join(",")));
            out.push(CheckRecord::exact(
                format!("[{}, sum{{{}}}] = 0", c.terms[j].label, names.join("+")),
                block,
                c.fibre_dim,
                cert,
            ));
        }
    }
    out
}

/// Largest absolute entry of a complex matrix.
pub fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

