//! Sparse linear maps between monomial bases.

use std::sync::Arc;

use crate::basis::{MatrixMonomial, MonomialBasis};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{SparseMatrix, SparseVec};

/// Sparse matrix together with the bases of its domain and codomain.
#[derive(Clone, Debug)]
pub struct SparseOperator<T> {
    pub domain: Arc<MonomialBasis>,
    pub codomain: Arc<MonomialBasis>,
    pub matrix: SparseMatrix<T>,
}

fn same_basis(a: &Arc<MonomialBasis>, b: &Arc<MonomialBasis>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl<T: Field> SparseOperator<T> {
    pub fn new(
        domain: Arc<MonomialBasis>,
        codomain: Arc<MonomialBasis>,
        matrix: SparseMatrix<T>,
    ) -> Result<Self> {
        if matrix.rows() != codomain.len() || matrix.cols() != domain.len() {
            return Err(Error::Dimension(format!(
                "{}x{} matrix for bases of sizes {} -> {}",
                matrix.rows(),
                matrix.cols(),
                domain.len(),
                codomain.len()
            )));
        }
        Ok(Self {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn identity(basis: Arc<MonomialBasis>) -> Self {
        let n = basis.len();
        Self {
            domain: Arc::clone(&basis),
            codomain: basis,
            matrix: SparseMatrix::identity(n),
        }
    }

    pub fn zero(domain: Arc<MonomialBasis>, codomain: Arc<MonomialBasis>) -> Self {
        let m = SparseMatrix::zeros(codomain.len(), domain.len());
        Self {
            domain,
            codomain,
            matrix: m,
        }
    }

    /// Diagonal operator with entry `f(m)` on each basis monomial.
    pub fn diagonal<F: Fn(&MatrixMonomial) -> T>(basis: Arc<MonomialBasis>, f: F) -> Self {
        let d = basis.elements().iter().map(f).collect();
        Self {
            domain: Arc::clone(&basis),
            codomain: basis,
            matrix: SparseMatrix::diagonal(d),
        }
    }

    /// Operator defined on basis monomials by `action`.
    ///
    /// Fails if some image monomial is not in `codomain`.
    pub fn from_action<F>(
        domain: Arc<MonomialBasis>,
        codomain: Arc<MonomialBasis>,
        action: F,
    ) -> Result<Self>
    where
        F: Fn(&MatrixMonomial) -> Vec<(MatrixMonomial, T)>,
    {
        let mut trip = Vec::new();
        for (c, m) in domain.elements().iter().enumerate() {
            for (img, x) in action(m) {
                if x.is_zero() {
                    continue;
                }
                let r = codomain.index_of(&img).ok_or_else(|| Error::OutsideBasis {
                    monomial: img.to_string(),
                })?;
                trip.push((r, c, x));
            }
        }
        let matrix = SparseMatrix::from_triplets(codomain.len(), domain.len(), trip);
        Ok(Self {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn is_square(&self) -> bool {
        same_basis(&self.domain, &self.codomain)
    }

    /// Composition `self ∘ rhs`.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        if !same_basis(&self.domain, &rhs.codomain) {
            return Err(Error::Dimension(format!(
                "cannot compose: codomain blocks {:?} vs domain blocks {:?}",
                rhs.codomain.blocks(),
                self.domain.blocks()
            )));
        }
        Ok(Self {
            domain: Arc::clone(&rhs.domain),
            codomain: Arc::clone(&self.codomain),
            matrix: self.matrix.matmul(&rhs.matrix),
        })
    }

    fn check_same_shape(&self, rhs: &Self) -> Result<()> {
        if same_basis(&self.domain, &rhs.domain) && same_basis(&self.codomain, &rhs.codomain) {
            Ok(())
        } else {
            Err(Error::Dimension("operators act between different bases".into()))
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs)?;
        Ok(self.with_matrix(self.matrix.add(&rhs.matrix)))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs)?;
        Ok(self.with_matrix(self.matrix.sub(&rhs.matrix)))
    }

    pub fn scale(&self, s: &T) -> Self {
        self.with_matrix(self.matrix.scale(s))
    }

    pub fn neg(&self) -> Self {
        self.with_matrix(self.matrix.neg())
    }

    fn with_matrix(&self, matrix: SparseMatrix<T>) -> Self {
        Self {
            domain: Arc::clone(&self.domain),
            codomain: Arc::clone(&self.codomain),
            matrix,
        }
    }

    /// Commutator of two operators on a common basis.
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.compose(rhs)?.sub(&rhs.compose(self)?)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Entrywise change of scalars.
    pub fn map<U: Field, F: Fn(&T) -> U>(&self, f: F) -> SparseOperator<U> {
        SparseOperator {
            domain: Arc::clone(&self.domain),
            codomain: Arc::clone(&self.codomain),
            matrix: self.matrix.map(f),
        }
    }

    /// Restriction to the sub-blocks `domain` and `codomain` of the current bases.
    pub fn restrict(
        &self,
        domain: Arc<MonomialBasis>,
        codomain: Arc<MonomialBasis>,
    ) -> Result<Self> {
        let locate = |outer: &MonomialBasis, inner: &MonomialBasis| -> Result<Vec<usize>> {
            inner
                .elements()
                .iter()
                .map(|m| {
                    outer.index_of(m).ok_or_else(|| Error::OutsideBasis {
                        monomial: m.to_string(),
                    })
                })
                .collect()
        };
        let cols = locate(&self.domain, &domain)?;
        let rows = locate(&self.codomain, &codomain)?;
        Ok(Self {
            matrix: self.matrix.submatrix(&rows, &cols),
            domain,
            codomain,
        })
    }

    /// Image of a vector given in domain coordinates.
    pub fn apply(&self, v: &SparseVec<T>) -> SparseVec<T> {
        self.matrix.apply(v)
    }

    /// First nonzero entry as (codomain monomial, domain monomial, value).
    pub fn first_nonzero(&self) -> Option<(MatrixMonomial, MatrixMonomial, T)> {
        self.matrix.first_nonzero().map(|(r, c, x)| {
            (
                self.codomain.element(r).clone(),
                self.domain.element(c).clone(),
                x,
            )
        })
    }

    /// Coordinate-list export, one `row col scalar` line per entry.
    pub fn coordinate_list(&self) -> String {
        self.matrix.coordinate_list()
    }
}
