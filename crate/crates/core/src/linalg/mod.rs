//! Exact sparse matrices and dense elimination over a [`Field`](crate::field::Field).

mod dense;
mod sparse;

pub use dense::{inverse, kernel, pivot_rows, rank, restrict_to_subspace, rref, EchelonBasis, Rref};
pub use sparse::{accumulate, SparseMatrix, SparseVec};
