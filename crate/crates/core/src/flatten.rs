//! Matricization of a sparse state tensor along a bipartition.
//!
//! The row of a multi-index is the mixed-radix value of its sub-index on
//! `I` (first party most significant), the column the same over `Ī`.
//! Only nonzero terms are visited; the dense tensor is never formed.

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::matrix::AmplitudeMatrix;
use crate::partition::Bipartition;
use crate::scalar::ExactInt;
use crate::state::{QuditDims, StateTensor};

/// `d_I × d_Ī` matrix of a state flattened along one bipartition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlattenedMatrix<Z: ExactInt> {
    matrix: AmplitudeMatrix<Z>,
    bipartition: Bipartition,
}

impl<Z: ExactInt> FlattenedMatrix<Z> {
    pub fn bipartition(&self) -> &Bipartition {
        &self.bipartition
    }

    pub fn matrix(&self) -> &AmplitudeMatrix<Z> {
        &self.matrix
    }

    pub fn into_matrix(self) -> AmplitudeMatrix<Z> {
        self.matrix
    }
}

impl<Z: ExactInt> Deref for FlattenedMatrix<Z> {
    type Target = AmplitudeMatrix<Z>;

    fn deref(&self) -> &Self::Target {
        &self.matrix
    }
}

fn mixed_radix(index: &[usize], parties: &[usize], dims: &QuditDims) -> usize {
    parties
        .iter()
        .fold(0, |acc, &j| acc * dims.dim(j) + index[j])
}

/// Row and column of `index` in the flattening along `bipartition`.
pub fn row_col_of(index: &[usize], bipartition: &Bipartition, dims: &QuditDims) -> (usize, usize) {
    (
        mixed_radix(index, bipartition.part(), dims),
        mixed_radix(index, bipartition.complement(), dims),
    )
}

pub fn flatten<Z: ExactInt>(
    state: &StateTensor<Z>,
    bipartition: &Bipartition,
) -> Result<FlattenedMatrix<Z>> {
    let dims = state.dims();
    if !bipartition.matches(dims) {
        return Err(Error::DimensionMismatch(format!(
            "bipartition {bipartition} does not fit dims {:?}",
            dims.as_slice()
        )));
    }
    let mut matrix = AmplitudeMatrix::zeros(bipartition.row_dim(), bipartition.col_dim());
    for (index, amp) in state.terms() {
        let (r, c) = row_col_of(index, bipartition, dims);
        matrix.set(r, c, amp.clone())?;
    }
    Ok(FlattenedMatrix {
        matrix,
        bipartition: bipartition.clone(),
    })
}
