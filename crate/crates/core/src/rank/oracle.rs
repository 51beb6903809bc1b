//! Rank by exhaustive minor expansion. Slow, but shares no code path with
//! elimination, which makes it a reference for small matrices.

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::AmplitudeMatrix;
use crate::scalar::{ExactInt, GaussianRational};

pub const ORACLE_MAX_DIM: usize = 6;

/// Largest `k` such that some `k × k` minor is nonzero.
pub fn oracle_rank_minors<Z: ExactInt>(matrix: &AmplitudeMatrix<Z>) -> Result<usize> {
    let (rows, cols) = (matrix.rows(), matrix.cols());
    if rows > ORACLE_MAX_DIM || cols > ORACLE_MAX_DIM {
        return Err(Error::MatrixTooLarge {
            rows,
            cols,
            max: ORACLE_MAX_DIM,
        });
    }
    let mut dense = vec![vec![GaussianRational::<Z>::zero(); cols]; rows];
    for ((r, c), amp) in matrix.entries() {
        dense[r][c] = amp
            .as_gaussian()
            .ok_or(Error::ParametricUnderExact)?
            .clone();
    }
    for k in (1..=rows.min(cols)).rev() {
        for rs in (0..rows).combinations(k) {
            for cs in (0..cols).combinations(k) {
                let minor: Vec<Vec<GaussianRational<Z>>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| dense[r][c].clone()).collect())
                    .collect();
                if !laplace_det(&minor).is_zero() {
                    return Ok(k);
                }
            }
        }
    }
    Ok(0)
}

/// Cofactor expansion along the first row.
fn laplace_det<Z: ExactInt>(m: &[Vec<GaussianRational<Z>>]) -> GaussianRational<Z> {
    match m.len() {
        0 => GaussianRational::<Z>::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut det = GaussianRational::<Z>::zero();
            for (j, a) in m[0].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let sub: Vec<Vec<GaussianRational<Z>>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = a * laplace_det(&sub);
                det = if j % 2 == 0 { det + term } else { det - term };
            }
            det
        }
    }
}
