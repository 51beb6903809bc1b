//! Exact rank over the Gaussian rationals.
//!
//! Each row is first scaled by the lcm of its denominators, which leaves the
//! rank unchanged, and the resulting Gaussian-integer matrix is reduced by
//! fraction-free (Bareiss) elimination. Every division in the elimination is
//! exact in Z[i].

use num_traits::{One, Zero};

use super::{Certainty, RankMode, RankResult};
use crate::error::{Error, Result};
use crate::matrix::{AmplitudeMatrix, Compact};
use crate::scalar::{exact_div, scale_to_integer, ExactInt, GaussianInt, GaussianRational};

pub fn exact_rank<Z: ExactInt>(matrix: &AmplitudeMatrix<Z>) -> Result<RankResult> {
    Ok(RankResult {
        value: exact_rank_value(&matrix.compact())?,
        mode: RankMode::Exact,
        certainty: Certainty::Exact,
    })
}

pub(crate) fn exact_rank_value<Z: ExactInt>(compact: &Compact<'_, Z>) -> Result<usize> {
    let mut dense = vec![vec![GaussianRational::<Z>::zero(); compact.cols]; compact.rows];
    for &(r, c, amp) in &compact.cells {
        dense[r][c] = amp
            .as_gaussian()
            .ok_or(Error::ParametricUnderExact)?
            .clone();
    }
    let rows = dense.iter().map(|row| clear_denominators(row)).collect();
    Ok(bareiss_rank(rows, compact.cols))
}

fn clear_denominators<Z: ExactInt>(row: &[GaussianRational<Z>]) -> Vec<GaussianInt<Z>> {
    let lcm = row
        .iter()
        .flat_map(|q| [q.re.denom(), q.im.denom()])
        .fold(Z::one(), |acc, d| acc.lcm(d));
    row.iter().map(|q| scale_to_integer(q, &lcm)).collect()
}

/// Rank of an integer matrix by single-step Bareiss elimination with
/// first-nonzero pivoting; columns without a pivot are skipped.
pub(crate) fn bareiss_rank<Z: ExactInt>(mut m: Vec<Vec<GaussianInt<Z>>>, cols: usize) -> usize {
    let rows = m.len();
    let mut prev = GaussianInt::<Z>::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let (top, below) = m.split_at_mut(rank + 1);
        let pivot_line = &top[rank];
        let pivot = &pivot_line[col];
        for row in below.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..cols {
                let num = pivot * &row[j] - &lead * &pivot_line[j];
                row[j] = exact_div(&num, &prev);
            }
            row[col] = GaussianInt::zero();
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}
