//! Rank over GF(p)[i]: a fast lower bound for exact matrices and, with
//! random parameter substitution, a Schwartz–Zippel estimate of the generic
//! rank of parametric matrices.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{Fp2, GaussianField};
use super::{Certainty, RankMode, RankResult};
use crate::error::{Error, Result};
use crate::matrix::{AmplitudeMatrix, Compact};
use crate::scalar::ExactInt;
use crate::state::Amplitude;

pub fn modular_rank<Z: ExactInt>(matrix: &AmplitudeMatrix<Z>, p: u64) -> Result<RankResult> {
    let field = GaussianField::new(p)?;
    let compact = matrix.compact();
    let value = modular_rank_value(&compact, field)?;
    let certainty = if value == upper_bound(&compact) {
        Certainty::Exact
    } else {
        Certainty::LowerBound
    };
    Ok(RankResult {
        value,
        mode: RankMode::Modular { p },
        certainty,
    })
}

/// Rank bound from the nonzero rows and columns alone.
pub(crate) fn upper_bound<Z: ExactInt>(compact: &Compact<'_, Z>) -> usize {
    compact.rows.min(compact.cols)
}

pub(crate) fn modular_rank_value<Z: ExactInt>(
    compact: &Compact<'_, Z>,
    field: GaussianField,
) -> Result<usize> {
    let mut dense = vec![vec![Fp2::default(); compact.cols]; compact.rows];
    for &(r, c, amp) in &compact.cells {
        let q = amp.as_gaussian().ok_or(Error::ParametricUnderExact)?;
        dense[r][c] = field.reduce(q)?;
    }
    Ok(field_rank(dense, field))
}

/// Estimates the generic rank by substituting independent uniform field
/// elements for every parameter, `trials` times, keeping the maximum.
///
/// Each trial draws one value per parameter in name order from a single
/// stream seeded by `seed`, so a run with more trials extends the draws of a
/// run with fewer.
pub fn generic_rank<Z: ExactInt>(
    matrix: &AmplitudeMatrix<Z>,
    trials: u32,
    p: u64,
    seed: u64,
) -> Result<RankResult> {
    if trials == 0 {
        return Err(Error::InvalidPolicy(
            "generic rank needs at least one trial".into(),
        ));
    }
    let field = GaussianField::new(p)?;
    let compact = matrix.compact();
    let names: Vec<&str> = matrix.parameters().into_iter().collect();

    // Reduce fixed parts once: constants, and the scale of each parameter.
    let mut fixed = vec![vec![Fp2::default(); compact.cols]; compact.rows];
    let mut scaled: Vec<(usize, usize, usize, Fp2)> = Vec::new();
    for &(r, c, amp) in &compact.cells {
        match amp {
            Amplitude::Gaussian(q) => fixed[r][c] = field.reduce(q)?,
            Amplitude::Param { name, scale } => {
                let k = names.binary_search(&name.as_str()).expect("name collected");
                scaled.push((r, c, k, field.reduce(scale)?));
            }
        }
    }

    let bound = upper_bound(&compact);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for _ in 0..trials {
        let values: Vec<Fp2> = names.iter().map(|_| field.random(&mut rng)).collect();
        let mut dense = fixed.clone();
        for &(r, c, k, s) in &scaled {
            dense[r][c] = field.mul(s, values[k]);
        }
        best = best.max(field_rank(dense, field));
    }
    // Without parameters nothing is random; the result is a modular rank.
    let certainty = if names.is_empty() {
        if best == bound {
            Certainty::Exact
        } else {
            Certainty::LowerBound
        }
    } else {
        // Each nonzero minor has degree at most `bound` in the parameters.
        Certainty::Probabilistic {
            per_trial_failure_bound: bound as f64 / p as f64,
        }
    };
    Ok(RankResult {
        value: best,
        mode: RankMode::Generic { trials, p },
        certainty,
    })
}

/// Gaussian elimination over the field.
pub(crate) fn field_rank(mut m: Vec<Vec<Fp2>>, field: GaussianField) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = field.inv(m[rank][col]).expect("pivot is nonzero");
        let (top, below) = m.split_at_mut(rank + 1);
        let pivot_line = &top[rank];
        for row in below.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = field.mul(row[col], inv);
            for j in col..cols {
                row[j] = field.sub(row[j], field.mul(factor, pivot_line[j]));
            }
        }
        rank += 1;
    }
    rank
}
