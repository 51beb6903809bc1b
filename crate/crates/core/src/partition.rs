//! Bipartitions of the party set used for flattening.
//!
//! Parties are 0-based here; [`Bipartition::label`] renders them 1-based.
//! Subsets of each size are produced in lexicographic order, and at
//! `n = 2ℓ` both members of every complementary pair are kept.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::state::QuditDims;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    part: Vec<usize>,
    complement: Vec<usize>,
    row_dim: usize,
    col_dim: usize,
}

impl Bipartition {
    /// Bipartition with row side `part`, which must be a nonempty, proper,
    /// strictly increasing subset of the parties.
    pub fn new(dims: &QuditDims, part: Vec<usize>) -> Result<Self> {
        let n = dims.parties();
        if part.is_empty() || part.len() >= n {
            return Err(Error::InvalidBipartition(format!(
                "row side must be a nonempty proper subset of {n} parties"
            )));
        }
        if !part.windows(2).all(|w| w[0] < w[1]) || part[part.len() - 1] >= n {
            return Err(Error::InvalidBipartition(format!(
                "{part:?} is not strictly increasing within 0..{n}"
            )));
        }
        let complement: Vec<usize> = (0..n).filter(|j| !part.contains(j)).collect();
        let row_dim = part.iter().map(|&j| dims.dim(j)).product();
        let col_dim = complement.iter().map(|&j| dims.dim(j)).product();
        Ok(Bipartition {
            part,
            complement,
            row_dim,
            col_dim,
        })
    }

    /// Row-side parties `I`.
    pub fn part(&self) -> &[usize] {
        &self.part
    }

    /// Column-side parties `Ī`.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn ell(&self) -> usize {
        self.part.len()
    }

    pub fn parties(&self) -> usize {
        self.part.len() + self.complement.len()
    }

    /// `d_I`
    pub fn row_dim(&self) -> usize {
        self.row_dim
    }

    /// `d_Ī`
    pub fn col_dim(&self) -> usize {
        self.col_dim
    }

    /// Same cut with the sides exchanged.
    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            part: self.complement.clone(),
            complement: self.part.clone(),
            row_dim: self.col_dim,
            col_dim: self.row_dim,
        }
    }

    pub fn contains(&self, party: usize) -> bool {
        self.part.binary_search(&party).is_ok()
    }

    /// 1-based party labels of the row side, e.g. `[1, 3]`.
    pub fn part_labels(&self) -> Vec<usize> {
        self.part.iter().map(|j| j + 1).collect()
    }

    pub fn complement_labels(&self) -> Vec<usize> {
        self.complement.iter().map(|j| j + 1).collect()
    }

    /// `I=[1,3]`
    pub fn label(&self) -> String {
        format!("I={}", bracket(&self.part_labels()))
    }

    pub(crate) fn matches(&self, dims: &QuditDims) -> bool {
        self.parties() == dims.parties()
            && self.row_dim == self.part.iter().map(|&j| dims.dim(j)).product::<usize>()
            && self.col_dim
                == self
                    .complement
                    .iter()
                    .map(|&j| dims.dim(j))
                    .product::<usize>()
    }
}

pub(crate) fn bracket(v: &[usize]) -> String {
    format!("[{}]", v.iter().join(","))
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}|{}",
            bracket(&self.part_labels()),
            bracket(&self.complement_labels())
        )
    }
}

pub fn check_level(dims: &QuditDims, ell: usize) -> Result<()> {
    let max = dims.max_level();
    if ell == 0 || ell > max {
        return Err(Error::LevelOutOfRange { ell, max });
    }
    Ok(())
}

/// All `C(n, ℓ)` bipartitions with `|I| = ℓ`, lexicographic in `I`.
pub fn enumerate_bipartitions(dims: &QuditDims, ell: usize) -> Result<Vec<Bipartition>> {
    check_level(dims, ell)?;
    (0..dims.parties())
        .combinations(ell)
        .map(|part| Bipartition::new(dims, part))
        .collect()
}

/// Bipartitions for every level `ℓ = 1..=⌊n/2⌋`, in increasing `ℓ`.
pub fn all_levels(dims: &QuditDims) -> Vec<Vec<Bipartition>> {
    (1..=dims.max_level())
        .map(|ell| enumerate_bipartitions(dims, ell).expect("level within range"))
        .collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
