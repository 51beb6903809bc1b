//! Sparse exact matrices over Gaussian rationals (with optional parametric
//! entries).

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::scalar::{ExactInt, GaussianRational};
use crate::state::{format_entry, Amplitude};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmplitudeMatrix<Z: ExactInt> {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Amplitude<Z>>,
}

/// Nonzero rows and columns of a matrix relabelled densely; zero rows and
/// columns never change the rank.
pub(crate) struct Compact<'a, Z: ExactInt> {
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<(usize, usize, &'a Amplitude<Z>)>,
}

impl<Z: ExactInt> AmplitudeMatrix<Z> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        AmplitudeMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_dense(rows: &[Vec<GaussianRational<Z>>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch("ragged dense matrix".into()));
            }
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, Amplitude::Gaussian(v.clone()))?;
            }
        }
        Ok(m)
    }

    /// Stores `amp` at `(row, col)`; zero amplitudes clear the cell.
    pub fn set(&mut self, row: usize, col: usize, amp: Amplitude<Z>) -> Result<()> {
        if row >= self.rows || col >= self.cols {
            return Err(Error::DimensionMismatch(format!(
                "({row}, {col}) outside a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if amp.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), amp);
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&Amplitude<Z>> {
        self.entries.get(&(row, col))
    }

    /// Number of stored nonzero entries.
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Amplitude<Z>)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    pub fn is_parametric(&self) -> bool {
        self.entries.values().any(Amplitude::is_param)
    }

    pub fn parameters(&self) -> BTreeSet<&str> {
        self.entries
            .values()
            .filter_map(Amplitude::param_name)
            .collect()
    }

    pub fn transpose(&self) -> Self {
        AmplitudeMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| ((c, r), v.clone()))
                .collect(),
        }
    }

    /// Dense rows of exact entry strings, for debug dumps.
    pub fn to_dense_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| format_entry(self.get(r, c)))
                    .collect()
            })
            .collect()
    }

    pub(crate) fn compact(&self) -> Compact<'_, Z> {
        let mut row_ids = BTreeMap::new();
        let mut col_ids = BTreeMap::new();
        for &(r, c) in self.entries.keys() {
            let next = row_ids.len();
            row_ids.entry(r).or_insert(next);
            let next = col_ids.len();
            col_ids.entry(c).or_insert(next);
        }
        let cells = self
            .entries
            .iter()
            .map(|(&(r, c), v)| (row_ids[&r], col_ids[&c], v))
            .collect();
        Compact {
            rows: row_ids.len(),
            cols: col_ids.len(),
            cells,
        }
    }
}
