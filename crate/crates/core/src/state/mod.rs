//! Sparse order-n coefficient tensors of pure qudit states.
//!
//! A state is a finite map from multi-indices `(i_1, …, i_n)` to nonzero
//! exact amplitudes. Parties are numbered from 0 in the API; ket strings map
//! left to right onto parties 0..n.

mod amplitude;
mod parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{format_gaussian, ExactInt, GaussianRational};

pub use amplitude::Amplitude;
pub use parse::parse_state;

/// Local dimensions `d_1, …, d_n` of an n-partite system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuditDims {
    dims: Vec<usize>,
    delta: usize,
}

impl QuditDims {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.len() < 2 {
            return Err(Error::InvalidDims(format!(
                "need at least 2 parties, got {}",
                dims.len()
            )));
        }
        if let Some((j, &d)) = dims.iter().enumerate().find(|(_, &d)| d < 2) {
            return Err(Error::InvalidDims(format!(
                "party {} has dimension {d}, expected at least 2",
                j + 1
            )));
        }
        let delta = dims
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| Error::InvalidDims("total dimension overflows usize".into()))?;
        Ok(QuditDims { dims, delta })
    }

    /// `n` parties of equal dimension `d`.
    pub fn uniform(n: usize, d: usize) -> Result<Self> {
        Self::new(vec![d; n])
    }

    pub fn parties(&self) -> usize {
        self.dims.len()
    }

    /// Product of all local dimensions.
    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, party: usize) -> usize {
        self.dims[party]
    }

    /// Largest admissible flattening level, `⌊n/2⌋`.
    pub fn max_level(&self) -> usize {
        self.dims.len() / 2
    }

    pub fn check_index(&self, index: &[usize]) -> Result<()> {
        if index.len() != self.dims.len() {
            return Err(Error::IndexArity {
                expected: self.dims.len(),
                got: index.len(),
            });
        }
        for (party, (&value, &dim)) in index.iter().zip(&self.dims).enumerate() {
            if value >= dim {
                return Err(Error::IndexOutOfRange {
                    party: party + 1,
                    value,
                    dim,
                });
            }
        }
        Ok(())
    }
}

/// Exact square matrix acting on one tensor factor.
pub type LocalMatrix<Z> = Vec<Vec<GaussianRational<Z>>>;

/// Immutable sparse state tensor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateTensor<Z: ExactInt> {
    dims: QuditDims,
    terms: BTreeMap<Vec<usize>, Amplitude<Z>>,
}

struct Accumulated<Z: ExactInt> {
    constant: Option<GaussianRational<Z>>,
    params: BTreeMap<String, GaussianRational<Z>>,
}

impl<Z: ExactInt> Default for Accumulated<Z> {
    fn default() -> Self {
        Accumulated {
            constant: None,
            params: BTreeMap::new(),
        }
    }
}

impl<Z: ExactInt> Accumulated<Z> {
    fn add(&mut self, amp: Amplitude<Z>) {
        match amp {
            Amplitude::Gaussian(q) => {
                self.constant = Some(match self.constant.take() {
                    Some(c) => c + q,
                    None => q,
                });
            }
            Amplitude::Param { name, scale } => {
                let slot = self.params.entry(name).or_insert_with(Zero::zero);
                *slot = slot.clone() + scale;
            }
        }
    }

    fn finish(self, ket: &[usize]) -> Result<Option<Amplitude<Z>>> {
        let mut live: Vec<Amplitude<Z>> = Vec::new();
        if let Some(c) = self.constant.filter(|c| !c.is_zero()) {
            live.push(Amplitude::Gaussian(c));
        }
        live.extend(
            self.params
                .into_iter()
                .filter(|(_, s)| !s.is_zero())
                .map(|(name, scale)| Amplitude::Param { name, scale }),
        );
        match live.len() {
            0 => Ok(None),
            1 => Ok(live.pop()),
            _ => Err(Error::IncompatibleMerge {
                ket: ket.to_vec(),
                detail: live
                    .iter()
                    .map(|a| a.to_string())
                    .collect::<Vec<_>>()
                    .join(" + "),
            }),
        }
    }
}

/// Builds a state from raw terms, merging repeated kets by addition and
/// dropping terms that cancel exactly.
///
/// A ket may collect either Gaussian amplitudes or multiples of a single
/// parameter; anything else cannot be stored as one [`Amplitude`] and is
/// rejected.
pub fn build_state<Z, I>(dims: QuditDims, terms: I) -> Result<StateTensor<Z>>
where
    Z: ExactInt,
    I: IntoIterator<Item = (Vec<usize>, Amplitude<Z>)>,
{
    let mut acc: BTreeMap<Vec<usize>, Accumulated<Z>> = BTreeMap::new();
    for (index, amp) in terms {
        dims.check_index(&index)?;
        if let Amplitude::Param { name, .. } = &amp {
            if !amplitude::is_param_name(name) {
                return Err(Error::InvalidParameter(name.clone()));
            }
        }
        acc.entry(index).or_default().add(amp);
    }
    let mut merged = BTreeMap::new();
    for (ket, a) in acc {
        if let Some(amp) = a.finish(&ket)? {
            merged.insert(ket, amp);
        }
    }
    if merged.is_empty() {
        return Err(Error::ZeroState);
    }
    Ok(StateTensor {
        dims,
        terms: merged,
    })
}

impl<Z: ExactInt> StateTensor<Z> {
    pub fn dims(&self) -> &QuditDims {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic multi-index order.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Amplitude<Z>)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn amplitude(&self, index: &[usize]) -> Option<&Amplitude<Z>> {
        self.terms.get(index)
    }

    /// Names of all parameters appearing in the state.
    pub fn parameters(&self) -> BTreeSet<&str> {
        self.terms
            .values()
            .filter_map(Amplitude::param_name)
            .collect()
    }

    pub fn is_parametric(&self) -> bool {
        self.terms.values().any(Amplitude::is_param)
    }

    /// Applies `matrix` to the tensor factor of `site` (0-based):
    /// the amplitude at `i_site = b` contributes `matrix[a][b]` times itself
    /// to `i_site = a`.
    pub fn apply_local_operation(
        &self,
        site: usize,
        matrix: &[Vec<GaussianRational<Z>>],
    ) -> Result<Self> {
        let n = self.dims.parties();
        if site >= n {
            return Err(Error::DimensionMismatch(format!(
                "site {site} out of range for {n} parties"
            )));
        }
        let d = self.dims.dim(site);
        if matrix.len() != d || matrix.iter().any(|row| row.len() != d) {
            return Err(Error::DimensionMismatch(format!(
                "local operation must be {d}x{d} for party {}",
                site + 1
            )));
        }
        let mut out = Vec::with_capacity(self.terms.len() * d);
        for (index, amp) in &self.terms {
            let b = index[site];
            for (a, row) in matrix.iter().enumerate() {
                let m = &row[b];
                if m.is_zero() {
                    continue;
                }
                let mut target = index.clone();
                target[site] = a;
                out.push((target, amp.scaled(m)));
            }
        }
        build_state(self.dims.clone(), out)
    }

    /// Whether ket digits can be written as a plain digit string.
    fn single_digit_kets(&self) -> bool {
        self.dims.as_slice().iter().all(|&d| d <= 10)
    }
}

pub(crate) fn format_ket(index: &[usize], single_digit: bool) -> String {
    if single_digit {
        index.iter().map(|i| char::from(b'0' + *i as u8)).collect()
    } else {
        index
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Serializes in the line-oriented state-file format accepted by
/// [`parse_state`].
impl<Z: ExactInt> fmt::Display for StateTensor<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dims")?;
        for d in self.dims.as_slice() {
            write!(f, " {d}")?;
        }
        writeln!(f)?;
        let single = self.single_digit_kets();
        for (index, amp) in &self.terms {
            writeln!(f, "{amp} |{}>", format_ket(index, single))?;
        }
        Ok(())
    }
}

/// Dense exact matrix pretty-printer shared by debug dumps.
pub(crate) fn format_entry<Z: ExactInt>(amp: Option<&Amplitude<Z>>) -> String {
    match amp {
        None => "0".to_string(),
        Some(Amplitude::Gaussian(q)) => format_gaussian(q),
        Some(a) => a.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gaussian_from_i64, parse_gaussian};
    use num_bigint::BigInt;

    type State = StateTensor<BigInt>;

    fn unit(index: &[usize]) -> (Vec<usize>, Amplitude<BigInt>) {
        (index.to_vec(), Amplitude::Gaussian(gaussian_from_i64(1)))
    }

    fn gq(s: &str) -> GaussianRational<BigInt> {
        parse_gaussian(s).unwrap()
    }

    #[test]
    fn dims_validation() {
        assert!(QuditDims::new(vec![2]).is_err());
        assert!(QuditDims::new(vec![2, 1]).is_err());
        assert!(QuditDims::new(vec![]).is_err());
        let d = QuditDims::new(vec![2, 3, 4]).unwrap();
        assert_eq!(d.delta(), 24);
        assert_eq!(d.parties(), 3);
        assert_eq!(d.max_level(), 1);
        assert!(QuditDims::new(vec![usize::MAX, 2]).is_err());
    }

    #[test]
    fn three_qutrit_symmetric_state() {
        let dims = QuditDims::uniform(3, 3).unwrap();
        let kets = [
            [0, 0, 2],
            [0, 2, 0],
            [2, 0, 0],
            [0, 1, 1],
            [1, 0, 1],
            [1, 1, 0],
        ];
        let s: State = build_state(dims, kets.iter().map(|k| unit(k))).unwrap();
        assert_eq!(s.len(), 6);
    }

    #[test]
    fn canonical_reduction_on_build() {
        let dims = QuditDims::uniform(2, 2).unwrap();
        let s: State = build_state(dims, [(vec![0, 0], Amplitude::Gaussian(gq("2/4")))]).unwrap();
        assert_eq!(s.amplitude(&[0, 0]), Some(&Amplitude::Gaussian(gq("1/2"))));
    }

    #[test]
    fn duplicates_merge() {
        let dims = QuditDims::uniform(2, 2).unwrap();
        let s: State = build_state(dims, [unit(&[0, 0]), unit(&[0, 0])]).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.amplitude(&[0, 0]), Some(&Amplitude::Gaussian(gq("2"))));
    }

    #[test]
    fn cancellation_to_zero_is_rejected() {
        let dims = QuditDims::uniform(2, 2).unwrap();
        let r: Result<State> = build_state(
            dims,
            [unit(&[0, 1]), (vec![0, 1], Amplitude::Gaussian(gq("-1")))],
        );
        assert_eq!(r.unwrap_err(), Error::ZeroState);
    }

    #[test]
    fn out_of_range_index() {
        let dims = QuditDims::uniform(2, 2).unwrap();
        let r: Result<State> = build_state(dims.clone(), [unit(&[0, 2])]);
        assert!(matches!(
            r.unwrap_err(),
            Error::IndexOutOfRange {
                party: 2,
                value: 2,
                dim: 2
            }
        ));
        let r: Result<State> = build_state(dims, [unit(&[0, 0, 0])]);
        assert!(matches!(r.unwrap_err(), Error::IndexArity { .. }));
    }

    #[test]
    fn parameter_merging() {
        let dims = QuditDims::uniform(2, 2).unwrap();
        let a = |s: &str| Amplitude::Param {
            name: "a".into(),
            scale: gq(s),
        };
        let s: State =
            build_state(dims.clone(), [(vec![0, 0], a("1")), (vec![0, 0], a("1"))]).unwrap();
        assert_eq!(s.amplitude(&[0, 0]), Some(&a("2")));

        // a - a + 1 collapses to the constant, whatever the order
        let terms = vec![(vec![1, 1], a("1")), unit(&[1, 1]), (vec![1, 1], a("-1"))];
        let s: State = build_state(dims.clone(), terms).unwrap();
        assert_eq!(s.amplitude(&[1, 1]), Some(&Amplitude::Gaussian(gq("1"))));

        let r: Result<State> = build_state(dims, [(vec![0, 0], a("1")), unit(&[0, 0])]);
        assert!(matches!(r.unwrap_err(), Error::IncompatibleMerge { .. }));
    }

    #[test]
    fn identity_operation_is_noop() {
        let s: State = parse_state("dims 2 3 2 ; 1 |001> ; 1/2+i |120> ; -3 |011>").unwrap();
        for site in 0..3 {
            let d = s.dims().dim(site);
            let id: LocalMatrix<BigInt> = (0..d)
                .map(|r| {
                    (0..d)
                        .map(|c| gaussian_from_i64(i64::from(r == c)))
                        .collect()
                })
                .collect();
            assert_eq!(s.apply_local_operation(site, &id).unwrap(), s);
        }
    }

    #[test]
    fn swap_on_last_site_of_w_state() {
        let w: State = parse_state("dims 2 2 2 ; 1 |001> ; 1 |010> ; 1 |100>").unwrap();
        let x = vec![
            vec![gaussian_from_i64(0), gaussian_from_i64(1)],
            vec![gaussian_from_i64(1), gaussian_from_i64(0)],
        ];
        let out = w.apply_local_operation(2, &x).unwrap();
        let expected: State = parse_state("dims 2 2 2 ; 1 |000> ; 1 |011> ; 1 |101>").unwrap();
        assert_eq!(out, expected);
    }

    #[test]
    fn shear_on_first_site_of_bell_state() {
        let bell: State = parse_state("dims 2 2 ; 1 |00> ; 1 |11>").unwrap();
        let m = vec![
            vec![gaussian_from_i64(1), gaussian_from_i64(0)],
            vec![gaussian_from_i64(1), gaussian_from_i64(1)],
        ];
        let out = bell.apply_local_operation(0, &m).unwrap();
        let expected: State = parse_state("dims 2 2 ; 1 |00> ; 1 |10> ; 1 |11>").unwrap();
        assert_eq!(out, expected);
    }

    #[test]
    fn local_operation_dimension_mismatch() {
        let bell: State = parse_state("dims 2 3 ; 1 |00> ; 1 |11>").unwrap();
        let m = vec![
            vec![gaussian_from_i64(1), gaussian_from_i64(0)],
            vec![gaussian_from_i64(0), gaussian_from_i64(1)],
        ];
        assert!(matches!(
            bell.apply_local_operation(1, &m),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(bell.apply_local_operation(2, &m).is_err());
    }

    #[test]
    fn display_uses_comma_kets_for_large_dims() {
        let s: State = parse_state("dims 2 12 ; 1 |1,11> ; 2 |0,3>").unwrap();
        let text = s.to_string();
        assert_eq!(text, "dims 2 12\n2 |0,3>\n1 |1,11>\n");
        assert_eq!(parse_state::<BigInt>(&text).unwrap(), s);
    }
}
