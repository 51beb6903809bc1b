//! Matrix rank: exact over Q(i), modular over GF(p)[i], and generic for
//! parametric matrices.

mod exact;
pub mod field;
mod modular;
mod oracle;

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::AmplitudeMatrix;
use crate::scalar::ExactInt;

pub use exact::exact_rank;
pub use modular::{generic_rank, modular_rank};
pub use oracle::{oracle_rank_minors, ORACLE_MAX_DIM};

/// Primes p ≡ 3 (mod 4) just below 2^31, used for randomized modular work.
pub const PRIME_TABLE: [u64; 20] = [
    2147483647, 2147483587, 2147483579, 2147483563, 2147483543, 2147483423, 2147483399, 2147483323,
    2147483179, 2147483171, 2147483123, 2147483059, 2147482951, 2147482943, 2147482867, 2147482859,
    2147482819, 2147482811, 2147482763, 2147482739,
];

pub const DEFAULT_GENERIC_TRIALS: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RankMode {
    Exact,
    Modular { p: u64 },
    Generic { trials: u32, p: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Certainty {
    /// The value is the rank over Q(i).
    Exact,
    /// A modular rank that did not reach the upper bound; the true rank is at
    /// least this value.
    LowerBound,
    /// Generic rank estimate; each trial misses the generic rank with
    /// probability at most the given bound.
    Probabilistic { per_trial_failure_bound: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankResult {
    pub value: usize,
    pub mode: RankMode,
    pub certainty: Certainty,
}

impl RankResult {
    pub fn is_exact(&self) -> bool {
        self.certainty == Certainty::Exact
    }

    pub fn is_generic(&self) -> bool {
        matches!(self.mode, RankMode::Generic { .. })
    }
}

impl fmt::Display for RankMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankMode::Exact => f.write_str("exact"),
            RankMode::Modular { p } => write!(f, "modular({p})"),
            RankMode::Generic { trials, p } => write!(f, "generic({trials},{p})"),
        }
    }
}

impl fmt::Display for Certainty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certainty::Exact => f.write_str("exact"),
            Certainty::LowerBound => f.write_str("lower-bound"),
            Certainty::Probabilistic {
                per_trial_failure_bound,
            } => write!(
                f,
                "probabilistic(per-trial failure <= {per_trial_failure_bound:.3e})"
            ),
        }
    }
}

/// How ranks are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RankPolicy {
    /// Fraction-free elimination over Gaussian integers.
    Exact,
    /// Modular rank at one random table prime; accepted when it meets the
    /// upper bound, otherwise recomputed exactly.
    #[default]
    FastThenVerify,
    /// Modular rank only (a lower bound unless it meets the upper bound).
    Modular { p: u64 },
    /// Random substitution for parameters, maximum over `trials`.
    Generic { trials: u32, p: u64 },
}

impl RankPolicy {
    pub fn is_generic(&self) -> bool {
        matches!(self, RankPolicy::Generic { .. })
    }
}

impl fmt::Display for RankPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankPolicy::Exact => f.write_str("exact"),
            RankPolicy::FastThenVerify => f.write_str("fast"),
            RankPolicy::Modular { p } => write!(f, "mod:{p}"),
            RankPolicy::Generic { trials, p } => write!(f, "generic:{trials},{p}"),
        }
    }
}

/// `exact`, `fast`, `mod:<p>`, `generic:<trials>,<p>`, `generic:<trials>`
/// or `generic`.
impl FromStr for RankPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPolicy(s.to_string());
        let number = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
        match s.trim() {
            "exact" => return Ok(RankPolicy::Exact),
            "fast" | "fast-then-verify" => return Ok(RankPolicy::FastThenVerify),
            "generic" => {
                return Ok(RankPolicy::Generic {
                    trials: DEFAULT_GENERIC_TRIALS,
                    p: PRIME_TABLE[0],
                })
            }
            _ => {}
        }
        let policy = if let Some(p) = s.trim().strip_prefix("mod:") {
            RankPolicy::Modular { p: number(p)? }
        } else if let Some(rest) = s.trim().strip_prefix("generic:") {
            let (trials, p) = match rest.split_once(',') {
                Some((t, p)) => (number(t)?, number(p)?),
                None => (number(rest)?, PRIME_TABLE[0]),
            };
            RankPolicy::Generic {
                trials: u32::try_from(trials).map_err(|_| bad())?,
                p,
            }
        } else {
            return Err(bad());
        };
        match policy {
            RankPolicy::Modular { p } | RankPolicy::Generic { p, .. } => {
                field::GaussianField::new(p)?;
            }
            _ => {}
        }
        if let RankPolicy::Generic { trials: 0, .. } = policy {
            return Err(bad());
        }
        Ok(policy)
    }
}

/// Rank of `matrix` under `policy`; `seed` drives any randomness.
pub fn rank_dispatch<Z: ExactInt>(
    matrix: &AmplitudeMatrix<Z>,
    policy: &RankPolicy,
    seed: u64,
) -> Result<RankResult> {
    match *policy {
        RankPolicy::Exact => exact_rank(matrix),
        RankPolicy::Modular { p } => modular_rank(matrix, p),
        RankPolicy::Generic { trials, p } => generic_rank(matrix, trials, p, seed),
        RankPolicy::FastThenVerify => fast_then_verify(matrix, seed),
    }
}

fn fast_then_verify<Z: ExactInt>(matrix: &AmplitudeMatrix<Z>, seed: u64) -> Result<RankResult> {
    if matrix.is_parametric() {
        return Err(Error::ParametricUnderExact);
    }
    let start = ChaCha8Rng::seed_from_u64(seed).gen_range(0..PRIME_TABLE.len());
    // A prime dividing some denominator is skipped in favour of the next one.
    for k in 0..PRIME_TABLE.len() {
        let p = PRIME_TABLE[(start + k) % PRIME_TABLE.len()];
        match modular_rank(matrix, p) {
            Ok(r) if r.is_exact() => return Ok(r),
            Ok(_) => break,
            Err(Error::PrimeDividesDenominator { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    exact_rank(matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::gaussian_from_i64;
    use crate::state::Amplitude;
    use num_bigint::BigInt;

    fn m(rows: &[&[i64]]) -> AmplitudeMatrix<BigInt> {
        let dense: Vec<Vec<_>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| gaussian_from_i64(v)).collect())
            .collect();
        AmplitudeMatrix::from_dense(&dense).unwrap()
    }

    #[test]
    fn prime_table_is_admissible() {
        for p in PRIME_TABLE {
            assert!(field::GaussianField::new(p).is_ok(), "{p}");
        }
        let mut sorted = PRIME_TABLE.to_vec();
        sorted.dedup();
        assert_eq!(sorted.len(), 20);
    }

    #[test]
    fn policy_strings() {
        for (s, p) in [
            ("exact", RankPolicy::Exact),
            ("fast", RankPolicy::FastThenVerify),
            ("mod:7", RankPolicy::Modular { p: 7 }),
            (
                "generic:3,2147483647",
                RankPolicy::Generic {
                    trials: 3,
                    p: 2147483647,
                },
            ),
        ] {
            assert_eq!(s.parse::<RankPolicy>().unwrap(), p);
            assert_eq!(p.to_string(), s);
        }
        assert_eq!(
            "generic".parse::<RankPolicy>().unwrap(),
            RankPolicy::Generic {
                trials: 5,
                p: PRIME_TABLE[0]
            }
        );
        for bad in ["", "mod:5", "mod:x", "generic:0,7", "generic:2,13", "slow"] {
            assert!(bad.parse::<RankPolicy>().is_err(), "{bad}");
        }
    }

    #[test]
    fn full_rank_is_certified_by_modular_pass() {
        let r = rank_dispatch(&m(&[&[1, 2], &[3, 4]]), &RankPolicy::FastThenVerify, 0).unwrap();
        assert_eq!(r.value, 2);
        assert!(matches!(r.mode, RankMode::Modular { .. }));
        assert!(r.is_exact());
    }

    #[test]
    fn deficient_rank_falls_back_to_exact() {
        let r = rank_dispatch(
            &m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]),
            &RankPolicy::FastThenVerify,
            0,
        )
        .unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.mode, RankMode::Exact);
    }

    #[test]
    fn dispatch_by_policy() {
        let mut p = AmplitudeMatrix::<BigInt>::zeros(2, 2);
        p.set(0, 0, Amplitude::param("a")).unwrap();
        p.set(1, 1, Amplitude::Gaussian(gaussian_from_i64(1)))
            .unwrap();
        let r = rank_dispatch(
            &p,
            &RankPolicy::Generic {
                trials: 2,
                p: 2147483647,
            },
            5,
        )
        .unwrap();
        assert_eq!(r.value, 2);
        assert!(r.is_generic());
        assert_eq!(
            rank_dispatch(&p, &RankPolicy::Exact, 0).unwrap_err(),
            Error::ParametricUnderExact
        );
        assert_eq!(
            rank_dispatch(&p, &RankPolicy::FastThenVerify, 0).unwrap_err(),
            Error::ParametricUnderExact
        );
    }

    #[test]
    fn fast_path_skips_primes_dividing_denominators() {
        let mut x = AmplitudeMatrix::<BigInt>::zeros(1, 1);
        let q = num_complex::Complex::new(
            num_rational::Ratio::new(BigInt::from(1), BigInt::from(PRIME_TABLE[0])),
            num_rational::Ratio::from_integer(BigInt::from(0)),
        );
        x.set(0, 0, Amplitude::Gaussian(q)).unwrap();
        for seed in 0..20 {
            let r = rank_dispatch(&x, &RankPolicy::FastThenVerify, seed).unwrap();
            assert_eq!(r.value, 1);
            assert!(r.is_exact());
        }
    }
}
