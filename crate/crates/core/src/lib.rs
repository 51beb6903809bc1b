//! ℓ-multirank profiles of multipartite pure qudit states.
//!
//! A state's coefficient tensor is flattened along every bipartition
//! `I | Ī` with `1 <= |I| <= ⌊n/2⌋`, and the rank of each flattening is
//! computed exactly over the Gaussian rationals. A pure state is genuinely
//! multipartite entangled exactly when all of these ranks exceed 1.
//!
//! ```
//! use multirank::{multirank_profile, parse_state, verdict, RankPolicy, State, DEFAULT_SEED};
//!
//! let w: State = parse_state("dims 2 2 2 ; 1 |001> ; 1 |010> ; 1 |100>").unwrap();
//! let profile = multirank_profile(&w, &RankPolicy::Exact, DEFAULT_SEED).unwrap();
//! assert_eq!(profile.to_nested_text(), "{{2, 2, 2}}");
//! assert!(verdict(&profile).gme);
//! ```
//!
//! The exact machinery is generic over the integer type ([`ExactInt`]);
//! the aliases below fix it to `BigInt`.

pub mod classify;
pub mod cli;
pub mod error;
pub mod flatten;
pub mod matrix;
pub mod partition;
pub mod profile;
pub mod rank;
pub mod scalar;
pub mod state;

use num_bigint::BigInt;

pub use classify::{is_fully_product, is_gme, verdict, EntanglementVerdict};
pub use error::{Error, Result};
pub use flatten::{flatten, row_col_of, FlattenedMatrix};
pub use matrix::AmplitudeMatrix;
pub use partition::{all_levels, enumerate_bipartitions, Bipartition};
pub use profile::{multirank_profile, profile_level, MultirankProfile, ProfileEntry, DEFAULT_SEED};
pub use rank::{
    exact_rank, generic_rank, modular_rank, oracle_rank_minors, rank_dispatch, Certainty, RankMode,
    RankPolicy, RankResult,
};
pub use scalar::{ExactInt, GaussianInt, GaussianRational};
pub use state::{build_state, parse_state, Amplitude, LocalMatrix, QuditDims, StateTensor};

/// Arbitrary-precision Gaussian rational.
pub type BigGaussian = GaussianRational<BigInt>;
pub type Coefficient = Amplitude<BigInt>;
pub type State = StateTensor<BigInt>;
pub type Matrix = AmplitudeMatrix<BigInt>;
pub type Flattening = FlattenedMatrix<BigInt>;

/// Fixed-width variants for small inputs; intermediate growth is unchecked
/// in release builds.
pub type SmallGaussian = GaussianRational<i128>;
pub type SmallState = StateTensor<i128>;
