//! ℓ-multirank profiles: ranks of every flattening with `|I| = ℓ`, for
//! `ℓ = 1..=⌊n/2⌋`, in lexicographic order of `I`.

use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::flatten::flatten;
use crate::partition::{all_levels, check_level, enumerate_bipartitions, Bipartition};
use crate::rank::{rank_dispatch, RankPolicy, RankResult};
use crate::scalar::ExactInt;
use crate::state::{QuditDims, StateTensor};

/// Default master seed, so runs without an explicit seed are reproducible.
pub const DEFAULT_SEED: u64 = 0x6d75_6c74_6972_616e;

#[derive(Debug, Clone, PartialEq)]
pub struct ProfileEntry {
    pub bipartition: Bipartition,
    pub rank: RankResult,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultirankProfile {
    dims: QuditDims,
    levels: Vec<Vec<ProfileEntry>>,
    policy: RankPolicy,
    seed: u64,
}

/// Seed for one flattening, independent of evaluation order.
fn matrix_seed(master: u64, ell: usize, index: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(((ell as u64) << 32) | index as u64);
    rng.next_u64()
}

fn rank_entries<Z: ExactInt>(
    state: &StateTensor<Z>,
    cuts: Vec<(usize, usize, Bipartition)>,
    policy: &RankPolicy,
    seed: u64,
) -> Result<Vec<ProfileEntry>> {
    cuts.into_par_iter()
        .map(|(ell, k, bipartition)| {
            let matrix = flatten(state, &bipartition)?;
            let rank = rank_dispatch(matrix.matrix(), policy, matrix_seed(seed, ell, k))?;
            Ok(ProfileEntry { bipartition, rank })
        })
        .collect()
}

pub fn multirank_profile<Z: ExactInt>(
    state: &StateTensor<Z>,
    policy: &RankPolicy,
    seed: u64,
) -> Result<MultirankProfile> {
    let dims = state.dims().clone();
    let shape: Vec<usize> = all_levels(&dims).iter().map(Vec::len).collect();
    let cuts = all_levels(&dims)
        .into_iter()
        .enumerate()
        .flat_map(|(k, level)| {
            level
                .into_iter()
                .enumerate()
                .map(move |(i, b)| (k + 1, i, b))
        })
        .collect();
    let mut flat = rank_entries(state, cuts, policy, seed)?.into_iter();
    let levels = shape
        .iter()
        .map(|&len| flat.by_ref().take(len).collect())
        .collect();
    Ok(MultirankProfile {
        dims,
        levels,
        policy: *policy,
        seed,
    })
}

/// One level of the profile, identical to the corresponding level of
/// [`multirank_profile`] under the same policy and seed.
pub fn profile_level<Z: ExactInt>(
    state: &StateTensor<Z>,
    ell: usize,
    policy: &RankPolicy,
    seed: u64,
) -> Result<Vec<ProfileEntry>> {
    check_level(state.dims(), ell)?;
    let cuts = enumerate_bipartitions(state.dims(), ell)?
        .into_iter()
        .enumerate()
        .map(|(i, b)| (ell, i, b))
        .collect();
    rank_entries(state, cuts, policy, seed)
}

impl MultirankProfile {
    pub fn dims(&self) -> &QuditDims {
        &self.dims
    }

    pub fn levels(&self) -> &[Vec<ProfileEntry>] {
        &self.levels
    }

    /// Entries of level `ell` (1-based).
    pub fn level(&self, ell: usize) -> Option<&[ProfileEntry]> {
        ell.checked_sub(1)
            .and_then(|k| self.levels.get(k))
            .map(Vec::as_slice)
    }

    pub fn policy(&self) -> RankPolicy {
        self.policy
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn ranks(&self) -> Vec<Vec<usize>> {
        self.levels.iter().map(|l| level_ranks(l)).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &ProfileEntry> {
        self.levels.iter().flatten()
    }

    pub fn is_generic(&self) -> bool {
        self.entries().any(|e| e.rank.is_generic())
    }

    /// `{{2, 2, 2, 2}, {2, 4, 4, 4, 4, 2}}`
    pub fn to_nested_text(&self) -> String {
        format_nested(&self.ranks())
    }

    /// Levels with each complementary pair at `ℓ = n/2` represented once,
    /// by the member containing the first party.
    pub fn deduplicated(&self) -> Vec<Vec<&ProfileEntry>> {
        let n = self.dims.parties();
        self.levels
            .iter()
            .enumerate()
            .map(|(k, level)| {
                let half = 2 * (k + 1) == n;
                level
                    .iter()
                    .filter(|e| !half || e.bipartition.contains(0))
                    .collect()
            })
            .collect()
    }
}

pub fn level_ranks(level: &[ProfileEntry]) -> Vec<usize> {
    level.iter().map(|e| e.rank.value).collect()
}

/// `{2, 4, 4}`
pub fn format_level(ranks: &[usize]) -> String {
    let body: Vec<String> = ranks.iter().map(usize::to_string).collect();
    format!("{{{}}}", body.join(", "))
}

pub fn format_nested(levels: &[Vec<usize>]) -> String {
    let body: Vec<String> = levels.iter().map(|l| format_level(l)).collect();
    format!("{{{}}}", body.join(", "))
}
