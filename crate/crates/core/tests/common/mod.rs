#![allow(dead_code)]

use itertools::Itertools;
use multirank::scalar::gaussian_from_parts;
use multirank::{
    build_state, exact_rank, Amplitude, BigGaussian, Bipartition, Matrix, QuditDims, State,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const W3: &str = "dims 2 2 2\n1 |001>\n1 |010>\n1 |100>\n";
pub const FOUR_QUBIT: &str = "dims 2 2 2 2\n1 |0000>\n1 |0011>\n1 |1100>\n-1 |1111>\n";
pub const THREE_QUTRIT: &str = "dims 3 3 3\n1 |002>\n1 |020>\n1 |200>\n1 |011>\n1 |101>\n1 |110>\n";
pub const SIX_QUTRIT: &str = "dims 3 3 3 3 3 3\n1 |000000>\n1 |111111>\n1 |222222>\n1 |001122>\n";

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entry with real and imaginary parts in `-r..=r`.
pub fn gaussian(rng: &mut impl Rng, r: i64) -> BigGaussian {
    gaussian_from_parts(rng.gen_range(-r..=r), rng.gen_range(-r..=r))
}

pub fn nonzero_gaussian(rng: &mut impl Rng, r: i64) -> BigGaussian {
    loop {
        let g = gaussian(rng, r);
        if g != gaussian_from_parts(0, 0) {
            return g;
        }
    }
}

pub fn random_dims(rng: &mut impl Rng, n_min: usize, n_max: usize, d_max: usize) -> QuditDims {
    let n = rng.gen_range(n_min..=n_max);
    QuditDims::new((0..n).map(|_| rng.gen_range(2..=d_max)).collect()).unwrap()
}

pub fn random_ket(rng: &mut impl Rng, dims: &QuditDims) -> Vec<usize> {
    dims.as_slice()
        .iter()
        .map(|&d| rng.gen_range(0..d))
        .collect()
}

/// Up to `max_terms` kets with entries in {-3..3}+i{-3..3}; cancellations
/// that empty the state are redrawn.
pub fn random_state_on(rng: &mut impl Rng, dims: &QuditDims, max_terms: usize) -> State {
    loop {
        let k = rng.gen_range(1..=max_terms);
        let terms: Vec<_> = (0..k)
            .map(|_| (random_ket(rng, dims), Amplitude::Gaussian(gaussian(rng, 3))))
            .collect();
        if let Ok(s) = build_state(dims.clone(), terms) {
            return s;
        }
    }
}

pub fn random_state(rng: &mut impl Rng) -> State {
    let dims = random_dims(rng, 2, 6, 3);
    random_state_on(rng, &dims, 20)
}

/// Tensor product of one factor per group; `groups[g]` lists the parties of
/// factor `g`, and position `t` of a factor's ket goes to party `groups[g][t]`.
pub fn tensor_product(dims: &QuditDims, groups: &[Vec<usize>], factors: &[State]) -> State {
    let terms = factors
        .iter()
        .map(|f| {
            f.terms()
                .map(|(k, a)| (k.to_vec(), a.coefficient().clone()))
                .collect::<Vec<_>>()
        })
        .multi_cartesian_product()
        .map(|choice| {
            let mut ket = vec![0; dims.parties()];
            let mut amp = gaussian_from_parts(1, 0);
            for (g, (k, a)) in choice.into_iter().enumerate() {
                for (pos, &party) in groups[g].iter().enumerate() {
                    ket[party] = k[pos];
                }
                amp *= a;
            }
            (ket, Amplitude::Gaussian(amp))
        });
    build_state(dims.clone(), terms).unwrap()
}

/// Random local vectors on every party.
pub fn random_product_state(rng: &mut impl Rng) -> State {
    let dims = random_dims(rng, 2, 6, 3);
    let groups: Vec<Vec<usize>> = (0..dims.parties()).map(|j| vec![j]).collect();
    let factors: Vec<State> = dims
        .as_slice()
        .iter()
        .map(|&d| {
            let mut terms = Vec::new();
            for i in 0..d {
                if rng.gen_bool(0.7) {
                    terms.push((vec![i], Amplitude::Gaussian(nonzero_gaussian(rng, 3))));
                }
            }
            if terms.is_empty() {
                terms.push((
                    vec![rng.gen_range(0..d)],
                    Amplitude::Gaussian(nonzero_gaussian(rng, 3)),
                ));
            }
            single_party_state(d, terms)
        })
        .collect();
    tensor_product(&dims, &groups, &factors)
}

/// States need two parties, so a one-party factor carries a dummy second
/// party fixed at 0; [`tensor_product`] only reads the leading positions.
fn single_party_state(d: usize, terms: Vec<(Vec<usize>, Amplitude<num_bigint::BigInt>)>) -> State {
    let dims = QuditDims::new(vec![d, 2]).unwrap();
    let padded: Vec<_> = terms
        .into_iter()
        .map(|(mut k, a)| {
            k.push(0);
            (k, a)
        })
        .collect();
    build_state(dims, padded).unwrap()
}

/// A state that factors across a random proper cut `I|Ī`, with each side
/// drawn at random. Returns the state and the cut.
pub fn random_single_cut_state(rng: &mut ChaCha8Rng) -> (State, Bipartition) {
    let dims = random_dims(rng, 3, 6, 3);
    let n = dims.parties();
    let mut parties: Vec<usize> = (0..n).collect();
    parties.shuffle(rng);
    let k = rng.gen_range(1..=n / 2);
    let mut part = parties[..k].to_vec();
    let mut rest = parties[k..].to_vec();
    part.sort_unstable();
    rest.sort_unstable();
    let side = |rng: &mut ChaCha8Rng, group: &[usize]| -> State {
        // one-party sides use the same dummy padding as single_party_state
        let sub: Vec<usize> = group.iter().map(|&j| dims.dim(j)).collect();
        let padded = if sub.len() == 1 {
            vec![sub[0], 2]
        } else {
            sub.clone()
        };
        let sd = QuditDims::new(padded).unwrap();
        loop {
            let terms: Vec<_> = (0..rng.gen_range(1..=8))
                .map(|_| {
                    let mut ket: Vec<usize> = sub.iter().map(|&d| rng.gen_range(0..d)).collect();
                    if sub.len() == 1 {
                        ket.push(0);
                    }
                    (ket, Amplitude::Gaussian(gaussian(rng, 3)))
                })
                .collect();
            if let Ok(s) = build_state(sd.clone(), terms) {
                break s;
            }
        }
    };
    let a = side(rng, &part);
    let b = side(rng, &rest);
    let state = tensor_product(&dims, &[part.clone(), rest], &[a, b]);
    (state, Bipartition::new(&dims, part).unwrap())
}

/// Random `rows x cols` Gaussian-integer matrix of rank at most `k`, built
/// as a product of random factors so that deficient ranks are common.
pub fn random_low_rank_matrix(rng: &mut impl Rng, rows: usize, cols: usize, k: usize) -> Matrix {
    let a: Vec<Vec<BigGaussian>> = (0..rows)
        .map(|_| (0..k).map(|_| gaussian(rng, 2)).collect())
        .collect();
    let b: Vec<Vec<BigGaussian>> = (0..k)
        .map(|_| (0..cols).map(|_| gaussian(rng, 2)).collect())
        .collect();
    let dense: Vec<Vec<BigGaussian>> = (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| {
                    (0..k).fold(gaussian_from_parts(0, 0), |acc, t| {
                        acc + a[r][t].clone() * b[t][c].clone()
                    })
                })
                .collect()
        })
        .collect();
    Matrix::from_dense(&dense).unwrap()
}

pub fn random_matrix(rng: &mut impl Rng, max_dim: usize) -> Matrix {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    if rng.gen_bool(0.5) {
        let dense: Vec<Vec<BigGaussian>> = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| {
                        if rng.gen_bool(0.4) {
                            gaussian_from_parts(0, 0)
                        } else {
                            gaussian(rng, 3)
                        }
                    })
                    .collect()
            })
            .collect();
        Matrix::from_dense(&dense).unwrap()
    } else {
        let k = rng.gen_range(1..=rows.min(cols));
        random_low_rank_matrix(rng, rows, cols, k)
    }
}

/// Random invertible `d x d` matrix with small Gaussian-integer entries.
pub fn random_invertible(rng: &mut impl Rng, d: usize) -> Vec<Vec<BigGaussian>> {
    loop {
        let m: Vec<Vec<BigGaussian>> = (0..d)
            .map(|_| (0..d).map(|_| gaussian(rng, 2)).collect())
            .collect();
        if exact_rank(&Matrix::from_dense(&m).unwrap()).unwrap().value == d {
            return m;
        }
    }
}
