//! The finite field GF(p)[i]/(i²+1) for primes p ≡ 3 (mod 4).
//!
//! For such p, -1 is a non-residue, so i²+1 is irreducible and the quotient
//! is the field with p² elements. Gaussian rationals reduce into it
//! componentwise whenever p does not divide a denominator.

use num_rational::Ratio;
use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::{ExactInt, GaussianRational};

/// Largest accepted modulus; keeps sums of two residues inside `u64`.
pub const MAX_PRIME: u64 = 1 << 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct Fp2 {
    pub re: u64,
    pub im: u64,
}

impl Fp2 {
    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaussianField {
    p: u64,
}

impl GaussianField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_PRIME {
            return Err(Error::InvalidPrime {
                p,
                reason: "exceeds 2^62".into(),
            });
        }
        if !is_prime(p) {
            return Err(Error::InvalidPrime {
                p,
                reason: "not prime".into(),
            });
        }
        if p % 4 != 3 {
            return Err(Error::InvalidPrime {
                p,
                reason: "must be congruent to 3 mod 4".into(),
            });
        }
        Ok(GaussianField { p })
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn one(self) -> Fp2 {
        Fp2 { re: 1, im: 0 }
    }

    fn add_mod(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub_mod(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn add(self, a: Fp2, b: Fp2) -> Fp2 {
        Fp2 {
            re: self.add_mod(a.re, b.re),
            im: self.add_mod(a.im, b.im),
        }
    }

    pub fn sub(self, a: Fp2, b: Fp2) -> Fp2 {
        Fp2 {
            re: self.sub_mod(a.re, b.re),
            im: self.sub_mod(a.im, b.im),
        }
    }

    pub fn mul(self, a: Fp2, b: Fp2) -> Fp2 {
        let m = |x: u64, y: u64| mul_mod(x, y, self.p);
        Fp2 {
            re: self.sub_mod(m(a.re, b.re), m(a.im, b.im)),
            im: self.add_mod(m(a.re, b.im), m(a.im, b.re)),
        }
    }

    /// `(a - bi) / (a² + b²)`; the norm vanishes only at zero.
    pub fn inv(self, a: Fp2) -> Option<Fp2> {
        if a.is_zero() {
            return None;
        }
        let norm = self.add_mod(mul_mod(a.re, a.re, self.p), mul_mod(a.im, a.im, self.p));
        debug_assert_ne!(norm, 0);
        let n_inv = pow_mod(norm, self.p - 2, self.p);
        Some(Fp2 {
            re: mul_mod(a.re, n_inv, self.p),
            im: mul_mod(self.sub_mod(0, a.im), n_inv, self.p),
        })
    }

    pub fn random<R: Rng + ?Sized>(self, rng: &mut R) -> Fp2 {
        Fp2 {
            re: rng.gen_range(0..self.p),
            im: rng.gen_range(0..self.p),
        }
    }

    fn reduce_int<Z: ExactInt>(self, z: &Z) -> u64 {
        let p = Z::from_u64(self.p).expect("modulus fits the integer type");
        z.mod_floor(&p).to_u64().expect("residue below the modulus")
    }

    pub fn reduce_ratio<Z: ExactInt>(self, q: &Ratio<Z>) -> Result<u64> {
        let den = self.reduce_int(q.denom());
        if den == 0 {
            return Err(Error::PrimeDividesDenominator { p: self.p });
        }
        Ok(mul_mod(
            self.reduce_int(q.numer()),
            pow_mod(den, self.p - 2, self.p),
            self.p,
        ))
    }

    pub fn reduce<Z: ExactInt>(self, q: &GaussianRational<Z>) -> Result<Fp2> {
        Ok(Fp2 {
            re: self.reduce_ratio(&q.re)?,
            im: self.reduce_ratio(&q.im)?,
        })
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
