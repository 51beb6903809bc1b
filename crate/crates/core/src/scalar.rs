//! Exact scalar types: Gaussian integers and Gaussian rationals over a
//! generic integer ring.
//!
//! Everything exact in this crate is parameterised by an integer type `Z`
//! implementing [`ExactInt`]. `BigInt` is the default used by the crate-root
//! aliases; fixed-width integers (`i64`, `i128`) are supported for small
//! inputs but carry no overflow protection in release builds.

use std::fmt;

use num_complex::Complex;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// Integer ring the exact arithmetic is generic over.
pub trait ExactInt:
    Integer
    + Signed
    + Clone
    + FromPrimitive
    + ToPrimitive
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
}

impl<T> ExactInt for T where
    T: Integer
        + Signed
        + Clone
        + FromPrimitive
        + ToPrimitive
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static
{
}

/// `re + im·i` with integer parts.
pub type GaussianInt<Z> = Complex<Z>;

/// `re + im·i` with rational parts, always kept in lowest terms with a
/// positive denominator (guaranteed by `Ratio`).
pub type GaussianRational<Z> = Complex<Ratio<Z>>;

pub fn gaussian<Z: ExactInt>(re: Ratio<Z>, im: Ratio<Z>) -> GaussianRational<Z> {
    Complex::new(re, im)
}

/// Gaussian rational from a small integer real part.
pub fn gaussian_from_i64<Z: ExactInt>(re: i64) -> GaussianRational<Z> {
    Complex::new(ratio_from_i64(re), Ratio::zero())
}

/// Gaussian rational from small integer real and imaginary parts.
pub fn gaussian_from_parts<Z: ExactInt>(re: i64, im: i64) -> GaussianRational<Z> {
    Complex::new(ratio_from_i64(re), ratio_from_i64(im))
}

pub fn ratio_from_i64<Z: ExactInt>(v: i64) -> Ratio<Z> {
    Ratio::from_integer(Z::from_i64(v).expect("i64 fits in every ExactInt"))
}

/// Renders a Gaussian rational in the state-file coefficient syntax
/// (`1`, `-1/2`, `3i`, `1/2-3/4i`).
pub fn format_gaussian<Z: ExactInt>(q: &GaussianRational<Z>) -> String {
    let re_zero = q.re.is_zero();
    let im_zero = q.im.is_zero();
    match (re_zero, im_zero) {
        (_, true) => q.re.to_string(),
        (true, false) => format!("{}i", format_imag(&q.im)),
        (false, false) => {
            let sign = if q.im.is_negative() { '-' } else { '+' };
            format!("{}{}{}i", q.re, sign, format_imag(&q.im.abs()))
        }
    }
}

fn format_imag<Z: ExactInt>(im: &Ratio<Z>) -> String {
    if im.is_one() {
        String::new()
    } else if (-im.clone()).is_one() {
        "-".to_string()
    } else {
        im.to_string()
    }
}

/// Parses a decimal rational `[+-]p[/q]`.
pub fn parse_rational<Z: ExactInt>(s: &str) -> Result<Ratio<Z>, String> {
    let (negative, body) = match s.as_bytes().first() {
        Some(b'+') => (false, &s[1..]),
        Some(b'-') => (true, &s[1..]),
        _ => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let num = parse_digits::<Z>(num)?;
    let den = match den {
        Some(d) => parse_digits::<Z>(d)?,
        None => Z::one(),
    };
    if den.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    let r = Ratio::new(num, den);
    Ok(if negative { -r } else { r })
}

fn parse_digits<Z: ExactInt>(s: &str) -> Result<Z, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("expected an unsigned integer, found `{s}`"));
    }
    Z::from_str_radix(s, 10).map_err(|_| format!("integer `{s}` out of range"))
}

/// Parses a Gaussian rational with all whitespace already removed:
/// `p/q`, `-p/q`, `p/q+r/si`, `r/si`, `i`, `-i`, `3-i`.
pub fn parse_gaussian<Z: ExactInt>(s: &str) -> Result<GaussianRational<Z>, String> {
    let s = strip_parens(s);
    if s.is_empty() {
        return Err("empty coefficient".to_string());
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex::new(parse_rational(s)?, Ratio::zero()));
    };
    // Split real and imaginary parts at the last sign that is not leading.
    let split = body
        .char_indices()
        .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
        .map(|(k, _)| k)
        .next_back();
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re.is_empty() {
        Ratio::zero()
    } else {
        parse_rational(re)?
    };
    let im = match im {
        "" | "+" => Ratio::one(),
        "-" => -Ratio::one(),
        other => parse_rational(other)?,
    };
    Ok(Complex::new(re, im))
}

fn strip_parens(s: &str) -> &str {
    s.strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s)
}

/// Exact quotient in Z[i]; `den` must divide `num`.
pub(crate) fn exact_div<Z: ExactInt>(num: &GaussianInt<Z>, den: &GaussianInt<Z>) -> GaussianInt<Z> {
    let norm = den.norm_sqr();
    let prod = num * den.conj();
    let (re, re_rem) = prod.re.div_rem(&norm);
    let (im, im_rem) = prod.im.div_rem(&norm);
    debug_assert!(
        re_rem.is_zero() && im_rem.is_zero(),
        "inexact Gaussian division"
    );
    Complex::new(re, im)
}

/// Gaussian rational raised to an integer common denominator.
pub(crate) fn scale_to_integer<Z: ExactInt>(q: &GaussianRational<Z>, lcm: &Z) -> GaussianInt<Z> {
    let l = Ratio::from_integer(lcm.clone());
    Complex::new(
        (q.re.clone() * l.clone()).to_integer(),
        (q.im.clone() * l).to_integer(),
    )
}
