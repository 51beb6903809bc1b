use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::{format_gaussian, ExactInt, GaussianRational};

/// Coefficient of one basis ket: an exact Gaussian rational, or a nonzero
/// Gaussian-rational multiple of a symbolic parameter.
///
/// Parameters are global: the same name anywhere in a state denotes the same
/// indeterminate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Amplitude<Z: ExactInt> {
    Gaussian(GaussianRational<Z>),
    Param {
        name: String,
        scale: GaussianRational<Z>,
    },
}

impl<Z: ExactInt> Amplitude<Z> {
    /// Unit multiple of parameter `name`.
    pub fn param(name: impl Into<String>) -> Self {
        Amplitude::Param {
            name: name.into(),
            scale: GaussianRational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Amplitude::Gaussian(q) => q.is_zero(),
            Amplitude::Param { scale, .. } => scale.is_zero(),
        }
    }

    pub fn is_param(&self) -> bool {
        matches!(self, Amplitude::Param { .. })
    }

    pub fn param_name(&self) -> Option<&str> {
        match self {
            Amplitude::Param { name, .. } => Some(name),
            Amplitude::Gaussian(_) => None,
        }
    }

    pub fn as_gaussian(&self) -> Option<&GaussianRational<Z>> {
        match self {
            Amplitude::Gaussian(q) => Some(q),
            Amplitude::Param { .. } => None,
        }
    }

    /// The numeric factor: the value itself, or the parameter's scale.
    pub fn coefficient(&self) -> &GaussianRational<Z> {
        match self {
            Amplitude::Gaussian(q) => q,
            Amplitude::Param { scale, .. } => scale,
        }
    }

    pub fn scaled(&self, by: &GaussianRational<Z>) -> Self {
        match self {
            Amplitude::Gaussian(q) => Amplitude::Gaussian(q * by),
            Amplitude::Param { name, scale } => Amplitude::Param {
                name: name.clone(),
                scale: scale * by,
            },
        }
    }
}

impl<Z: ExactInt> From<GaussianRational<Z>> for Amplitude<Z> {
    fn from(q: GaussianRational<Z>) -> Self {
        Amplitude::Gaussian(q)
    }
}

impl<Z: ExactInt> fmt::Display for Amplitude<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Amplitude::Gaussian(q) => f.write_str(&format_gaussian(q)),
            Amplitude::Param { name, scale } => {
                if scale.is_one() {
                    f.write_str(name)
                } else if (-scale.clone()).is_one() {
                    write!(f, "-{name}")
                } else {
                    write!(f, "({})*{name}", format_gaussian(scale))
                }
            }
        }
    }
}

/// `[A-Za-z_][A-Za-z0-9_]*`, excluding the imaginary unit `i`.
pub(crate) fn is_param_name(s: &str) -> bool {
    let mut chars = s.chars();
    let first_ok = chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
    first_ok && chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && s != "i"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_gaussian;
    use num_bigint::BigInt;

    #[test]
    fn param_names() {
        assert!(is_param_name("a"));
        assert!(is_param_name("theta_2"));
        assert!(is_param_name("_x"));
        assert!(!is_param_name("i"));
        assert!(!is_param_name("2a"));
        assert!(!is_param_name(""));
        assert!(!is_param_name("a-b"));
    }

    #[test]
    fn display() {
        let a = Amplitude::<BigInt>::param("a");
        assert_eq!(a.to_string(), "a");
        assert_eq!(a.scaled(&parse_gaussian("-1").unwrap()).to_string(), "-a");
        assert_eq!(
            a.scaled(&parse_gaussian("1/2+i").unwrap()).to_string(),
            "(1/2+i)*a"
        );
        let g = Amplitude::<BigInt>::Gaussian(parse_gaussian("-3/4i").unwrap());
        assert_eq!(g.to_string(), "-3/4i");
    }
}
