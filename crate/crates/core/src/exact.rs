//! Exact scalars: arbitrary-precision rationals and the one-sided
//! infinitesimal extension `a + b·ε`.
//!
//! Shift parameters are often needed "just below" or "just above" a
//! rational value. Rather than picking a small concrete offset, the
//! offset is carried symbolically: an [`EpsRational`] is a pair
//! `(base, eps_coeff)` ordered lexicographically, which is exactly the
//! order of `base + eps_coeff·ε` for a positive infinitesimal `ε`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::Error;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Build a rational from a small numerator and denominator.
///
/// Panics if `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Build an integral rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parse `"p"` or `"p/q"` into a rational.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p, q),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// `⌊x⌋` for a plain rational.
pub fn floor_rational(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// `⌈x⌉` for a plain rational.
pub fn ceil_rational(x: &Rational) -> BigInt {
    x.numer().div_ceil(x.denom())
}

/// The value `base + eps_coeff·ε` with `ε` a positive infinitesimal.
///
/// Two values are equal iff both components agree, so a value with a
/// nonzero ε-coefficient never equals a plain rational. Products of two
/// `EpsRational`s are not provided; only integer scaling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EpsRational {
    base: Rational,
    eps_coeff: i64,
}

impl EpsRational {
    pub fn new(base: Rational, eps_coeff: i64) -> Self {
        EpsRational { base, eps_coeff }
    }

    /// A plain rational, with no infinitesimal part.
    pub fn exact(base: Rational) -> Self {
        EpsRational { base, eps_coeff: 0 }
    }

    /// `base - ε`.
    pub fn below(base: Rational) -> Self {
        EpsRational {
            base,
            eps_coeff: -1,
        }
    }

    /// `base + ε`.
    pub fn above(base: Rational) -> Self {
        EpsRational { base, eps_coeff: 1 }
    }

    pub fn base(&self) -> &Rational {
        &self.base
    }

    pub fn eps_coeff(&self) -> i64 {
        self.eps_coeff
    }

    /// True when the infinitesimal part vanishes.
    pub fn is_exact(&self) -> bool {
        self.eps_coeff == 0
    }

    /// True when the value is an integer (which requires `eps_coeff == 0`).
    pub fn is_integer(&self) -> bool {
        self.is_exact() && self.base.is_integer()
    }

    /// Floor of the real number `base + eps_coeff·ε`.
    pub fn floor_int(&self) -> BigInt {
        let f = floor_rational(&self.base);
        if self.base.is_integer() && self.eps_coeff < 0 {
            f - 1
        } else {
            f
        }
    }

    /// Ceiling of the real number `base + eps_coeff·ε`.
    pub fn ceil_int(&self) -> BigInt {
        let c = ceil_rational(&self.base);
        if self.base.is_integer() && self.eps_coeff > 0 {
            c + 1
        } else {
            c
        }
    }

    /// Compare against a plain integer.
    pub fn cmp_int(&self, value: &BigInt) -> Ordering {
        let lhs = Rational::from_integer(value.clone());
        self.base.cmp(&lhs).then_with(|| self.eps_coeff.cmp(&0))
    }

    /// Scale by an integer. Both components scale.
    pub fn scale(&self, k: i64) -> Self {
        EpsRational {
            base: &self.base * BigInt::from(k),
            eps_coeff: self.eps_coeff * k,
        }
    }
}

impl From<Rational> for EpsRational {
    fn from(base: Rational) -> Self {
        EpsRational::exact(base)
    }
}

impl From<i64> for EpsRational {
    fn from(value: i64) -> Self {
        EpsRational::exact(int(value))
    }
}

impl Ord for EpsRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.base
            .cmp(&other.base)
            .then_with(|| self.eps_coeff.cmp(&other.eps_coeff))
    }
}

impl PartialOrd for EpsRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &EpsRational {
    type Output = EpsRational;

    fn add(self, rhs: &EpsRational) -> EpsRational {
        EpsRational {
            base: &self.base + &rhs.base,
            eps_coeff: self.eps_coeff + rhs.eps_coeff,
        }
    }
}

impl Add for EpsRational {
    type Output = EpsRational;

    fn add(self, rhs: EpsRational) -> EpsRational {
        &self + &rhs
    }
}

impl Sub for &EpsRational {
    type Output = EpsRational;

    fn sub(self, rhs: &EpsRational) -> EpsRational {
        EpsRational {
            base: &self.base - &rhs.base,
            eps_coeff: self.eps_coeff - rhs.eps_coeff,
        }
    }
}

impl Sub for EpsRational {
    type Output = EpsRational;

    fn sub(self, rhs: EpsRational) -> EpsRational {
        &self - &rhs
    }
}

impl Add<&Rational> for &EpsRational {
    type Output = EpsRational;

    fn add(self, rhs: &Rational) -> EpsRational {
        EpsRational {
            base: &self.base + rhs,
            eps_coeff: self.eps_coeff,
        }
    }
}

impl Sub<&Rational> for &EpsRational {
    type Output = EpsRational;

    fn sub(self, rhs: &Rational) -> EpsRational {
        EpsRational {
            base: &self.base - rhs,
            eps_coeff: self.eps_coeff,
        }
    }
}

impl Mul<i64> for &EpsRational {
    type Output = EpsRational;

    fn mul(self, k: i64) -> EpsRational {
        self.scale(k)
    }
}

impl Neg for &EpsRational {
    type Output = EpsRational;

    fn neg(self) -> EpsRational {
        EpsRational {
            base: -&self.base,
            eps_coeff: -self.eps_coeff,
        }
    }
}

/// Prints `p/q`, `p/q+eps`, `p/q-eps`; integral bases collapse to `p`.
/// Coefficients other than ±1 are written `+2eps`, `-3eps`.
impl fmt::Display for EpsRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        match self.eps_coeff {
            0 => Ok(()),
            1 => f.write_str("+eps"),
            -1 => f.write_str("-eps"),
            c if c > 0 => write!(f, "+{c}eps"),
            c => write!(f, "{c}eps"),
        }
    }
}

impl FromStr for EpsRational {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("not an eps-rational: {text:?}"));
        let Some(head) = text.strip_suffix("eps") else {
            return Ok(EpsRational::exact(parse_rational(text)?));
        };
        // The sign separating base from the eps term is the last '+'/'-'
        // that is not the leading sign of the base.
        let split = head
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(bad)?;
        let (base, coeff) = head.split_at(split);
        let base = parse_rational(base)?;
        let eps_coeff = match coeff {
            "+" => 1,
            "-" => -1,
            c => {
                let digits = &c[1..];
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                c.parse::<i64>().map_err(|_| bad())?
            }
        };
        Ok(EpsRational { base, eps_coeff })
    }
}
