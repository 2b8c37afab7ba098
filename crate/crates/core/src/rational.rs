//! Exact rational scalars.
//!
//! Every exponent, spectral point and twist in the crate is a [`Rational`].
//! The value is always kept in lowest terms with a positive denominator, so
//! structural equality, hashing and ordering agree with numeric equality.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::ParseRationalError;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));
    pub const HALF: Rational = Rational(Ratio::new_raw(1, 2));

    /// Builds `numer/denom` in lowest terms.
    ///
    /// Panics if `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(Ratio::new(numer, denom))
    }

    pub fn integer(n: i64) -> Self {
        Rational(Ratio::from_integer(n))
    }

    /// `n/2`; the exponent ladders of Speh and Steinberg modules live on this lattice.
    pub fn half(n: i64) -> Self {
        Rational::new(n, 2)
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.denom() == 1
    }

    /// True for elements of `(1/2)Z`.
    pub fn is_half_integer(&self) -> bool {
        self.denom() <= 2
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Largest integer `<= self`.
    pub fn floor(&self) -> i64 {
        *self.0.floor().numer()
    }

    /// Representative of `self` modulo 1/2 in `[0, 1/2)`.
    pub fn frac_half(&self) -> Self {
        let twice = *self + *self;
        let shift = Rational::half(twice.floor());
        *self - shift
    }

    /// `2 * self` as an integer, if it is one.
    pub fn twice_as_integer(&self) -> Option<i64> {
        let twice = *self + *self;
        twice.is_integer().then(|| twice.numer())
    }

    /// Strict membership in the open interval `]-1/2, 1/2[`.
    pub fn in_open_half_interval(&self) -> bool {
        self.abs() < Rational::HALF
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p`, `-p`, `p/q` and `-p/q` with decimal integers; `q` must be positive.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseRationalError(s.to_string());
        let parse_int = |t: &str| -> Result<i64, ParseRationalError> {
            let digits = t.strip_prefix('-').unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<i64>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Rational::integer(parse_int(s)?)),
            Some((p, q)) => {
                if q.starts_with('-') {
                    return Err(bad());
                }
                let numer = parse_int(p)?;
                let denom = parse_int(q)?;
                if denom == 0 {
                    return Err(bad());
                }
                Ok(Rational::new(numer, denom))
            }
        }
    }
}
