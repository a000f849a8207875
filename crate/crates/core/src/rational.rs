//! Exact rationals over arbitrary-precision integers.
//!
//! Values are kept in lowest terms with a positive denominator. Integer
//! operands (denominator 1) skip normalization entirely, which keeps
//! integer-parameter recurrences as fast as plain big-integer arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: BigInt,
    denom: BigInt,
}

/// gcd of |a| and |b|.
///
/// Euclid with a remainder step; the binary algorithm in num-integer degrades
/// to one subtraction per bit when one operand is tiny, which is the common
/// case here (integer denominators, powers of two).
fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut x = a.abs();
    let mut y = b.abs();
    if x.is_one() || y.is_one() {
        return BigInt::one();
    }
    while !y.is_zero() {
        if let (Some(xs), Some(ys)) = (x.to_u64(), y.to_u64()) {
            return BigInt::from(xs.gcd(&ys));
        }
        let r = &x % &y;
        x = y;
        y = r;
    }
    x
}

impl Rational {
    /// Builds `numer / denom` in lowest terms. Returns `None` for a zero denominator.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Option<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return None;
        }
        Some(Self::normalize(numer.into(), denom))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational {
            numer: n.into(),
            denom: BigInt::one(),
        }
    }

    fn normalize(mut numer: BigInt, mut denom: BigInt) -> Self {
        debug_assert!(!denom.is_zero());
        if numer.is_zero() {
            return Self::zero();
        }
        if denom.sign() == Sign::Minus {
            numer = -numer;
            denom = -denom;
        }
        if !denom.is_one() {
            let g = gcd(&numer, &denom);
            if !g.is_one() {
                numer /= &g;
                denom /= &g;
            }
        }
        Rational { numer, denom }
    }

    pub fn numer(&self) -> &BigInt {
        &self.numer
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn is_integer(&self) -> bool {
        self.denom.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.numer.sign() == Sign::Minus
    }

    pub fn abs(&self) -> Self {
        Rational {
            numer: self.numer.abs(),
            denom: self.denom.clone(),
        }
    }

    pub fn recip(&self) -> Option<Self> {
        if self.numer.is_zero() {
            return None;
        }
        Some(Self::normalize(self.denom.clone(), self.numer.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.recip().map(|r| self * &r)
    }

    pub fn halve(&self) -> Self {
        if self.numer.is_even() {
            Rational {
                numer: &self.numer / 2u32,
                denom: self.denom.clone(),
            }
        } else {
            Rational {
                numer: self.numer.clone(),
                denom: &self.denom * 2u32,
            }
        }
    }

    /// Non-negative integer power; `0^0 = 1`.
    pub fn pow(&self, exp: u64) -> Self {
        // Lowest terms are preserved by powers.
        let e = u32::try_from(exp).expect("exponent too large");
        Rational {
            numer: num_traits::pow::Pow::pow(&self.numer, e),
            denom: num_traits::pow::Pow::pow(&self.denom, e),
        }
    }

    /// Integer power allowing negative exponents; `None` for `0^(-k)`.
    pub fn powi(&self, exp: i64) -> Option<Self> {
        if exp >= 0 {
            Some(self.pow(exp as u64))
        } else {
            self.recip().map(|r| r.pow(exp.unsigned_abs()))
        }
    }

    /// `(-1)^n` as a rational.
    pub fn sign_power(n: i64) -> Self {
        if n.rem_euclid(2) == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        if self.denom.is_one() && rhs.denom.is_one() {
            return Rational {
                numer: &self.numer + &rhs.numer,
                denom: BigInt::one(),
            };
        }
        if self.denom == rhs.denom {
            return Self::normalize(&self.numer + &rhs.numer, self.denom.clone());
        }
        Self::normalize(
            &self.numer * &rhs.denom + &rhs.numer * &self.denom,
            &self.denom * &rhs.denom,
        )
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.numer.is_zero() || rhs.numer.is_zero() {
            return Self::zero();
        }
        if self.denom.is_one() && rhs.denom.is_one() {
            return Rational {
                numer: &self.numer * &rhs.numer,
                denom: BigInt::one(),
            };
        }
        // a/b * c/d with cross cancellation keeps the result reduced.
        let g1 = gcd(&self.numer, &rhs.denom);
        let g2 = gcd(&rhs.numer, &self.denom);
        let numer = (&self.numer / &g1) * (&rhs.numer / &g2);
        let denom = (&self.denom / &g2) * (&rhs.denom / &g1);
        Rational { numer, denom }
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational {
            numer: BigInt::zero(),
            denom: BigInt::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Self::from_integer(1)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Self::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                self.$imp(rhs)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$imp(&rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$imp(rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$imp(&rhs)
            }
        }
    };
}

impl Rational {
    fn sub_impl(&self, rhs: &Self) -> Self {
        self.add_impl(&-rhs)
    }

    fn div_impl(&self, rhs: &Self) -> Self {
        self.checked_div(rhs).expect("rational division by zero")
    }
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, div_impl);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            numer: -self.numer,
            denom: self.denom,
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.denom == other.denom {
            return self.numer.cmp(&other.numer);
        }
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `"n"` or `"n/d"` with an optional leading sign on either part.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || Error::Parse {
            what: "rational",
            input: s.to_string(),
        };
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        Rational::new(n, d).ok_or_else(err)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
