//! Exact rational scalar used by all geometric computations.
//!
//! Wraps an arbitrary-precision `BigRational` and fixes the textual form
//! used by the JSON schemas: `"p/q"` or `"p"` (plain JSON integers are
//! accepted on input).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }

    /// `numer / denom`; panics on a zero denominator.
    pub fn from_pair(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Rat(BigRational::from_integer(v))
    }

    /// Exact conversion: every finite `f64` is a dyadic rational.
    pub fn from_f64_exact(v: f64) -> Option<Self> {
        BigRational::from_f64(v).map(Rat)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact integer value if the rational is an integer fitting in i64.
    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            i64::try_from(self.0.numer()).ok()
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Rat(self.0.recip())
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Round to the nearest multiple of `10^-digits` (ties away from zero).
    /// Keeps denominators small after long exact series evaluations.
    pub fn round_decimal(&self, digits: u32) -> Self {
        let scale = BigInt::from(10u32).pow(digits);
        let scaled = &self.0 * BigRational::from_integer(scale.clone());
        let rounded = scaled.round().to_integer();
        Rat(BigRational::new(rounded, scale))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Parse error for the `"p/q"` textual form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError(pub String);

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal: {}", self.0)
    }
}

impl std::error::Error for ParseRatError {}

impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (numer, denom) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let n: BigInt = numer
            .parse()
            .map_err(|_| ParseRatError(s.to_string()))?;
        let d: BigInt = match denom {
            Some(d) => d.parse().map_err(|_| ParseRatError(s.to_string()))?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(ParseRatError(s.to_string()));
        }
        Ok(Rat(BigRational::new(n, d)))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        match value {
            serde_json::Value::String(s) => s.parse().map_err(DeError::custom),
            serde_json::Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Ok(Rat::from_int(i))
                } else {
                    Err(DeError::custom(
                        "rational fields take integers or \"p/q\" strings",
                    ))
                }
            }
            other => Err(DeError::custom(format!(
                "expected integer or \"p/q\" string, got {other}"
            ))),
        }
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat::from_int(v)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn div(self, rhs: &'a Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Rat {
    fn sub_assign(&mut self, rhs: Rat) {
        self.0 -= rhs.0;
    }
}

impl PartialEq<i64> for Rat {
    fn eq(&self, other: &i64) -> bool {
        *self == Rat::from_int(*other)
    }
}

impl PartialOrd<i64> for Rat {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.partial_cmp(&Rat::from_int(*other))
    }
}

/// Natural logarithm of a positive rational, accurate to `digits` decimal
/// digits after the point. Range-reduces by powers of two and sums the
/// atanh series exactly, rounding intermediate partial sums to keep
/// denominators bounded.
pub fn ln_approx(value: &Rat, digits: u32) -> Rat {
    assert!(value.is_positive(), "ln of a non-positive rational");
    let work = digits + 8;
    let two = Rat::from_int(2);
    let lo = Rat::from_pair(2, 3);
    let hi = Rat::from_pair(4, 3);

    // value = m * 2^k with m in [2/3, 4/3]
    let mut m = value.clone();
    let mut k: i64 = 0;
    while m > hi {
        m = m / two.clone();
        k += 1;
    }
    while m < lo {
        m = m * two.clone();
        k -= 1;
    }

    // ln m = 2 atanh((m-1)/(m+1)), |x| <= 1/5 after reduction
    let x = (m.clone() - Rat::one()) / (m + Rat::one());
    let x2 = (&x * &x).round_decimal(work);
    let mut term = x.clone();
    let mut sum = Rat::zero();
    let mut odd: i64 = 1;
    let tiny = Rat(BigRational::new(
        BigInt::one(),
        BigInt::from(10u32).pow(work),
    ));
    while term.abs() > tiny {
        sum += (&term / &Rat::from_int(odd)).round_decimal(work);
        term = (&term * &x2).round_decimal(work);
        odd += 2;
    }
    let ln_m = Rat::from_int(2) * sum;

    let ln2 = ln2_constant(work);
    (ln_m + Rat::from_int(k) * ln2).round_decimal(digits)
}

/// ln 2 to `digits` decimal digits, from ln 2 = 2 atanh(1/3).
fn ln2_constant(digits: u32) -> Rat {
    let work = digits + 8;
    let x = Rat::from_pair(1, 3);
    let x2 = Rat::from_pair(1, 9);
    let mut term = x;
    let mut sum = Rat::zero();
    let mut odd: i64 = 1;
    let tiny = Rat(BigRational::new(
        BigInt::one(),
        BigInt::from(10u32).pow(work),
    ));
    while term > tiny {
        sum += (&term / &Rat::from_int(odd)).round_decimal(work);
        term = (&term * &x2).round_decimal(work);
        odd += 2;
    }
    (Rat::from_int(2) * sum).round_decimal(digits)
}
