//! Exact integers and the binomial toolkit everything else is built on.
//!
//! [`ExactInt`] wraps an arbitrary-precision integer. Binomials follow the
//! combinatorial convention `C(n, k) = 0` for `k < 0` or `k > n`, which the
//! counting formulas downstream rely on.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
///
/// Serializes as a decimal string so values beyond 64 bits survive JSON.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactInt(BigInt);

impl ExactInt {
    pub fn zero() -> Self {
        ExactInt(BigInt::zero())
    }

    pub fn one() -> Self {
        ExactInt(BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.0.to_i64()
    }

    /// Exact quotient; `None` if `divisor` is zero or does not divide `self`.
    pub fn checked_exact_div(&self, divisor: &ExactInt) -> Option<ExactInt> {
        if divisor.is_zero() {
            return None;
        }
        let r = &self.0 % &divisor.0;
        r.is_zero().then(|| ExactInt(&self.0 / &divisor.0))
    }

    pub fn pow(&self, exp: u32) -> ExactInt {
        ExactInt(num_traits::pow(self.0.clone(), exp as usize))
    }
}

impl From<BigInt> for ExactInt {
    fn from(v: BigInt) -> Self {
        ExactInt(v)
    }
}

macro_rules! impl_from_prim {
    ($($t:ty),*) => {
        $(impl From<$t> for ExactInt {
            fn from(v: $t) -> Self {
                ExactInt(BigInt::from(v))
            }
        })*
    };
}
impl_from_prim!(i32, i64, u32, u64, usize, u128, i128);

impl fmt::Display for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for ExactInt {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.parse::<BigInt>().map(ExactInt)
    }
}

impl Serialize for ExactInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! impl_binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr for ExactInt {
            type Output = ExactInt;
            fn $m(self, rhs: ExactInt) -> ExactInt {
                ExactInt(self.0.$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a ExactInt> for ExactInt {
            type Output = ExactInt;
            fn $m(self, rhs: &'a ExactInt) -> ExactInt {
                ExactInt(self.0.$m(&rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b ExactInt> for &'a ExactInt {
            type Output = ExactInt;
            fn $m(self, rhs: &'b ExactInt) -> ExactInt {
                ExactInt((&self.0).$m(&rhs.0))
            }
        }
        impl $atr for ExactInt {
            fn $am(&mut self, rhs: ExactInt) {
                self.0.$am(rhs.0);
            }
        }
        impl<'a> $atr<&'a ExactInt> for ExactInt {
            fn $am(&mut self, rhs: &'a ExactInt) {
                self.0.$am(&rhs.0);
            }
        }
    };
}
impl_binop!(Add, add, AddAssign, add_assign);
impl_binop!(Sub, sub, SubAssign, sub_assign);
impl_binop!(Mul, mul, MulAssign, mul_assign);

impl Neg for ExactInt {
    type Output = ExactInt;
    fn neg(self) -> ExactInt {
        ExactInt(-self.0)
    }
}

impl Sum for ExactInt {
    fn sum<I: Iterator<Item = ExactInt>>(iter: I) -> ExactInt {
        iter.fold(ExactInt::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a ExactInt> for ExactInt {
    fn sum<I: Iterator<Item = &'a ExactInt>>(iter: I) -> ExactInt {
        iter.fold(ExactInt::zero(), |acc, x| acc + x)
    }
}

impl PartialEq<i64> for ExactInt {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigInt::from(*other)
    }
}

// u128 holds every C(n, k) * n for n up to this bound, so the running
// product in `choose` cannot overflow.
const SMALL_BINOMIAL_LIMIT: u64 = 120;

/// `C(n, k)` for a nonnegative `n`; zero outside `0..=n`.
pub(crate) fn choose(n: u64, k: i64) -> ExactInt {
    if k < 0 || k as u64 > n {
        return ExactInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    if n <= SMALL_BINOMIAL_LIMIT {
        let mut acc: u128 = 1;
        for i in 0..k {
            acc = acc * (n - i) as u128 / (i + 1) as u128;
        }
        return ExactInt::from(acc);
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    ExactInt(acc)
}

/// Binomial coefficient with the vanishing convention for `k` outside `[0, n]`.
pub fn binomial(n: i64, k: i64) -> Result<ExactInt> {
    if n < 0 {
        return Err(Error::NegativeBinomialTop(n));
    }
    Ok(choose(n as u64, k))
}

pub fn factorial(n: u64) -> ExactInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    ExactInt(acc)
}

/// `n! / (p_1! ... p_m! (n - sum p)!)`.
pub fn multinomial(n: u64, parts: &[u64]) -> Result<ExactInt> {
    let sum: u64 = parts.iter().sum();
    if sum > n {
        return Err(Error::MultinomialOverflow { n, sum });
    }
    let mut remaining = n;
    let mut acc = ExactInt::one();
    for &p in parts {
        acc *= choose(remaining, p as i64);
        remaining -= p;
    }
    Ok(acc)
}

/// Both sides of the Vandermonde-type convolution
///
/// `sum_{i_1..i_k} prod_j C(d_j, i_j) * C(e, i_1 + .. + i_k + l) = C(sum d + e, sum d + l)`.
///
/// The left side is evaluated by literal nested summation.
pub fn convolution_identity_sides(dbar: &[u64], e: u64, l: u64) -> Result<(ExactInt, ExactInt)> {
    if let Some(&bad) = dbar.iter().find(|&&d| d == 0) {
        return Err(Error::NonPositiveDegree(bad as i64));
    }
    let mut lhs = ExactInt::zero();
    let mut idx = vec![0u64; dbar.len()];
    loop {
        let shift: u64 = idx.iter().sum::<u64>() + l;
        let tail = choose(e, shift as i64);
        if !tail.is_zero() {
            let mut term = tail;
            for (&d, &i) in dbar.iter().zip(&idx) {
                term *= choose(d, i as i64);
            }
            lhs += term;
        }
        if !advance_odometer(&mut idx, dbar) {
            break;
        }
    }
    let total: u64 = dbar.iter().sum();
    let rhs = choose(total + e, (total + l) as i64);
    Ok((lhs, rhs))
}

/// Steps `idx` through the box `0..=bounds[t]` in lexicographic order.
/// Returns `false` once every position has wrapped.
pub(crate) fn advance_odometer(idx: &mut [u64], bounds: &[u64]) -> bool {
    for (i, b) in idx.iter_mut().zip(bounds) {
        if *i < *b {
            *i += 1;
            return true;
        }
        *i = 0;
    }
    false
}
