use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number kept in lowest terms with a
/// positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let denominator = denominator.into();
        if denominator.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Self(BigRational::new(numerator.into(), denominator)))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always strictly positive.
    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Nearest `f64`. Huge numerators and denominators are scaled before
    /// division, so this never produces `inf/inf`.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational($trait::$method(self.0, rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational($trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Division by zero panics, as for the primitive integer types.
forward_binop!(Div, div);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

/// `F_n = ₂F₁(-n, 1; 3/2; 2)` exactly.
///
/// The series terminates after `n+1` terms, with consecutive terms in the
/// ratio `4(r-n)/(2r+3)`. At `z = 2` the terms alternate and grow
/// exponentially before the final sum lands at `O(1)`, so the sum is done
/// in rationals and rounded once at the end.
pub fn gauss_f(n: u32) -> ExactRational {
    let n = i64::from(n);
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for r in 0..n {
        term *= BigRational::new(BigInt::from(4 * (r - n)), BigInt::from(2 * r + 3));
        sum += &term;
    }
    ExactRational(sum)
}

/// `F_n` by the contiguous relation `(2m+3)F_{m+1} = 2m·F_{m-1} - F_m`,
/// started from `F_0 = 1`, `F_1 = -1/3`.
///
/// An independent route to the same numbers as [`gauss_f`].
pub fn gauss_f_recurrence(n: u32) -> ExactRational {
    let mut prev = BigRational::one();
    if n == 0 {
        return ExactRational(prev);
    }
    let mut cur = BigRational::new(BigInt::from(-1), BigInt::from(3));
    for m in 1..i64::from(n) {
        let next = (&prev * BigInt::from(2 * m) - &cur) / BigInt::from(2 * m + 3);
        prev = cur;
        cur = next;
    }
    ExactRational(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(gauss_f(0), ExactRational::one());
        assert_eq!(gauss_f(1), q(-1, 3));
        assert_eq!(gauss_f(2), q(7, 15));
        // 1 - 4 + 32/5 - 128/35
        assert_eq!(gauss_f(3), q(-9, 35));
    }

    #[test]
    fn summation_agrees_with_recurrence() {
        for n in 0..=200 {
            assert_eq!(gauss_f(n), gauss_f_recurrence(n), "n = {n}");
        }
    }

    #[test]
    fn lowest_terms_with_positive_denominator() {
        for n in [0, 1, 5, 17, 64, 150] {
            let f = gauss_f(n);
            assert!(f.denominator() > &BigInt::zero());
            assert!(f.numerator().gcd(f.denominator()).is_one());
        }
        let r = &q(6, -4) * &q(2, 3);
        assert_eq!(r, q(-1, 1));
        assert!(r.denominator().is_one());
    }

    #[test]
    fn large_index_rounds_to_finite_value() {
        let f = gauss_f(200).to_f64();
        assert!(f.is_finite() && f.abs() < 1.0);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(ExactRational::new(1, 0).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(gauss_f(2).to_string(), "7/15");
        assert_eq!(gauss_f(0).to_string(), "1");
    }
}
