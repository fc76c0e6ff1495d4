//! Truncated formal power series over exact rationals.
//!
//! A [`TruncatedSeries`] stores the coefficients of `t^0 .. t^order` as
//! arbitrary-precision rationals. All arithmetic is exact; binary operations
//! truncate the result to the minimum order of the operands and never extend
//! a series implicitly.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors from series construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("empty series")]
    EmptySeries,
    #[error("non-unit series")]
    NonUnitSeries,
    #[error("log requires unit constant term")]
    LogNonUnitConstant,
}

/// A formal power series truncated at a fixed order, with exact rational
/// coefficients. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Builds a series from the coefficients of `t^0, t^1, ...`.
    /// The order is `coeffs.len() - 1`; an empty sequence is an error.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::EmptySeries);
        }
        Ok(Self { coeffs })
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Result<Self, SeriesError> {
        Self::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// The constant series 1 of the given order.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); order + 1];
        coeffs[0] = BigRational::one();
        Self { coeffs }
    }

    /// The monomial `c * t^degree` of the given order. Requires `degree <= order`.
    pub fn monomial(c: BigRational, degree: usize, order: usize) -> Self {
        assert!(degree <= order, "monomial degree exceeds order");
        let mut coeffs = vec![BigRational::zero(); order + 1];
        coeffs[degree] = c;
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^i`; zero beyond the truncation order.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Restricts the series to a (smaller or equal) order.
    pub fn truncate(&self, order: usize) -> Self {
        let end = order.min(self.order()) + 1;
        Self { coeffs: self.coeffs[..end].to_vec() }
    }

    /// True iff this series is exactly 1 (up to its order).
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect();
        Self { coeffs }
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Multiplies every coefficient by a rational scalar.
    pub fn scale(&self, c: &BigRational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Cauchy product, truncated to the minimum order of the operands.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self { coeffs }
    }

    /// Multiplicative inverse: the unique `b` with `self * b = 1` up to the
    /// order, by the convolution recurrence `b_n = -(1/a_0) * sum a_k b_{n-k}`.
    /// Requires a nonzero constant coefficient.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::NonUnitSeries);
        }
        let n = self.order();
        let inv_a0 = a0.recip();
        let mut b = vec![BigRational::zero(); n + 1];
        b[0] = inv_a0.clone();
        for i in 1..=n {
            let mut acc = BigRational::zero();
            for k in 1..=i {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &b[i - k];
                }
            }
            b[i] = -acc * &inv_a0;
        }
        Ok(Self { coeffs: b })
    }

    /// Formal logarithm of a series with constant term 1, via the derivative
    /// recurrence `n L_n = n a_n - sum_{k=1}^{n-1} a_k (n-k) L_{n-k}`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::LogNonUnitConstant);
        }
        let n = self.order();
        let mut l = vec![BigRational::zero(); n + 1];
        for i in 1..=n {
            let mut acc = &self.coeffs[i] * BigRational::from_integer(i.into());
            for k in 1..i {
                if !self.coeffs[k].is_zero() {
                    acc -= &self.coeffs[k] * &l[i - k] * BigRational::from_integer((i - k).into());
                }
            }
            l[i] = acc / BigRational::from_integer(i.into());
        }
        Ok(Self { coeffs: l })
    }

    /// Integer power by repeated squaring; negative exponents invert first
    /// and therefore require a nonzero constant coefficient.
    pub fn int_pow(&self, e: i64) -> Result<Self, SeriesError> {
        if e == 0 {
            return Ok(Self::one(self.order()));
        }
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut result = Self::one(self.order());
        let mut power = base;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&power);
            }
            exp >>= 1;
            if exp > 0 {
                power = power.mul(&power);
            }
        }
        Ok(result)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = if first || !c.is_negative() { c.clone() } else { -c };
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn s(coeffs: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_ints(coeffs).unwrap()
    }

    #[test]
    fn from_coeffs_basic() {
        assert_eq!(s(&[1]).order(), 0);
        assert_eq!(s(&[1, 2, 2]).coeff(1), rat(2, 1));
        assert_eq!(s(&[0, 1]).coeff(1), rat(1, 1));
        assert_eq!(
            TruncatedSeries::from_coeffs(vec![]).unwrap_err(),
            SeriesError::EmptySeries
        );
    }

    #[test]
    fn mul_examples() {
        // (1+t)(1-t) = 1 - t^2
        assert_eq!(s(&[1, 1, 0]).mul(&s(&[1, -1, 0])), s(&[1, 0, -1]));
        // multiplicative identity
        assert_eq!(s(&[1, 1]).mul(&s(&[1, 0])), s(&[1, 1]));
        // hand Cauchy product
        assert_eq!(s(&[1, 2, 2]).mul(&s(&[1, -2, 2])), s(&[1, 0, 0]));
        // truncates to the shorter operand
        assert_eq!(s(&[1, 1, 1, 1]).mul(&s(&[1, 1])), s(&[1, 2]));
    }

    #[test]
    fn inverse_examples() {
        // geometric series
        assert_eq!(s(&[1, 1, 0, 0]).inverse().unwrap(), s(&[1, -1, 1, -1]));
        assert_eq!(s(&[1]).inverse().unwrap(), s(&[1]));
        // Q(t) of the 4-cycle, solved by hand from the convolution recurrence
        assert_eq!(
            s(&[1, -4, 8, -12]).inverse().unwrap(),
            s(&[1, 4, 8, 12])
        );
        assert_eq!(s(&[0, 1]).inverse().unwrap_err(), SeriesError::NonUnitSeries);
    }

    #[test]
    fn log_examples() {
        // Mercator series
        let l = s(&[1, 1, 0, 0]).log().unwrap();
        assert_eq!(l.coeffs(), &[rat(0, 1), rat(1, 1), rat(-1, 2), rat(1, 3)]);
        assert_eq!(s(&[1, 0, 0]).log().unwrap(), s(&[0, 0, 0]));
        // log((1+t)/(1-t)) = 2t + (2/3) t^3
        let q = s(&[1, 1, 0, 0]).mul(&s(&[1, -1, 0, 0]).inverse().unwrap());
        let l = q.log().unwrap();
        assert_eq!(l.coeffs(), &[rat(0, 1), rat(2, 1), rat(0, 1), rat(2, 3)]);
        assert_eq!(s(&[2, 1]).log().unwrap_err(), SeriesError::LogNonUnitConstant);
    }

    #[test]
    fn int_pow_examples() {
        assert_eq!(s(&[1, 1, 0]).int_pow(2).unwrap(), s(&[1, 2, 1]));
        // (1-t^2)^{-1} = 1 + t^2 + t^4
        assert_eq!(s(&[1, 0, -1, 0, 0]).int_pow(-1).unwrap(), s(&[1, 0, 1, 0, 1]));
        assert_eq!(s(&[1, 1, 0, 0]).int_pow(4).unwrap(), s(&[1, 4, 6, 4]));
        assert_eq!(s(&[1, 1]).int_pow(0).unwrap(), s(&[1, 0]));
        assert_eq!(s(&[0, 1]).int_pow(-2).unwrap_err(), SeriesError::NonUnitSeries);
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(s(&[1, -2, 2]).to_string(), "1 - 2*t + 2*t^2");
        assert_eq!(s(&[0, 0]).to_string(), "0");
        assert_eq!(s(&[0, 1]).to_string(), "t");
    }

    fn small_series(max_order: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec(-6i64..=6, 1..=max_order + 1)
            .prop_map(|v| TruncatedSeries::from_ints(&v).unwrap())
    }

    fn unit_series(max_order: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec(-6i64..=6, 1..=max_order).prop_map(|mut v| {
            v.insert(0, 1);
            TruncatedSeries::from_ints(&v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn mul_commutes(a in small_series(8), b in small_series(8)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn mul_associates(a in small_series(6), b in small_series(6), c in small_series(6)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn inverse_is_two_sided(a in unit_series(8)) {
            let inv = a.inverse().unwrap();
            prop_assert!(a.mul(&inv).is_one());
            prop_assert!(inv.mul(&a).is_one());
        }

        #[test]
        fn log_turns_powers_into_scaling(a in unit_series(6), k in -3i64..=3) {
            let lhs = a.int_pow(k).unwrap().log().unwrap();
            let rhs = a.log().unwrap().scale(&BigRational::from_integer(k.into()));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
