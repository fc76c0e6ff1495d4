//! Numeric Newton's identities and elementary number theory.
//!
//! [`power_sum`] evaluates the Newton polynomial `p_d` — the d-th power sum
//! expressed in elementary symmetric values — without ever expanding it
//! symbolically. [`moebius`], [`divisors`] and [`binomial`] supply the
//! arithmetic used by the Möbius-inversion formulas.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymFunError {
    #[error("insufficient elementary values")]
    InsufficientElementaryValues,
    #[error("undefined")]
    MoebiusUndefined,
}

/// Elementary symmetric values `e_1, e_2, ..., e_K`, indexed from 1
/// (`e_0` is implicitly 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementarySeq {
    values: Vec<BigRational>,
}

impl ElementarySeq {
    pub fn new(values: Vec<BigRational>) -> Self {
        Self { values }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `e_i` for `1 <= i <= len`.
    pub fn get(&self, i: usize) -> &BigRational {
        &self.values[i - 1]
    }
}

/// Power sums `p_1, ..., p_k` of the roots underlying `e`, via the Newton
/// recurrence `p_k = sum_{j=1}^{k-1} (-1)^{j-1} e_j p_{k-j} + (-1)^{k-1} k e_k`.
pub fn power_sums_upto(e: &ElementarySeq, k: usize) -> Result<Vec<BigRational>, SymFunError> {
    if k > e.len() {
        return Err(SymFunError::InsufficientElementaryValues);
    }
    let mut p: Vec<BigRational> = Vec::with_capacity(k);
    for d in 1..=k {
        let mut acc = BigRational::zero();
        let mut sign = BigRational::one();
        for j in 1..d {
            if !e.get(j).is_zero() {
                acc += &sign * e.get(j) * &p[d - j - 1];
            }
            sign = -sign;
        }
        acc += sign * e.get(d) * BigRational::from_integer(d.into());
        p.push(acc);
    }
    Ok(p)
}

/// The d-th power sum evaluated at the elementary values `e`; errors when
/// fewer than `d` elementary values are available.
pub fn power_sum(e: &ElementarySeq, d: usize) -> Result<BigRational, SymFunError> {
    assert!(d >= 1, "power_sum index must be positive");
    Ok(power_sums_upto(e, d)?.pop().expect("nonempty by construction"))
}

/// Möbius function by trial-division factorization: `(-1)^k` on squarefree
/// `n` with `k` prime factors, `0` otherwise. `n = 0` is undefined.
pub fn moebius(n: u64) -> Result<i32, SymFunError> {
    if n == 0 {
        return Err(SymFunError::MoebiusUndefined);
    }
    let mut n = n;
    let mut k = 0;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return Ok(0);
            }
            k += 1;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        k += 1;
    }
    Ok(if k % 2 == 0 { 1 } else { -1 })
}

/// All divisors of `n >= 1` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors of 0 are not defined");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Binomial coefficient `C(n, k)` for non-negative `n`, with `0` for `k < 0`
/// or `k > n`; exact at any size.
pub fn binomial(n: &BigInt, k: i64) -> BigInt {
    assert!(!n.is_negative(), "binomial requires non-negative n");
    if k < 0 || BigInt::from(k) > *n {
        return BigInt::zero();
    }
    let mut c = BigInt::one();
    for j in 1..=k {
        c = c * (n - BigInt::from(k - j)) / BigInt::from(j);
    }
    c
}

/// `C(n, k)` for machine-sized arguments.
pub fn binomial_u64(n: u64, k: i64) -> BigInt {
    binomial(&BigInt::from(n), k)
}
