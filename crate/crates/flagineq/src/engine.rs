//! The inequality engine: alpha sequences, the face-ring series `D(t)` and
//! its reciprocal `Q(t)`, generator dimensions `v_N` extracted by three
//! independent routes, and the inequality family itself.
//!
//! The three routes are deliberately kept algorithmically disjoint:
//!
//! - [`v_by_theorem`]: Möbius-weighted Newton power sums of the alpha values,
//! - [`v_by_lemma`]: the same inversion applied to the coefficients of `Q`,
//! - [`v_by_peeling`]: factor-by-factor division of `Q` as an infinite
//!   product `prod (1 - (-t)^i)^{(-1)^{i+1} v_i}`.
//!
//! Exact agreement of all three on every input is asserted by the test
//! suite; a disagreement would mean an implementation bug.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::fvector::FVector;
use crate::series::{SeriesError, TruncatedSeries};
use crate::symfun::{binomial, divisors, moebius, power_sums_upto, ElementarySeq, SymFunError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    SymFun(#[from] SymFunError),
    #[error("series must have constant term 1")]
    NonMonicSeries,
    #[error("series order {order} is too small for N = {n}")]
    OrderTooSmall { order: usize, n: usize },
    #[error("non-integral generator dimension at degree {degree}")]
    NonIntegralGenerator { degree: usize, value: BigRational },
}

/// The weights `alpha_n = sum_i f_i C(n-1, i)` entering the main inequality,
/// stored for `n = 1..=K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaSeq {
    values: Vec<BigInt>,
}

impl AlphaSeq {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `alpha_n` for `1 <= n <= len`.
    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n - 1]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Generator dimensions `v_1..v_K` with per-entry integrality flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VSequence {
    values: Vec<BigRational>,
    integral: Vec<bool>,
}

impl VSequence {
    pub fn new(values: Vec<BigRational>) -> Self {
        let integral = values.iter().map(BigRational::is_integer).collect();
        Self { values, integral }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `v_n` for `1 <= n <= len`.
    pub fn get(&self, n: usize) -> &BigRational {
        &self.values[n - 1]
    }

    pub fn is_integral(&self, n: usize) -> bool {
        self.integral[n - 1]
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }
}

/// One row of an inequality report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityEntry {
    pub n: usize,
    /// The integer left-hand side of the inequality; `v = lhs / n`.
    pub lhs: BigInt,
    pub v: BigRational,
    pub v_integral: bool,
    pub holds: bool,
}

/// The verdicts for `N = 1..=max_n` on one f-vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityReport {
    pub fvector: FVector,
    pub alpha: AlphaSeq,
    pub max_n: usize,
    pub entries: Vec<InequalityEntry>,
    pub all_hold: bool,
    pub routes_agree: bool,
}

fn sign(k: usize) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `alpha_n = sum_{i=0}^{n-1} f_i C(n-1, i)` for `n = 1..=k`; entries of `f`
/// beyond its length contribute nothing.
pub fn alpha_sequence(f: &FVector, k: usize) -> AlphaSeq {
    assert!(k >= 1, "alpha sequence needs k >= 1");
    let mut values = Vec::with_capacity(k);
    // row holds C(n-1, i) for the current n, grown one Pascal step per turn
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for _n in 1..=k {
        let mut alpha = BigInt::zero();
        for (i, c) in row.iter().enumerate().take(f.len()) {
            alpha += &f.counts()[i] * c;
        }
        values.push(alpha);
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for i in 1..row.len() {
            next.push(&row[i - 1] + &row[i]);
        }
        next.push(BigInt::one());
        row = next;
    }
    AlphaSeq { values }
}

/// `D(t) = 1 + sum_{n>=1} alpha_n (-t)^n`, truncated at the alpha length.
pub fn dseries_from_alpha(alpha: &AlphaSeq) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(alpha.len() + 1);
    coeffs.push(BigRational::one());
    for (idx, a) in alpha.values().iter().enumerate() {
        coeffs.push(BigRational::from_integer(sign(idx + 1) * a));
    }
    TruncatedSeries::from_coeffs(coeffs).expect("nonempty by construction")
}

/// The same series computed by the independent route
/// `1 + sum_i (-1)^{i+1} f_i t^{i+1} / (1+t)^{i+1}`, entirely in series
/// arithmetic; used as a cross-check oracle for [`dseries_from_alpha`].
pub fn dseries_from_f_direct(f: &FVector, order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(order);
    if order == 0 {
        return acc;
    }
    let one_plus_t = TruncatedSeries::monomial(BigRational::one(), 0, order)
        .add(&TruncatedSeries::monomial(BigRational::one(), 1, order));
    for i in 0..f.len() {
        if i + 1 > order {
            break;
        }
        let c = BigRational::from_integer(sign(i + 1) * f.get(i));
        let term = TruncatedSeries::monomial(c, i + 1, order)
            .mul(&one_plus_t.int_pow(-((i + 1) as i64)).expect("1+t is a unit"));
        acc = acc.add(&term);
    }
    acc
}

/// Shared Möbius-weighted sum `sum_{d|n} mu(n/d) w_d p_d`.
fn moebius_sum(p: &[BigRational], n: usize, weight: impl Fn(usize) -> BigInt) -> BigRational {
    let mut acc = BigRational::zero();
    for d in divisors(n as u64) {
        let d = d as usize;
        let mu = moebius(n as u64 / d as u64).expect("positive quotient");
        if mu == 0 {
            continue;
        }
        acc += BigRational::from_integer(BigInt::from(mu) * weight(d)) * &p[d - 1];
    }
    acc
}

fn alpha_power_sums(alpha: &AlphaSeq, upto: usize) -> Result<Vec<BigRational>, EngineError> {
    let e = ElementarySeq::new(
        alpha.values().iter().map(|a| BigRational::from_integer(a.clone())).collect(),
    );
    Ok(power_sums_upto(&e, upto)?)
}

/// Theorem-route verdict from precomputed power sums of the alpha values.
fn v_theorem_at(p: &[BigRational], n: usize) -> (BigInt, BigRational) {
    let total = moebius_sum(p, n, sign) * BigRational::from_integer(sign(n));
    debug_assert!(total.is_integer(), "theorem lhs must be an integer");
    let lhs = total.to_integer();
    let v = BigRational::new(lhs.clone(), BigInt::from(n));
    (lhs, v)
}

/// Lemma-route verdict from precomputed power sums of `Q`'s coefficients.
fn v_lemma_at(p: &[BigRational], n: usize) -> BigRational {
    moebius_sum(p, n, |_| BigInt::one()) * BigRational::new(sign(n + 1), BigInt::from(n))
}

/// The left side of the main inequality,
/// `lhs = (-1)^N sum_{d|N} mu(N/d) (-1)^d p_d(alpha)`, always an integer,
/// together with `v_N = lhs / N`.
pub fn v_by_theorem(alpha: &AlphaSeq, n: usize) -> Result<(BigInt, BigRational), EngineError> {
    assert!(n >= 1, "N must be positive");
    let p = alpha_power_sums(alpha, n)?;
    Ok(v_theorem_at(&p, n))
}

fn q_power_sums(q: &TruncatedSeries, upto: usize) -> Result<Vec<BigRational>, EngineError> {
    if !q.coeff(0).is_one() {
        return Err(EngineError::NonMonicSeries);
    }
    if upto > q.order() {
        return Err(EngineError::OrderTooSmall { order: q.order(), n: upto });
    }
    let e = ElementarySeq::new((1..=upto).map(|i| q.coeff(i)).collect());
    Ok(power_sums_upto(&e, upto)?)
}

/// `v_N = ((-1)^{N+1} / N) sum_{d|N} mu(N/d) p_d(s)` where `s` are the
/// coefficients of `Q`; requires constant term 1 and `N <= order`.
pub fn v_by_lemma(q: &TruncatedSeries, n: usize) -> Result<BigRational, EngineError> {
    assert!(n >= 1, "N must be positive");
    let p = q_power_sums(q, n)?;
    Ok(v_lemma_at(&p, n))
}

/// `(1 - (-t)^i)^e` by the generalized binomial expansion; exact for any
/// integer exponent, and sparse (supported on multiples of `i`).
fn factor_power(i: usize, e: &BigInt, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![BigRational::zero(); order + 1];
    let mut c = BigInt::one();
    let mut j = 0usize;
    loop {
        let degree = i * j;
        if degree > order {
            break;
        }
        // sign of (-1)^{j(i+1)}
        let signed = if j % 2 == 1 && i % 2 == 0 { -c.clone() } else { c.clone() };
        coeffs[degree] = BigRational::from_integer(signed);
        j += 1;
        if i * j > order {
            break;
        }
        // C(e, j) = C(e, j-1) * (e - j + 1) / j, exact at every step
        let next = &c * (e - BigInt::from(j as i64 - 1));
        debug_assert!((&next % BigInt::from(j as u64)).is_zero());
        c = next / BigInt::from(j as u64);
    }
    TruncatedSeries::from_coeffs(coeffs).expect("nonempty by construction")
}

/// Recovers the full `v`-sequence of a series with constant term 1 by
/// peeling the product `prod (1 - (-t)^i)^{(-1)^{i+1} v_i}` one factor at a
/// time: the residual's coefficient at `t^i` is `v_i` because the factor
/// normalizes to `1 + v_i t^i + O(t^{2i})`. A non-integral coefficient stops
/// the peel; that outcome is itself the diagnostic, since the product form
/// only defines integer exponents.
pub fn v_by_peeling(q: &TruncatedSeries) -> Result<VSequence, EngineError> {
    if !q.coeff(0).is_one() {
        return Err(EngineError::NonMonicSeries);
    }
    let order = q.order();
    let mut residual = q.clone();
    let mut values = Vec::with_capacity(order);
    for i in 1..=order {
        let v = residual.coeff(i);
        if !v.is_integer() {
            return Err(EngineError::NonIntegralGenerator { degree: i, value: v });
        }
        if !v.is_zero() {
            // divide out (1 - (-t)^i)^{(-1)^{i+1} v_i}; the sparse factor
            // goes first so the zero-skip in `mul` pays off
            let exponent = -(sign(i + 1) * v.to_integer());
            residual = factor_power(i, &exponent, order).mul(&residual);
        }
        debug_assert!((1..=i).all(|j| residual.coeff(j).is_zero()));
        values.push(v);
    }
    debug_assert!(residual.is_one());
    Ok(VSequence::new(values))
}

/// Default series order for a given `max_n`.
pub fn default_order(max_n: usize) -> usize {
    max_n.max(16)
}

/// Runs the whole pipeline on an f-vector: alpha, `D`, `Q = D^{-1}`, all
/// three `v` routes for `N = 1..=max_n`, and the verdicts. Arbitrary
/// f-vectors are accepted; a violated inequality certifies that no flag
/// complex has this f-vector.
pub fn check_inequalities(f: &FVector, max_n: usize) -> InequalityReport {
    check_inequalities_with_order(f, max_n, default_order(max_n))
}

pub fn check_inequalities_with_order(
    f: &FVector,
    max_n: usize,
    order: usize,
) -> InequalityReport {
    assert!(max_n >= 1, "max_n must be positive");
    assert!(order >= max_n, "series order must cover max_n");
    let alpha = alpha_sequence(f, order);
    let d = dseries_from_alpha(&alpha);
    let q = d.inverse().expect("D(t) has constant term 1");
    // v_1..v_max_n only depend on Q through order max_n
    let peeled = v_by_peeling(&q.truncate(max_n))
        .expect("peeling an integer f-vector cannot hit a non-integral dimension");
    let p_alpha = alpha_power_sums(&alpha, max_n).expect("alpha covers max_n");
    let p_q = q_power_sums(&q, max_n).expect("order covers max_n");

    let mut entries = Vec::with_capacity(max_n);
    let mut all_hold = true;
    let mut routes_agree = true;
    for n in 1..=max_n {
        let (lhs, v) = v_theorem_at(&p_alpha, n);
        let by_lemma = v_lemma_at(&p_q, n);
        routes_agree &= v == by_lemma && &v == peeled.get(n);
        let holds = !lhs.is_negative();
        all_hold &= holds;
        entries.push(InequalityEntry {
            n,
            v_integral: v.is_integer(),
            holds,
            lhs,
            v,
        });
    }
    InequalityReport {
        fvector: f.clone(),
        alpha,
        max_n,
        entries,
        all_hold,
        routes_agree,
    }
}

/// The displayed closed forms for small `N`, scaled to equal the integer
/// left-hand side exactly: `N=1`: `f_0`; `N=2`: `2 (C(f_0,2) - f_1)`;
/// `N=3`: `3 (f_2 - C(f_0,3) + (f_0 - 2)(C(f_0,2) - f_1))`.
pub fn closed_form_small_n(f: &FVector, n: usize) -> BigInt {
    let f0 = f.get(0);
    match n {
        1 => f0,
        2 => BigInt::from(2) * (binomial(&f0, 2) - f.get(1)),
        3 => {
            let missing_edges = binomial(&f0, 2) - f.get(1);
            BigInt::from(3)
                * (f.get(2) - binomial(&f0, 3) + (f0 - BigInt::from(2)) * missing_edges)
        }
        _ => panic!("closed forms are only displayed for N in 1..=3"),
    }
}

/// Relabels generator dimensions as homotopy-group ranks per the product
/// `prod (1+t^{2r-1})^{pi_2r} / (1-t^{2r})^{pi_{2r+1}}`: `pi_{n+1} = v_n`.
/// Annotational output; the degree-2 entry is a formal relabeling only,
/// and no claim is made about the actual second homotopy group.
pub fn homotopy_ranks(v: &VSequence) -> Vec<(usize, BigRational)> {
    (1..=v.len()).map(|n| (n + 1, v.get(n).clone())).collect()
}

/// Everything the series surface reports for one f-vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesAnalysis {
    pub dseries: TruncatedSeries,
    pub qseries: TruncatedSeries,
    pub v: VSequence,
    pub routes_agree: bool,
}

/// Computes `D`, `Q`, and the `v`-sequence for an f-vector, with the series
/// identity and all three `v` routes cross-checked.
pub fn series_analysis(f: &FVector, order: usize) -> SeriesAnalysis {
    assert!(order >= 1, "order must be positive");
    let alpha = alpha_sequence(f, order);
    let dseries = dseries_from_alpha(&alpha);
    let direct = dseries_from_f_direct(f, order);
    let qseries = dseries.inverse().expect("D(t) has constant term 1");
    let v = v_by_peeling(&qseries)
        .expect("peeling an integer f-vector cannot hit a non-integral dimension");
    let p_alpha = alpha_power_sums(&alpha, order).expect("alpha covers order");
    let p_q = q_power_sums(&qseries, order).expect("order covers itself");
    let mut routes_agree = dseries == direct;
    for n in 1..=order {
        let (_, by_theorem) = v_theorem_at(&p_alpha, n);
        let by_lemma = v_lemma_at(&p_q, n);
        routes_agree &= by_theorem == by_lemma && &by_lemma == v.get(n);
    }
    SeriesAnalysis { dseries, qseries, v, routes_agree }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fv(counts: &[u64]) -> FVector {
        FVector::from_u64s(counts)
    }

    fn rational(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_sequence(&fv(&[4, 4]), 4).values(), &ints(&[4, 8, 12, 16])[..]);
        assert_eq!(alpha_sequence(&fv(&[3, 3, 1]), 3).values(), &ints(&[3, 6, 10])[..]);
        // a bare vertex set keeps alpha constant
        assert_eq!(alpha_sequence(&fv(&[7]), 5).values(), &ints(&[7, 7, 7, 7, 7])[..]);
        // empty f-vector: all alpha vanish
        assert_eq!(alpha_sequence(&FVector::empty(), 3).values(), &ints(&[0, 0, 0])[..]);
    }

    #[test]
    fn alpha_is_positive_for_nonempty_input() {
        for counts in [&[1u64][..], &[5, 3], &[4, 6, 4, 1]] {
            let alpha = alpha_sequence(&fv(counts), 12);
            assert!(alpha.values().iter().all(|a| a > &BigInt::zero()));
            assert_eq!(alpha.get(1), &fv(counts).get(0));
        }
    }

    #[test]
    fn dseries_examples() {
        assert_eq!(
            dseries_from_alpha(&alpha_sequence(&fv(&[2]), 3)),
            TruncatedSeries::from_ints(&[1, -2, 2, -2]).unwrap()
        );
        assert_eq!(
            dseries_from_alpha(&alpha_sequence(&fv(&[4, 4]), 4)),
            TruncatedSeries::from_ints(&[1, -4, 8, -12, 16]).unwrap()
        );
        assert_eq!(
            dseries_from_alpha(&alpha_sequence(&FVector::empty(), 4)),
            TruncatedSeries::from_ints(&[1, 0, 0, 0, 0]).unwrap()
        );
    }

    #[test]
    fn dseries_direct_route_agrees() {
        assert_eq!(
            dseries_from_f_direct(&fv(&[2]), 3),
            TruncatedSeries::from_ints(&[1, -2, 2, -2]).unwrap()
        );
        assert_eq!(dseries_from_f_direct(&FVector::empty(), 4), TruncatedSeries::one(4));
        for counts in [&[3u64, 3, 1][..], &[4, 4], &[5, 10, 10, 5, 1], &[9, 2]] {
            let f = fv(counts);
            let via_alpha = dseries_from_alpha(&alpha_sequence(&f, 16));
            assert_eq!(via_alpha, dseries_from_f_direct(&f, 16), "f = {f}");
        }
    }

    #[test]
    fn v_by_theorem_examples() {
        let alpha = alpha_sequence(&fv(&[2]), 4);
        assert_eq!(v_by_theorem(&alpha, 2).unwrap(), (BigInt::from(2), rational(1)));
        let alpha = alpha_sequence(&fv(&[4, 4]), 4);
        assert_eq!(v_by_theorem(&alpha, 2).unwrap(), (BigInt::from(4), rational(2)));
        // N = 1 always returns f_0
        for counts in [&[3u64, 3][..], &[6, 15, 20], &[1]] {
            let alpha = alpha_sequence(&fv(counts), 2);
            assert_eq!(v_by_theorem(&alpha, 1).unwrap().0, fv(counts).get(0));
        }
        // insufficient alpha length
        let alpha = alpha_sequence(&fv(&[2]), 2);
        assert!(v_by_theorem(&alpha, 3).is_err());
    }

    #[test]
    fn v_by_lemma_examples() {
        // Q = (1+t)/(1-t): s = (2,2,2,...), v_3 = 0
        let q = TruncatedSeries::from_ints(&[1, 2, 2, 2, 2]).unwrap();
        assert_eq!(v_by_lemma(&q, 3).unwrap(), rational(0));
        assert_eq!(v_by_lemma(&q, 1).unwrap(), rational(2));
        assert_eq!(v_by_lemma(&q, 2).unwrap(), rational(1));
        // complete graphs: Q = (1+t)^m
        for m in 1..=6i64 {
            let base = TruncatedSeries::from_coeffs(
                (0..=10).map(|i| if i <= 1 { BigRational::one() } else { BigRational::zero() }).collect(),
            )
            .unwrap();
            let q = base.int_pow(m).unwrap();
            assert_eq!(v_by_lemma(&q, 1).unwrap(), rational(m));
            for n in 2..=10 {
                assert_eq!(v_by_lemma(&q, n).unwrap(), rational(0), "m={m} n={n}");
            }
        }
        // trivial algebra
        let one = TruncatedSeries::one(8);
        for n in 1..=8 {
            assert_eq!(v_by_lemma(&one, n).unwrap(), rational(0));
        }
        assert!(matches!(v_by_lemma(&one, 9), Err(EngineError::OrderTooSmall { .. })));
        let not_monic = TruncatedSeries::from_ints(&[2, 1]).unwrap();
        assert!(matches!(v_by_lemma(&not_monic, 1), Err(EngineError::NonMonicSeries)));
    }

    #[test]
    fn v_by_peeling_examples() {
        let q = TruncatedSeries::from_ints(&[1, 2, 2, 2, 2, 2]).unwrap();
        let v = v_by_peeling(&q).unwrap();
        assert_eq!(v.values(), &[rational(2), rational(1), rational(0), rational(0), rational(0)]);
        assert!(v.is_integral(1));

        let base = TruncatedSeries::from_coeffs(
            (0..=6).map(|i| if i <= 1 { BigRational::one() } else { BigRational::zero() }).collect(),
        )
        .unwrap();
        let q = base.int_pow(4).unwrap();
        let v = v_by_peeling(&q).unwrap();
        assert_eq!(v.get(1), &rational(4));
        assert!((2..=6).all(|n| v.get(n).is_zero()));

        let v = v_by_peeling(&TruncatedSeries::one(5)).unwrap();
        assert!(v.values().iter().all(Zero::is_zero));
    }

    #[test]
    fn v_by_peeling_halts_on_non_integral_dimension() {
        let q = TruncatedSeries::from_coeffs(vec![
            BigRational::one(),
            BigRational::new(BigInt::one(), BigInt::from(2)),
            BigRational::zero(),
        ])
        .unwrap();
        match v_by_peeling(&q) {
            Err(EngineError::NonIntegralGenerator { degree: 1, value }) => {
                assert_eq!(value, BigRational::new(BigInt::one(), BigInt::from(2)));
            }
            other => panic!("expected a degree-1 halt, got {other:?}"),
        }
        // deeper halt: integral v_1, fractional v_2
        let q = TruncatedSeries::from_coeffs(vec![
            BigRational::one(),
            BigRational::from_integer(1.into()),
            BigRational::new(BigInt::from(3), BigInt::from(2)),
        ])
        .unwrap();
        assert!(matches!(
            v_by_peeling(&q),
            Err(EngineError::NonIntegralGenerator { degree: 2, .. })
        ));
    }

    #[test]
    fn factor_power_matches_int_pow() {
        for i in 1..=4usize {
            for e in -5i64..=5 {
                let mut coeffs = vec![BigRational::zero(); 13];
                coeffs[0] = BigRational::one();
                coeffs[i] = BigRational::from_integer(if i % 2 == 0 { (-1).into() } else { 1.into() });
                let base = TruncatedSeries::from_coeffs(coeffs).unwrap();
                assert_eq!(
                    factor_power(i, &BigInt::from(e), 12),
                    base.int_pow(e).unwrap(),
                    "i={i} e={e}"
                );
            }
        }
    }

    #[test]
    fn peeled_factors_reconstruct_q() {
        for counts in [&[2u64][..], &[4, 4], &[3, 3], &[5, 9, 6, 1], &[6, 12, 8]] {
            let f = fv(counts);
            let q = dseries_from_alpha(&alpha_sequence(&f, 10)).inverse().unwrap();
            let v = v_by_peeling(&q).unwrap();
            let mut product = TruncatedSeries::one(10);
            for i in 1..=10usize {
                let mut coeffs = vec![BigRational::zero(); 11];
                coeffs[0] = BigRational::one();
                coeffs[i] =
                    BigRational::from_integer(if i % 2 == 0 { (-1).into() } else { 1.into() });
                let base = TruncatedSeries::from_coeffs(coeffs).unwrap();
                let exponent = if i % 2 == 1 { v.get(i).clone() } else { -v.get(i) };
                let exponent = exponent.to_integer();
                let exponent_i64 = i64::try_from(&exponent).expect("small test exponents");
                product = product.mul(&base.int_pow(exponent_i64).unwrap());
            }
            assert_eq!(product, q, "f = {f}");
        }
    }

    #[test]
    fn check_inequalities_examples() {
        // the full triangle is the clique complex of K_3
        let report = check_inequalities(&fv(&[3, 3, 1]), 10);
        assert!(report.all_hold);
        assert!(report.routes_agree);
        assert_eq!(report.entries[0].v, rational(3));
        assert!((2..=10).all(|n| report.entries[n - 1].v.is_zero()));

        // the empty triangle is not flag: N = 3 detects it
        let report = check_inequalities(&fv(&[3, 3]), 3);
        assert!(!report.all_hold);
        assert!(report.routes_agree);
        assert_eq!(report.entries[2].lhs, BigInt::from(-3));
        assert_eq!(report.entries[2].v, rational(-1));
        assert!(!report.entries[2].holds);
        assert!(report.entries[0].holds && report.entries[1].holds);

        // too many edges: N = 2 detects it
        let report = check_inequalities(&fv(&[3, 4]), 2);
        assert!(!report.entries[1].holds);
        assert_eq!(report.entries[1].lhs, BigInt::from(-2));

        // the empty complex holds vacuously
        let report = check_inequalities(&FVector::empty(), 6);
        assert!(report.all_hold && report.routes_agree);
        assert!(report.entries.iter().all(|e| e.lhs.is_zero()));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_small_n(&fv(&[3, 3]), 3), BigInt::from(-3));
        assert_eq!(closed_form_small_n(&fv(&[4, 4]), 2), BigInt::from(4));
        assert_eq!(closed_form_small_n(&fv(&[5, 10, 10, 5, 1]), 3), BigInt::zero());
        assert_eq!(closed_form_small_n(&fv(&[7, 3]), 1), BigInt::from(7));
    }

    #[test]
    fn closed_forms_equal_the_theorem_lhs() {
        for counts in [&[3u64, 3][..], &[4, 4], &[5, 10, 10, 5, 1], &[1], &[0], &[2, 1], &[9, 30, 2]] {
            let f = fv(counts);
            let alpha = alpha_sequence(&f, 3);
            for n in 1..=3 {
                assert_eq!(
                    closed_form_small_n(&f, n),
                    v_by_theorem(&alpha, n).unwrap().0,
                    "f = {f}, N = {n}"
                );
            }
        }
    }

    #[test]
    fn homotopy_rank_examples() {
        let v = VSequence::new(vec![rational(2), rational(1), rational(0)]);
        assert_eq!(
            homotopy_ranks(&v),
            vec![(2, rational(2)), (3, rational(1)), (4, rational(0))]
        );
        let v = VSequence::new(vec![rational(4), rational(0)]);
        assert_eq!(homotopy_ranks(&v), vec![(2, rational(4)), (3, rational(0))]);
        assert!(homotopy_ranks(&VSequence::new(vec![])).is_empty());
    }

    #[test]
    fn log_route_identity() {
        // p_N(s) = (-1)^{N+1} N [t^N] log Q with s the coefficients of Q
        for counts in [&[2u64][..], &[4, 4], &[3, 3, 1], &[5, 7]] {
            let q = dseries_from_alpha(&alpha_sequence(&fv(counts), 10)).inverse().unwrap();
            let log_q = q.log().unwrap();
            let e = ElementarySeq::new((1..=10).map(|i| q.coeff(i)).collect());
            let p = power_sums_upto(&e, 10).unwrap();
            for n in 1..=10usize {
                let expect = log_q.coeff(n)
                    * BigRational::from_integer(sign(n + 1) * BigInt::from(n as u64));
                assert_eq!(p[n - 1], expect, "f = {counts:?}, N = {n}");
            }
        }
    }

    #[test]
    fn series_analysis_bundles_the_routes() {
        let analysis = series_analysis(&fv(&[2]), 8);
        assert!(analysis.routes_agree);
        assert_eq!(analysis.qseries.coeff(3), rational(2));
        assert_eq!(analysis.v.get(1), &rational(2));
        assert_eq!(analysis.v.get(2), &rational(1));
    }

    proptest! {
        // all three routes agree exactly on arbitrary small f-vectors, the
        // lhs is integral, and the small-N closed forms match
        #[test]
        fn routes_agree_on_arbitrary_fvectors(counts in prop::collection::vec(0u64..=8, 0..=5)) {
            let f = fv(&counts);
            let report = check_inequalities_with_order(&f, 10, 12);
            prop_assert!(report.routes_agree);
            for n in 1..=3usize {
                prop_assert_eq!(
                    closed_form_small_n(&f, n),
                    report.entries[n - 1].lhs.clone()
                );
            }
        }
    }
}
