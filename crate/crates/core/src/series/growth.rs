//! Exact exponential-vs-subexponential classification of rational power series.
//!
//! The coefficients of a reduced `num/den` grow exponentially exactly when
//! `den` has a root strictly inside the unit disk. Roots of unity are removed
//! first by dividing out cyclotomic factors; what remains is counted with the
//! Schur–Cohn test, all in integer arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::poly::IntPolynomial;
use super::rational::RationalFunction;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GrowthKind {
    SubExponential,
    Exponential,
}

impl GrowthKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GrowthKind::SubExponential => "sub-exponential",
            GrowthKind::Exponential => "exponential",
        }
    }
}

impl fmt::Display for GrowthKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrowthEvidence {
    /// Every pole is a root of unity; lists the orders of the cyclotomic
    /// factors that were divided out.
    UnitCirclePoles { cyclotomic_orders: Vec<usize> },
    /// Some pole lies in the open unit disk; the smallest pole modulus is in
    /// `(lower, upper]`.
    /// `roots_inside` is `None` when the residual shares a factor with its
    /// reciprocal and the exact count is not determined.
    InteriorPole { roots_inside: Option<usize>, lower: BigRational, upper: BigRational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthClass {
    pub kind: GrowthKind,
    pub evidence: GrowthEvidence,
}

/// Bisection steps used for the smallest-pole bracket (width `2^-BRACKET_BITS`).
pub const BRACKET_BITS: u32 = 20;

pub fn growth_classify(f: &RationalFunction) -> Result<GrowthClass> {
    if f.numerator().is_zero() {
        return Err(Error::ParameterOutOfRange("the zero series has no growth rate".into()));
    }
    let (residual, cyclotomic_orders) = strip_cyclotomic(f.denominator());
    if residual.is_constant() {
        return Ok(GrowthClass {
            kind: GrowthKind::SubExponential,
            evidence: GrowthEvidence::UnitCirclePoles { cyclotomic_orders },
        });
    }
    // The residual has integer coefficients and constant term ±1, so its
    // roots multiply to ±1/lc. If none were inside the disk they would all lie
    // on the circle, and by Kronecker's theorem be roots of unity, which were
    // stripped. Hence an interior root exists; Schur–Cohn counts them.
    let roots_inside = match roots_in_disk(&residual) {
        Ok(0) => return Err(Error::BoundaryRootUnresolved),
        Ok(n) => Some(n),
        Err(Error::BoundaryRootUnresolved) => None,
        Err(e) => return Err(e),
    };
    let (lower, upper) = smallest_root_bracket(&residual)?;
    Ok(GrowthClass {
        kind: GrowthKind::Exponential,
        evidence: GrowthEvidence::InteriorPole { roots_inside, lower, upper },
    })
}

/// Divides out every cyclotomic factor `Φ_k`. A cyclotomic factor of a
/// degree-`n` polynomial has `φ(k) ≤ n`, which bounds `k ≤ 2n²`.
pub fn strip_cyclotomic(p: &IntPolynomial) -> (IntPolynomial, Vec<usize>) {
    let mut residual = p.clone();
    let mut orders = Vec::new();
    let n = p.degree().unwrap_or(0);
    for k in 1..=(2 * n * n).max(2) {
        let deg = residual.degree().unwrap_or(0);
        if deg == 0 {
            break;
        }
        if totient(k) > deg {
            continue;
        }
        let phi_k = cyclotomic(k);
        let mut stripped = false;
        while let Ok(q) = residual.divexact(&phi_k) {
            residual = q;
            stripped = true;
        }
        if stripped {
            orders.push(k);
        }
    }
    (residual, orders)
}

fn totient(n: usize) -> usize {
    let (mut n, mut result, mut p) = (n, n, 2);
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn mobius(n: usize) -> i32 {
    let (mut n, mut sign, mut p) = (n, 1, 2);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `Φ_k`, from `∏_{d | k} (1 - t^d)^{μ(k/d)}` truncated at degree `φ(k)`.
/// The product equals `Φ_k` for `k > 1` and `-Φ_1` for `k = 1`.
pub fn cyclotomic(k: usize) -> IntPolynomial {
    let deg = totient(k);
    let mut series: Vec<BigInt> = vec![BigInt::zero(); deg + 1];
    series[0] = BigInt::one();
    for d in (1..=k).filter(|d| k.is_multiple_of(*d)) {
        match mobius(k / d) {
            1 => {
                for i in (d..=deg).rev() {
                    let prev = series[i - d].clone();
                    series[i] -= prev;
                }
            }
            -1 => {
                for i in d..=deg {
                    let prev = series[i - d].clone();
                    series[i] += prev;
                }
            }
            _ => {}
        }
    }
    let p = IntPolynomial::new(series);
    if k == 1 {
        -&p
    } else {
        p
    }
}

/// Number of roots of `p` in the open unit disk.
///
/// Runs the Schur–Cohn recursion first: with `p* = t^n p(1/t)` and
/// `Tp = p(0)·p - lc(p)·p*`, `deg Tp < n` and `Tp(0) = p(0)² - lc(p)²`. When
/// that is positive `p` and `Tp` have the same number of interior roots; when
/// negative the count is `n` minus that of `Tp`. If some `Tp(0)` vanishes the
/// count is read instead from the inertia of the Schur–Cohn matrix, which is
/// exact whenever `p` and `p*` are coprime. Otherwise `p` has a root on the
/// circle or a pair of roots `z`, `1/z̄`, and `BoundaryRootUnresolved` is returned.
pub fn roots_in_disk(p: &IntPolynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ParameterOutOfRange("zero polynomial".into()));
    }
    match schur_cohn_recursion(p) {
        Some(n) => Ok(n),
        None => schur_cohn_inertia(p),
    }
}

fn schur_cohn_recursion(p: &IntPolynomial) -> Option<usize> {
    let mut current = p.primitive_part();
    // count = offset + sign * N(current)
    let mut offset: i64 = 0;
    let mut sign: i64 = 1;
    while let Some(n) = current.degree().filter(|&n| n > 0) {
        let a0 = current.constant_term();
        let an = current.leading();
        let transformed = &current.scale(&a0) - &current.reversed().scale(&an);
        let delta = transformed.constant_term();
        if delta.is_zero() {
            return None;
        }
        if delta.is_negative() {
            offset += sign * n as i64;
            sign = -sign;
        }
        current = transformed.primitive_part();
    }
    Some(offset as usize)
}

/// Symmetric Schur–Cohn matrix `AᵀA - BᵀB`, with `A` and `B` lower-triangular
/// Toeplitz on `(a₀, …, a_{n-1})` and `(a_n, …, a₁)`. It is congruent to the
/// Bezoutian of `p` and `p*`; its negative eigenvalues count the roots inside
/// the unit circle and its nullity is `deg gcd(p, p*)`.
pub fn schur_cohn_matrix(p: &IntPolynomial) -> Vec<Vec<BigInt>> {
    let n = p.degree().unwrap_or(0);
    let a = |j: usize, k: usize| if j >= k { p.coeff(j - k) } else { BigInt::zero() };
    let b = |j: usize, k: usize| if j >= k { p.coeff(n - (j - k)) } else { BigInt::zero() };
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| (0..n).map(|i| a(i, r) * a(i, c) - b(i, r) * b(i, c)).sum::<BigInt>())
                .collect()
        })
        .collect()
}

fn schur_cohn_inertia(p: &IntPolynomial) -> Result<usize> {
    let matrix = schur_cohn_matrix(&p.primitive_part());
    let chi = characteristic_polynomial(&matrix);
    if chi.constant_term().is_zero() {
        return Err(Error::BoundaryRootUnresolved);
    }
    // χ is real-rooted, so Descartes' rule is exact: sign changes of χ(-x)
    // count the negative eigenvalues.
    let mirrored: Vec<BigInt> =
        chi.coeffs().iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect();
    Ok(sign_changes(&mirrored))
}

fn sign_changes(coeffs: &[BigInt]) -> usize {
    let signs: Vec<bool> = coeffs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `det(xI - M)` by Faddeev–LeVerrier; every division is exact over ℤ.
pub fn characteristic_polynomial(matrix: &[Vec<BigInt>]) -> IntPolynomial {
    let n = matrix.len();
    let mul = |x: &[Vec<BigInt>], y: &[Vec<BigInt>]| -> Vec<Vec<BigInt>> {
        (0..n)
            .map(|r| (0..n).map(|c| (0..n).map(|i| &x[r][i] * &y[i][c]).sum()).collect())
            .collect()
    };
    // high[k] is the coefficient of x^(n-k); M_k = A·M_{k-1} + high[k-1]·I
    let mut high = vec![BigInt::one()];
    let mut m_k: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = mul(matrix, &m_k);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &high[k - 1];
        }
        m_k = next;
        let am = mul(matrix, &m_k);
        let trace: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        high.push(-trace / BigInt::from(k as u64));
    }
    high.reverse();
    IntPolynomial::new(high)
}

/// Interior roots of `p` in the disk `|z| < rho`.
fn roots_in_radius(p: &IntPolynomial, rho: &BigRational) -> Result<usize> {
    roots_in_disk(&p.scale_variable(rho.numer(), rho.denom()))
}

/// `(lower, upper]` containing the smallest root modulus of `p`, known to be < 1.
fn smallest_root_bracket(p: &IntPolynomial) -> Result<(BigRational, BigRational)> {
    let mut lower = BigRational::zero();
    let mut upper = BigRational::one();
    let two = BigRational::from_integer(BigInt::from(2));
    let nudge = BigRational::new(BigInt::one(), BigInt::one() << (BRACKET_BITS + 8));
    for _ in 0..BRACKET_BITS {
        let mut mid = (&lower + &upper) / &two;
        // A singular radius (a root on |z| = mid, or a pair z, mid²/z̄) is
        // moved slightly outward; the bracket stays valid for any mid < upper.
        let mut count = roots_in_radius(p, &mid);
        for _ in 0..16 {
            if count != Err(Error::BoundaryRootUnresolved) {
                break;
            }
            mid += &nudge;
            count = roots_in_radius(p, &mid);
        }
        match count? {
            0 => lower = mid,
            _ => upper = mid,
        }
    }
    Ok((lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(3), p(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        // t^n - 1 = ∏_{d | n} Φ_d
        for n in 1..=30usize {
            let prod = (1..=n).filter(|d| n % d == 0).fold(IntPolynomial::one(), |acc, d| &acc * &cyclotomic(d));
            assert_eq!(prod, -&IntPolynomial::binomial(n, -1), "n = {n}");
        }
    }

    #[test]
    fn schur_cohn_counts() {
        assert_eq!(roots_in_disk(&p(&[1, -2])), Ok(1)); // root 1/2
        assert_eq!(roots_in_disk(&p(&[2, -1])), Ok(0)); // root 2
        assert_eq!(roots_in_disk(&p(&[1, -1, -1])), Ok(1)); // golden ratio roots 0.618, -1.618
        assert_eq!(roots_in_disk(&p(&[1, 0, 4])), Ok(2)); // ±i/2
        assert_eq!(roots_in_disk(&p(&[0, 1])), Ok(1)); // root 0
        assert_eq!(roots_in_disk(&p(&[-1, 1])), Err(Error::BoundaryRootUnresolved));
        assert_eq!(roots_in_disk(&p(&[7])), Ok(0));
        // 1 - 3t + t² has the reciprocal pair 0.38.., 2.61..
        assert_eq!(roots_in_disk(&p(&[1, -3, 1])), Err(Error::BoundaryRootUnresolved));
        // roots 1/2, 0.618.., -1.618..
        assert_eq!(roots_in_disk(&(&p(&[1, -2]) * &p(&[1, -1, -1]))), Ok(2));
    }

    #[test]
    fn characteristic_polynomials() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
        };
        assert_eq!(characteristic_polynomial(&m(&[&[2, 1], &[1, 2]])), p(&[3, -4, 1]));
        assert_eq!(characteristic_polynomial(&m(&[&[0, 0], &[0, 0]])), p(&[0, 0, 1]));
        assert_eq!(characteristic_polynomial(&m(&[&[1, 2, 0], &[2, 1, 0], &[0, 0, 5]])), p(&[15, 7, -7, 1]));
        assert_eq!(characteristic_polynomial(&[]), IntPolynomial::one());
    }

    #[test]
    fn inertia_agrees_with_recursion() {
        for c in [&[1, -2][..], &[2, -1], &[1, 0, 4], &[1, 3, -4, 2], &[5, 1, -7, 1, 3], &[1, -5, 6]] {
            let q = p(c);
            assert_eq!(schur_cohn_recursion(&q).map(Ok), Some(schur_cohn_inertia(&q)), "{q}");
        }
    }

    #[test]
    fn growth_examples() {
        let g = growth_classify(&rf(&[1, 0, 0, 1], &[1, 0, -1])).unwrap();
        assert_eq!(g.kind, GrowthKind::SubExponential);
        assert_eq!(g.evidence, GrowthEvidence::UnitCirclePoles { cyclotomic_orders: vec![1] });

        let g = growth_classify(&rf(&[1], &[1, -2])).unwrap();
        assert_eq!(g.kind, GrowthKind::Exponential);
        let GrowthEvidence::InteriorPole { roots_inside, lower, upper } = g.evidence else { panic!() };
        assert_eq!(roots_inside, Some(1));
        let half = BigRational::new(1.into(), 2.into());
        assert!(lower < half && half <= upper);

        let g = growth_classify(&rf(&[1], &[1, -1, -1])).unwrap();
        assert_eq!(g.kind, GrowthKind::Exponential);
        let GrowthEvidence::InteriorPole { lower, upper, .. } = g.evidence else { panic!() };
        // (sqrt 5 - 1)/2 = 0.6180339887...
        let lo = BigRational::new(6180339.into(), 10000000.into());
        let hi = BigRational::new(6180340.into(), 10000000.into());
        assert!(lower < hi && lo < upper);
    }

    #[test]
    fn cyclotomic_beyond_denominator_degree() {
        // Φ_3 has degree 2 but order 3.
        let g = growth_classify(&rf(&[1], &[1, 1, 1])).unwrap();
        assert_eq!(g.evidence, GrowthEvidence::UnitCirclePoles { cyclotomic_orders: vec![3] });
    }

    #[test]
    fn polynomials_are_subexponential() {
        let g = growth_classify(&rf(&[1, 2, 1], &[1])).unwrap();
        assert_eq!(g.kind, GrowthKind::SubExponential);
        assert!(growth_classify(&RationalFunction::zero()).is_err());
    }

    #[test]
    fn invariant_under_common_factor() {
        for (n, d) in [(&[1, 0, 0, 1][..], &[1, 0, -1][..]), (&[1], &[1, -1, -1]), (&[3, 1], &[1, -3, 1])] {
            let base = growth_classify(&rf(n, d)).unwrap();
            let lifted = RationalFunction::new(&p(n) * &p(&[1, 1]), &p(d) * &p(&[1, 1])).unwrap();
            assert_eq!(growth_classify(&lifted).unwrap(), base);
        }
    }
}
