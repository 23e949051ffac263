//! Hilbert–Poincaré series of the spaces attached to `K`.
//!
//! Grading is homological with `t` in degree 1. `H_*(S^d) ↦ 1 + t^d`,
//! `H_*(ΩS^{2n+1}; ℚ) ↦ 1/(1 - t^{2n})`, and the face ring has its generators
//! in degree 2.

use super::factored::{FactoredForm, Series};
use super::growth::{growth_classify, GrowthClass, GrowthKind};
use super::poly::IntPolynomial;
use crate::complex::SimplicialComplex;
use crate::decomposition::{join_decompose, moment_angle_type, SphereProduct};
use crate::error::Result;
use crate::nonface::classify;

/// `∏ (1 + t^d)` over the sphere factors of `Z_K`.
pub fn zk_series(sp: &SphereProduct) -> Series {
    let f = sp
        .sphere_dimensions()
        .iter()
        .fold(FactoredForm::one(), |acc, &d| acc.times(IntPolynomial::binomial(d, 1), 1));
    Series::from_factored(f)
}

/// `∏ 1/(1 - t^{d-1})`: based loops on a product of odd spheres.
pub fn loop_zk_series(sp: &SphereProduct) -> Series {
    let f = sp
        .sphere_dimensions()
        .iter()
        .fold(FactoredForm::one(), |acc, &d| acc.over_one_minus(d - 1, 1));
    Series::from_factored(f)
}

/// `∏ (1 + t^d)/(1 - t^{d-1})`, using `L S^{2n+1} ≃ S^{2n+1} × ΩS^{2n+1}` away from 2.
pub fn free_loop_zk_series(sp: &SphereProduct) -> Series {
    let f = sp.sphere_dimensions().iter().fold(FactoredForm::one(), |acc, &d| {
        acc.times(IntPolynomial::binomial(d, 1), 1).over_one_minus(d - 1, 1)
    });
    Series::from_factored(f)
}

/// Hilbert series of the face ring with degree-2 generators:
/// `Σ_σ t^{2|σ|}/(1 - t²)^{|σ|}` over the faces of `K`, put over `(1 - t²)^n`
/// with `n` the largest face size.
pub fn face_ring_series(k: &SimplicialComplex) -> Series {
    let fv = k.f_vector();
    let counts = fv.by_size();
    let n = counts.len() - 1;
    let one_minus_t2 = IntPolynomial::binomial(2, -1);
    let numerator = counts.iter().enumerate().fold(IntPolynomial::zero(), |acc, (i, &c)| {
        let term = IntPolynomial::monomial(c.into(), 2 * i);
        &acc + &(&term * &one_minus_t2.pow((n - i) as u32))
    });
    Series::from_factored(FactoredForm::one().times(numerator, 1).over_one_minus(2, n as u32))
}

/// `ΩDJ(K) ≃ ΩZ_K × T^m`: `(1 + t)^m` times the based-loop series of `Z_K`.
/// Needs `K` elliptic.
pub fn loop_dj_series(k: &SimplicialComplex) -> Result<Series> {
    let sp = moment_angle_type(k)?;
    let torus = FactoredForm::one().times(IntPolynomial::binomial(1, 1), k.m() as u32);
    Ok(Series::from_factored(torus).product(&loop_zk_series(&sp)))
}

/// Serre `E₂` page of `ΩDJ(K) → LDJ(K) → DJ(K)`: face ring times the `ΩDJ(K)`
/// series. A coefficientwise upper bound on the series of `LDJ(K)`, not the
/// series itself. Needs `K` elliptic.
pub fn free_loop_dj_upper_series(k: &SimplicialComplex) -> Result<Series> {
    let loops = loop_dj_series(k)?;
    Ok(face_ring_series(k).product(&loops))
}

/// `L(CP^∞)^m ≃ (CP^∞)^m × (S¹)^m`: `(1 + t)^m/(1 - t²)^m`.
pub fn free_loop_cp_infty_power_series(m: usize) -> Series {
    let f = FactoredForm::one()
        .times(IntPolynomial::binomial(1, 1), m as u32)
        .over_one_minus(2, m as u32);
    Series::from_factored(f)
}

/// Growth of the Hochschild homology of the face ring (the free loop space
/// of `DJ(K)`), as far as it is determined by `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum HochschildVerdict {
    /// `K` elliptic: bounded by [`free_loop_dj_upper_series`], whose poles all
    /// lie on the unit circle.
    SubExponential {
        upper_bound: Series,
        growth: GrowthClass,
        /// `K` is a join of simplex boundaries only, hence a polytopal sphere
        /// whose polytope is a product of simplices; the series is then rational.
        rational_by_polytope: bool,
    },
    /// `K` hyperbolic: only the free loop space of `Z_K` is known to grow
    /// exponentially; the growth for `DJ(K)` is left open.
    Undetermined { free_loop_zk: GrowthKind },
}

impl HochschildVerdict {
    pub fn dj_growth(&self) -> Option<GrowthKind> {
        match self {
            HochschildVerdict::SubExponential { .. } => Some(GrowthKind::SubExponential),
            HochschildVerdict::Undetermined { .. } => None,
        }
    }

    /// Growth of `H_*(LZ_K; ℚ)`.
    pub fn free_loop_zk_growth(&self) -> GrowthKind {
        match self {
            HochschildVerdict::SubExponential { .. } => GrowthKind::SubExponential,
            HochschildVerdict::Undetermined { free_loop_zk } => *free_loop_zk,
        }
    }
}

pub fn hochschild_growth_verdict(k: &SimplicialComplex) -> Result<HochschildVerdict> {
    let verdict = classify(k)?;
    if !verdict.is_elliptic() {
        return Ok(HochschildVerdict::Undetermined { free_loop_zk: GrowthKind::Exponential });
    }
    let upper_bound = free_loop_dj_upper_series(k)?;
    let growth = growth_classify(upper_bound.rational())?;
    let rational_by_polytope = join_decompose(k)?.simplex_vertices.is_empty();
    Ok(HochschildVerdict::SubExponential { upper_bound, growth, rational_by_polytope })
}
