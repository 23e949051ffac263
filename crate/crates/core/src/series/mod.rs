//! Exact generating functions: integer polynomials, reduced rational
//! functions, growth classification, and the Hilbert–Poincaré series of
//! `Z_K`, its loop spaces, `DJ(K)` and `L(CP^∞)^m`.
//!
//! No floating point is used anywhere in this module.

mod factored;
pub mod growth;
mod poly;
mod rational;
mod spaces;

pub use factored::{FactoredForm, Series};
pub use growth::{
    cyclotomic, growth_classify, roots_in_disk, strip_cyclotomic, GrowthClass, GrowthEvidence, GrowthKind, BRACKET_BITS,
};
pub use poly::IntPolynomial;
pub use rational::{bigint_json, RationalFunction};
pub use spaces::{
    face_ring_series, free_loop_cp_infty_power_series, free_loop_dj_upper_series, free_loop_zk_series,
    hochschild_growth_verdict, loop_dj_series, loop_zk_series, zk_series, HochschildVerdict,
};
