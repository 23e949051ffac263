//! Rational homotopy of moment-angle complexes from the combinatorics of `K`.
//!
//! Given a finite simplicial complex `K`, this crate decides whether the
//! moment-angle complex `Z_K` is rationally elliptic or hyperbolic from the
//! minimal non-faces of `K`, and produces certificates for either answer:
//!
//! * elliptic: a join decomposition of `K` into a simplex and boundaries of
//!   simplices, the resulting product of odd spheres and a disk, and exact
//!   Hilbert–Poincaré series for `Z_K`, `ΩZ_K`, `LZ_K`, `DJ(K)`, `ΩDJ(K)` and
//!   an upper bound for `LDJ(K)`;
//! * hyperbolic: a pair of intersecting minimal non-faces whose full
//!   subcomplexes give a two-sphere wedge retract of `Z_K`.
//!
//! ```
//! use moment_angle::{classify, moment_angle_type, GhostPolicy, SimplicialComplex, VerdictKind};
//!
//! let two_points = SimplicialComplex::from_json(r#"{"m":2,"facets":[[1],[2]]}"#, GhostPolicy::Reject)?;
//! assert_eq!(classify(&two_points)?.kind, VerdictKind::Elliptic);
//! assert_eq!(moment_angle_type(&two_points)?.to_string(), "S^3");
//! # Ok::<(), moment_angle::Error>(())
//! ```

pub mod cli;
pub mod complex;
pub mod decomposition;
mod error;
mod face;
pub mod nonface;
pub mod series;

pub use complex::{FVector, FullSubcomplex, GhostPolicy, SimplicialComplex};
pub use decomposition::{
    hilton_milnor_bound, is_product_of_simplices_polytope, join_decompose, moment_angle_type,
    wedge_retract_witness, HiltonMilnorBound, JoinDecomposition, SphereProduct, WedgeWitness,
};
pub use error::{Error, Result};
pub use face::{FaceSet, MAX_VERTICES};
pub use nonface::{
    census, census_complexes, classify, is_in_a_m, minimal_non_faces, minimal_witness_subset, CensusEntry,
    NonfaceProfile, Verdict, VerdictKind,
};
