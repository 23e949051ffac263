//! Minimal non-faces and the elliptic/hyperbolic dichotomy for `Z_K`.
//!
//! `Z_K` is rationally elliptic exactly when the minimal non-faces of `K` are
//! pairwise disjoint; a single intersecting pair makes it hyperbolic.

mod census;

pub use census::{census, census_complexes, CensusEntry, MAX_CENSUS_M};

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::FaceSet;

/// The minimal non-faces of a complex together with their intersection pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonfaceProfile {
    mnfs: Vec<FaceSet>,
    intersecting_pair: Option<(usize, usize)>,
}

impl NonfaceProfile {
    fn from_sorted(mnfs: Vec<FaceSet>) -> Self {
        let intersecting_pair = first_intersecting_pair(&mnfs);
        NonfaceProfile { mnfs, intersecting_pair }
    }

    /// Minimal non-faces in lexicographic order.
    pub fn mnfs(&self) -> &[FaceSet] {
        &self.mnfs
    }

    pub fn pairwise_disjoint(&self) -> bool {
        self.intersecting_pair.is_none()
    }

    /// Indices `(i, j)`, `i < j`, of the lexicographically first intersecting pair.
    pub fn intersecting_pair(&self) -> Option<(usize, usize)> {
        self.intersecting_pair
    }

    pub fn intersecting_sets(&self) -> Option<(FaceSet, FaceSet)> {
        self.intersecting_pair.map(|(i, j)| (self.mnfs[i], self.mnfs[j]))
    }

    /// Every intersecting pair `(I, J)` with `I < J`.
    pub fn all_intersecting_pairs(&self) -> impl Iterator<Item = (FaceSet, FaceSet)> + '_ {
        self.mnfs.iter().enumerate().flat_map(move |(i, a)| {
            self.mnfs[i + 1..]
                .iter()
                .filter(move |b| !a.intersection(**b).is_empty())
                .map(move |b| (*a, *b))
        })
    }
}

fn first_intersecting_pair(mnfs: &[FaceSet]) -> Option<(usize, usize)> {
    for (i, a) in mnfs.iter().enumerate() {
        for (j, b) in mnfs.iter().enumerate().skip(i + 1) {
            if !a.intersection(*b).is_empty() {
                return Some((i, j));
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictKind {
    Elliptic,
    Hyperbolic,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::Elliptic => "elliptic",
            VerdictKind::Hyperbolic => "hyperbolic",
        }
    }
}

/// Rational type of `Z_K`, with the minimal non-face profile it was read from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub profile: NonfaceProfile,
}

impl Verdict {
    pub fn is_elliptic(&self) -> bool {
        self.kind == VerdictKind::Elliptic
    }

    /// Short human-readable justification.
    pub fn reason(&self) -> String {
        match self.profile.intersecting_sets() {
            Some((i, j)) => format!("minimal non-faces {i} and {j} intersect"),
            None => format!("{} pairwise disjoint minimal non-faces", self.profile.mnfs.len()),
        }
    }
}

/// Enumerates the inclusion-minimal non-faces of `k`.
///
/// Candidates are visited by increasing size and supersets of non-faces already
/// found are skipped. A minimal non-face minus any vertex is a face, so sizes
/// beyond `max_face_size + 1` never need to be visited.
pub fn minimal_non_faces(k: &SimplicialComplex) -> NonfaceProfile {
    let ground = k.ground_set();
    let mut found: Vec<FaceSet> = Vec::new();
    let max_size = (k.max_face_size() + 1).min(k.m());
    for size in 1..=max_size {
        let mut this_size = Vec::new();
        for sigma in ground.subsets_of_size(size) {
            if found.iter().any(|f| f.is_subset(sigma)) || k.is_face(sigma) {
                continue;
            }
            if sigma.iter().all(|v| k.is_face(sigma.without(v))) {
                this_size.push(sigma);
            }
        }
        found.extend(this_size);
    }
    found.sort();
    NonfaceProfile::from_sorted(found)
}

fn require_simply_connected(k: &SimplicialComplex) -> Result<()> {
    if k.has_ghost_vertices() {
        Err(Error::NotSimplyConnectedAssumptionViolated)
    } else {
        Ok(())
    }
}

/// Elliptic iff the minimal non-faces are pairwise disjoint.
pub fn classify(k: &SimplicialComplex) -> Result<Verdict> {
    require_simply_connected(k)?;
    let profile = minimal_non_faces(k);
    let kind = if profile.pairwise_disjoint() { VerdictKind::Elliptic } else { VerdictKind::Hyperbolic };
    Ok(Verdict { kind, profile })
}

/// Membership in `𝒜_m`: `k` has an intersecting pair of minimal non-faces and no
/// proper full subcomplex does.
///
/// The minimal non-faces of `K_S` are those of `K` contained in `S`, so this
/// holds exactly when every intersecting pair covers the whole ground set.
pub fn is_in_a_m(k: &SimplicialComplex) -> bool {
    let profile = minimal_non_faces(k);
    let ground = k.ground_set();
    let mut pairs = profile.all_intersecting_pairs().peekable();
    pairs.peek().is_some() && pairs.all(|(i, j)| i.union(j) == ground)
}

/// The lexicographically smallest inclusion-minimal vertex set `S` for which
/// `K_S` still has an intersecting pair of minimal non-faces. `K_S` lies in `𝒜_{|S|}`.
pub fn minimal_witness_subset(k: &SimplicialComplex) -> Result<FaceSet> {
    let profile = minimal_non_faces(k);
    let unions: Vec<FaceSet> = profile.all_intersecting_pairs().map(|(i, j)| i.union(j)).collect();
    if unions.is_empty() {
        return Err(Error::NotHyperbolic);
    }
    unions
        .iter()
        .filter(|s| !unions.iter().any(|t| t != *s && t.is_subset(**s)))
        .min()
        .copied()
        .ok_or(Error::NotHyperbolic)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(v: &[usize]) -> FaceSet {
        FaceSet::from_vertices(v.iter().copied())
    }

    fn cx(m: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let raw: Vec<_> = facets.iter().map(|f| fs(f)).collect();
        SimplicialComplex::normalize(&raw, m).unwrap()
    }

    fn two_points() -> SimplicialComplex {
        cx(2, &[&[1], &[2]])
    }

    fn q() -> SimplicialComplex {
        cx(3, &[&[1, 2], &[3]])
    }

    fn four_cycle() -> SimplicialComplex {
        cx(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])
    }

    #[test]
    fn mnf_examples() {
        let p = minimal_non_faces(&two_points());
        assert_eq!(p.mnfs(), &[fs(&[1, 2])]);
        assert!(p.pairwise_disjoint());

        let p = minimal_non_faces(&q());
        assert_eq!(p.mnfs(), &[fs(&[1, 3]), fs(&[2, 3])]);
        assert_eq!(p.intersecting_pair(), Some((0, 1)));

        for m in 0..6 {
            assert!(minimal_non_faces(&SimplicialComplex::simplex(m).unwrap()).mnfs().is_empty());
        }

        let p = minimal_non_faces(&four_cycle());
        assert_eq!(p.mnfs(), &[fs(&[1, 3]), fs(&[2, 4])]);
        assert!(p.pairwise_disjoint());
    }

    #[test]
    fn ghost_vertex_is_a_singleton_mnf() {
        let k = SimplicialComplex::normalize_with(&[fs(&[1])], 2, crate::GhostPolicy::Allow).unwrap();
        assert_eq!(minimal_non_faces(&k).mnfs(), &[fs(&[2])]);
        assert_eq!(classify(&k), Err(Error::NotSimplyConnectedAssumptionViolated));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&two_points()).unwrap().kind, VerdictKind::Elliptic);
        let v = classify(&q()).unwrap();
        assert_eq!(v.kind, VerdictKind::Hyperbolic);
        assert_eq!(v.reason(), "minimal non-faces {1,3} and {2,3} intersect");
        assert_eq!(classify(&four_cycle()).unwrap().kind, VerdictKind::Elliptic);
        assert!(classify(&SimplicialComplex::empty()).unwrap().is_elliptic());
    }

    #[test]
    fn a_m_examples() {
        assert!(is_in_a_m(&q()));
        assert!(!is_in_a_m(&four_cycle()));
        assert!(!is_in_a_m(&SimplicialComplex::simplex(4).unwrap()));
        // The apex of cone(Q) is in no minimal non-face.
        assert!(!is_in_a_m(&q().cone().unwrap()));
    }

    #[test]
    fn witness_subset_examples() {
        assert_eq!(minimal_witness_subset(&q()), Ok(fs(&[1, 2, 3])));
        assert_eq!(minimal_witness_subset(&q().cone().unwrap()), Ok(fs(&[1, 2, 3])));
        assert_eq!(minimal_witness_subset(&four_cycle()), Err(Error::NotHyperbolic));
    }

    #[test]
    fn witness_subset_prefers_lexicographic_minimum() {
        // Two disjoint copies of the Q pattern: {1,2,3} and {4,5,6}.
        let k = q().join(&q()).unwrap();
        assert_eq!(minimal_witness_subset(&k), Ok(fs(&[1, 2, 3])));
        let sub = k.full_subcomplex(fs(&[1, 2, 3])).unwrap().complex;
        assert!(is_in_a_m(&sub));
    }
}
