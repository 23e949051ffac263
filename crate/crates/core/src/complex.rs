//! Finite simplicial complexes on a labeled ground set `{1, ..., m}`.
//!
//! A complex is stored by its facets only. Faces are the subsets of facets
//! and are enumerated on demand.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::{FaceSet, MAX_VERTICES};

/// What [`SimplicialComplex::normalize_with`] does with vertices that lie in no facet.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum GhostPolicy {
    #[default]
    Reject,
    /// Keep them. Classification operations later refuse such complexes.
    Allow,
}

/// A simplicial complex on `m` vertices, described by its facets.
///
/// Facets are kept sorted lexicographically and pairwise incomparable, so two
/// complexes compare equal exactly when they are facet-identical. The facet
/// list is never empty: a complex whose only face is `∅` stores `[∅]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    m: usize,
    facets: Vec<FaceSet>,
}

/// Face counts by dimension: `counts[i]` is the number of faces with `i`
/// vertices, so `counts[0] = f₋₁ = 1` and `counts[1] = f₀`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FVector {
    counts: Vec<u64>,
}

/// A full subcomplex `K_I` re-indexed onto `{1, ..., |I|}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullSubcomplex {
    pub complex: SimplicialComplex,
    /// `vertices[i]` is the label in `K` of vertex `i + 1` of `complex`.
    pub vertices: Vec<usize>,
}

impl SimplicialComplex {
    /// Normalizes raw facets, rejecting ghost vertices.
    pub fn normalize(raw_facets: &[FaceSet], m: usize) -> Result<Self> {
        Self::normalize_with(raw_facets, m, GhostPolicy::Reject)
    }

    /// Drops duplicate and dominated faces and checks that every vertex lies
    /// in the ground set (and, under [`GhostPolicy::Reject`], in some facet).
    pub fn normalize_with(raw_facets: &[FaceSet], m: usize, ghosts: GhostPolicy) -> Result<Self> {
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices { requested: m, max: MAX_VERTICES });
        }
        for f in raw_facets {
            let top = f.max_vertex();
            if top > m {
                return Err(Error::VertexOutOfRange { vertex: top as i64, m });
            }
        }
        let complex = Self::from_faces_unchecked(m, raw_facets.iter().copied());
        if ghosts == GhostPolicy::Reject {
            if let Some(v) = complex.ghost_vertices().iter().next() {
                return Err(Error::GhostVertex(v));
            }
        }
        Ok(complex)
    }

    /// Builds a complex from integer facet lists as they appear in the JSON input.
    pub fn from_lists(m: usize, facets: &[Vec<i64>], ghosts: GhostPolicy) -> Result<Self> {
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices { requested: m, max: MAX_VERTICES });
        }
        let mut raw = Vec::with_capacity(facets.len());
        for list in facets {
            let mut face = FaceSet::EMPTY;
            for &v in list {
                if v < 1 || v as u64 > m as u64 {
                    return Err(Error::VertexOutOfRange { vertex: v, m });
                }
                face = face.with(v as usize);
            }
            raw.push(face);
        }
        Self::normalize_with(&raw, m, ghosts)
    }

    /// Parses the canonical `{"m": int, "facets": [[int, ...], ...]}` form.
    pub fn from_json(text: &str, ghosts: GhostPolicy) -> Result<Self> {
        let raw: RawComplex =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_lists(raw.m, &raw.facets, ghosts)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("complex serialization is infallible")
    }

    /// Keeps the inclusion-maximal members of `faces`. Labels must already be
    /// within `1..=m`.
    pub(crate) fn from_faces_unchecked<I: IntoIterator<Item = FaceSet>>(m: usize, faces: I) -> Self {
        let mut sorted: Vec<FaceSet> = faces.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        // Larger sets first so that every dominating facet is seen before the faces it covers.
        sorted.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        let mut facets: Vec<FaceSet> = Vec::new();
        for f in sorted {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        if facets.is_empty() {
            facets.push(FaceSet::EMPTY);
        }
        facets.sort();
        SimplicialComplex { m, facets }
    }

    /// The empty complex on zero vertices (its only face is `∅`).
    pub fn empty() -> Self {
        SimplicialComplex { m: 0, facets: vec![FaceSet::EMPTY] }
    }

    /// The full simplex on `a` vertices, `Δ^{a-1}`. `simplex(0)` is the empty complex.
    pub fn simplex(a: usize) -> Result<Self> {
        if a > MAX_VERTICES {
            return Err(Error::TooManyVertices { requested: a, max: MAX_VERTICES });
        }
        Ok(SimplicialComplex { m: a, facets: vec![FaceSet::ground(a)] })
    }

    /// `∂Δ^{a-1}`: every `(a-1)`-subset of `{1..a}` is a facet.
    pub fn boundary_simplex(a: usize) -> Result<Self> {
        if a == 0 || a == 1 {
            return Err(Error::BoundaryOfPoint);
        }
        if a > MAX_VERTICES {
            return Err(Error::TooManyVertices { requested: a, max: MAX_VERTICES });
        }
        let ground = FaceSet::ground(a);
        Ok(Self::from_faces_unchecked(a, (1..=a).map(|v| ground.without(v))))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> &[FaceSet] {
        &self.facets
    }

    pub fn ground_set(&self) -> FaceSet {
        FaceSet::ground(self.m)
    }

    /// Largest face size (`dim K + 1`); 0 when the only face is `∅`.
    pub fn max_face_size(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    pub fn is_face(&self, sigma: FaceSet) -> bool {
        self.facets.iter().any(|f| sigma.is_subset(*f))
    }

    /// Vertices of the ground set covered by no facet.
    pub fn ghost_vertices(&self) -> FaceSet {
        let covered = self.facets.iter().fold(FaceSet::EMPTY, |acc, f| acc.union(*f));
        self.ground_set().difference(covered)
    }

    pub fn has_ghost_vertices(&self) -> bool {
        !self.ghost_vertices().is_empty()
    }

    /// Every face, sorted lexicographically. Exponential in the facet sizes.
    pub fn faces(&self) -> Vec<FaceSet> {
        let mut all = BTreeSet::new();
        for f in &self.facets {
            all.extend(f.subsets());
        }
        all.into_iter().collect()
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; self.max_face_size() + 1];
        for face in self.faces() {
            counts[face.len()] += 1;
        }
        FVector { counts }
    }

    /// The full subcomplex on `index`, re-indexed in increasing label order.
    pub fn full_subcomplex(&self, index: FaceSet) -> Result<FullSubcomplex> {
        if index.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        if index.max_vertex() > self.m {
            return Err(Error::VertexOutOfRange { vertex: index.max_vertex() as i64, m: self.m });
        }
        let vertices = index.to_vec();
        let compress = |face: FaceSet| -> FaceSet {
            vertices
                .iter()
                .enumerate()
                .filter(|(_, v)| face.contains(**v))
                .map(|(i, _)| i + 1)
                .collect()
        };
        let complex = Self::from_faces_unchecked(
            vertices.len(),
            self.facets.iter().map(|f| compress(f.intersection(index))),
        );
        Ok(FullSubcomplex { complex, vertices })
    }

    /// The join `K * L`, with `L`'s vertices shifted past `K`'s.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self> {
        let m = self.m + other.m;
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices { requested: m, max: MAX_VERTICES });
        }
        let facets = self
            .facets
            .iter()
            .flat_map(|f| other.facets.iter().map(move |g| f.union(g.shifted(self.m))));
        Ok(Self::from_faces_unchecked(m, facets))
    }

    /// `K * Δ⁰`, the cone with apex `m + 1`.
    pub fn cone(&self) -> Result<Self> {
        self.join(&Self::simplex(1)?)
    }

    /// Sends vertex `v` to `labels[v - 1]` inside a ground set of size `m`.
    /// `labels` must be injective with values in `1..=m`.
    pub fn relabel(&self, labels: &[usize], m: usize) -> Result<Self> {
        if labels.len() != self.m {
            return Err(Error::ParameterOutOfRange(format!(
                "relabeling needs {} labels, got {}",
                self.m,
                labels.len()
            )));
        }
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices { requested: m, max: MAX_VERTICES });
        }
        let distinct: BTreeSet<_> = labels.iter().collect();
        if let Some(&bad) = labels.iter().find(|&&l| l == 0 || l > m) {
            return Err(Error::VertexOutOfRange { vertex: bad as i64, m });
        }
        if distinct.len() != labels.len() {
            return Err(Error::ParameterOutOfRange("relabeling is not injective".into()));
        }
        let facets = self.facets.iter().map(|f| f.iter().map(|v| labels[v - 1]).collect());
        Ok(Self::from_faces_unchecked(m, facets))
    }
}

impl FVector {
    /// `f_dim`, the number of faces of dimension `dim` (`dim = -1` is the empty face).
    pub fn f(&self, dim: isize) -> u64 {
        let idx = dim + 1;
        if idx < 0 {
            return 0;
        }
        self.counts.get(idx as usize).copied().unwrap_or(0)
    }

    /// Counts indexed by face size.
    pub fn by_size(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

#[derive(Deserialize)]
struct RawComplex {
    m: usize,
    facets: Vec<Vec<i64>>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            m: usize,
            facets: &'a [FaceSet],
        }
        Out { m: self.m, facets: &self.facets }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawComplex::deserialize(deserializer)?;
        Self::from_lists(raw.m, &raw.facets, GhostPolicy::Reject).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K(m={}, facets=", self.m)?;
        f.debug_list().entries(self.facets.iter()).finish()?;
        f.write_str(")")
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}
