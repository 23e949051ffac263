//! Exhaustive enumeration of labeled complexes on small ground sets.

use rayon::prelude::*;
use serde::Serialize;

use super::{classify, VerdictKind};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::FaceSet;

pub const MAX_CENSUS_M: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub complex: SimplicialComplex,
    pub verdict: VerdictKind,
}

/// Every complex on exactly `m` vertices with no ghost vertices, i.e. every
/// down-closed family of subsets of `{1..m}` containing all singletons.
///
/// Subsets of size at least two are decided one at a time in (size, lex)
/// order, excluded before included; a subset may be included only when all
/// of its codimension-one faces already are. The output order is therefore
/// fixed.
pub fn census_complexes(m: usize) -> Result<Vec<SimplicialComplex>> {
    if m > MAX_CENSUS_M {
        return Err(Error::CensusTooLarge { requested: m, max: MAX_CENSUS_M });
    }
    let ground = FaceSet::ground(m);
    let candidates: Vec<FaceSet> = (2..=m).flat_map(|k| ground.subsets_of_size(k)).collect();
    let mut present = vec![false; 1 << m];
    present[0] = true;
    for v in 1..=m {
        present[FaceSet::singleton(v).bits() as usize] = true;
    }
    let mut out = Vec::new();
    extend(m, &candidates, 0, &mut present, &mut out);
    Ok(out)
}

fn extend(
    m: usize,
    candidates: &[FaceSet],
    next: usize,
    present: &mut [bool],
    out: &mut Vec<SimplicialComplex>,
) {
    let Some(&sigma) = candidates.get(next) else {
        let faces = (0..present.len()).filter(|&b| present[b]).map(|b| FaceSet::from_bits(b as u64));
        out.push(SimplicialComplex::from_faces_unchecked(m, faces));
        return;
    };
    extend(m, candidates, next + 1, present, out);
    if sigma.iter().all(|v| present[sigma.without(v).bits() as usize]) {
        present[sigma.bits() as usize] = true;
        extend(m, candidates, next + 1, present, out);
        present[sigma.bits() as usize] = false;
    }
}

/// [`census_complexes`] with each complex classified. Classification runs in
/// parallel; the output keeps the enumeration order.
pub fn census(m: usize) -> Result<Vec<CensusEntry>> {
    let complexes = census_complexes(m)?;
    complexes
        .into_par_iter()
        .map(|complex| {
            let verdict = classify(&complex)?.kind;
            Ok(CensusEntry { complex, verdict })
        })
        .collect()
}
