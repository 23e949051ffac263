use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest ground set a [`FaceSet`] can describe.
pub const MAX_VERTICES: usize = 64;

/// A set of 1-based vertex labels, stored as a bitmask (bit `v - 1` for vertex `v`).
///
/// Ordering is lexicographic on the ascending vertex lists, so `{1,3} < {2,3}`
/// and `{1,2} < {1,2,3}`. Serializes as a sorted JSON array of labels.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct FaceSet(u64);

impl FaceSet {
    pub const EMPTY: FaceSet = FaceSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        FaceSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn ground(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            FaceSet(u64::MAX)
        } else {
            FaceSet((1u64 << n) - 1)
        }
    }

    /// Builds a set from labels. Panics on labels outside `1..=64`; use
    /// [`SimplicialComplex::normalize`](crate::SimplicialComplex::normalize) for
    /// validated input.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut bits = 0u64;
        for v in vertices {
            assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
            bits |= 1 << (v - 1);
        }
        FaceSet(bits)
    }

    pub fn singleton(v: usize) -> Self {
        Self::from_vertices([v])
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn is_subset(self, other: FaceSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: FaceSet) -> FaceSet {
        FaceSet(self.0 | other.0)
    }

    pub fn intersection(self, other: FaceSet) -> FaceSet {
        FaceSet(self.0 & other.0)
    }

    pub fn difference(self, other: FaceSet) -> FaceSet {
        FaceSet(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> FaceSet {
        self.union(FaceSet::singleton(v))
    }

    pub fn without(self, v: usize) -> FaceSet {
        self.difference(FaceSet::singleton(v))
    }

    /// Largest label present, or 0 for the empty set.
    pub fn max_vertex(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Vertex labels in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Relabels every vertex `v` as `v + offset`.
    pub fn shifted(self, offset: usize) -> FaceSet {
        debug_assert!(self.max_vertex() + offset <= MAX_VERTICES);
        if self.0 == 0 {
            self
        } else {
            FaceSet(self.0 << offset)
        }
    }

    /// All subsets, in increasing bitmask order (the empty set first).
    pub fn subsets(self) -> impl Iterator<Item = FaceSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == full {
                None
            } else {
                Some((current.wrapping_sub(full)) & full)
            };
            Some(FaceSet(current))
        })
    }

    /// All subsets of size exactly `k`, in lexicographic order.
    pub fn subsets_of_size(self, k: usize) -> Vec<FaceSet> {
        let elements = self.to_vec();
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(k);
        fn walk(
            elements: &[usize],
            k: usize,
            start: usize,
            chosen: &mut Vec<usize>,
            out: &mut Vec<FaceSet>,
        ) {
            if chosen.len() == k {
                out.push(FaceSet::from_vertices(chosen.iter().copied()));
                return;
            }
            let remaining = k - chosen.len();
            for i in start..elements.len() {
                if elements.len() - i < remaining {
                    break;
                }
                chosen.push(elements[i]);
                walk(elements, k, i + 1, chosen, out);
                chosen.pop();
            }
        }
        if k <= elements.len() {
            walk(&elements, k, 0, &mut chosen, &mut out);
        }
        out
    }
}

impl Ord for FaceSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for FaceSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for FaceSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        FaceSet::from_vertices(iter)
    }
}

impl Serialize for FaceSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for FaceSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let vertices = Vec::<usize>::deserialize(deserializer)?;
        if let Some(bad) = vertices.iter().find(|v| !(1..=MAX_VERTICES).contains(v)) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(FaceSet::from_vertices(vertices))
    }
}
