use std::collections::BTreeSet;

use moment_angle::series::{growth_classify, roots_in_disk, GrowthKind, IntPolynomial, RationalFunction};
use moment_angle::{
    census_complexes, classify, is_in_a_m, join_decompose, minimal_non_faces, minimal_witness_subset,
    wedge_retract_witness, Error, FaceSet, SimplicialComplex, VerdictKind,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn brute_is_face(k: &SimplicialComplex, s: FaceSet) -> bool {
    k.facets().iter().any(|f| s.bits() & !f.bits() == 0)
}

fn all_subsets(m: usize) -> impl Iterator<Item = FaceSet> {
    (0..1u64 << m).map(FaceSet::from_bits)
}

/// Random complexes on up to `max_m` vertices, every vertex a face.
fn complex(max_m: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_m).prop_flat_map(|m| {
        prop::collection::vec(1..(1u64 << m), 0..6).prop_map(move |bits| {
            let mut raw: Vec<FaceSet> = (1..=m).map(FaceSet::singleton).collect();
            raw.extend(bits.into_iter().map(FaceSet::from_bits));
            SimplicialComplex::normalize(&raw, m).unwrap()
        })
    })
}

fn poly(max_deg: usize) -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|c| IntPolynomial::from_i64s(&c))
}

/// Rational functions with denominator constant term 1.
fn rational() -> impl Strategy<Value = RationalFunction> {
    (poly(4), prop::collection::vec(-4i64..=4, 0..4)).prop_map(|(num, tail)| {
        let mut den = vec![1];
        den.extend(tail);
        RationalFunction::new(num, IntPolynomial::from_i64s(&den)).unwrap()
    })
}

fn convolve(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    (0..=n).map(|i| (0..=i).map(|j| &a[j] * &b[i - j]).sum()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn faces_are_closed_under_subsets(k in complex(6)) {
        for s in all_subsets(k.m()) {
            prop_assert_eq!(k.is_face(s), brute_is_face(&k, s));
            if k.is_face(s) {
                for v in s.iter() {
                    prop_assert!(k.is_face(s.without(v)));
                }
            }
        }
    }

    #[test]
    fn full_subcomplex_matches_restriction(k in complex(6), bits in 1u64..64) {
        let index = FaceSet::from_bits(bits & FaceSet::ground(k.m()).bits());
        prop_assume!(!index.is_empty());
        let sub = k.full_subcomplex(index).unwrap();
        let lifted: BTreeSet<FaceSet> = sub
            .complex
            .faces()
            .into_iter()
            .map(|f| f.iter().map(|v| sub.vertices[v - 1]).collect())
            .collect();
        let expected: BTreeSet<FaceSet> = k.faces().into_iter().filter(|f| f.is_subset(index)).collect();
        prop_assert_eq!(lifted, expected);
    }

    #[test]
    fn join_restricts_to_its_factors(k in complex(4), l in complex(4)) {
        let j = k.join(&l).unwrap();
        prop_assert_eq!(&j.full_subcomplex(k.ground_set()).unwrap().complex, &k);
        let tail = FaceSet::ground(l.m()).shifted(k.m());
        prop_assert_eq!(&j.full_subcomplex(tail).unwrap().complex, &l);
    }

    #[test]
    fn join_f_vector_is_a_convolution(k in complex(4), l in complex(4)) {
        let (a, b) = (k.f_vector(), l.f_vector());
        let (a, b) = (a.by_size(), b.by_size());
        let mut expected = vec![0u64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                expected[i + j] += x * y;
            }
        }
        let joined = k.join(&l).unwrap().f_vector();
        prop_assert_eq!(joined.by_size(), &expected[..]);
    }

    #[test]
    fn join_minimal_non_faces_are_the_union(k in complex(4), l in complex(4)) {
        let mut expected: Vec<FaceSet> = minimal_non_faces(&k).mnfs().to_vec();
        expected.extend(minimal_non_faces(&l).mnfs().iter().map(|f| f.shifted(k.m())));
        expected.sort();
        let joined = minimal_non_faces(&k.join(&l).unwrap());
        prop_assert_eq!(joined.mnfs(), &expected[..]);
    }

    #[test]
    fn minimal_non_faces_match_definition(k in complex(6)) {
        let brute: Vec<FaceSet> = all_subsets(k.m())
            .filter(|&s| !brute_is_face(&k, s) && s.iter().all(|v| brute_is_face(&k, s.without(v))))
            .collect();
        let mut fast = minimal_non_faces(&k).mnfs().to_vec();
        fast.sort();
        let mut brute = brute;
        brute.sort();
        prop_assert_eq!(fast, brute);
    }

    #[test]
    fn minimal_non_face_spans_a_simplex_boundary(k in complex(6)) {
        for &s in minimal_non_faces(&k).mnfs() {
            let sub = k.full_subcomplex(s).unwrap().complex;
            prop_assert_eq!(sub, SimplicialComplex::boundary_simplex(s.len()).unwrap());
        }
    }

    #[test]
    fn decomposition_round_trips(k in complex(6)) {
        let elliptic = classify(&k).unwrap().kind == VerdictKind::Elliptic;
        match join_decompose(&k) {
            Ok(d) => {
                prop_assert!(elliptic);
                prop_assert_eq!(d.reconstruct(k.m()).unwrap(), k);
            }
            Err(Error::NotElliptic(..)) => prop_assert!(!elliptic),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn json_round_trip(k in complex(6)) {
        let parsed = SimplicialComplex::from_json(&k.to_json(), Default::default()).unwrap();
        prop_assert_eq!(parsed, k);
    }

    #[test]
    fn expand_is_a_ring_homomorphism(f in rational(), g in rational()) {
        const N: usize = 15;
        let (a, b) = (f.expand(N), g.expand(N));
        prop_assert_eq!((&f * &g).expand(N), convolve(&a, &b, N));
        let sum: Vec<BigInt> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        prop_assert_eq!((&f + &g).expand(N), sum);
    }

    #[test]
    fn reduction_is_canonical(f in rational(), extra in prop::collection::vec(-3i64..=3, 0..3)) {
        let mut c = vec![1];
        c.extend(extra);
        let c = IntPolynomial::from_i64s(&c);
        let lifted = RationalFunction::new(f.numerator() * &c, f.denominator() * &c).unwrap();
        prop_assert_eq!(&lifted, &f);
        prop_assert_eq!(f.denominator().constant_term(), BigInt::from(1));
    }

    #[test]
    fn gcd_divides_both(a in poly(5), b in poly(5)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let g = a.gcd(&b);
        prop_assert!(a.divexact(&g).is_ok());
        prop_assert!(b.divexact(&g).is_ok());
    }

    /// Products of `(a - b t)` and `(a + c t²)` have known root moduli.
    #[test]
    fn schur_cohn_counts_known_roots(
        linear in prop::collection::vec((1i64..=7, 1i64..=7, any::<bool>()), 0..4),
        quadratic in prop::collection::vec((1i64..=5, 1i64..=5, any::<bool>()), 0..3),
    ) {
        // squared root moduli, as exact rationals
        let mut moduli: Vec<BigRational> = Vec::new();
        let mut p = IntPolynomial::one();
        let mut inside = 0;
        for &(a, b, neg) in &linear {
            prop_assume!(a != b);
            let s = if neg { -1 } else { 1 };
            p = &p * &IntPolynomial::from_i64s(&[a, -s * b]);
            moduli.push(BigRational::new((a * a).into(), (b * b).into()));
            inside += usize::from(a < b);
        }
        for &(a, c, neg) in &quadratic {
            prop_assume!(a != c);
            let s = if neg { -1 } else { 1 };
            p = &p * &IntPolynomial::from_i64s(&[a, 0, s * c]);
            for _ in 0..2 {
                moduli.push(BigRational::new(a.into(), c.into()));
            }
            inside += 2 * usize::from(a < c);
        }
        let one = BigRational::from_integer(1.into());
        let paired = moduli.iter().enumerate().any(|(i, x)| moduli.iter().skip(i + 1).any(|y| x * y == one));
        match roots_in_disk(&p) {
            Ok(n) => prop_assert_eq!(n, inside),
            Err(Error::BoundaryRootUnresolved) => prop_assert!(paired),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn growth_detects_interior_poles(
        cyclo in prop::collection::vec(1usize..=8, 0..4),
        slopes in prop::collection::vec(-3i64..=3, 0..3),
        num in poly(3),
    ) {
        prop_assume!(!num.is_zero());
        let mut den = IntPolynomial::one();
        for &k in &cyclo {
            den = &den * &IntPolynomial::binomial(k, -1);
        }
        for &b in &slopes {
            den = &den * &IntPolynomial::from_i64s(&[1, -b]);
        }
        let f = RationalFunction::new(num, den).unwrap();
        // the only candidate interior poles are the 1/b with |b| ≥ 2 that survive reduction
        let reversed = f.denominator().reversed();
        let exponential = slopes.iter().any(|&b| b.abs() >= 2 && reversed.eval(&BigInt::from(b)) == BigInt::from(0));
        let expected = if exponential { GrowthKind::Exponential } else { GrowthKind::SubExponential };
        prop_assert_eq!(growth_classify(&f).unwrap().kind, expected);
    }
}

#[test]
fn census_complexes_are_distinct_and_ghost_free() {
    for m in 0..=5 {
        let all = census_complexes(m).unwrap();
        let distinct: BTreeSet<String> = all.iter().map(|k| k.to_json()).collect();
        assert_eq!(distinct.len(), all.len());
        assert!(all.iter().all(|k| !k.has_ghost_vertices() && k.m() == m));
    }
}

/// Inclusion-minimal `S` with `K_S` hyperbolic, lexicographically first.
fn brute_witness_subset(k: &SimplicialComplex) -> Option<FaceSet> {
    let hyperbolic: Vec<FaceSet> = all_subsets(k.m())
        .filter(|s| !s.is_empty())
        .filter(|&s| classify(&k.full_subcomplex(s).unwrap().complex).unwrap().kind == VerdictKind::Hyperbolic)
        .collect();
    hyperbolic.iter().copied().filter(|s| !hyperbolic.iter().any(|t| t != s && t.is_subset(*s))).min()
}

#[test]
fn witness_subset_matches_brute_force() {
    for m in 0..=5 {
        for k in census_complexes(m).unwrap() {
            let got = minimal_witness_subset(&k).ok();
            assert_eq!(got, brute_witness_subset(&k), "{}", k.to_json());
            if let Some(s) = got {
                assert!(is_in_a_m(&k.full_subcomplex(s).unwrap().complex));
                assert_eq!(is_in_a_m(&k), s == k.ground_set(), "{}", k.to_json());
                let w = wedge_retract_witness(&k).unwrap();
                assert_eq!(w.ambient_subset, w.i.union(w.j));
            } else {
                assert!(!is_in_a_m(&k));
            }
        }
    }
}
