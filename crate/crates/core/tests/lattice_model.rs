use csl_core::generate::{cayley_rotation, random_similarity, Family, ALL_FAMILIES};
use csl_core::oracle::coincidence_indices_by_counting;
use csl_core::scalar::{int, rat};
use csl_core::{
    is_commensurate, Error, Lattice, QuadExt, RatMatrix, Rational, SimilarityMap,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(ALL_FAMILIES.to_vec())
}

fn map_of(family: Family, seed: u64) -> SimilarityMap {
    random_similarity(family, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=7, 1i64..=7, any::<bool>()).prop_map(|(p, q, neg)| rat(if neg { -p } else { p }, q))
}

fn is_rational_square(r: &Rational) -> bool {
    csl_core::scalar::rational_sqrt(r).is_some()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn square_closure(f in family(), seed in any::<u64>()) {
        let s = map_of(f, seed);
        let sq = s.compose(&s).unwrap();
        prop_assert!(sq.normalize_to_coincidence().is_ok());
    }

    #[test]
    fn odd_dimension_collapse(seed in any::<u64>(), diag in any::<bool>()) {
        let f = if diag { Family::Diag123 } else { Family::Cubic3 };
        let s = map_of(f, seed);
        prop_assert!(is_rational_square(s.multiplier()));
        prop_assert!(s.normalize_to_coincidence().is_ok());
    }

    #[test]
    fn rational_rescaling(f in family(), seed in any::<u64>(), b in nonzero_rational()) {
        let s = map_of(f, seed);
        match s.rescale(&b) {
            Ok(r) => prop_assert_eq!(r.multiplier(), &(&b * &b * s.multiplier())),
            // −I reverses orientation in odd dimension
            Err(e) => prop_assert!(f.dim() % 2 == 1 && b < int(0) && e == Error::OrientationReversing),
        }
    }

    #[test]
    fn proportional_maps_have_square_ratio(f in family(), seed in any::<u64>(), c in nonzero_rational()) {
        let s = map_of(f, seed);
        let c = if f.dim() % 2 == 1 { num_traits::Signed::abs(&c) } else { c };
        let other = SimilarityMap::new(s.lattice(), s.matrix().scale(&c)).unwrap();
        let ratio = other.multiplier() / s.multiplier();
        prop_assert!(is_rational_square(&ratio));
        prop_assert_eq!(ratio, &c * &c);
    }

    #[test]
    fn inverse_and_compose(f in family(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = map_of(f, s1);
        let b = map_of(f, s2);
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.multiplier(), &(a.multiplier() * b.multiplier()));
        let id = a.compose(&a.invert()).unwrap();
        prop_assert!(id.matrix().is_identity() && id.is_coincidence());
        // the product revalidates from scratch
        prop_assert_eq!(SimilarityMap::new(ab.lattice(), ab.matrix().clone()).unwrap(), ab);
    }

    #[test]
    fn coincidence_index_matches_counting(f in prop::sample::select(vec![Family::Square, Family::Hexagonal, Family::Rect(2), Family::Cubic3]), seed in any::<u64>()) {
        let lattice = f.lattice();
        let t = cayley_rotation(&lattice, &mut ChaCha8Rng::seed_from_u64(seed), 2);
        let s = SimilarityMap::new(&lattice, t.clone()).unwrap();
        let sigma = s.coincidence_index().unwrap();
        prop_assume!(sigma.sigma1 <= BigInt::from(50));
        let (o1, o2) = coincidence_indices_by_counting(&t);
        prop_assert_eq!(sigma.sigma1, BigInt::from(o1));
        prop_assert_eq!(sigma.sigma2, BigInt::from(o2));
    }

    #[test]
    fn rational_rotations_of_z2_are_coincidences(p in 0i64..40, q in 1i64..40, neg in any::<bool>()) {
        // (p² − q², 2pq) / (p² + q²) parametrizes every rational point of the circle
        let n = p * p + q * q;
        let x = rat(p * p - q * q, n);
        let y = rat(if neg { -2 * p * q } else { 2 * p * q }, n);
        let t = RatMatrix::from_rows(vec![vec![x.clone(), -&y], vec![y, x]]).unwrap();
        let s = SimilarityMap::new(&Lattice::cubic(2), t).unwrap();
        prop_assert!(s.is_coincidence());
        prop_assert!(s.coincidence_index().is_ok());
    }

    #[test]
    fn commensurate_is_an_equivalence(entries in prop::collection::vec((-5i64..=5, 1i64..=3), 12), flags in any::<[bool; 3]>()) {
        let root2 = QuadExt::sqrt_of(2).unwrap();
        let mats: Vec<_> = entries
            .chunks(4)
            .map(|c| RatMatrix::new(2, 2, c.iter().map(|&(p, q)| rat(p, q)).collect()).unwrap())
            .collect();
        prop_assume!(mats.iter().all(|m| !num_traits::Zero::is_zero(&m.det().unwrap())));
        let bases: Vec<_> = mats
            .iter()
            .zip(flags)
            .map(|(m, f)| {
                let q = m.to_quad(2).unwrap();
                if f { q.scale(&root2) } else { q }
            })
            .collect();
        let rel = |i: usize, j: usize| is_commensurate(&bases[i], &bases[j]).unwrap();
        for i in 0..3 {
            prop_assert!(rel(i, i));
            for j in 0..3 {
                prop_assert_eq!(rel(i, j), rel(j, i));
                prop_assert_eq!(rel(i, j), flags[i] == flags[j]);
                for k in 0..3 {
                    prop_assert!(!(rel(i, j) && rel(j, k)) || rel(i, k));
                }
            }
        }
    }
}

#[test]
fn validation_examples() {
    let z2 = Lattice::cubic(2);
    let s = SimilarityMap::new(&z2, RatMatrix::from_i64(&[[1, -1], [1, 1]])).unwrap();
    assert_eq!(s.multiplier(), &int(2));
    let sigma = s.coincidence_index().unwrap();
    assert_eq!((sigma.sigma1, sigma.sigma2), (BigInt::from(2), BigInt::from(1)));
    assert_eq!(
        SimilarityMap::new(&z2, RatMatrix::from_i64(&[[1, 0], [0, -1]])).unwrap_err(),
        Error::OrientationReversing
    );
    assert_eq!(
        Lattice::new(RatMatrix::from_i64(&[[1, 2], [2, 1]])).unwrap_err(),
        Error::NotPositiveDefinite
    );
    let r = RatMatrix::from_rows(vec![vec![rat(3, 5), rat(-4, 5)], vec![rat(4, 5), rat(3, 5)]]).unwrap();
    let c = SimilarityMap::new(&z2, r.clone()).unwrap();
    let sigma = c.coincidence_index().unwrap();
    assert_eq!((sigma.sigma1.clone(), sigma.sigma2.clone()), (BigInt::from(5), BigInt::from(5)));
    assert_eq!(coincidence_indices_by_counting(&r), (5, 5));
}

#[test]
fn negative_commensurateness() {
    let id = RatMatrix::identity(2).to_quad(2).unwrap();
    let root2 = id.scale(&QuadExt::sqrt_of(2).unwrap());
    assert!(!is_commensurate(&id, &root2).unwrap());
    let half_root2 = QuadExt::parse("1/2*sqrt(2)", None).unwrap();
    let bare = RatMatrix::from_i64(&[[1, -1], [1, 1]]).to_quad(2).unwrap().scale(&half_root2);
    assert!(!is_commensurate(&id, &bare).unwrap());
    assert!(is_commensurate(&id, &id.scale(&QuadExt::parse("3/2+0*sqrt(2)", None).unwrap())).unwrap());
}
