use std::collections::BTreeSet;

use csl_core::arith::squarefree_part;
use csl_core::generate::{random_similarity, Family, ALL_FAMILIES};
use csl_core::{
    class_mul, class_order, eta_checked, eta_of, eta_of_direction, gauss_matrix, is_in_kernel,
    sos_decompose, EtaClass, GaussInt, Lattice, SimilarityMap,
};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(ALL_FAMILIES.to_vec())
}

fn map_of(f: Family, seed: u64) -> SimilarityMap {
    random_similarity(f, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn class(n: u64) -> EtaClass {
    EtaClass::from_squarefree(BigUint::from(n)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn eta_is_a_homomorphism(f in family(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let (a, b) = (map_of(f, s1), map_of(f, s2));
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(eta_of(&ab), class_mul(&eta_of(&a), &eta_of(&b)));
    }

    #[test]
    fn kernel_is_soc(f in family(), seed in any::<u64>()) {
        let s = map_of(f, seed);
        prop_assert_eq!(is_in_kernel(&s), s.normalize_to_coincidence().is_ok());
    }

    #[test]
    fn image_is_elementary_two_group(f in family(), seed in any::<u64>()) {
        let s = map_of(f, seed);
        let c = eta_of(&s);
        prop_assert!(class_mul(&c, &c).is_identity());
        prop_assert!(class_order(&c) <= 2);
        // non-identity classes only in even dimension
        prop_assert!(c.is_identity() || f.dim() % 2 == 0);
        let (_, order) = eta_checked(&s).unwrap();
        prop_assert_eq!(f.dim() as u32 % order, 0);
    }

    #[test]
    fn cross_engine_agreement(a in -60i64..=60, b in -60i64..=60) {
        prop_assume!(a != 0 || b != 0);
        let z = GaussInt::new(a, b);
        let s = SimilarityMap::new(&Lattice::cubic(2), gauss_matrix(&z)).unwrap();
        let direct = eta_of_direction(&sos_decompose(&z).unwrap());
        prop_assert_eq!(&direct, &eta_of(&s));
        let norm = BigUint::try_from(z.norm()).unwrap();
        prop_assert_eq!(direct.squarefree_part(), &squarefree_part(&norm).unwrap());
    }

    #[test]
    fn class_mul_laws(x in 1u64..200, y in 1u64..200, z in 1u64..200) {
        let sf = |n: u64| EtaClass::from_squarefree(squarefree_part(&BigUint::from(n)).unwrap()).unwrap();
        let (x, y, z) = (sf(x), sf(y), sf(z));
        prop_assert_eq!(class_mul(&x, &y), class_mul(&y, &x));
        prop_assert_eq!(class_mul(&class_mul(&x, &y), &z), class_mul(&x, &class_mul(&y, &z)));
        prop_assert_eq!(class_mul(&x, &EtaClass::identity()), x.clone());
    }
}

#[test]
fn class_examples() {
    assert_eq!(class_mul(&class(2), &class(2)), class(1));
    assert_eq!(class_mul(&class(6), &class(10)), class(15));
    assert_eq!(class_order(&class(1)), 1);
    assert_eq!(class_order(&class(30)), 2);
    assert!(EtaClass::from_squarefree(BigUint::from(4u8)).is_err());
}

#[test]
fn kernel_examples() {
    let z2 = Lattice::cubic(2);
    let m = |rows: &[[i64; 2]; 2]| SimilarityMap::new(&z2, csl_core::RatMatrix::from_i64(rows)).unwrap();
    assert!(is_in_kernel(&m(&[[0, -1], [1, 0]])));
    assert!(!is_in_kernel(&m(&[[1, -1], [1, 1]])));
    assert!(is_in_kernel(&m(&[[0, -2], [2, 0]])));
}

/// Squarefree parts of every norm `a² + b² ≤ bound`, by direct enumeration.
fn norm_classes(bound: i64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for a in -10..=10i64 {
        for b in -10..=10i64 {
            let n = a * a + b * b;
            if n == 0 || n > bound {
                continue;
            }
            let mut n = n as u64;
            let mut sf = 1;
            let mut p = 2;
            while p * p <= n {
                while n % (p * p) == 0 {
                    n /= p * p;
                }
                if n % p == 0 {
                    sf *= p;
                    n /= p;
                }
                p += 1;
            }
            out.insert(sf * n);
        }
    }
    out
}

#[test]
fn image_at_desk_scale() {
    let mut image = BTreeSet::new();
    for a in -10..=10i64 {
        for b in -10..=10i64 {
            if (a, b) == (0, 0) || a * a + b * b > 100 {
                continue;
            }
            let c = eta_of_direction(&sos_decompose(&GaussInt::new(a, b)).unwrap());
            assert!(class_mul(&c, &c).is_identity());
            image.insert(u64::try_from(c.squarefree_part().clone()).unwrap());
        }
    }
    assert_eq!(image, norm_classes(100));
    let gens = [2u64, 5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97];
    for c in &image {
        let mut rest = *c;
        for p in gens {
            if rest % p == 0 {
                rest /= p;
            }
        }
        assert_eq!(rest, 1, "class {c} is not a product of 2 and split primes");
    }
}
