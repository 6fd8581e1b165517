use csl_core::oracle::{
    cofactor_det, cofactor_det_int, invariant_factors, sublattice_index_by_counting,
};
use csl_core::sublattice::contains;
use csl_core::{
    clear_denominators, hnf, index_of_sublattice, lattice_intersection, quad_arith, rat_inverse,
    snf, IntMatrix, QuadExt, QuadOp, RatMatrix, Rational,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn int_matrix(d: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(lo..=hi, d * d).prop_map(move |v| {
        IntMatrix::new(d, d, v.into_iter().map(BigInt::from).collect()).unwrap()
    })
}

fn any_int_matrix() -> impl Strategy<Value = IntMatrix> {
    (2usize..=5).prop_flat_map(|d| int_matrix(d, -9, 9))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn rat_matrix(d: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(rational(), d * d)
        .prop_map(move |v| RatMatrix::new(d, d, v).unwrap())
        .prop_filter("nonsingular", |m| !m.det().unwrap().is_zero())
}

/// Products of elementary row operations and row swaps.
fn unimodular(d: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..d, 0..d, -3i64..=3), 0..8).prop_map(move |ops| {
        let mut u = IntMatrix::identity(d);
        for (i, j, k) in ops {
            if i == j {
                u.swap_rows(i, (i + 1) % d);
                continue;
            }
            for c in 0..d {
                let v = &u[(i, c)] + BigInt::from(k) * &u[(j, c)];
                u[(i, c)] = v;
            }
        }
        u
    })
}

fn is_unimodular(u: &IntMatrix) -> bool {
    cofactor_det_int(u).abs().is_one()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_diagonal_product_is_abs_det(m in any_int_matrix()) {
        let det = cofactor_det_int(&m);
        prop_assume!(!det.is_zero());
        let s = snf(&m).unwrap();
        let prod = s.diagonal().iter().fold(BigInt::one(), |a, b| a * b);
        prop_assert_eq!(prod, det.abs());
    }

    #[test]
    fn snf_reproduces_and_matches_determinantal_divisors(m in any_int_matrix()) {
        prop_assume!(!cofactor_det_int(&m).is_zero());
        let s = snf(&m).unwrap();
        prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d.clone());
        prop_assert!(s.d.is_diagonal());
        prop_assert!(is_unimodular(&s.u) && is_unimodular(&s.v));
        let diag = s.diagonal();
        for w in diag.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert_eq!(diag, invariant_factors(&m));
    }

    #[test]
    fn hnf_reproduces(m in any_int_matrix()) {
        prop_assume!(!cofactor_det_int(&m).is_zero());
        let r = hnf(&m, false).unwrap();
        prop_assert_eq!(r.u.mul(&m).unwrap(), r.h.clone());
        prop_assert!(is_unimodular(&r.u));
        let d = m.rows();
        for i in 0..d {
            prop_assert!(r.h[(i, i)].is_positive());
            for j in 0..i {
                prop_assert!(r.h[(i, j)].is_zero());
            }
            for k in 0..i {
                prop_assert!(!r.h[(k, i)].is_negative() && r.h[(k, i)] < r.h[(i, i)]);
            }
        }
    }

    #[test]
    fn hnf_is_canonical(m in int_matrix(3, -5, 5), u in unimodular(3)) {
        prop_assume!(!cofactor_det_int(&m).is_zero());
        prop_assert!(is_unimodular(&u));
        let um = u.mul(&m).unwrap();
        prop_assert_eq!(hnf(&m, false).unwrap().h, hnf(&um, false).unwrap().h);
    }

    #[test]
    fn inverse_matches_adjugate(m in (2usize..=4).prop_flat_map(rat_matrix)) {
        prop_assert_eq!(m.det().unwrap(), cofactor_det(&m));
        prop_assert_eq!(Some(rat_inverse(&m).unwrap()), csl_core::oracle::adjugate_inverse(&m));
    }

    #[test]
    fn index_matches_counting(c in (2usize..=3).prop_flat_map(|d| int_matrix(d, -4, 4)), b in rat_matrix(2)) {
        let det = cofactor_det_int(&c).abs();
        prop_assume!(!det.is_zero() && det <= BigInt::from(50));
        let cr = c.to_rational();
        let d = c.rows();
        let expected = BigInt::from(sublattice_index_by_counting(&cr));
        prop_assert_eq!(index_of_sublattice(&RatMatrix::identity(d), &cr).unwrap(), expected.clone());
        if d == 2 {
            // the index is invariant under a common change of basis
            let bc = b.mul(&cr).unwrap();
            prop_assert_eq!(index_of_sublattice(&b, &bc).unwrap(), expected);
        }
    }

    #[test]
    fn intersection_containment(b1 in rat_matrix(2), b2 in rat_matrix(2)) {
        let c = lattice_intersection(&b1, &b2).unwrap();
        prop_assert!(contains(&b1, &c).unwrap());
        prop_assert!(contains(&b2, &c).unwrap());
        let (t1, _) = clear_denominators(&rat_inverse(&b1).unwrap().mul(&b2).unwrap());
        let (t2, _) = clear_denominators(&rat_inverse(&b2).unwrap().mul(&b1).unwrap());
        let t = Rational::from_integer(t1 * t2);
        prop_assert!(contains(&c, &b1.scale(&t)).unwrap());
        prop_assert!(contains(&c, &b2.scale(&t)).unwrap());
        // [L1 : C] · |det B1| = [L2 : C] · |det B2| = |det C|
        let i1 = Rational::from_integer(index_of_sublattice(&b1, &c).unwrap());
        let i2 = Rational::from_integer(index_of_sublattice(&b2, &c).unwrap());
        prop_assert_eq!(i1 * b1.det().unwrap().abs(), c.det().unwrap().abs());
        prop_assert_eq!(i2 * b2.det().unwrap().abs(), c.det().unwrap().abs());
    }

    #[test]
    fn intersection_is_symmetric_as_a_lattice(b1 in rat_matrix(2), b2 in rat_matrix(2)) {
        let c12 = lattice_intersection(&b1, &b2).unwrap();
        let c21 = lattice_intersection(&b2, &b1).unwrap();
        prop_assert!(contains(&c12, &c21).unwrap() && contains(&c21, &c12).unwrap());
    }
}

fn quad(n: u64) -> impl Strategy<Value = QuadExt> {
    (rational(), rational()).prop_map(move |(a, b)| QuadExt::new(a, b, n).unwrap())
}

fn quad_triple() -> impl Strategy<Value = (QuadExt, QuadExt, QuadExt)> {
    prop::sample::select(vec![2u64, 3, 5, 6, 7, 10]).prop_flat_map(|n| (quad(n), quad(n), quad(n)))
}

fn op(x: &QuadExt, y: &QuadExt, o: QuadOp) -> QuadExt {
    quad_arith(x, y, o).unwrap()
}

proptest! {
    #[test]
    fn quad_field_axioms((x, y, z) in quad_triple()) {
        use QuadOp::*;
        let n = x.radicand();
        let zero = QuadExt::from_rational(Rational::zero(), n).unwrap();
        let one = QuadExt::from_rational(Rational::one(), n).unwrap();
        prop_assert_eq!(op(&op(&x, &y, Add), &z, Add), op(&x, &op(&y, &z, Add), Add));
        prop_assert_eq!(op(&op(&x, &y, Mul), &z, Mul), op(&x, &op(&y, &z, Mul), Mul));
        prop_assert_eq!(op(&x, &y, Add), op(&y, &x, Add));
        prop_assert_eq!(op(&x, &y, Mul), op(&y, &x, Mul));
        prop_assert_eq!(op(&x, &op(&y, &z, Add), Mul), op(&op(&x, &y, Mul), &op(&x, &z, Mul), Add));
        prop_assert_eq!(op(&x, &zero, Add), x.clone());
        prop_assert_eq!(op(&x, &one, Mul), x.clone());
        prop_assert_eq!(op(&x, &x, Sub), zero.clone());
        if x != zero {
            prop_assert_eq!(op(&x, &x, Div), one.clone());
            prop_assert_eq!(op(&op(&y, &x, Div), &x, Mul), y.clone());
        } else {
            prop_assert_eq!(quad_arith(&y, &x, Div), Err(csl_core::Error::DivisionByZero));
        }
        prop_assert_eq!(op(&x, &y, Mul).norm(), x.norm() * y.norm());
    }

    #[test]
    fn rationality_is_exact(a in rational(), b in rational()) {
        let x = QuadExt::new(a.clone(), b.clone(), 2).unwrap();
        prop_assert_eq!(x.is_rational(), b.is_zero());
        // x·x̄ is always rational
        prop_assert!(op(&x, &x.conj(), QuadOp::Mul).is_rational());
        prop_assert_eq!(QuadExt::parse(&x.to_string(), None).unwrap(), x);
    }
}

#[test]
fn normal_form_examples() {
    let m = IntMatrix::from_i64(&[[2, 4], [6, 8]]);
    assert_eq!(snf(&m).unwrap().diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
    assert_eq!(hnf(&m, false).unwrap().h, IntMatrix::from_i64(&[[2, 0], [0, 4]]));
    let d = IntMatrix::from_i64(&[[2, 0], [0, 3]]);
    assert_eq!(snf(&d).unwrap().diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
}

#[test]
fn index_example() {
    let c = RatMatrix::from_i64(&[[3, -4], [4, 3]]);
    assert_eq!(index_of_sublattice(&RatMatrix::identity(2), &c).unwrap(), BigInt::from(25));
    assert_eq!(sublattice_index_by_counting(&c), 25);
}
