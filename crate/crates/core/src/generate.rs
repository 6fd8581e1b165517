//! Seeded random sampling of lattices and valid similarity maps, for the
//! verification suites and property tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::gauss::{gauss_matrix, GaussInt};
use crate::lattice::{Lattice, SimilarityMap};
use crate::matrix::RatMatrix;
use crate::scalar::{int, rat, Rational};

/// Test lattices with rational Gram matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `Z²`
    Square,
    /// `A₂`, Gram `[[2,1],[1,2]]`
    Hexagonal,
    /// Gram `diag(1, k)`
    Rect(i64),
    /// `Z³`
    Cubic3,
    /// Gram `diag(1,2,3)`
    Diag123,
    /// `Z⁴`
    Cubic4,
    /// Gram `diag(1,1,2,2)`
    Diag1122,
}

impl Family {
    pub fn lattice(self) -> Lattice {
        match self {
            Family::Square => Lattice::cubic(2),
            Family::Hexagonal => Lattice::hexagonal(),
            Family::Rect(k) => Lattice::diagonal(&[1, k]).expect("k > 0"),
            Family::Cubic3 => Lattice::cubic(3),
            Family::Diag123 => Lattice::diagonal(&[1, 2, 3]).expect("positive"),
            Family::Cubic4 => Lattice::cubic(4),
            Family::Diag1122 => Lattice::diagonal(&[1, 1, 2, 2]).expect("positive"),
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Family::Square | Family::Hexagonal | Family::Rect(_) => 2,
            Family::Cubic3 | Family::Diag123 => 3,
            Family::Cubic4 | Family::Diag1122 => 4,
        }
    }

    pub fn name(self) -> String {
        match self {
            Family::Square => "Z2".into(),
            Family::Hexagonal => "hexagonal".into(),
            Family::Rect(k) => format!("diag(1,{k})"),
            Family::Cubic3 => "Z3".into(),
            Family::Diag123 => "diag(1,2,3)".into(),
            Family::Cubic4 => "Z4".into(),
            Family::Diag1122 => "diag(1,1,2,2)".into(),
        }
    }
}

pub const ALL_FAMILIES: [Family; 7] = [
    Family::Square,
    Family::Hexagonal,
    Family::Rect(3),
    Family::Cubic3,
    Family::Diag123,
    Family::Cubic4,
    Family::Diag1122,
];

pub fn random_gauss(rng: &mut impl Rng, bound: i64) -> GaussInt {
    loop {
        let z = GaussInt::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if !z.is_zero() {
            return z;
        }
    }
}

/// A nonzero rational `p/q` with `|p|, q ≤ bound`.
pub fn random_rational(rng: &mut impl Rng, bound: i64, positive: bool) -> Rational {
    let p = rng.gen_range(1..=bound);
    let q = rng.gen_range(1..=bound);
    if positive || rng.gen_bool(0.5) {
        rat(p, q)
    } else {
        rat(-p, q)
    }
}

fn from_rows(rows: Vec<Vec<Rational>>) -> RatMatrix {
    RatMatrix::from_rows(rows).expect("square literal")
}

/// Cayley transform `(I − A)⁻¹(I + A)` of `A = G⁻¹S` for a random
/// skew-symmetric integer `S`; always a rotation of the lattice.
pub fn cayley_rotation(lattice: &Lattice, rng: &mut impl Rng, bound: i64) -> RatMatrix {
    let d = lattice.dim();
    let mut s = RatMatrix::from_rows(vec![vec![int(0); d]; d]).expect("square");
    for i in 0..d {
        for j in i + 1..d {
            let v = int(rng.gen_range(-bound..=bound));
            s[(j, i)] = -&v;
            s[(i, j)] = v;
        }
    }
    let a = lattice.gram().inverse().expect("positive definite").mul(&s).expect("square");
    let id = RatMatrix::identity(d);
    let plus = from_rows((0..d).map(|i| (0..d).map(|j| &id[(i, j)] + &a[(i, j)]).collect()).collect());
    let minus = from_rows((0..d).map(|i| (0..d).map(|j| &id[(i, j)] - &a[(i, j)]).collect()).collect());
    minus.inverse().expect("I - A is invertible for G-skew A").mul(&plus).expect("square")
}

/// A similarity with a possibly non-square multiplier, specific to the
/// family's arithmetic (Gaussian, Eisenstein, quaternion multiplication).
fn scaled_generator(family: Family, rng: &mut impl Rng, bound: i64) -> RatMatrix {
    let r = |rng: &mut dyn rand::RngCore| rng.gen_range(-bound..=bound);
    match family {
        Family::Square => gauss_matrix(&random_gauss(rng, bound)),
        Family::Hexagonal => loop {
            // multiplication by a + bζ with ζ = e^{iπ/3}
            let (a, b) = (r(rng), r(rng));
            if a != 0 || b != 0 {
                break from_rows(vec![vec![int(a), int(-b)], vec![int(b), int(a + b)]]);
            }
        },
        Family::Rect(k) => loop {
            // multiplication by a + b√−k
            let (a, b) = (r(rng), r(rng));
            if a != 0 || b != 0 {
                break from_rows(vec![vec![int(a), int(-k * b)], vec![int(b), int(a)]]);
            }
        },
        Family::Cubic4 => loop {
            // left multiplication by the quaternion a + bi + cj + dk
            let (a, b, c, d) = (r(rng), r(rng), r(rng), r(rng));
            if a != 0 || b != 0 || c != 0 || d != 0 {
                break from_rows(vec![
                    vec![int(a), int(-b), int(-c), int(-d)],
                    vec![int(b), int(a), int(-d), int(c)],
                    vec![int(c), int(d), int(a), int(-b)],
                    vec![int(d), int(-c), int(b), int(a)],
                ]);
            }
        },
        Family::Diag1122 => {
            // the same Gaussian multiplication on both coordinate planes
            let g = gauss_matrix(&random_gauss(rng, bound));
            let z = int(0);
            from_rows(vec![
                vec![g[(0, 0)].clone(), g[(0, 1)].clone(), z.clone(), z.clone()],
                vec![g[(1, 0)].clone(), g[(1, 1)].clone(), z.clone(), z.clone()],
                vec![z.clone(), z.clone(), g[(0, 0)].clone(), g[(0, 1)].clone()],
                vec![z.clone(), z.clone(), g[(1, 0)].clone(), g[(1, 1)].clone()],
            ])
        }
        Family::Cubic3 | Family::Diag123 => RatMatrix::identity(family.dim()),
    }
}

/// A random valid similarity map: a family generator, a Cayley rotation and
/// a rational rescaling, multiplied together.
pub fn random_similarity(family: Family, rng: &mut impl Rng) -> SimilarityMap {
    let lattice = family.lattice();
    let mut t = scaled_generator(family, rng, 3);
    if rng.gen_bool(0.6) {
        t = t.mul(&cayley_rotation(&lattice, rng, 2)).expect("square");
    }
    if rng.gen_bool(0.5) {
        let b = random_rational(rng, 4, family.dim() % 2 == 1);
        t = t.scale(&b);
    }
    SimilarityMap::new(&lattice, t).expect("generated maps are similarities")
}

/// A random coincidence rotation of the lattice via the Cayley transform.
pub fn random_coincidence(family: Family, rng: &mut impl Rng, bound: i64) -> SimilarityMap {
    let lattice = family.lattice();
    let t = cayley_rotation(&lattice, rng, bound);
    SimilarityMap::new(&lattice, t).expect("Cayley transforms are rotations")
}

pub fn pick_family(rng: &mut impl Rng, families: &[Family]) -> Family {
    *families.choose(rng).expect("non-empty family list")
}
