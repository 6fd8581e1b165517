//! Seeded property suites exercising the structural theorems on random
//! instances. Each suite counts passing and failing cases and keeps the
//! first counterexample.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::eta::{class_mul, eta_checked, eta_of, eta_of_direction, is_in_kernel, EtaClass};
use crate::gauss::{
    coincidence_index_z2, gauss_matrix, matrix_to_gauss_rational, soc_factorize,
    soc_matrix, sos_decompose, sos_square_to_soc, GaussRational, SocFactorization,
};
use crate::generate::{
    cayley_rotation, pick_family, random_gauss, random_rational, random_similarity, Family,
};
use crate::lattice::{is_commensurate, Lattice, SimilarityMap};
use crate::matrix::{QuadMatrix, RatMatrix};
use crate::quad::QuadExt;
use crate::scalar::{format_rational, rational_sqrt, Rational};

pub const DEFAULT_SEED: u64 = 0xC5117;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Commensurate,
    Scal,
    Eta,
    SquareClosure,
    Z2,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::Commensurate, Suite::Scal, Suite::Eta, Suite::SquareClosure, Suite::Z2];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Commensurate => "commensurate",
            Suite::Scal => "scal",
            Suite::Eta => "eta",
            Suite::SquareClosure => "square_closure",
            Suite::Z2 => "z2",
        }
    }

    /// Resolves a suite name; `all` expands to every suite.
    pub fn parse(name: &str) -> Option<Vec<Suite>> {
        if name == "all" {
            return Some(Self::ALL.to_vec());
        }
        Self::ALL.iter().copied().find(|s| s.name() == name).map(|s| vec![s])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
    pub first_counterexample: Option<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, passed: 0, failed: 0, first_counterexample: None }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(describe());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} passed, {} failed", self.name, self.passed, self.failed)?;
        if let Some(c) = &self.first_counterexample {
            write!(f, " (first counterexample: {c})")?;
        }
        Ok(())
    }
}

fn show(s: &SimilarityMap) -> String {
    let rows: Vec<String> = s
        .matrix()
        .to_rows()
        .iter()
        .map(|r| r.iter().map(format_rational).collect::<Vec<_>>().join(","))
        .collect();
    format!("T=[{}] m={}", rows.join(";"), format_rational(s.multiplier()))
}

const CASES: usize = 200;

pub fn run_suite(suite: Suite, seed: u64) -> SuiteReport {
    // each suite draws from its own stream so that suites are independent
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (suite as u64).wrapping_mul(0x9E37_79B9));
    match suite {
        Suite::Commensurate => commensurate(&mut rng),
        Suite::Scal => scal(&mut rng),
        Suite::Eta => eta(&mut rng),
        Suite::SquareClosure => square_closure(&mut rng),
        Suite::Z2 => z2(&mut rng),
    }
}

pub fn run_suites(suites: &[Suite], seed: u64) -> Vec<SuiteReport> {
    suites.iter().map(|&s| run_suite(s, seed)).collect()
}

fn quad_scalar(rng: &mut impl Rng, irrational: bool) -> QuadExt {
    let a = random_rational(rng, 5, false);
    let b = if irrational { random_rational(rng, 5, false) } else { Rational::from_integer(0.into()) };
    QuadExt::new(a, b, 2).expect("2 is squarefree")
}

fn random_rat_matrix(rng: &mut impl Rng, d: usize) -> RatMatrix {
    loop {
        let rows = (0..d).map(|_| (0..d).map(|_| random_rational(rng, 4, false)).collect()).collect();
        let m = RatMatrix::from_rows(rows).expect("square");
        if !num_traits::Zero::is_zero(&m.det().expect("square")) {
            return m;
        }
    }
}

fn commensurate(rng: &mut impl Rng) -> SuiteReport {
    let mut rep = SuiteReport::new("commensurate");
    let id = RatMatrix::identity(2).to_quad(2).expect("valid radicand");
    let root2 = id.scale(&QuadExt::sqrt_of(2).expect("valid radicand"));
    rep.check(!is_commensurate(&id, &root2).unwrap_or(true), || "sqrt(2)·Z² ~ Z²".into());
    let half = QuadExt::new(Rational::from_integer(0.into()), Rational::new(1.into(), 2.into()), 2)
        .expect("valid radicand");
    let bare = RatMatrix::from_i64(&[[1, -1], [1, 1]]).to_quad(2).expect("valid").scale(&half);
    rep.check(!is_commensurate(&id, &bare).unwrap_or(true), || "45° rotation of Z² ~ Z²".into());

    for _ in 0..CASES {
        // rΓ ∼ Γ exactly when r is rational
        let irrational = rng.gen_bool(0.5);
        let r = quad_scalar(rng, irrational);
        if crate::scalar::Ring::is_zero_elem(&r) {
            continue;
        }
        let got = is_commensurate(&id, &id.scale(&r)).unwrap_or(false);
        rep.check(got == r.is_rational(), || format!("r = {r}"));

        // bases P·Q with Q rational or √2-scaled rational: two such lattices
        // are commensurate exactly when the √2 flags agree
        let d = 2;
        let p = random_rat_matrix(rng, d).to_quad(2).expect("valid");
        let p = p.scale(&quad_scalar(rng, true));
        let make = |rng: &mut _, flag: bool| -> QuadMatrix {
            let q = random_rat_matrix(rng, d).to_quad(2).expect("valid");
            let q = if flag { q.scale(&QuadExt::sqrt_of(2).expect("valid")) } else { q };
            p.mul(&q).expect("square")
        };
        let flags = [rng.gen_bool(0.5), rng.gen_bool(0.5), rng.gen_bool(0.5)];
        let bases: Vec<QuadMatrix> = flags.iter().map(|&f| make(rng, f)).collect();
        let rel = |i: usize, j: usize| is_commensurate(&bases[i], &bases[j]).ok();
        rep.check(rel(0, 0) == Some(true), || "reflexivity".into());
        rep.check(rel(0, 1) == rel(1, 0), || format!("symmetry, flags {flags:?}"));
        rep.check(rel(0, 1) == Some(flags[0] == flags[1]), || format!("flags {flags:?}"));
        let transitive = !(rel(0, 1) == Some(true) && rel(1, 2) == Some(true)) || rel(0, 2) == Some(true);
        rep.check(transitive, || format!("transitivity, flags {flags:?}"));
    }
    rep
}

const MIXED: [Family; 5] =
    [Family::Square, Family::Hexagonal, Family::Rect(2), Family::Diag123, Family::Cubic4];

fn scal(rng: &mut impl Rng) -> SuiteReport {
    let mut rep = SuiteReport::new("scal");
    for _ in 0..CASES {
        let family = pick_family(rng, &MIXED);
        let s = random_similarity(family, rng);
        let b = random_rational(rng, 6, family.dim() % 2 == 1);
        // rational rescaling keeps the map a similarity with multiplier b²m
        let ok = match s.rescale(&b) {
            Ok(r) => *r.multiplier() == &b * &b * s.multiplier(),
            Err(_) => false,
        };
        rep.check(ok, || format!("{} b={} {}", family.name(), format_rational(&b), show(&s)));
        // proportional maps: multiplier ratio is a rational square
        let c = random_rational(rng, 6, true);
        let other = s.rescale(&c).expect("positive rescaling");
        let ratio = other.multiplier() / s.multiplier();
        rep.check(rational_sqrt(&ratio).is_some() && ratio == &c * &c, || show(&other));
        rep.check(eta_of(&other) == eta_of(&s), || show(&other));
    }
    rep
}

const ETA_FAMILIES: [Family; 3] = [Family::Square, Family::Hexagonal, Family::Diag123];

fn eta(rng: &mut impl Rng) -> SuiteReport {
    let mut rep = SuiteReport::new("eta");
    for _ in 0..CASES {
        let family = pick_family(rng, &ETA_FAMILIES);
        let s1 = random_similarity(family, rng);
        let s2 = random_similarity(family, rng);
        let prod = s1.compose(&s2).expect("same lattice");
        rep.check(eta_of(&prod) == class_mul(&eta_of(&s1), &eta_of(&s2)), || {
            format!("{} / {}", show(&s1), show(&s2))
        });
        for s in [&s1, &s2, &prod] {
            rep.check(is_in_kernel(s) == s.normalize_to_coincidence().is_ok(), || show(s));
            let c = eta_of(s);
            rep.check(class_mul(&c, &c).is_identity(), || show(s));
            rep.check(eta_checked(s).is_ok(), || show(s));
        }
        let inv = s1.invert();
        rep.check(eta_of(&inv) == eta_of(&s1), || show(&s1));
    }
    rep
}

const CLOSURE_FAMILIES: [Family; 7] = crate::generate::ALL_FAMILIES;

fn square_closure(rng: &mut impl Rng) -> SuiteReport {
    let mut rep = SuiteReport::new("square_closure");
    for _ in 0..CASES {
        let family = pick_family(rng, &CLOSURE_FAMILIES);
        let s = random_similarity(family, rng);
        let sq = s.compose(&s).expect("same lattice");
        rep.check(sq.normalize_to_coincidence().is_ok(), || show(&s));
        if family.dim() % 2 == 1 {
            rep.check(rational_sqrt(s.multiplier()).is_some(), || show(&s));
            rep.check(eta_of(&s) == EtaClass::identity(), || show(&s));
        }
    }
    rep
}

fn z2(rng: &mut impl Rng) -> SuiteReport {
    let mut rep = SuiteReport::new("z2");
    let square = Lattice::cubic(2);
    for _ in 0..CASES {
        // rational rotations z/z̄
        let z = random_gauss(rng, 100);
        let q = GaussRational::ratio(&z, &z.conj()).expect("nonzero");
        let ok = match (soc_matrix(&q), soc_factorize(&q)) {
            (Ok(c), Ok(f)) => {
                let sigma = c.as_similarity().coincidence_index();
                c.as_similarity().is_coincidence()
                    && sigma.is_ok_and(|s| s.sigma1 == coincidence_index_z2(&f))
            }
            _ => false,
        };
        rep.check(ok, || format!("q = {q}"));

        // converse: Cayley rotations of Z² are rational and factor
        let t = cayley_rotation(&square, rng, 6);
        let conv = matrix_to_gauss_rational(&t).and_then(|q| soc_factorize(&q).map(|f| (q, f)));
        rep.check(conv.is_ok_and(|(q, f)| f.reconstruct() == q), || "Cayley converse".into());

        // squaring bridge and direction round trip
        let sos = sos_decompose(&z).expect("nonzero");
        rep.check(sos.is_direction_of(&z), || format!("direction of {z}"));
        rep.check(Ok(sos_square_to_soc(&sos)) == soc_factorize(&q), || format!("z = {z}"));

        // factorization is a homomorphism
        let w = random_gauss(rng, 100);
        let q2 = GaussRational::ratio(&w, &w.conj()).expect("nonzero");
        let hom = match (soc_factorize(&q), soc_factorize(&q2), soc_factorize(&q.mul(&q2))) {
            (Ok(a), Ok(b), Ok(ab)) => a.mul(&b) == ab,
            _ => false,
        };
        rep.check(hom, || format!("{q} · {q2}"));

        // cross-engine square classes
        let s = SimilarityMap::new(&square, gauss_matrix(&z)).expect("Gaussian multiplication");
        rep.check(eta_of_direction(&sos) == eta_of(&s), || format!("z = {z}"));
    }
    // exact round trip of random products of unit and split-prime factors
    let primes = [5u64, 13, 17, 29, 37];
    for _ in 0..CASES {
        let mut f = SocFactorization::new(rng.gen_range(0..4), Default::default()).expect("unit");
        for _ in 0..rng.gen_range(0..5) {
            let p = primes[rng.gen_range(0..primes.len())];
            let e = if rng.gen_bool(0.5) { 1 } else { -1 };
            let g = SocFactorization::new(0, [(p, e)].into()).expect("split prime");
            f = f.mul(&g);
        }
        rep.check(soc_factorize(&f.reconstruct()).as_ref() == Ok(&f), || format!("{f:?}"));
    }
    rep
}
