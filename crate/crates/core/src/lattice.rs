//! Lattices as rational Gram matrices, and similarity maps written in lattice
//! coordinates.
//!
//! A map `T` acts on coordinate vectors; it is a similarity of the lattice
//! with Gram matrix `G` when `Tᵀ·G·T = m·G` for a rational `m > 0`. The
//! ambient map is then `α·R` with `α = √m` and `R` a rotation, so `m` carries
//! all the information about the scale that the square-class machinery needs.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{QuadMatrix, RatMatrix};
use crate::scalar::{rational_sqrt, Rational};
use crate::sublattice::{index_of_sublattice, lattice_intersection};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    gram: RatMatrix,
}

impl Lattice {
    /// Validates a Gram matrix: symmetric and positive definite, checked
    /// exactly through the leading principal minors.
    pub fn new(gram: RatMatrix) -> Result<Self> {
        gram.require_square()?;
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        for k in 1..=gram.rows() {
            if !gram.submatrix(0, k, 0, k).det()?.is_positive() {
                return Err(Error::NotPositiveDefinite);
            }
        }
        Ok(Lattice { gram })
    }

    /// The square lattice `Z^d`.
    pub fn cubic(d: usize) -> Self {
        Lattice { gram: RatMatrix::identity(d) }
    }

    /// The hexagonal lattice `A₂` with Gram matrix `[[2,1],[1,2]]`.
    pub fn hexagonal() -> Self {
        Lattice { gram: RatMatrix::from_i64(&[[2, 1], [1, 2]]) }
    }

    pub fn diagonal(entries: &[i64]) -> Result<Self> {
        let d = entries.len();
        let mut g = RatMatrix::identity(d);
        for (i, &e) in entries.iter().enumerate() {
            g[(i, i)] = Rational::from_integer(e.into());
        }
        Self::new(g)
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }
}

pub fn make_lattice(gram: RatMatrix) -> Result<Lattice> {
    Lattice::new(gram)
}

/// A validated similarity `T` of a lattice with `Tᵀ·G·T = m·G` and
/// `det T = +m^{d/2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimilarityMap {
    lattice: Lattice,
    t: RatMatrix,
    multiplier: Rational,
}

/// A similarity map whose multiplier is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoincidenceMap(SimilarityMap);

/// `sigma1 = [Γ : Γ∩TΓ]`, `sigma2 = [TΓ : Γ∩TΓ]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SigmaPair {
    pub sigma1: BigInt,
    pub sigma2: BigInt,
}

/// `m^{d/2}` compared against `det`: `det² = m^d` and `det > 0`.
fn check_orientation(det: &Rational, m: &Rational, d: usize) -> Result<()> {
    let md = num_traits::pow(m.clone(), d);
    if det * det != md {
        return Err(Error::NotSimilarity);
    }
    if det.is_negative() {
        return Err(Error::OrientationReversing);
    }
    Ok(())
}

impl SimilarityMap {
    /// Checks `T` against the lattice and extracts its multiplier.
    pub fn new(lattice: &Lattice, t: RatMatrix) -> Result<Self> {
        let d = lattice.dim();
        if t.rows() != d || t.cols() != d {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} map on a lattice of dimension {d}",
                t.rows(),
                t.cols()
            )));
        }
        let det = t.det()?;
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let g = lattice.gram();
        let tgt = t.transpose().mul(g)?.mul(&t)?;
        // G₁₁ > 0 by positive definiteness
        let m = &tgt[(0, 0)] / &g[(0, 0)];
        if g.scale(&m) != tgt {
            return Err(Error::NotSimilarity);
        }
        check_orientation(&det, &m, d)?;
        Ok(SimilarityMap { lattice: lattice.clone(), t, multiplier: m })
    }

    pub fn identity(lattice: &Lattice) -> Self {
        SimilarityMap {
            lattice: lattice.clone(),
            t: RatMatrix::identity(lattice.dim()),
            multiplier: Rational::one(),
        }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.t
    }

    pub fn multiplier(&self) -> &Rational {
        &self.multiplier
    }

    pub fn is_coincidence(&self) -> bool {
        self.multiplier.is_one()
    }

    pub fn compose(&self, other: &SimilarityMap) -> Result<SimilarityMap> {
        if self.lattice != other.lattice {
            return Err(Error::LatticeMismatch);
        }
        Ok(SimilarityMap {
            lattice: self.lattice.clone(),
            t: self.t.mul(&other.t)?,
            multiplier: &self.multiplier * &other.multiplier,
        })
    }

    pub fn invert(&self) -> SimilarityMap {
        SimilarityMap {
            lattice: self.lattice.clone(),
            t: self.t.inverse().expect("validated maps are nonsingular"),
            multiplier: self.multiplier.recip(),
        }
    }

    /// `b·T` for a rational `b ≠ 0`, with multiplier `b²·m`.
    ///
    /// In odd dimension a negative `b` reverses orientation and is rejected.
    pub fn rescale(&self, b: &Rational) -> Result<SimilarityMap> {
        if b.is_zero() {
            return Err(Error::Singular);
        }
        SimilarityMap::new(&self.lattice, self.t.scale(b))
    }

    /// Divides out the scale when `m` is a rational square, exposing the
    /// underlying rotation as a coincidence rotation.
    pub fn normalize_to_coincidence(&self) -> Result<CoincidenceMap> {
        let q = rational_sqrt(&self.multiplier)
            .ok_or_else(|| Error::NotCoincidence(crate::scalar::format_rational(&self.multiplier)))?;
        let t = self.t.scale(&q.recip());
        // dividing by q > 0 preserves the orientation
        Ok(CoincidenceMap(SimilarityMap {
            lattice: self.lattice.clone(),
            t,
            multiplier: Rational::one(),
        }))
    }

    /// Coincidence indices of `Γ` and `TΓ` with respect to `Γ ∩ TΓ`.
    pub fn coincidence_index(&self) -> Result<SigmaPair> {
        let id = RatMatrix::identity(self.lattice.dim());
        let c = lattice_intersection(&id, &self.t)?;
        Ok(SigmaPair {
            sigma1: index_of_sublattice(&id, &c)?,
            sigma2: index_of_sublattice(&self.t, &c)?,
        })
    }
}

pub fn validate_similarity(lattice: &Lattice, t: RatMatrix) -> Result<SimilarityMap> {
    SimilarityMap::new(lattice, t)
}

pub fn compose(s1: &SimilarityMap, s2: &SimilarityMap) -> Result<SimilarityMap> {
    s1.compose(s2)
}

pub fn invert(s: &SimilarityMap) -> SimilarityMap {
    s.invert()
}

pub fn normalize_to_coincidence(s: &SimilarityMap) -> Result<CoincidenceMap> {
    s.normalize_to_coincidence()
}

pub fn coincidence_index(s: &SimilarityMap) -> Result<SigmaPair> {
    s.coincidence_index()
}

impl CoincidenceMap {
    pub fn new(lattice: &Lattice, t: RatMatrix) -> Result<Self> {
        let s = SimilarityMap::new(lattice, t)?;
        if s.is_coincidence() {
            Ok(CoincidenceMap(s))
        } else {
            Err(Error::NotCoincidence(crate::scalar::format_rational(&s.multiplier)))
        }
    }

    pub fn as_similarity(&self) -> &SimilarityMap {
        &self.0
    }

    pub fn into_similarity(self) -> SimilarityMap {
        self.0
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.0.t
    }
}

/// Whether `B1·Z^d` and `B2·Z^d` are commensurate, for bases over one
/// quadratic field: exactly when every entry of `B1⁻¹·B2` is rational.
pub fn is_commensurate(b1: &QuadMatrix, b2: &QuadMatrix) -> Result<bool> {
    b1.require_square()?;
    b2.require_square()?;
    if b1.rows() != b2.rows() {
        return Err(Error::DimensionMismatch("bases of different dimension".into()));
    }
    let n1 = b1.radicand()?;
    let n2 = b2.radicand()?;
    if n1 != n2 {
        return Err(Error::MixedField(n1, n2));
    }
    if crate::scalar::Ring::is_zero_elem(&b2.det()?) {
        return Err(Error::Singular);
    }
    let m = b1.inverse()?.mul(b2)?;
    let rational = m.entries().all(|x| x.is_rational());
    Ok(rational)
}
