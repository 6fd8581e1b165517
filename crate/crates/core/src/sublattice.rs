//! Intersections and indices of full-rank lattices given by basis matrices.
//!
//! A basis matrix `B` describes the lattice `B·Z^d`: its columns are the
//! basis vectors.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, Matrix, QuadMatrix, RatMatrix};
use crate::normal_form::hnf;
use crate::scalar::{lcm_of_denominators, Rational};

/// The least positive `t` with `t·m` integral, together with `t·m`.
pub fn clear_denominators(m: &RatMatrix) -> (BigInt, IntMatrix) {
    let t = lcm_of_denominators(m.entries());
    let tr = Rational::from_integer(t.clone());
    let n = m.map(|x| (x * &tr).to_integer());
    (t, n)
}

fn check_pair<T>(b1: &Matrix<T>, b2: &Matrix<T>) -> Result<()> {
    b1.require_square()?;
    b2.require_square()?;
    if b1.rows() != b2.rows() {
        return Err(Error::DimensionMismatch(format!(
            "lattices of dimension {} and {}",
            b1.rows(),
            b2.rows()
        )));
    }
    Ok(())
}

/// Basis of `Z^d ∩ M·Z^d` for a nonsingular rational `M`, in column Hermite
/// form.
///
/// Solves `x = M·y` over the integers: with `t·M = N` integral, the integer
/// kernel of `[t·I | −N]` is read off the unimodular transform of a Hermite
/// reduction of its transpose.
pub(crate) fn coincidence_basis(m: &RatMatrix) -> Result<IntMatrix> {
    let d = m.rows();
    let (t, n) = clear_denominators(m);
    // rows of A^T: first d rows are t·I, last d rows are −N^T
    let mut at = Vec::with_capacity(2 * d);
    for i in 0..d {
        at.push((0..d).map(|j| if i == j { t.clone() } else { BigInt::from(0) }).collect());
    }
    for i in 0..d {
        at.push((0..d).map(|j| -&n[(j, i)]).collect());
    }
    let at = IntMatrix::from_rows(at)?;
    let red = hnf(&at, false).map_err(|_| Error::Singular)?;
    // kernel rows are the last d rows of U; their first d coordinates are x
    let x = red.u.submatrix(d, 2 * d, 0, d);
    // x has the kernel vectors as rows; canonicalize and return as columns
    Ok(hnf(&x, false)?.h.transpose())
}

/// Basis of the intersection `B1·Z^d ∩ B2·Z^d` of two commensurate lattices.
pub fn lattice_intersection(b1: &RatMatrix, b2: &RatMatrix) -> Result<RatMatrix> {
    check_pair(b1, b2)?;
    if b2.det()?.is_zero() {
        return Err(Error::Singular);
    }
    let m = b1.inverse()?.mul(b2)?;
    let c = coincidence_basis(&m)?;
    b1.mul(&c.to_rational())
}

/// Intersection of lattices whose bases have entries in `Q(√n)`.
///
/// The lattices are commensurate exactly when `B1⁻¹·B2` is rational; otherwise
/// `NotCommensurate` is returned.
pub fn lattice_intersection_quad(b1: &QuadMatrix, b2: &QuadMatrix) -> Result<QuadMatrix> {
    check_pair(b1, b2)?;
    let n = b1.radicand()?;
    let n2 = b2.radicand()?;
    if n != n2 {
        return Err(Error::MixedField(n, n2));
    }
    let m = b1.inverse()?.mul(b2)?;
    let m = m.to_rational().ok_or(Error::NotCommensurate)?;
    if m.det()?.is_zero() {
        return Err(Error::Singular);
    }
    let c = coincidence_basis(&m)?;
    b1.mul(&c.to_rational().to_quad(n)?)
}

/// `[B·Z^d : C·Z^d] = |det(B⁻¹·C)|` for a sublattice `C·Z^d ⊆ B·Z^d`.
pub fn index_of_sublattice(b: &RatMatrix, c: &RatMatrix) -> Result<BigInt> {
    check_pair(b, c)?;
    let k = b.inverse()?.mul(c)?;
    let k = k.to_integer().ok_or(Error::NotSublattice)?;
    let det = k.det_int()?;
    if det.is_zero() {
        return Err(Error::Singular);
    }
    Ok(det.abs())
}

/// Whether `C·Z^d ⊆ B·Z^d`.
pub fn contains(b: &RatMatrix, c: &RatMatrix) -> Result<bool> {
    check_pair(b, c)?;
    Ok(b.inverse()?.mul(c)?.is_integral())
}
