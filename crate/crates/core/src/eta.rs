//! Square classes of positive rationals and the scale homomorphism.
//!
//! A similarity map with multiplier `m` has scale `α = √m`. Modulo nonzero
//! rationals, `α` is determined by the squarefree part of `m`, so the image
//! of every rational-Gram similarity group sits inside the group of
//! squarefree positive integers under `a·b / gcd(a,b)²`. The kernel is
//! exactly the set of coincidence rotations.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

use crate::arith::squarefree_part;
use crate::error::{Error, Result};
use crate::gauss::SosFactorization;
use crate::lattice::SimilarityMap;
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EtaClass(BigUint);

impl EtaClass {
    pub fn identity() -> Self {
        EtaClass(BigUint::one())
    }

    /// Class of `√r` for a positive rational `r`.
    pub fn of_rational(r: &Rational) -> Result<Self> {
        let (Some(a), Some(b)) = (r.numer().to_biguint(), r.denom().to_biguint()) else {
            return Err(Error::Parse(format!("square class of non-positive {r}")));
        };
        Ok(EtaClass(squarefree_part(&(a * b))?))
    }

    /// Wraps a squarefree positive integer.
    pub fn from_squarefree(n: BigUint) -> Result<Self> {
        if squarefree_part(&n)? != n {
            return Err(Error::Parse(format!("{n} is not squarefree")));
        }
        Ok(EtaClass(n))
    }

    pub fn squarefree_part(&self) -> &BigUint {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_one()
    }

    pub fn mul(&self, rhs: &EtaClass) -> EtaClass {
        let g = self.0.gcd(&rhs.0);
        EtaClass((&self.0 / &g) * (&rhs.0 / &g))
    }

    /// 1 for the identity, 2 otherwise.
    pub fn order(&self) -> u32 {
        if self.is_identity() {
            1
        } else {
            2
        }
    }

    /// The order, which has to divide the dimension of the lattice the class
    /// came from.
    pub fn order_in_dim(&self, dim: usize) -> Result<u32> {
        let order = self.order();
        if dim % order as usize != 0 {
            return Err(Error::DimensionViolation { order, dim });
        }
        Ok(order)
    }
}

impl fmt::Display for EtaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[√{}]", self.0)
    }
}

/// The class of the scale `√m` of a similarity map.
pub fn eta_of(s: &SimilarityMap) -> EtaClass {
    EtaClass::of_rational(s.multiplier()).expect("validated multipliers are positive")
}

/// `η(S)` with its order checked against the lattice dimension.
pub fn eta_checked(s: &SimilarityMap) -> Result<(EtaClass, u32)> {
    let c = eta_of(s);
    let order = c.order_in_dim(s.lattice().dim())?;
    Ok((c, order))
}

pub fn class_mul(c1: &EtaClass, c2: &EtaClass) -> EtaClass {
    c1.mul(c2)
}

pub fn class_order(c: &EtaClass) -> u32 {
    c.order()
}

/// Parity vector of a direction decomposition read as a square class.
pub fn eta_of_direction(s: &SosFactorization) -> EtaClass {
    let mut n = BigUint::from(if s.eighth_exp % 2 == 1 { 2u32 } else { 1 });
    for (&p, &l) in &s.factors {
        if l.rem_euclid(2) == 1 {
            n *= p;
        }
    }
    EtaClass(n)
}

pub fn is_in_kernel(s: &SimilarityMap) -> bool {
    eta_of(s).is_identity()
}

impl From<EtaClass> for BigInt {
    fn from(c: EtaClass) -> BigInt {
        BigInt::from(c.0)
    }
}
