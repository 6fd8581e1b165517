//! Exact arithmetic for coincidence and similarity rotations of lattices.
//!
//! Lattices are given by rational Gram matrices and maps act in lattice
//! coordinates, so every quantity stays rational; the one irrational number
//! that matters, the scale `√m` of a similarity, is tracked through its
//! square class. The square lattice additionally has a dedicated engine over
//! the Gaussian integers.
//!
//! ```
//! use csl_core::{Lattice, RatMatrix, SimilarityMap, eta_of};
//!
//! let z2 = Lattice::cubic(2);
//! let s = SimilarityMap::new(&z2, RatMatrix::from_i64(&[[1, -1], [1, 1]])).unwrap();
//! assert_eq!(s.multiplier().to_string(), "2");
//! assert!(!eta_of(&s).is_identity());
//! assert!(s.compose(&s).unwrap().normalize_to_coincidence().is_ok());
//! ```

pub mod arith;
pub mod error;
pub mod eta;
pub mod gauss;
pub mod generate;
pub mod lattice;
pub mod matrix;
pub mod normal_form;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod quad;
pub mod scalar;
pub mod sublattice;
pub mod verify;

pub use error::{Error, Result};
pub use eta::{
    class_mul, class_order, eta_checked, eta_of, eta_of_direction, is_in_kernel, EtaClass,
};
pub use gauss::{
    coincidence_index_z2, enumerate_soc_z2, find_split_prime, gauss_factor, gauss_gcd,
    gauss_matrix, gauss_norm, soc_factorize, soc_matrix, sos_decompose, sos_square_to_soc,
    GaussFactorization, GaussInt, GaussRational, SocFactorization, SosFactorization,
};
pub use lattice::{
    coincidence_index, compose, invert, is_commensurate, make_lattice, normalize_to_coincidence,
    validate_similarity, CoincidenceMap, Lattice, SigmaPair, SimilarityMap,
};
pub use matrix::{IntMatrix, Matrix, QuadMatrix, RatMatrix};
pub use normal_form::{hnf, snf, Hnf, SnfResult};
pub use quad::{quad_arith, QuadExt, QuadOp};
pub use scalar::{format_rational, parse_rational, Rational};
pub use sublattice::{
    clear_denominators, index_of_sublattice, lattice_intersection, lattice_intersection_quad,
};

/// Exact inverse of a rational matrix.
pub fn rat_inverse(m: &RatMatrix) -> Result<RatMatrix> {
    m.inverse()
}
