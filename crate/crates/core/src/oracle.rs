//! Brute-force reference computations for tests.
//!
//! Nothing here touches the normal-form or intersection code: determinants
//! are cofactor expansions, inverses are adjugates, and indices are obtained
//! by counting lattice points in a fundamental box.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::matrix::{IntMatrix, RatMatrix};
use crate::scalar::Rational;

fn minor(m: &[Vec<Rational>], skip_row: usize, skip_col: usize) -> Vec<Vec<Rational>> {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != skip_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(j, _)| j != skip_col)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

fn det_rows(m: &[Vec<Rational>]) -> Rational {
    match m.len() {
        0 => Rational::one(),
        1 => m[0][0].clone(),
        n => (0..n)
            .map(|j| {
                let c = &m[0][j] * det_rows(&minor(m, 0, j));
                if j % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .fold(Rational::zero(), |a, b| a + b),
    }
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &RatMatrix) -> Rational {
    det_rows(&m.to_rows())
}

pub fn cofactor_det_int(m: &IntMatrix) -> BigInt {
    cofactor_det(&m.to_rational()).to_integer()
}

/// Inverse via the adjugate.
pub fn adjugate_inverse(m: &RatMatrix) -> Option<RatMatrix> {
    let rows = m.to_rows();
    let det = det_rows(&rows);
    if det.is_zero() {
        return None;
    }
    let n = rows.len();
    let inv = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = det_rows(&minor(&rows, j, i)) / &det;
                    if (i + j) % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .collect()
        })
        .collect();
    RatMatrix::from_rows(inv).ok()
}

fn lcm_den(m: &RatMatrix) -> u64 {
    m.entries()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
        .to_u64()
        .expect("oracle denominators are small")
}

/// Number of points `x ∈ [0, box_side)^d` with `m·x` integral.
///
/// With `m = N/t` this is `N·x ≡ 0 (mod t)`, checked in machine integers.
fn count_integral_images(m: &RatMatrix, box_side: u64) -> u64 {
    let d = m.cols();
    let t = m.entries().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let modulus = t.to_i128().expect("oracle denominators are small");
    let n: Vec<Vec<i128>> = (0..m.rows())
        .map(|i| {
            (0..d)
                .map(|j| {
                    let v = (&m[(i, j)] * Rational::from_integer(t.clone())).to_integer();
                    v.to_i128().expect("oracle entries are small").rem_euclid(modulus)
                })
                .collect()
        })
        .collect();
    let mut x = vec![0i128; d];
    let mut count = 0;
    loop {
        let integral = n
            .iter()
            .all(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum::<i128>() % modulus == 0);
        if integral {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == d {
                return count;
            }
            x[k] += 1;
            if x[k] < box_side as i128 {
                break;
            }
            x[k] = 0;
            k += 1;
        }
    }
}

/// `[Z^d : C·Z^d]` for integral nonsingular `C`, by counting residue classes:
/// with `t·Z^d ⊆ C·Z^d`, the box `[0,t)^d` holds `t^d / index` points of the
/// sublattice.
pub fn sublattice_index_by_counting(c: &RatMatrix) -> u64 {
    let inv = adjugate_inverse(c).expect("nonsingular");
    let t = lcm_den(&inv);
    let points = t.pow(c.rows() as u32);
    let hits = count_integral_images(&inv, t);
    assert_eq!(points % hits, 0);
    points / hits
}

/// `(sigma1, sigma2)` for a rational map `T` in lattice coordinates:
/// `sigma1 = [Z^d : Z^d ∩ T·Z^d]` and `sigma2 = [T·Z^d : Z^d ∩ T·Z^d]`, both by
/// point counting.
pub fn coincidence_indices_by_counting(t: &RatMatrix) -> (u64, u64) {
    let d = t.rows() as u32;
    let inv = adjugate_inverse(t).expect("nonsingular");
    // x ∈ Z^d lies in T·Z^d iff T⁻¹x is integral; s·Z^d lies in both
    let s = lcm_den(&inv);
    let sigma1 = s.pow(d) / count_integral_images(&inv, s);
    // in T-coordinates: y with T·y integral
    let u = lcm_den(t);
    let sigma2 = u.pow(d) / count_integral_images(t, u);
    (sigma1, sigma2)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut with_last = combinations(n - 1, k - 1);
    for c in &mut with_last {
        c.push(n - 1);
    }
    let mut out = combinations(n - 1, k);
    out.extend(with_last);
    out
}

/// Invariant factors from determinantal divisors: `d_k = D_k / D_{k−1}` where
/// `D_k` is the gcd of all `k×k` minors.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let n = m.rows().min(m.cols());
    let rows = m.to_rational().to_rows();
    let mut prev = BigInt::one();
    let mut out = Vec::new();
    for k in 1..=n {
        let mut g = BigInt::zero();
        for rs in combinations(m.rows(), k) {
            for cs in combinations(m.cols(), k) {
                let sub: Vec<Vec<Rational>> =
                    rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j].clone()).collect()).collect();
                g = g.gcd(&det_rows(&sub).to_integer());
            }
        }
        if g.is_zero() {
            out.push(BigInt::zero());
            prev = BigInt::zero();
            continue;
        }
        out.push((&g / &prev).abs());
        prev = g;
    }
    out
}

/// All `(a, b)` with `a > b > 0` and `a² + b² = n`, by exhaustive search.
pub fn two_square_representations(n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut a = 1;
    while a * a < n {
        for b in 1..a {
            if a * a + b * b == n {
                out.push((a, b));
            }
        }
        a += 1;
    }
    out
}
