//! Hermite and Smith normal forms of integer matrices.
//!
//! Both are computed by naive elementary row/column operations; every
//! operation is mirrored on an accumulating unimodular transform.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// `h = u · m` with `u` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hnf {
    pub h: IntMatrix,
    pub u: IntMatrix,
}

/// `u · m · v = d` with `d` diagonal, `d_i ≥ 0`, `d_i | d_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }
}

/// `row[dst] -= q · row[src]`
fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for k in 0..m.cols() {
        let v = &m[(dst, k)] - q * &m[(src, k)];
        m[(dst, k)] = v;
    }
}

/// `col[dst] -= q · col[src]`
fn col_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for k in 0..m.rows() {
        let v = &m[(k, dst)] - q * &m[(k, src)];
        m[(k, dst)] = v;
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for k in 0..m.cols() {
        let v = -&m[(r, k)];
        m[(r, k)] = v;
    }
}

/// Hermite normal form under row operations.
///
/// The result is in echelon form: each pivot is positive, lies strictly right
/// of the pivot above it, and every entry above a pivot (i.e. right of an
/// earlier pivot in its row) is reduced into `[0, pivot)`. For a matrix of
/// full column rank this is upper triangular with zero rows at the bottom.
///
/// A column without a pivot is an error unless `allow_rank_deficient` is set.
pub fn hnf(m: &IntMatrix, allow_rank_deficient: bool) -> Result<Hnf> {
    let rows = m.rows();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut r = 0;
    for c in 0..m.cols() {
        if r == rows {
            if !allow_rank_deficient {
                return Err(Error::RankDeficient);
            }
            break;
        }
        loop {
            let pick = (r..rows)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&a, &b| h[(a, c)].abs().cmp(&h[(b, c)].abs()));
            let Some(p) = pick else { break };
            h.swap_rows(p, r);
            u.swap_rows(p, r);
            let mut clean = true;
            for i in r + 1..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                row_axpy(&mut h, i, r, &q);
                row_axpy(&mut u, i, r, &q);
                clean &= h[(i, c)].is_zero();
            }
            if clean {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            if !allow_rank_deficient {
                return Err(Error::RankDeficient);
            }
            continue;
        }
        if h[(r, c)].is_negative() {
            negate_row(&mut h, r);
            negate_row(&mut u, r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            if !q.is_zero() {
                row_axpy(&mut h, i, r, &q);
                row_axpy(&mut u, i, r, &q);
            }
        }
        r += 1;
    }
    Ok(Hnf { h, u })
}

/// Smith normal form of a square nonsingular integer matrix.
pub fn snf(m: &IntMatrix) -> Result<SnfResult> {
    m.require_square()?;
    if m.det_int()?.is_zero() {
        return Err(Error::Singular);
    }
    let n = m.rows();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(n);
    let mut v = IntMatrix::identity(n);
    for t in 0..n {
        loop {
            let (pi, pj) = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !d[(i, j)].is_zero())
                .min_by(|&a, &b| d[a].abs().cmp(&d[b].abs()))
                .expect("nonsingular matrix has a nonzero entry in every trailing block");
            d.swap_rows(pi, t);
            u.swap_rows(pi, t);
            d.swap_cols(pj, t);
            v.swap_cols(pj, t);

            let mut clean = true;
            for i in t + 1..n {
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                if !q.is_zero() {
                    row_axpy(&mut d, i, t, &q);
                    row_axpy(&mut u, i, t, &q);
                }
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                if !q.is_zero() {
                    col_axpy(&mut d, j, t, &q);
                    col_axpy(&mut v, j, t, &q);
                }
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // pivot must divide the whole trailing block
            let bad = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !d[(i, j)].is_multiple_of(&d[(t, t)]));
            match bad {
                Some((i, _)) => {
                    let minus_one = BigInt::from(-1);
                    row_axpy(&mut d, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
    }
    Ok(SnfResult { d, u, v })
}
