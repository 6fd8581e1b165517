//! Elementary number theory on machine and big integers: primality,
//! trial-division factorization and squarefree parts.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    factor_u64(n).iter().all(|&(_, e)| e == 1)
}

/// Prime factorization `[(p, e)]` in ascending order of `p`.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Trial-division factorization of a big integer. Fails with `TooLarge` if a
/// prime factor does not fit in 64 bits. `n = 0` is rejected as `ZeroInput`.
pub fn factor_big(n: &BigUint) -> Result<Vec<(u64, u32)>> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    if let Some(small) = n.to_u64() {
        return Ok(factor_u64(small));
    }
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut d = 2u64;
    while n.to_u64().is_none() {
        let bd = BigUint::from(d);
        if &bd * &bd > n {
            // n itself is prime and too wide
            return Err(Error::TooLarge);
        }
        let (q, r) = n.div_rem(&bd);
        if r.is_zero() {
            n = q;
            let mut e = 1;
            loop {
                let (q, r) = n.div_rem(&bd);
                if !r.is_zero() {
                    break;
                }
                n = q;
                e += 1;
            }
            out.push((d, e));
        }
        d = d.checked_add(if d == 2 { 1 } else { 2 }).ok_or(Error::TooLarge)?;
    }
    let rest = n.to_u64().unwrap_or(1);
    for (p, e) in factor_u64(rest) {
        match out.last_mut() {
            Some((q, f)) if *q == p => *f += e,
            _ => out.push((p, e)),
        }
    }
    Ok(out)
}

/// The unique squarefree `s` with `n = s·k²`.
pub fn squarefree_part(n: &BigUint) -> Result<BigUint> {
    Ok(factor_big(n)?
        .into_iter()
        .filter(|&(_, e)| e % 2 == 1)
        .fold(BigUint::one(), |acc, (p, _)| acc * p))
}
