//! The square lattice as the Gaussian integers `Z[i]`.
//!
//! Rotations of `Z²` are complex numbers of modulus one. Rational ones are the
//! coincidence rotations and factor uniquely over the split primes
//! `p ≡ 1 (mod 4)`; directions `z/|z|` of nonzero Gaussian integers are the
//! similarity rotations and factor over `(1+i)/√2` and `ω_p/√p`. The
//! irrational magnitudes never get evaluated: they live purely in the
//! exponent bookkeeping.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{factor_big, is_prime};
use crate::error::{Error, Result};
use crate::lattice::{CoincidenceMap, Lattice};
use crate::matrix::RatMatrix;
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    /// `i^k` for any integer `k`.
    pub fn unit(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::new(1, 0),
            1 => Self::new(0, 1),
            2 => Self::new(-1, 0),
            _ => Self::new(0, -1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussInt { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `k` with `self = i^k`, if `self` is a unit.
    pub fn unit_exponent(&self) -> Option<u8> {
        (0..4u8).find(|&k| *self == Self::unit(k.into()))
    }

    /// Exact quotient `self / rhs` when it lies in `Z[i]`.
    pub fn exact_div(&self, rhs: &GaussInt) -> Option<GaussInt> {
        let n = rhs.norm();
        if n.is_zero() {
            return None;
        }
        let p = self * &rhs.conj();
        let (qr, rr) = p.re.div_rem(&n);
        let (qi, ri) = p.im.div_rem(&n);
        (rr.is_zero() && ri.is_zero()).then_some(GaussInt { re: qr, im: qi })
    }

    /// Division with remainder of norm at most half the divisor's norm.
    pub fn div_rem_round(&self, rhs: &GaussInt) -> (GaussInt, GaussInt) {
        let n = rhs.norm();
        let p = self * &rhs.conj();
        let round = |x: &BigInt| -> BigInt {
            // nearest integer to x / n
            let two = BigInt::from(2);
            (x * &two + &n).div_floor(&(&n * &two))
        };
        let q = GaussInt { re: round(&p.re), im: round(&p.im) };
        let r = self - &(&q * rhs);
        (q, r)
    }

    /// The associate with `re > 0, im ≥ 0`; zero maps to zero.
    pub fn canonical(&self) -> GaussInt {
        if self.is_zero() {
            return self.clone();
        }
        (0..4)
            .map(|k| self * &Self::unit(k))
            .find(|w| w.re.is_positive() && !w.im.is_negative())
            .expect("exactly one associate lies in the first quadrant")
    }

    /// `gcd` of real and imaginary parts.
    pub fn content(&self) -> BigInt {
        self.re.gcd(&self.im)
    }

    /// Parses `a`, `bi`, `a+bi`, `a-bi` (coefficients of `i` may be omitted),
    /// ignoring whitespace.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("invalid Gaussian integer {s:?}"));
        let int = |x: &str| -> Result<BigInt> {
            let x = x.strip_prefix('+').unwrap_or(x);
            if x.is_empty() || x.starts_with(['+', '-']) && x.len() == 1 {
                return Err(bad());
            }
            x.parse().map_err(|_| bad())
        };
        if t.is_empty() {
            return Err(bad());
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(GaussInt { re: int(&t)?, im: BigInt::zero() });
        };
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .last();
        let (re, im) = match split {
            Some(k) => (int(&body[..k])?, &body[k..]),
            None => (BigInt::zero(), body),
        };
        let im = match im {
            "" | "+" => BigInt::one(),
            "-" => -BigInt::one(),
            other => int(other)?,
        };
        Ok(GaussInt { re, im })
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coef = |x: &BigInt| -> String {
            if x.is_one() {
                String::new()
            } else if *x == -BigInt::one() {
                "-".into()
            } else {
                x.to_string()
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", coef(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{}{}{}i", self.re, sign, coef(&self.im.abs()))
            }
        }
    }
}

impl<'a> Add<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt { re: -&self.re, im: -&self.im }
    }
}

pub fn gauss_norm(z: &GaussInt) -> BigInt {
    z.norm()
}

/// Euclidean gcd, returned as the first-quadrant associate.
pub fn gauss_gcd(z: &GaussInt, w: &GaussInt) -> Result<GaussInt> {
    if z.is_zero() && w.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut a, mut b) = (z.clone(), w.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem_round(&b);
        a = b;
        b = r;
    }
    Ok(a.canonical())
}

/// The canonical `ω_p = a + bi` with `a > b > 0` and `a² + b² = p`.
pub fn find_split_prime(p: u64) -> Result<GaussInt> {
    if p % 4 != 1 || !is_prime(p) {
        return Err(Error::NotSplitPrime(p.to_string()));
    }
    let mut b = 1u64;
    while 2 * b * b < p {
        let rest = p - b * b;
        let a = rest.isqrt();
        if a * a == rest {
            return Ok(GaussInt::new(a, b));
        }
        b += 1;
    }
    unreachable!("every prime p ≡ 1 mod 4 is a sum of two squares")
}

/// Unique factorization
/// `z = i^unit_exp · (1+i)^exp_1plusi · ∏ ω_p^{a_p} ω̄_p^{b_p} · ∏ q^{c_q}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GaussFactorization {
    pub unit_exp: u8,
    pub exp_1plusi: u32,
    /// `p ↦ (a_p, b_p)` for split primes
    pub split: BTreeMap<u64, (u32, u32)>,
    /// `q ↦ c_q` for inert primes `q ≡ 3 (mod 4)`
    pub inert: BTreeMap<u64, u32>,
}

impl GaussFactorization {
    pub fn reconstruct(&self) -> GaussInt {
        let mut z = GaussInt::unit(self.unit_exp.into());
        z = &z * &GaussInt::new(1, 1).pow(self.exp_1plusi);
        for (&p, &(a, b)) in &self.split {
            let w = find_split_prime(p).expect("stored primes are split");
            z = &z * &w.pow(a);
            z = &z * &w.conj().pow(b);
        }
        for (&q, &c) in &self.inert {
            z = &z * &GaussInt::new(q, 0).pow(c);
        }
        z
    }
}

fn divide_out(z: &mut GaussInt, w: &GaussInt) -> u32 {
    let mut e = 0;
    while let Some(q) = z.exact_div(w) {
        *z = q;
        e += 1;
    }
    e
}

fn norm_factors(z: &GaussInt) -> Result<Vec<(u64, u32)>> {
    let n = z.norm().to_biguint().unwrap_or_else(BigUint::zero);
    factor_big(&n)
}

pub fn gauss_factor(z: &GaussInt) -> Result<GaussFactorization> {
    if z.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut rest = z.clone();
    let mut out = GaussFactorization::default();
    for (p, v) in norm_factors(z)? {
        match p % 4 {
            2 => out.exp_1plusi = divide_out(&mut rest, &GaussInt::new(1, 1)),
            3 => {
                let c = divide_out(&mut rest, &GaussInt::new(p, 0));
                debug_assert_eq!(2 * c, v);
                out.inert.insert(p, c);
            }
            _ => {
                let w = find_split_prime(p)?;
                let a = divide_out(&mut rest, &w);
                let b = divide_out(&mut rest, &w.conj());
                debug_assert_eq!(a + b, v);
                out.split.insert(p, (a, b));
            }
        }
    }
    out.unit_exp = rest.unit_exponent().expect("cofactor of a full factorization is a unit");
    Ok(out)
}

/// `numerator / denominator` in lowest terms: no rational prime divides both
/// the denominator and the numerator's content.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussRational {
    num: GaussInt,
    den: BigInt,
}

impl GaussRational {
    pub fn new(num: GaussInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (num, den) = if den.is_negative() { (-&num, -den) } else { (num, den) };
        let g = num.content().gcd(&den);
        Ok(GaussRational {
            num: GaussInt { re: &num.re / &g, im: &num.im / &g },
            den: den / g,
        })
    }

    pub fn from_gauss(z: GaussInt) -> Self {
        GaussRational { num: z, den: BigInt::one() }
    }

    /// `z / w` for `w ≠ 0`.
    pub fn ratio(z: &GaussInt, w: &GaussInt) -> Result<Self> {
        if w.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(z * &w.conj(), w.norm())
    }

    pub fn numerator(&self) -> &GaussInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn one() -> Self {
        Self::from_gauss(GaussInt::one())
    }

    pub fn is_unit_modulus(&self) -> bool {
        self.num.norm() == &self.den * &self.den
    }

    pub fn mul(&self, rhs: &GaussRational) -> GaussRational {
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }

    pub fn conj(&self) -> GaussRational {
        GaussRational { num: self.num.conj(), den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<GaussRational> {
        let n = self.num.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num.conj() * &GaussInt::new(self.den.clone(), 0), n)
    }

    pub fn re(&self) -> Rational {
        Rational::new(self.num.re.clone(), self.den.clone())
    }

    pub fn im(&self) -> Rational {
        Rational::new(self.num.im.clone(), self.den.clone())
    }

    /// Parses `a+bi` or `(a+bi)/c`.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match t.rsplit_once('/') {
            Some((num, den)) => {
                let num = num.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(num);
                let den: BigInt =
                    den.parse().map_err(|_| Error::Parse(format!("invalid denominator in {s:?}")))?;
                Self::new(GaussInt::parse(num)?, den)
            }
            None => Ok(Self::from_gauss(GaussInt::parse(&t)?)),
        }
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.im.is_zero() || self.num.re.is_zero() {
            write!(f, "{}/{}", self.num, self.den)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

fn split_exponents_index(factors: &BTreeMap<u64, i64>) -> BigInt {
    factors
        .iter()
        .fold(BigInt::one(), |acc, (&p, &n)| acc * BigInt::from(p).pow(n.unsigned_abs() as u32))
}

fn add_exponents(a: &BTreeMap<u64, i64>, b: &BTreeMap<u64, i64>) -> BTreeMap<u64, i64> {
    let mut out = a.clone();
    for (&p, &n) in b {
        let e = out.entry(p).or_insert(0);
        *e += n;
        if *e == 0 {
            out.remove(&p);
        }
    }
    out
}

/// `i^unit_exp · ∏ (ω_p/ω̄_p)^{n_p}` over split primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SocFactorization {
    pub unit_exp: u8,
    pub factors: BTreeMap<u64, i64>,
}

impl SocFactorization {
    pub fn new(unit_exp: i64, factors: BTreeMap<u64, i64>) -> Result<Self> {
        for &p in factors.keys() {
            find_split_prime(p)?;
        }
        Ok(SocFactorization {
            unit_exp: unit_exp.rem_euclid(4) as u8,
            factors: factors.into_iter().filter(|&(_, n)| n != 0).collect(),
        })
    }

    /// The exact rotation as a Gaussian rational of modulus one.
    pub fn reconstruct(&self) -> GaussRational {
        let mut num = GaussInt::unit(self.unit_exp.into());
        let mut den = BigInt::one();
        for (&p, &n) in &self.factors {
            let w = find_split_prime(p).expect("stored primes are split");
            let w = if n > 0 { w } else { w.conj() };
            let k = n.unsigned_abs() as u32;
            num = &num * &w.pow(2 * k);
            den *= BigInt::from(p).pow(k);
        }
        GaussRational::new(num, den).expect("positive denominator")
    }

    /// Group product: unit exponents add mod 4, prime exponents add.
    pub fn mul(&self, rhs: &SocFactorization) -> SocFactorization {
        SocFactorization {
            unit_exp: (self.unit_exp + rhs.unit_exp) % 4,
            factors: add_exponents(&self.factors, &rhs.factors),
        }
    }

    pub fn inverse(&self) -> SocFactorization {
        SocFactorization {
            unit_exp: (4 - self.unit_exp) % 4,
            factors: self.factors.iter().map(|(&p, &n)| (p, -n)).collect(),
        }
    }

    /// `Σ = ∏ p^{|n_p|}`.
    pub fn index(&self) -> BigInt {
        split_exponents_index(&self.factors)
    }
}

pub fn soc_factorize(q: &GaussRational) -> Result<SocFactorization> {
    if !q.is_unit_modulus() {
        return Err(Error::NotUnitModulus);
    }
    let f = gauss_factor(q.numerator())?;
    // in lowest terms neither 1+i, an inert prime, nor both of ω_p, ω̄_p can
    // divide the numerator, so only one-sided split exponents remain
    debug_assert!(f.exp_1plusi == 0 && f.inert.is_empty());
    let factors = f
        .split
        .iter()
        .map(|(&p, &(a, b))| (p, (i64::from(a) - i64::from(b)) / 2))
        .filter(|&(_, n)| n != 0)
        .collect();
    Ok(SocFactorization { unit_exp: f.unit_exp, factors })
}

/// `((1+i)/√2)^eighth_exp · ∏ (ω_p/√p)^{ℓ_p}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SosFactorization {
    pub eighth_exp: u8,
    pub factors: BTreeMap<u64, i64>,
}

impl SosFactorization {
    pub fn new(eighth_exp: i64, factors: BTreeMap<u64, i64>) -> Result<Self> {
        for &p in factors.keys() {
            find_split_prime(p)?;
        }
        Ok(SosFactorization {
            eighth_exp: eighth_exp.rem_euclid(8) as u8,
            factors: factors.into_iter().filter(|&(_, n)| n != 0).collect(),
        })
    }

    /// A Gaussian integer pointing in the represented direction:
    /// `(1+i)^k · ∏ ω_p^{ℓ_p}` with `ω̄_p` standing in for negative powers.
    pub fn representative(&self) -> GaussInt {
        let mut z = GaussInt::new(1, 1).pow(self.eighth_exp.into());
        for (&p, &l) in &self.factors {
            let w = find_split_prime(p).expect("stored primes are split");
            let w = if l > 0 { w } else { w.conj() };
            z = &z * &w.pow(l.unsigned_abs() as u32);
        }
        z
    }

    /// Whether this is the direction `z/|z|`: `z·w̄` must be a positive real.
    pub fn is_direction_of(&self, z: &GaussInt) -> bool {
        let p = z * &self.representative().conj();
        p.im.is_zero() && p.re.is_positive()
    }

    pub fn mul(&self, rhs: &SosFactorization) -> SosFactorization {
        SosFactorization {
            eighth_exp: (self.eighth_exp + rhs.eighth_exp) % 8,
            factors: add_exponents(&self.factors, &rhs.factors),
        }
    }
}

/// Direction of a nonzero Gaussian integer. Inert primes and the norms only
/// contribute positive real scale.
pub fn sos_decompose(z: &GaussInt) -> Result<SosFactorization> {
    let f = gauss_factor(z)?;
    let k = (u64::from(f.exp_1plusi) + 2 * u64::from(f.unit_exp)) % 8;
    let factors = f
        .split
        .iter()
        .map(|(&p, &(a, b))| (p, i64::from(a) - i64::from(b)))
        .filter(|&(_, l)| l != 0)
        .collect();
    Ok(SosFactorization { eighth_exp: k as u8, factors })
}

/// Squares a direction: `((1+i)/√2)² = i` and `(ω_p/√p)² = ω_p/ω̄_p`.
pub fn sos_square_to_soc(s: &SosFactorization) -> SocFactorization {
    SocFactorization { unit_exp: s.eighth_exp % 4, factors: s.factors.clone() }
}

/// Multiplication by `x + iy` as a matrix on `Z²`: `[[x, −y], [y, x]]`.
pub fn rotation_matrix(x: &Rational, y: &Rational) -> RatMatrix {
    RatMatrix::from_rows(vec![vec![x.clone(), -y], vec![y.clone(), x.clone()]])
        .expect("2x2 literal")
}

/// Multiplication by a Gaussian integer; a similarity of `Z²` with multiplier
/// `N(z)`.
pub fn gauss_matrix(z: &GaussInt) -> RatMatrix {
    rotation_matrix(
        &Rational::from_integer(z.re.clone()),
        &Rational::from_integer(z.im.clone()),
    )
}

pub fn soc_matrix(q: &GaussRational) -> Result<CoincidenceMap> {
    if !q.is_unit_modulus() {
        return Err(Error::NotUnitModulus);
    }
    CoincidenceMap::new(&Lattice::cubic(2), rotation_matrix(&q.re(), &q.im()))
}

/// Reads a rational rotation matrix `[[x, −y], [y, x]]` back as `x + iy`.
pub fn matrix_to_gauss_rational(t: &RatMatrix) -> Result<GaussRational> {
    if t.rows() != 2 || t.cols() != 2 || t[(0, 0)] != t[(1, 1)] || t[(0, 1)] != -&t[(1, 0)] {
        return Err(Error::NotSimilarity);
    }
    let den = t[(0, 0)].denom().lcm(t[(1, 0)].denom());
    let scale = Rational::from_integer(den.clone());
    let re = (&t[(0, 0)] * &scale).to_integer();
    let im = (&t[(1, 0)] * &scale).to_integer();
    GaussRational::new(GaussInt { re, im }, den)
}

pub fn coincidence_index_z2(f: &SocFactorization) -> BigInt {
    f.index()
}

/// Split primes up to `bound`, ascending.
pub fn split_primes_up_to(bound: u64) -> Vec<u64> {
    (5..=bound).step_by(4).filter(|&p| is_prime(p)).collect()
}

/// Every coincidence rotation of `Z²` with `Σ ≤ max_index`, ordered by
/// index, then lexicographically by `(p, n_p)`, then by unit exponent.
pub fn enumerate_soc_z2(max_index: u64) -> Vec<SocFactorization> {
    fn extend(
        primes: &[u64],
        bound: u64,
        index: u64,
        current: &mut Vec<(u64, i64)>,
        out: &mut Vec<(u64, Vec<(u64, i64)>)>,
    ) {
        out.push((index, current.clone()));
        for (k, &p) in primes.iter().enumerate() {
            let mut pe = p;
            let mut e = 1i64;
            while index.checked_mul(pe).is_some_and(|v| v <= bound) {
                for n in [-e, e] {
                    current.push((p, n));
                    extend(&primes[k + 1..], bound, index * pe, current, out);
                    current.pop();
                }
                e += 1;
                match pe.checked_mul(p) {
                    Some(v) => pe = v,
                    None => break,
                }
            }
        }
    }
    if max_index == 0 {
        return Vec::new();
    }
    let primes = split_primes_up_to(max_index);
    let mut patterns = Vec::new();
    extend(&primes, max_index, 1, &mut Vec::new(), &mut patterns);
    patterns.sort();
    patterns
        .into_iter()
        .flat_map(|(_, f)| {
            (0..4u8).map(move |u| SocFactorization { unit_exp: u, factors: f.iter().copied().collect() })
        })
        .collect()
}

/// Prime `p` from a JSON-ish key, for callers building factor maps.
pub fn parse_prime_key(s: &str) -> Result<u64> {
    s.trim().parse::<u64>().map_err(|_| Error::Parse(format!("invalid prime {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn g(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re, im)
    }

    fn q(s: &str) -> GaussRational {
        GaussRational::parse(s).unwrap()
    }

    fn fac(unit: i64, f: &[(u64, i64)]) -> SocFactorization {
        SocFactorization::new(unit, f.iter().copied().collect()).unwrap()
    }

    #[test]
    fn norms() {
        assert_eq!(gauss_norm(&g(1, 1)), BigInt::from(2));
        assert_eq!(gauss_norm(&g(2, 1)), BigInt::from(5));
        assert_eq!(gauss_norm(&g(0, 0)), BigInt::from(0));
    }

    #[test]
    fn gcds() {
        let d = gauss_gcd(&g(2, 1), &g(5, 0)).unwrap();
        assert_eq!(d, g(2, 1));
        assert!(g(5, 0).exact_div(&d).is_some());
        assert_eq!(gauss_gcd(&g(-1, -2), &GaussInt::zero()).unwrap(), g(2, -1).canonical());
        assert_eq!(gauss_gcd(&g(0, -3), &GaussInt::zero()).unwrap(), g(3, 0));
        assert_eq!(gauss_gcd(&g(3, 0), &g(7, 0)).unwrap(), GaussInt::one());
        assert_eq!(gauss_gcd(&GaussInt::zero(), &GaussInt::zero()), Err(Error::BothZero));
    }

    #[test]
    fn split_primes() {
        assert_eq!(find_split_prime(5).unwrap(), g(2, 1));
        assert_eq!(find_split_prime(13).unwrap(), g(3, 2));
        assert_eq!(find_split_prime(17).unwrap(), g(4, 1));
        assert!(matches!(find_split_prime(7), Err(Error::NotSplitPrime(_))));
        assert!(matches!(find_split_prime(21), Err(Error::NotSplitPrime(_))));
        assert!(matches!(find_split_prime(2), Err(Error::NotSplitPrime(_))));
        assert_eq!(split_primes_up_to(30), vec![5, 13, 17, 29]);
    }

    #[test]
    fn factor_examples() {
        let f = gauss_factor(&g(1, 1)).unwrap();
        assert_eq!((f.unit_exp, f.exp_1plusi), (0, 1));
        assert!(f.split.is_empty() && f.inert.is_empty());

        let f = gauss_factor(&g(5, 0)).unwrap();
        assert_eq!(f.split.get(&5), Some(&(1, 1)));
        assert_eq!(f.reconstruct(), g(5, 0));

        let f = gauss_factor(&g(9, 0)).unwrap();
        assert_eq!(f.inert.get(&3), Some(&2));
        assert_eq!(f.reconstruct(), g(9, 0));

        for z in [g(-7, 24), g(0, -6), g(130, 0), g(-1, 0), g(12, -35)] {
            assert_eq!(gauss_factor(&z).unwrap().reconstruct(), z);
        }
        assert_eq!(gauss_factor(&GaussInt::zero()), Err(Error::ZeroInput));
    }

    #[test]
    fn soc_examples() {
        assert_eq!(soc_factorize(&q("i")).unwrap(), fac(1, &[]));
        assert_eq!(soc_factorize(&q("(3+4i)/5")).unwrap(), fac(0, &[(5, 1)]));
        assert_eq!(soc_factorize(&q("(5+12i)/13")).unwrap(), fac(0, &[(13, 1)]));
        assert_eq!(soc_factorize(&q("(3+4i)/6")), Err(Error::NotUnitModulus));
        // (2+i)/(2-i) computed directly
        let direct = GaussRational::ratio(&g(2, 1), &g(2, -1)).unwrap();
        assert_eq!(direct, q("(3+4i)/5"));
        assert_eq!(fac(0, &[(5, 1)]).reconstruct(), direct);
    }

    #[test]
    fn sos_examples() {
        assert_eq!(sos_decompose(&g(1, 1)).unwrap(), SosFactorization::new(1, BTreeMap::new()).unwrap());
        let s = sos_decompose(&g(2, 1)).unwrap();
        assert_eq!((s.eighth_exp, s.factors.get(&5)), (0, Some(&1)));
        assert_eq!(sos_decompose(&g(3, 0)).unwrap(), SosFactorization::default());
        assert_eq!(sos_decompose(&g(0, 1)).unwrap().eighth_exp, 2);
        assert_eq!(sos_decompose(&GaussInt::zero()), Err(Error::ZeroInput));
        for z in [g(-3, 0), g(7, -1), g(0, -10), g(-5, 5)] {
            assert!(sos_decompose(&z).unwrap().is_direction_of(&z), "{z}");
        }
    }

    #[test]
    fn squaring_examples() {
        let s1 = SosFactorization::new(1, BTreeMap::new()).unwrap();
        assert_eq!(sos_square_to_soc(&s1), fac(1, &[]));
        let s5 = SosFactorization::new(0, [(5, 1)].into()).unwrap();
        assert_eq!(sos_square_to_soc(&s5), fac(0, &[(5, 1)]));
        let s4 = SosFactorization::new(4, BTreeMap::new()).unwrap();
        assert_eq!(sos_square_to_soc(&s4), fac(0, &[]));
    }

    #[test]
    fn matrices() {
        assert_eq!(soc_matrix(&q("i")).unwrap().matrix(), &RatMatrix::from_i64(&[[0, -1], [1, 0]]));
        let want = RatMatrix::from_rows(vec![vec![rat(3, 5), rat(-4, 5)], vec![rat(4, 5), rat(3, 5)]])
            .unwrap();
        assert_eq!(soc_matrix(&q("(3+4i)/5")).unwrap().matrix(), &want);
        assert!(soc_matrix(&q("1")).unwrap().matrix().is_identity());
        assert_eq!(soc_matrix(&q("(3+4i)/6")).unwrap_err(), Error::NotUnitModulus);
        assert_eq!(matrix_to_gauss_rational(&want).unwrap(), q("(3+4i)/5"));
    }

    #[test]
    fn indices_z2() {
        assert_eq!(coincidence_index_z2(&fac(3, &[])), BigInt::from(1));
        assert_eq!(coincidence_index_z2(&fac(0, &[(5, 1)])), BigInt::from(5));
        assert_eq!(coincidence_index_z2(&fac(0, &[(5, 1), (13, -1)])), BigInt::from(65));
    }

    #[test]
    fn enumeration_counts() {
        let e1 = enumerate_soc_z2(1);
        assert_eq!(e1.len(), 4);
        assert!(e1.iter().all(|f| f.factors.is_empty()));
        let e5 = enumerate_soc_z2(5);
        assert_eq!(e5.len(), 12);
        assert_eq!(enumerate_soc_z2(12), e5);
        assert_eq!(e5[4], fac(0, &[(5, -1)]));
        assert_eq!(e5[8], fac(0, &[(5, 1)]));
        let e30 = enumerate_soc_z2(30);
        let idx: std::collections::BTreeSet<_> = e30.iter().map(SocFactorization::index).collect();
        let want: std::collections::BTreeSet<BigInt> =
            [1, 5, 13, 17, 25, 29].into_iter().map(BigInt::from).collect();
        assert_eq!(idx, want);
        let e100 = enumerate_soc_z2(100);
        assert!(e100.windows(2).all(|w| w[0].index() <= w[1].index()));
    }

    #[test]
    fn literals() {
        for (s, re, im) in [
            ("3+4i", 3, 4),
            ("2 - i", 2, -1),
            ("-i", 0, -1),
            ("i", 0, 1),
            ("7", 7, 0),
            ("-12i", 0, -12),
            ("+1+i", 1, 1),
        ] {
            assert_eq!(GaussInt::parse(s).unwrap(), g(re, im), "{s}");
        }
        assert!(GaussInt::parse("").is_err());
        assert!(GaussInt::parse("3+").is_err());
        assert!(GaussInt::parse("x").is_err());
        assert_eq!(q("(6+8i)/10"), q("(3+4i)/5"));
        assert_eq!(q("(3+4i)/5").to_string(), "(3+4i)/5");
        assert_eq!(q("-i").to_string(), "-i");
        assert!(GaussRational::parse("(1+i)/0").is_err());
        for z in [g(3, 4), g(2, -1), g(0, -1), g(-5, 0), g(0, 0)] {
            assert_eq!(GaussInt::parse(&z.to_string()).unwrap(), z);
        }
    }
}
