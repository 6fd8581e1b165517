//! Elements `a + b·√n` of a real quadratic field `Q(√n)`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::is_squarefree;
use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational, Field, Rational, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl QuadOp {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "add" => Ok(QuadOp::Add),
            "-" | "−" | "sub" => Ok(QuadOp::Sub),
            "*" | "×" | "mul" => Ok(QuadOp::Mul),
            "/" | "÷" | "div" => Ok(QuadOp::Div),
            other => Err(Error::Parse(format!("unknown operator {other:?}"))),
        }
    }
}

/// `a + b·√n` with rational `a`, `b` and squarefree radicand `n ≥ 2`.
///
/// Equality is componentwise; two values with different radicands are never
/// equal, even when both are rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    n: u64,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, n: u64) -> Result<Self> {
        if n < 2 || !is_squarefree(n) {
            return Err(Error::InvalidRadicand(n));
        }
        Ok(QuadExt { a, b, n })
    }

    pub fn from_rational(a: Rational, n: u64) -> Result<Self> {
        Self::new(a, Rational::zero(), n)
    }

    /// `√n` itself.
    pub fn sqrt_of(n: u64) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), n)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.n
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    pub fn conj(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -&self.b, n: self.n }
    }

    /// Field norm `a² − n·b²`; zero only for the zero element.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.n.into())
    }

    fn same_field(&self, rhs: &Self) -> Result<()> {
        if self.n == rhs.n {
            Ok(())
        } else {
            Err(Error::MixedField(self.n, rhs.n))
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(Ring::add(self, rhs))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(Ring::sub(self, rhs))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(Ring::mul(self, rhs))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        if rhs.is_zero_elem() {
            return Err(Error::DivisionByZero);
        }
        Ok(Field::div(self, rhs))
    }

    /// Parses `a+b*sqrt(n)` and its abbreviations (`sqrt(2)`, `-1/2*sqrt(3)`,
    /// `1-sqrt(5)`). A purely rational literal needs `default_n` for its field.
    pub fn parse(s: &str, default_n: Option<u64>) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("invalid quadratic literal {s:?}"));
        let Some(idx) = t.find("sqrt(") else {
            let n = default_n.ok_or_else(bad)?;
            return Self::from_rational(parse_rational(&t)?, n);
        };
        let rest = &t[idx + 5..];
        let n_str = rest.strip_suffix(')').ok_or_else(bad)?;
        let n: u64 = n_str.parse().map_err(|_| bad())?;
        if let Some(d) = default_n {
            if d != n {
                return Err(Error::MixedField(d, n));
            }
        }
        let prefix = &t[..idx];
        let (coef_part, explicit) = match prefix.strip_suffix('*') {
            Some(p) => (p, true),
            None => (prefix, false),
        };
        let split = coef_part
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .last();
        let (a_str, b_str) = match split {
            Some(k) => (&coef_part[..k], &coef_part[k..]),
            None => ("", coef_part),
        };
        let a = if a_str.is_empty() { Rational::zero() } else { parse_rational(a_str)? };
        let b = match b_str {
            "" | "+" if !explicit => Rational::one(),
            "-" if !explicit => -Rational::one(),
            "" | "+" | "-" => return Err(bad()),
            other => parse_rational(other)?,
        };
        Self::new(a, b, n)
    }
}

impl Ring for QuadExt {
    fn zero_like(&self) -> Self {
        QuadExt { a: Rational::zero(), b: Rational::zero(), n: self.n }
    }
    fn one_like(&self) -> Self {
        QuadExt { a: Rational::one(), b: Rational::zero(), n: self.n }
    }
    fn is_zero_elem(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.n, rhs.n);
        QuadExt { a: &self.a + &rhs.a, b: &self.b + &rhs.b, n: self.n }
    }
    fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.n, rhs.n);
        QuadExt { a: &self.a - &rhs.a, b: &self.b - &rhs.b, n: self.n }
    }
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.n, rhs.n);
        let n = Rational::from_integer(self.n.into());
        QuadExt {
            a: &self.a * &rhs.a + &self.b * &rhs.b * n,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            n: self.n,
        }
    }
    fn neg(&self) -> Self {
        QuadExt { a: -&self.a, b: -&self.b, n: self.n }
    }
}

impl Field for QuadExt {
    fn div(&self, rhs: &Self) -> Self {
        let norm = rhs.norm();
        let p = Ring::mul(self, &rhs.conj());
        QuadExt { a: p.a / &norm, b: p.b / norm, n: self.n }
    }
}

/// Exact arithmetic in `Q(√n)`; both operands must share the radicand.
pub fn quad_arith(x: &QuadExt, y: &QuadExt, op: QuadOp) -> Result<QuadExt> {
    match op {
        QuadOp::Add => x.checked_add(y),
        QuadOp::Sub => x.checked_sub(y),
        QuadOp::Mul => x.checked_mul(y),
        QuadOp::Div => x.checked_div(y),
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(
            f,
            "{}{}{}*sqrt({})",
            format_rational(&self.a),
            sign,
            format_rational(&self.b.abs()),
            self.n
        )
    }
}
