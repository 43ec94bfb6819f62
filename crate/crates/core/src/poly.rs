//! Exact integer coefficients and univariate polynomials in `t`.
//!
//! Coefficients live in a checked 64-bit fast path and promote to arbitrary
//! precision on overflow, so results are exact no matter what.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by (1 - t) leaves a nonzero remainder")]
    InexactDivision,
}

/// An exact integer: `i64` until it overflows, `BigInt` afterwards.
/// Values that fit are always stored small, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coeff {
    Small(i64),
    Big(BigInt),
}

impl Coeff {
    pub const ZERO: Coeff = Coeff::Small(0);
    pub const ONE: Coeff = Coeff::Small(1);

    fn canon(big: BigInt) -> Coeff {
        match i64::try_from(&big) {
            Ok(v) => Coeff::Small(v),
            Err(_) => Coeff::Big(big),
        }
    }

    fn to_big(&self) -> BigInt {
        match self {
            Coeff::Small(v) => BigInt::from(*v),
            Coeff::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coeff::Small(0))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Small(v) => *v < 0,
            Coeff::Big(b) => b.sign() == num_bigint::Sign::Minus,
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Coeff::Small(v) => Some(*v),
            Coeff::Big(_) => None,
        }
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Coeff::Small(v)
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_add(*b) {
                return Coeff::Small(v);
            }
        }
        Coeff::canon(self.to_big() + rhs.to_big())
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_sub(*b) {
                return Coeff::Small(v);
            }
        }
        Coeff::canon(self.to_big() - rhs.to_big())
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_mul(*b) {
                return Coeff::Small(v);
            }
        }
        Coeff::canon(self.to_big() * rhs.to_big())
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Small(v) => match v.checked_neg() {
                Some(n) => Coeff::Small(n),
                None => Coeff::canon(-BigInt::from(*v)),
            },
            Coeff::Big(b) => Coeff::canon(-b.clone()),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Small(v) => write!(f, "{v}"),
            Coeff::Big(b) => write!(f, "{b}"),
        }
    }
}

/// A univariate polynomial in `t` with exact integer coefficients, stored
/// densely by degree with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<Coeff>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![Coeff::ONE],
        }
    }

    pub fn from_coeffs<I: IntoIterator<Item = i64>>(cs: I) -> Self {
        let mut p = IntPoly {
            coeffs: cs.into_iter().map(Coeff::from).collect(),
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Coeff::is_zero) {
            self.coeffs.pop();
        }
    }

    /// `1 - t^d` (and plain 1 for d = 0).
    pub fn one_minus_t_pow(d: usize) -> Self {
        if d == 0 {
            return IntPoly::zero();
        }
        let mut coeffs = vec![Coeff::ZERO; d + 1];
        coeffs[0] = Coeff::ONE;
        coeffs[d] = Coeff::Small(-1);
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Coeff {
        self.coeffs.get(k).cloned().unwrap_or(Coeff::ZERO)
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.coeffs.iter().any(Coeff::is_negative)
    }

    pub fn add(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut p = IntPoly {
            coeffs: (0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect(),
        };
        p.trim();
        p
    }

    pub fn sub(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut p = IntPoly {
            coeffs: (0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect(),
        };
        p.trim();
        p
    }

    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![Coeff::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![Coeff::ZERO; k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Exact synthetic division by `(1 - t)`; errs when the remainder is
    /// nonzero (equivalently when the value at t = 1 is nonzero).
    pub fn div_one_minus_t(&self) -> Result<IntPoly, PolyError> {
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        // (1 - t) * q = self forces q_k = c_k + q_{k-1}.
        let mut q = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut acc = Coeff::ZERO;
        for (k, c) in self.coeffs.iter().enumerate() {
            acc = &acc + c;
            if k + 1 < self.coeffs.len() {
                q.push(acc.clone());
            }
        }
        if !acc.is_zero() {
            return Err(PolyError::InexactDivision);
        }
        let mut p = IntPoly { coeffs: q };
        p.trim();
        Ok(p)
    }

    /// Exact division by `(1 - t)^k`.
    pub fn div_one_minus_t_pow(&self, k: usize) -> Result<IntPoly, PolyError> {
        let mut p = self.clone();
        for _ in 0..k {
            p = p.div_one_minus_t()?;
        }
        Ok(p)
    }

    pub fn eval_at_one(&self) -> Coeff {
        self.coeffs.iter().fold(Coeff::ZERO, |acc, c| &acc + c)
    }

    /// h_k == h_{deg - k} for all k.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }

    /// Coefficients as plain i64, if they all fit.
    pub fn to_i64_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(Coeff::to_i64).collect()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if *c == Coeff::ONE => write!(f, "t")?,
                1 => write!(f, "{c}t")?,
                _ if *c == Coeff::ONE => write!(f, "t^{k}")?,
                _ => write!(f, "{c}t^{k}")?,
            }
        }
        Ok(())
    }
}
