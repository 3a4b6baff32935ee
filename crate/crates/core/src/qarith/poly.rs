//! Dense univariate polynomials in `q` with big-integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficients in ascending degree; the last stored coefficient is nonzero,
/// so the zero polynomial is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    DivExact,
}

pub fn poly_arith(a: &QPoly, b: &QPoly, op: ArithOp) -> Result<QPoly> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::DivExact => a.div_exact(b),
    }
}

impl QPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    /// `c·q^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        QPoly::from_coeffs(coeffs)
    }

    /// `1 - q^k`; zero when `k = 0`.
    pub fn one_minus_q_pow(k: usize) -> Self {
        if k == 0 {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::one();
        coeffs[k] = -BigInt::one();
        QPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| if g.is_one() { g } else { g.gcd(c) })
    }

    /// Divides out the content; the sign of the leading coefficient is kept.
    pub fn primitive_part(&self) -> QPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.div_scalar(&c)
    }

    pub fn scale(&self, k: &BigInt) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Coefficientwise division; `k` must divide every coefficient.
    pub(crate) fn div_scalar(&self, k: &BigInt) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| c / k).collect(),
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sum of coefficients, the value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Value at `q = -1`.
    pub fn at_minus_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
            .sum()
    }

    /// Quotient and remainder over the integers. `None` when some step of the
    /// long division needs a non-integral quotient coefficient.
    fn div_rem_integral(&self, divisor: &QPoly) -> Option<(QPoly, QPoly)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        Some((QPoly::from_coeffs(quot), QPoly::from_coeffs(rem)))
    }

    /// Exact quotient in `Z[q]`.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly> {
        if divisor.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        match self.div_rem_integral(divisor) {
            Some((q, r)) if r.is_zero() => Ok(q),
            _ => Err(Error::InexactDivision),
        }
    }

    pub fn try_div_exact(&self, divisor: &QPoly) -> Option<QPoly> {
        self.div_exact(divisor).ok()
    }

    /// Remainder of `c·a` by `b`, where `c` is a power of `lc(b)`.
    fn pseudo_rem(&self, divisor: &QPoly) -> QPoly {
        let dd = divisor.degree().expect("nonzero divisor");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.last().unwrap().clone();
            let shift = rem.len() - 1 - dd;
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &top * d;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        QPoly::from_coeffs(rem)
    }

    /// Primitive part with a positive leading coefficient.
    pub fn normalized(&self) -> QPoly {
        let p = self.primitive_part();
        if p.leading().is_some_and(Signed::is_negative) {
            -p
        } else {
            p
        }
    }

    /// Primitive gcd with positive leading coefficient, computed by a
    /// primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &QPoly) -> Result<QPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.normalized(), other.normalized())
        } else {
            (other.normalized(), self.normalized())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.normalized();
        }
        Ok(a)
    }
}

/// `[k]_q = 1 + q + … + q^(k-1)`; `[0]_q = 0`.
pub fn q_int(k: usize) -> QPoly {
    QPoly::from_coeffs(vec![BigInt::one(); k])
}

/// `[m]_q! = [1]_q [2]_q ⋯ [m]_q`.
pub fn q_factorial(m: usize) -> QPoly {
    (1..=m).fold(QPoly::one(), |acc, k| &acc * &q_int(k))
}

/// Ascending powers: `5 + 4*q + 5*q^2`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        -&self
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QPoly> for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: &QPoly) -> QPoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
