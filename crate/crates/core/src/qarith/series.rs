use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::QPoly;
use super::rat::QRat;
use crate::error::{Error, Result};

/// Power series in `q` known through `q^order` inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    order: usize,
    coeffs: Vec<BigInt>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries {
            order,
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = QSeries::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn from_poly(p: &QPoly, order: usize) -> Self {
        let mut s = QSeries::zero(order);
        for (k, c) in p.coeffs().iter().enumerate().take(order + 1) {
            s.coeffs[k] = c.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    /// The truncation as a polynomial.
    pub fn to_poly(&self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.clone())
    }

    pub fn add_assign(&mut self, other: &QSeries) {
        assert_eq!(self.order, other.order, "series orders differ");
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        assert_eq!(self.order, other.order, "series orders differ");
        let mut out = QSeries::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> QSeries {
        let mut out = QSeries::zero(self.order);
        for i in k..=self.order {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Multiplies in place by `1 / (1 - q^h)`, `h ≥ 1`.
    pub fn div_one_minus_q_pow(&mut self, h: usize) {
        assert!(h >= 1);
        for k in h..=self.order {
            let prev = self.coeffs[k - h].clone();
            self.coeffs[k] += prev;
        }
    }
}

/// Expansion of `r` through `q^order`. The reduced denominator must have
/// constant term `±1`.
pub fn series_from_rat(r: &QRat, order: usize) -> Result<QSeries> {
    let den = r.den();
    let d0 = den.coeff(0);
    if !d0.abs().is_one() {
        return Err(Error::NonUnitConstantTerm(d0.to_string()));
    }
    let num = QSeries::from_poly(r.num(), order);
    let mut out = QSeries::zero(order);
    for k in 0..=order {
        let mut acc = num.coeffs[k].clone();
        for (j, d) in den.coeffs().iter().enumerate().skip(1).take_while(|(j, _)| *j <= k) {
            acc -= d * &out.coeffs[k - j];
        }
        out.coeffs[k] = if d0.is_negative() { -acc } else { acc };
    }
    Ok(out)
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(q^{})", self.to_poly(), self.order + 1)
    }
}
