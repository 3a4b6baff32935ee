//! Reduced rational functions in `q`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::CyclotomicTable;
use super::poly::QPoly;
use crate::error::{Error, Result};

/// `num / den` in canonical form:
///
/// * `num` and `den` are integer polynomials, coprime over `Q`;
/// * `den` has a positive leading coefficient;
/// * the contents of `num` and `den` are coprime integers.
///
/// When the value has an integral scalar part (every value the formulas
/// produce), `den` is primitive. Zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

/// Canonical representative of `num / den`, reduced by a generic gcd.
pub fn rat_reduce(num: &QPoly, den: &QPoly) -> Result<QRat> {
    QRat::new(num.clone(), den.clone())
}

/// Exact `r(1)`, defined when the reduced denominator does not vanish at 1.
pub fn eval_limit_q1(r: &QRat) -> Result<BigRational> {
    r.limit_at_one()
}

/// Exact `p(x)`.
pub fn eval_at(p: &QPoly, x: &BigRational) -> BigRational {
    p.eval(x)
}

impl QRat {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(QRat::zero());
        }
        let g = num.gcd(&den)?;
        if g.is_one() {
            return Ok(QRat::normalize_scalars(num, den));
        }
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        Ok(QRat::normalize_scalars(num, den))
    }

    /// Reduction when `den` is, up to a constant, a product of cyclotomic
    /// polynomials of order at most `table.max_order()`. Falls back to
    /// [`QRat::new`] otherwise; both give the same representative.
    pub fn with_cyclotomic_den(num: QPoly, den: QPoly, table: &CyclotomicTable) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(QRat::zero());
        }
        let (mut exps, rest) = table.split(&den);
        if !rest.is_constant() {
            return QRat::new(num, den);
        }
        let mut num = num;
        for (i, e) in exps.iter_mut().enumerate() {
            let phi = table.get(i + 1);
            while *e > 0 {
                match num.try_div_exact(phi) {
                    Some(q) => {
                        num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        let mut den = rest;
        for (i, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                den = &den * table.get(i + 1);
            }
        }
        Ok(QRat::normalize_scalars(num, den))
    }

    /// Assumes `num` and `den` are already coprime over `Q`.
    fn normalize_scalars(num: QPoly, den: QPoly) -> Self {
        let g = num.content().gcd(&den.content());
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_scalar(&g), den.div_scalar(&g))
        };
        if den.leading().is_some_and(Signed::is_negative) {
            num = -num;
            den = -den;
        }
        QRat { num, den }
    }

    pub fn zero() -> Self {
        QRat {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        QRat::from_poly(QPoly::one())
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRat {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a polynomial in `Z[q]`, if it is one.
    pub fn as_poly(&self) -> Option<&QPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn limit_at_one(&self) -> Result<BigRational> {
        let d = self.den.at_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(BigRational::new(self.num.at_one(), d))
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn mul(&self, other: &QRat) -> QRat {
        if self.is_zero() || other.is_zero() {
            return QRat::zero();
        }
        let g1 = self.num.gcd(&other.den).expect("nonzero");
        let g2 = other.num.gcd(&self.den).expect("nonzero");
        let exact = |p: &QPoly, g: &QPoly| p.div_exact(g).expect("gcd divides");
        let num = &exact(&self.num, &g1) * &exact(&other.num, &g2);
        let den = &exact(&self.den, &g2) * &exact(&other.den, &g1);
        QRat::normalize_scalars(num, den)
    }

    pub fn recip(&self) -> Result<QRat> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(QRat::normalize_scalars(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &QRat) -> Result<QRat> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn add(&self, other: &QRat) -> QRat {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        QRat::new(num, &self.den * &other.den).expect("nonzero denominators")
    }

    /// Canonical numerator evaluated at `q = -1`.
    pub fn num_at_minus_one(&self) -> BigInt {
        self.num.at_minus_one()
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        let nonneg = |p: &QPoly| p.coeffs().iter().all(|c| !c.is_negative());
        nonneg(&self.num) && nonneg(&self.den)
    }
}

/// A polynomial renders as itself; otherwise `(num) / (den)`.
impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<QPoly> for QRat {
    fn from(p: QPoly) -> Self {
        QRat::from_poly(p)
    }
}

/// `Π p_i` helper used by the formulas.
pub(crate) fn product<'a>(it: impl IntoIterator<Item = &'a QPoly>) -> QPoly {
    it.into_iter().fold(QPoly::one(), |acc, p| &acc * p)
}
