//! Hook-length and hook-content sums over excited Young diagrams.
//!
//! For a skew shape `λ/μ` with `m = |λ/μ|` cells, every quantity here is a sum
//! over `D ∈ EYD(λ/μ)` of a product over the cells of `λ ∖ D`:
//!
//! * `f^{λ/μ} = m! Σ_D Π 1/h(d)` counts standard tableaux;
//! * `f_q = [m]_q! Σ_D Π 1/[h(d)]_q` is its q-analog;
//! * `H(n; q) = [m]_q! Σ_D Π (1 - q^{n+c(d)}) / (1 - q^{h(d)})`.
//!
//! Since an excitation slides a cell along its diagonal, the contents over
//! `λ ∖ D` do not depend on `D`, which gives the factorization
//! `H(n; q) = f_q · Π_{d ∈ λ/μ} [n + c(d)]_q`. Both sides are computed
//! independently so that the identity can be checked.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::excited::{enumerate_eyd, Diagram};
use crate::partition::{Cell, Partition, SkewShape};
use crate::qarith::{product, q_factorial, q_int, CyclotomicTable, QPoly, QRat, QSeries};

/// Every flavor of `H` for one shape and one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookContentResult {
    pub shape: SkewShape,
    pub n: i64,
    /// Literal EYD sum; only computed on request.
    pub h_sum: Option<QRat>,
    pub h_product: QRat,
    pub f_q: QRat,
    pub content_product: QPoly,
    pub hbar_at_1: BigRational,
}

/// A skew shape together with its excited diagrams and hook lengths.
/// Build once and query many `n`.
#[derive(Debug)]
pub struct ExcitedShape {
    shape: SkewShape,
    outer_conj: Partition,
    diagrams: Vec<Diagram>,
    allow_below_length: bool,
    f_q: OnceLock<QRat>,
}

fn factorial(m: usize) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, k| acc * k)
}

fn ratio(n: i64, d: usize) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl ExcitedShape {
    pub fn new(shape: SkewShape) -> Self {
        let outer_conj = shape.outer().conjugate();
        let diagrams = enumerate_eyd(&shape);
        ExcitedShape {
            shape,
            outer_conj,
            diagrams,
            allow_below_length: false,
            f_q: OnceLock::new(),
        }
    }

    /// Permits `n < ℓ(λ)`. Zero q-integers are then legal; negative ones
    /// are still rejected.
    pub fn allow_below_length(mut self, allow: bool) -> Self {
        self.allow_below_length = allow;
        self
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn diagrams(&self) -> &[Diagram] {
        &self.diagrams
    }

    fn size(&self) -> usize {
        self.shape.size()
    }

    fn hook(&self, cell: Cell) -> usize {
        self.shape.outer().hook_with(&self.outer_conj, cell)
    }

    fn max_hook(&self) -> usize {
        self.shape.outer().cells().map(|c| self.hook(c)).max().unwrap_or(1)
    }

    fn table(&self) -> CyclotomicTable {
        CyclotomicTable::up_to(self.max_hook())
    }

    /// Cells of `λ ∖ D`.
    fn complement<'a>(&'a self, d: &'a Diagram) -> impl Iterator<Item = Cell> + 'a {
        self.shape.outer().cells().filter(move |&c| !d.contains(c))
    }

    /// `Π_{d ∈ λ} (1 - q^{h(d)})`, a common denominator for every EYD term.
    fn full_hook_den(&self) -> QPoly {
        let factors: Vec<QPoly> = self
            .shape
            .outer()
            .cells()
            .map(|c| QPoly::one_minus_q_pow(self.hook(c)))
            .collect();
        product(&factors)
    }

    /// `Π_{d ∈ D} (1 - q^{h(d)})`, which turns the `λ ∖ D` term onto the
    /// common denominator.
    fn diagram_hook_factor(&self, d: &Diagram) -> QPoly {
        let factors: Vec<QPoly> = d.cells().map(|c| QPoly::one_minus_q_pow(self.hook(c))).collect();
        product(&factors)
    }

    fn check_n(&self, n: i64) -> Result<()> {
        let length = self.shape.outer().len();
        if !self.allow_below_length && n < length as i64 {
            return Err(Error::BelowLength { n, length });
        }
        if let Some(bad) = self.shape.cells().iter().map(|c| n + c.content()).find(|&v| v < 0) {
            return Err(Error::NegativeQInt(bad));
        }
        Ok(())
    }

    /// Per-diagram terms `m! Π_{λ∖D} 1/h(d)` of the hook-length sum.
    pub fn naruse_terms(&self) -> Vec<BigRational> {
        let mf = BigRational::from_integer(factorial(self.size()));
        self.diagrams
            .iter()
            .map(|d| {
                self.complement(d)
                    .fold(mf.clone(), |acc, c| acc / BigRational::from_integer(self.hook(c).into()))
            })
            .collect()
    }

    /// Number of standard tableaux via the excited-diagram hook-length sum.
    pub fn naruse_f(&self) -> Result<BigInt> {
        let total: BigRational = self.naruse_terms().into_iter().sum();
        if !total.is_integer() {
            return Err(Error::NonIntegerResult(total.to_string()));
        }
        Ok(total.to_integer())
    }

    /// `f_q = [m]_q! Σ_D Π_{λ∖D} 1/[h(d)]_q`, reduced.
    pub fn f_q(&self) -> &QRat {
        self.f_q.get_or_init(|| {
            // [m]_q! Π 1/[h] = Π_{k≤m}(1 - q^k) / Π_{λ∖D}(1 - q^h) since |λ∖D| = m
            let lead = product(&(1..=self.size()).map(QPoly::one_minus_q_pow).collect::<Vec<_>>());
            let sum = self
                .diagrams
                .iter()
                .fold(QPoly::zero(), |acc, d| &acc + &self.diagram_hook_factor(d));
            QRat::with_cyclotomic_den(&lead * &sum, self.full_hook_den(), &self.table())
                .expect("hook denominators are nonzero")
        })
    }

    /// `C(q) = Π_{d ∈ λ/μ} [n + c(d)]_q`.
    pub fn content_product(&self, n: i64) -> Result<QPoly> {
        self.check_n(n)?;
        let factors: Vec<QPoly> = self
            .shape
            .cells()
            .iter()
            .map(|c| q_int((n + c.content()) as usize))
            .collect();
        Ok(product(&factors))
    }

    /// The content product over `λ ∖ D` for an arbitrary diagram; equal to
    /// [`ExcitedShape::content_product`] for every excited diagram.
    pub fn content_product_over(&self, d: &Diagram, n: i64) -> Result<QPoly> {
        self.check_n(n)?;
        let mut acc = QPoly::one();
        for c in self.complement(d) {
            let v = n + c.content();
            if v < 0 {
                return Err(Error::NegativeQInt(v));
            }
            acc = &acc * &q_int(v as usize);
        }
        Ok(acc)
    }

    /// Σ_D Π_{λ∖D} (1 - q^{n+c}) · Π_D (1 - q^h), the numerator of
    /// `H(n; q) / [m]_q!` over [`Self::full_hook_den`].
    fn content_sum_numerator(&self, n: i64) -> QPoly {
        self.diagrams.iter().fold(QPoly::zero(), |acc, d| {
            let factors: Vec<QPoly> = self
                .complement(d)
                .map(|c| QPoly::one_minus_q_pow((n + c.content()) as usize))
                .collect();
            &acc + &(&product(&factors) * &self.diagram_hook_factor(d))
        })
    }

    /// `H(n; q)` computed literally as the EYD sum, reduced by a generic gcd.
    pub fn h_sum(&self, n: i64) -> Result<QRat> {
        self.check_n(n)?;
        let num = &q_factorial(self.size()) * &self.content_sum_numerator(n);
        QRat::new(num, self.full_hook_den())
    }

    /// `H(n; q) = f_q · C(q)`.
    pub fn h_product(&self, n: i64) -> Result<QRat> {
        let c = self.content_product(n)?;
        let f = self.f_q();
        QRat::with_cyclotomic_den(f.num() * &c, f.den().clone(), &self.table())
    }

    /// `H(n; q) / [m]_q! = Σ_D Π_{λ∖D} (1 - q^{n+c}) / (1 - q^h)`.
    pub fn h_over_q_factorial(&self, n: i64) -> Result<QRat> {
        self.check_n(n)?;
        QRat::with_cyclotomic_den(self.content_sum_numerator(n), self.full_hook_den(), &self.table())
    }

    /// `H̄(n) = H(n; 1) / m!` through the `q → 1` limit of the product side.
    pub fn hbar_via_limit(&self, n: i64) -> Result<BigRational> {
        let f = self.f_q().limit_at_one()?;
        let c = BigRational::from_integer(self.content_product(n)?.at_one());
        Ok(f * c / BigRational::from_integer(factorial(self.size())))
    }

    /// `H̄(n) = Σ_D Π_{λ∖D} (n + c) / h`, valid for any integer `n`.
    pub fn hbar_via_sum(&self, n: i64) -> BigRational {
        self.diagrams
            .iter()
            .map(|d| {
                self.complement(d)
                    .fold(BigRational::one(), |acc, c| acc * ratio(n + c.content(), self.hook(c)))
            })
            .sum()
    }

    /// `H̄(n)` by both routes, which must agree.
    pub fn hbar(&self, n: i64) -> Result<BigRational> {
        let a = self.hbar_via_limit(n)?;
        let b = self.hbar_via_sum(n);
        if a != b {
            return Err(Error::PathMismatch(format!("Hbar({n}): limit {a} vs sum {b}")));
        }
        Ok(a)
    }

    /// Coefficients (ascending in `n`) of the polynomial `H(n) = H(n; 1)`,
    /// recovered by exact interpolation through `m + 1` integer points.
    pub fn h_polynomial_in_n(&self) -> Vec<BigRational> {
        let m = self.size();
        let mf = BigRational::from_integer(factorial(m));
        let base = self.shape.outer().len() as i64;
        let xs: Vec<i64> = (0..=m as i64).map(|k| base + k).collect();
        let ys: Vec<BigRational> = xs.iter().map(|&x| self.hbar_via_sum(x) * &mf).collect();
        interpolate(&xs, &ys)
    }

    /// Truncation of `Σ_D Π_{(r,c) ∈ λ∖D} q^{λ'_c - r} / (1 - q^{h(r,c)})`,
    /// the principal specialization `s_{λ/μ}(1, q, q², …)`.
    pub fn spec_series(&self, order: usize) -> QSeries {
        let mut total = QSeries::zero(order);
        for d in &self.diagrams {
            let cells: Vec<Cell> = self.complement(d).collect();
            let shift: usize = cells.iter().map(|c| self.outer_conj.row(c.col) - c.row).sum();
            if shift > order {
                continue;
            }
            let mut term = QSeries::one(order).shift(shift);
            for c in cells {
                term.div_one_minus_q_pow(self.hook(c));
            }
            total.add_assign(&term);
        }
        total
    }

    /// All flavors of `H` at `n`. The literal sum is included when
    /// `both_sides` is set, and must then equal the product side.
    pub fn hook_content(&self, n: i64, both_sides: bool) -> Result<HookContentResult> {
        let h_product = self.h_product(n)?;
        let h_sum = if both_sides {
            let s = self.h_sum(n)?;
            if s != h_product {
                return Err(Error::PathMismatch(format!("H sum {s} vs product {h_product}")));
            }
            Some(s)
        } else {
            None
        };
        Ok(HookContentResult {
            shape: self.shape.clone(),
            n,
            h_sum,
            f_q: self.f_q().clone(),
            content_product: self.content_product(n)?,
            hbar_at_1: self.hbar(n)?,
            h_product,
        })
    }
}

/// Newton interpolation; returns monomial coefficients in ascending order.
fn interpolate(xs: &[i64], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer((xs[i] - xs[i - j]).into());
        }
    }
    // Horner on the Newton form
    let mut coeffs = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // coeffs := coeffs * (x - xs[i]) + dd[i]
        let xi = BigRational::from_integer(xs[i].into());
        let mut next = vec![BigRational::zero(); n];
        for k in 0..n {
            if coeffs[k].is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] += &coeffs[k];
            }
            next[k] -= &coeffs[k] * &xi;
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

pub fn naruse_f(shape: &SkewShape) -> Result<BigInt> {
    ExcitedShape::new(shape.clone()).naruse_f()
}

pub fn f_q(shape: &SkewShape) -> QRat {
    ExcitedShape::new(shape.clone()).f_q().clone()
}

pub fn content_product(shape: &SkewShape, n: i64) -> Result<QPoly> {
    ExcitedShape::new(shape.clone()).content_product(n)
}

pub fn hook_content_h_sum(shape: &SkewShape, n: i64) -> Result<QRat> {
    ExcitedShape::new(shape.clone()).h_sum(n)
}

pub fn hook_content_h_product(shape: &SkewShape, n: i64) -> Result<QRat> {
    ExcitedShape::new(shape.clone()).h_product(n)
}

pub fn hbar(shape: &SkewShape, n: i64) -> Result<BigRational> {
    ExcitedShape::new(shape.clone()).hbar(n)
}

pub fn skew_spec_series_eyd(shape: &SkewShape, order: usize) -> QSeries {
    ExcitedShape::new(shape.clone()).spec_series(order)
}

/// `s_λ(1, q, …, q^{n-1}) = q^{b(λ)} Π_{d ∈ λ} [n + c(d)]_q / [h(d)]_q`.
/// Zero as soon as some `n + c(d)` is zero, which covers every `n < ℓ(λ)`.
pub fn principal_spec_closed(outer: &Partition, n: usize) -> QRat {
    let conj = outer.conjugate();
    let mut num = QPoly::one().shift(outer.b_stat());
    let mut den = QPoly::one();
    for c in outer.cells() {
        let v = n as i64 + c.content();
        if v <= 0 {
            return QRat::zero();
        }
        num = &num * &QPoly::one_minus_q_pow(v as usize);
        den = &den * &QPoly::one_minus_q_pow(outer.hook_with(&conj, c));
    }
    let max_hook = outer.cells().map(|c| outer.hook_with(&conj, c)).max().unwrap_or(1);
    QRat::with_cyclotomic_den(num, den, &CyclotomicTable::up_to(max_hook)).expect("nonzero hooks")
}

/// `q^{b(λ)} H_λ(n; q) / [|λ|]_q!`, the other side of the principal
/// specialization identity.
pub fn principal_spec_via_h(outer: &Partition, n: usize) -> Result<QRat> {
    let shape = ExcitedShape::new(SkewShape::straight(outer.clone())).allow_below_length(true);
    let n = n as i64;
    if shape.shape().cells().iter().any(|c| n + c.content() < 0) {
        return Ok(QRat::zero());
    }
    let h = shape.h_product(n)?;
    let scaled = QRat::from_poly(QPoly::one().shift(outer.b_stat())).mul(&h);
    scaled.div(&QRat::from_poly(q_factorial(outer.size())))
}
