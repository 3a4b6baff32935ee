//! Brute-force ground truth: tableau enumeration, generating polynomials and
//! Littlewood–Richardson coefficients. Nothing here touches excited diagrams.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::formulas::naruse_f;
use crate::partition::{Cell, Partition, SkewShape};
use crate::qarith::{QPoly, QSeries};

/// A filling of a skew shape by positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub shape: SkewShape,
    pub entries: BTreeMap<Cell, usize>,
}

impl Tableau {
    /// Rows weakly increase, columns strictly increase, every cell is filled.
    pub fn is_semistandard(&self) -> bool {
        let cells = self.shape.cells();
        if cells.len() != self.entries.len() || cells.iter().any(|c| !self.entries.contains_key(c)) {
            return false;
        }
        cells.iter().all(|&c| {
            let v = self.entries[&c];
            let left_ok = match self.entries.get(&Cell::new(c.row, c.col.wrapping_sub(1))) {
                Some(&l) => l <= v,
                None => true,
            };
            let up_ok = match self.entries.get(&Cell::new(c.row.wrapping_sub(1), c.col)) {
                Some(&u) => u < v,
                None => true,
            };
            v >= 1 && left_ok && up_ok
        })
    }

    /// Semistandard with strict rows and entries exactly `1..=|λ/μ|`.
    pub fn is_standard(&self) -> bool {
        let mut values: Vec<usize> = self.entries.values().copied().collect();
        values.sort_unstable();
        self.is_semistandard()
            && values.iter().copied().eq(1..=self.shape.size())
    }

    /// `Σ (T(d) - 1)`, the exponent in the principal specialization.
    pub fn weight(&self) -> usize {
        self.entries.values().map(|v| v - 1).sum()
    }
}

/// Size limits for the enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Cells allowed for standard-tableau counts and LR coefficients.
    pub syt_cells: usize,
    /// Cells allowed for semistandard enumerations.
    pub ssyt_cells: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            syt_cells: 12,
            ssyt_cells: 10,
        }
    }
}

impl OracleLimits {
    fn check(cells: usize, limit: usize) -> Result<()> {
        if cells > limit {
            return Err(Error::SizeLimitExceeded { cells, limit });
        }
        Ok(())
    }
}

/// Row-major cell order with the neighbours each cell must respect.
struct FillPlan {
    cells: Vec<Cell>,
    /// Index of the left neighbour inside the skew shape.
    left: Vec<Option<usize>>,
    /// Index of the upper neighbour inside the skew shape.
    up: Vec<Option<usize>>,
}

impl FillPlan {
    fn new(shape: &SkewShape) -> Self {
        let cells = shape.cells();
        let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let left = cells
            .iter()
            .map(|c| index.get(&Cell::new(c.row, c.col.wrapping_sub(1))).copied())
            .collect();
        let up = cells
            .iter()
            .map(|c| index.get(&Cell::new(c.row.wrapping_sub(1), c.col)).copied())
            .collect();
        FillPlan { cells, left, up }
    }
}

/// Visits every semistandard filling with entries `≤ max_entry` whose weight
/// is at most `weight_cap`, passing the entry vector (plan order) and weight.
fn each_ssyt(
    shape: &SkewShape,
    max_entry: usize,
    weight_cap: usize,
    visit: &mut dyn FnMut(&FillPlan, &[usize], usize),
) {
    fn go(
        plan: &FillPlan,
        k: usize,
        max_entry: usize,
        weight: usize,
        cap: usize,
        entries: &mut Vec<usize>,
        visit: &mut dyn FnMut(&FillPlan, &[usize], usize),
    ) {
        if k == plan.cells.len() {
            visit(plan, entries, weight);
            return;
        }
        let mut lo = 1;
        if let Some(l) = plan.left[k] {
            lo = lo.max(entries[l]);
        }
        if let Some(u) = plan.up[k] {
            lo = lo.max(entries[u] + 1);
        }
        for v in lo..=max_entry {
            let w = weight + v - 1;
            if w > cap {
                break;
            }
            entries.push(v);
            go(plan, k + 1, max_entry, w, cap, entries, visit);
            entries.pop();
        }
    }
    let plan = FillPlan::new(shape);
    go(&plan, 0, max_entry, 0, weight_cap, &mut Vec::with_capacity(plan.cells.len()), visit);
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Oracle {
    pub limits: OracleLimits,
}

impl Oracle {
    pub fn new(limits: OracleLimits) -> Self {
        Oracle { limits }
    }

    /// Standard tableaux, counted by placing `1, 2, …` on addable cells.
    /// Intermediate shapes are memoized.
    pub fn count_syt(&self, shape: &SkewShape) -> Result<BigInt> {
        OracleLimits::check(shape.size(), self.limits.syt_cells)?;
        let outer = shape.outer().parts().to_vec();
        let mut rows: Vec<usize> = (1..=outer.len()).map(|r| shape.inner().row(r)).collect();
        let mut memo: HashMap<Vec<usize>, BigInt> = HashMap::new();

        fn go(outer: &[usize], rows: &mut Vec<usize>, memo: &mut HashMap<Vec<usize>, BigInt>) -> BigInt {
            if rows.as_slice() == outer {
                return BigInt::from(1);
            }
            if let Some(v) = memo.get(rows.as_slice()) {
                return v.clone();
            }
            let mut total = BigInt::from(0);
            for r in 0..outer.len() {
                let addable = rows[r] < outer[r] && (r == 0 || rows[r - 1] > rows[r]);
                if addable {
                    rows[r] += 1;
                    total += go(outer, rows, memo);
                    rows[r] -= 1;
                }
            }
            memo.insert(rows.clone(), total.clone());
            total
        }

        Ok(go(&outer, &mut rows, &mut memo))
    }

    pub fn count_ssyt(&self, shape: &SkewShape, n: usize) -> Result<BigInt> {
        Ok(self.ssyt_genpoly(shape, n)?.at_one())
    }

    /// `Σ_T q^{Σ (T(d) - 1)}` over semistandard fillings with entries `≤ n`.
    pub fn ssyt_genpoly(&self, shape: &SkewShape, n: usize) -> Result<QPoly> {
        OracleLimits::check(shape.size(), self.limits.ssyt_cells)?;
        let cap = shape.size() * n.saturating_sub(1);
        let mut by_weight = vec![0u64; cap + 1];
        each_ssyt(shape, n, cap, &mut |_, _, w| by_weight[w] += 1);
        Ok(QPoly::from_coeffs(by_weight.into_iter().map(BigInt::from).collect()))
    }

    /// `s_{λ/μ}(1, q, q², …)` through `q^order`. Entries above `order + 1`
    /// would contribute a weight above `order`, so they are never tried.
    pub fn ssyt_spec_series(&self, shape: &SkewShape, order: usize) -> Result<QSeries> {
        OracleLimits::check(shape.size(), self.limits.ssyt_cells)?;
        let mut by_weight = vec![0u64; order + 1];
        each_ssyt(shape, order + 1, order, &mut |_, _, w| by_weight[w] += 1);
        let poly = QPoly::from_coeffs(by_weight.into_iter().map(BigInt::from).collect());
        Ok(QSeries::from_poly(&poly, order))
    }

    /// Every semistandard tableau with entries `≤ n`.
    pub fn all_ssyt(&self, shape: &SkewShape, n: usize) -> Result<Vec<Tableau>> {
        OracleLimits::check(shape.size(), self.limits.ssyt_cells)?;
        let mut out = Vec::new();
        each_ssyt(shape, n, usize::MAX, &mut |plan, entries, _| {
            out.push(Tableau {
                shape: shape.clone(),
                entries: plan.cells.iter().copied().zip(entries.iter().copied()).collect(),
            });
        });
        Ok(out)
    }

    /// `c^λ_{μν}` for every `ν`: semistandard fillings of `λ/μ` whose reading
    /// word (rows top to bottom, each right to left) is a lattice word.
    pub fn lr_coefficients(&self, outer: &Partition, inner: &Partition) -> Result<BTreeMap<Partition, u64>> {
        let shape = SkewShape::new(outer.clone(), inner.clone())?;
        OracleLimits::check(shape.size(), self.limits.syt_cells)?;
        let m = shape.size();
        // reading order: rows top to bottom, columns right to left
        let mut order: Vec<Cell> = Vec::with_capacity(m);
        for r in 1..=outer.len() {
            for c in (inner.row(r) + 1..=outer.row(r)).rev() {
                order.push(Cell::new(r, c));
            }
        }
        let index: HashMap<Cell, usize> = order.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let right: Vec<Option<usize>> = order.iter().map(|c| index.get(&Cell::new(c.row, c.col + 1)).copied()).collect();
        let up: Vec<Option<usize>> = order
            .iter()
            .map(|c| index.get(&Cell::new(c.row.wrapping_sub(1), c.col)).copied())
            .collect();

        struct Search<'a> {
            right: &'a [Option<usize>],
            up: &'a [Option<usize>],
            m: usize,
            entries: Vec<usize>,
            counts: Vec<usize>,
            out: BTreeMap<Partition, u64>,
        }

        impl Search<'_> {
            fn go(&mut self, k: usize) {
                if k == self.m {
                    let content: Vec<usize> = self.counts[1..].iter().copied().take_while(|&c| c > 0).collect();
                    let nu = Partition::new(content).expect("lattice words have partition content");
                    *self.out.entry(nu).or_insert(0) += 1;
                    return;
                }
                let mut lo = 1;
                let mut hi = self.m;
                if let Some(u) = self.up[k] {
                    lo = lo.max(self.entries[u] + 1);
                }
                if let Some(r) = self.right[k] {
                    hi = hi.min(self.entries[r]);
                }
                for v in lo..=hi {
                    if v > 1 && self.counts[v - 1] <= self.counts[v] {
                        continue;
                    }
                    self.entries[k] = v;
                    self.counts[v] += 1;
                    self.go(k + 1);
                    self.counts[v] -= 1;
                }
            }
        }

        let mut search = Search {
            right: &right,
            up: &up,
            m,
            entries: vec![0; m],
            counts: vec![0; m + 2],
            out: BTreeMap::new(),
        };
        search.go(0);
        Ok(search.out)
    }

    /// `f^{λ/μ} = Σ_ν c^λ_{μν} f^ν`, with every `f` from the hook-length sum.
    pub fn lr_identity_check(&self, outer: &Partition, inner: &Partition) -> Result<bool> {
        let lhs = naruse_f(&SkewShape::new(outer.clone(), inner.clone())?)?;
        let mut rhs = BigInt::from(0);
        for (nu, c) in self.lr_coefficients(outer, inner)? {
            rhs += naruse_f(&SkewShape::straight(nu))? * c;
        }
        Ok(lhs == rhs)
    }
}

pub fn count_syt(shape: &SkewShape) -> Result<BigInt> {
    Oracle::default().count_syt(shape)
}

pub fn count_ssyt(shape: &SkewShape, n: usize) -> Result<BigInt> {
    Oracle::default().count_ssyt(shape, n)
}

pub fn ssyt_genpoly(shape: &SkewShape, n: usize) -> Result<QPoly> {
    Oracle::default().ssyt_genpoly(shape, n)
}

pub fn ssyt_spec_series(shape: &SkewShape, order: usize) -> Result<QSeries> {
    Oracle::default().ssyt_spec_series(shape, order)
}

pub fn lr_coefficients(outer: &Partition, inner: &Partition) -> Result<BTreeMap<Partition, u64>> {
    Oracle::default().lr_coefficients(outer, inner)
}

pub fn lr_identity_check(outer: &Partition, inner: &Partition) -> Result<bool> {
    Oracle::default().lr_identity_check(outer, inner)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> SkewShape {
        text.parse().unwrap()
    }

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    #[test]
    fn syt_counts() {
        assert_eq!(count_syt(&s("3,3,2,1/2,1")).unwrap(), BigInt::from(61));
        assert_eq!(count_syt(&s("5,5,3/3,2,1")).unwrap(), BigInt::from(91));
        assert_eq!(count_syt(&s("1")).unwrap(), BigInt::from(1));
        assert_eq!(count_syt(&s("3,2/3,2")).unwrap(), BigInt::from(1));
        assert!(matches!(count_syt(&s("13")), Err(Error::SizeLimitExceeded { cells: 13, limit: 12 })));
    }

    #[test]
    fn ssyt_counts() {
        assert_eq!(count_ssyt(&s("3,3,2,1/2,1"), 4).unwrap(), BigInt::from(204));
        for n in 0..6 {
            assert_eq!(count_ssyt(&s("1"), n).unwrap(), BigInt::from(n));
        }
        assert_eq!(count_ssyt(&s("2,1"), 0).unwrap(), BigInt::from(0));
        assert_eq!(count_ssyt(&s("2,1/2,1"), 0).unwrap(), BigInt::from(1));
    }

    #[test]
    fn genpoly_examples() {
        assert_eq!(ssyt_genpoly(&s("2"), 2).unwrap(), QPoly::from_i64(&[1, 1, 1]));
        assert_eq!(ssyt_genpoly(&s("1,1"), 2).unwrap(), QPoly::from_i64(&[0, 1]));
        assert_eq!(ssyt_genpoly(&s("1"), 3).unwrap(), QPoly::from_i64(&[1, 1, 1]));
    }

    #[test]
    fn spec_series_examples() {
        let one = ssyt_spec_series(&s("1"), 4).unwrap();
        assert_eq!(one, QSeries::from_poly(&QPoly::from_i64(&[1, 1, 1, 1, 1]), 4));
        let col = ssyt_spec_series(&s("1,1"), 4).unwrap();
        assert_eq!(col, QSeries::from_poly(&QPoly::from_i64(&[0, 1, 1, 2, 2]), 4));
    }

    #[test]
    fn enumerated_tableaux_are_valid() {
        let oracle = Oracle::default();
        let all = oracle.all_ssyt(&s("3,2/1"), 3).unwrap();
        assert!(all.iter().all(Tableau::is_semistandard));
        assert_eq!(BigInt::from(all.len()), oracle.count_ssyt(&s("3,2/1"), 3).unwrap());
        let standard = oracle.all_ssyt(&s("3,2/1"), 4).unwrap();
        let n_std = standard.iter().filter(|t| t.is_standard()).count();
        assert_eq!(BigInt::from(n_std), oracle.count_syt(&s("3,2/1")).unwrap());
    }

    #[test]
    fn tableau_validation() {
        let shape = s("2,1");
        let t = |v: [usize; 3]| Tableau {
            shape: shape.clone(),
            entries: [Cell::new(1, 1), Cell::new(1, 2), Cell::new(2, 1)].into_iter().zip(v).collect(),
        };
        assert!(t([1, 1, 2]).is_semistandard());
        assert!(!t([1, 1, 2]).is_standard());
        assert!(t([1, 2, 3]).is_standard());
        assert!(!t([1, 1, 1]).is_semistandard());
        assert!(!t([2, 1, 3]).is_semistandard());
        assert_eq!(t([1, 2, 3]).weight(), 3);
    }

    #[test]
    fn lr_examples() {
        let got = lr_coefficients(&p("2,1"), &p("1")).unwrap();
        assert_eq!(got, BTreeMap::from([(p("2"), 1), (p("1,1"), 1)]));
        let got = lr_coefficients(&p("3,1"), &p("3,1")).unwrap();
        assert_eq!(got, BTreeMap::from([(Partition::empty(), 1)]));
        let got = lr_coefficients(&p("2,2"), &p("1")).unwrap();
        assert_eq!(got, BTreeMap::from([(p("2,1"), 1)]));
        // c^{321}_{21,21} = 2
        assert_eq!(lr_coefficients(&p("3,2,1"), &p("2,1")).unwrap()[&p("2,1")], 2);
    }

    #[test]
    fn lr_identity_examples() {
        assert!(lr_identity_check(&p("2,1"), &p("1")).unwrap());
        assert!(lr_identity_check(&p("3,3,2,1"), &p("2,1")).unwrap());
        assert!(lr_identity_check(&p("4,2"), &p("4,2")).unwrap());
        let total: u64 = lr_coefficients(&p("3,3,2,1"), &p("2,1"))
            .unwrap()
            .iter()
            .map(|(nu, c)| c * u64::try_from(naruse_f(&SkewShape::straight(nu.clone())).unwrap()).unwrap())
            .sum();
        assert_eq!(total, 61);
    }
}
