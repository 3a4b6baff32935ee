//! Partitions, skew shapes and the per-cell statistics used by every formula.
//!
//! Cells are `(row, col)`, both 1-based, drawn in English convention: row 1 is
//! the top row and columns grow to the right. The content of `(r, c)` is
//! `c - r` and its hook length in `λ` is `λ_r - c + λ'_c - r + 1`.
//!
//! Textual syntax: parts are comma separated (`3,3,2,1`), a skew shape is
//! `outer/inner` (`3,3,2,1/2,1`), and `0` or the empty string is `∅`. A shape
//! written without a slash has empty inner partition.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// Validates a signed part list. Trailing zeros are stripped.
pub fn make_partition(parts: &[i64]) -> Result<Partition> {
    if parts.iter().any(|&p| p < 0) {
        return Err(Error::NegativePart(parts.to_vec()));
    }
    let mut v: Vec<i64> = parts.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    if v.windows(2).any(|w| w[0] < w[1]) || v.contains(&0) {
        return Err(Error::NotWeaklyDecreasing(parts.to_vec()));
    }
    Ok(Partition {
        parts: v.into_iter().map(|p| p as usize).collect(),
    })
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let signed: Vec<i64> = parts.iter().map(|&p| p as i64).collect();
        make_partition(&signed)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`, the number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `r` (1-based); rows past the end have length 0.
    pub fn row(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// `μ ⊆ λ` cellwise, missing parts of either side read as 0.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row(cell.row)
    }

    /// All cells, row-major.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |c| Cell::new(i + 1, c)))
    }

    pub fn hook(&self, cell: Cell) -> Result<usize> {
        if !self.contains_cell(cell) {
            return Err(Error::CellOutsideShape(cell));
        }
        Ok(self.hook_with(&self.conjugate(), cell))
    }

    /// Hook length using a precomputed conjugate; `cell` must lie in `self`.
    pub(crate) fn hook_with(&self, conjugate: &Partition, cell: Cell) -> usize {
        self.row(cell.row) + conjugate.row(cell.col) + 1 - cell.col - cell.row
    }

    /// `b(λ) = Σ (i-1) λ_i`.
    pub fn b_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Orders partitions by size, then lexicographically decreasing within a
    /// size. This is the enumeration order used throughout sweeps.
    pub fn sweep_cmp(&self, other: &Partition) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim().parse::<i64>().map_err(|e| Error::Parse {
                    input: s.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        make_partition(&parts)
    }
}

/// A cell `(row, col)` of a diagram, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Diagonal index `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// `λ/μ` with `μ ⊆ λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    /// `λ/∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// `|λ/μ|`.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    /// Cells of `λ` not in `μ`, row-major.
    pub fn cells(&self) -> Vec<Cell> {
        self.outer
            .cells()
            .filter(|&c| !self.inner.contains_cell(c))
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((outer, inner)) => SkewShape::new(outer.parse()?, inner.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// All partitions of `n`, lexicographically decreasing: `(n), (n-1,1), …, (1^n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every partition of size `0..=max_size`, in [`Partition::sweep_cmp`] order.
pub fn partitions_up_to(max_size: usize) -> impl Iterator<Item = Partition> {
    (0..=max_size).flat_map(partitions_of)
}

/// Every `μ ⊆ λ`, in [`Partition::sweep_cmp`] order.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    fn go(outer: &Partition, row: usize, bound: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition {
            parts: prefix.clone(),
        });
        let cap = bound.min(outer.row(row));
        for p in 1..=cap {
            prefix.push(p);
            go(outer, row + 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(outer, 1, usize::MAX, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.sweep_cmp(b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn make_partition_validates() {
        assert_eq!(make_partition(&[3, 3, 2, 1]).unwrap().parts(), &[3, 3, 2, 1]);
        assert!(make_partition(&[]).unwrap().is_empty());
        assert_eq!(make_partition(&[2, 1, 0, 0]).unwrap(), p(&[2, 1]));
        assert!(matches!(make_partition(&[2, 3]), Err(Error::NotWeaklyDecreasing(_))));
        assert!(matches!(make_partition(&[2, 0, 1]), Err(Error::NotWeaklyDecreasing(_))));
        assert!(matches!(make_partition(&[2, -1]), Err(Error::NegativePart(_))));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 3, 2, 1]).conjugate(), p(&[4, 3, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn containment() {
        assert!(p(&[3, 3, 2, 1]).contains(&p(&[2, 1])));
        assert!(!p(&[2, 2]).contains(&p(&[3])));
        assert!(!p(&[2]).contains(&p(&[1, 1])));
        let l = p(&[4, 2, 2]);
        assert!(l.contains(&l));
        assert!(l.contains(&Partition::empty()));
    }

    #[test]
    fn skew_cells_examples() {
        let s: SkewShape = "3,3,2,1/2,1".parse().unwrap();
        let expected = [(1, 3), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1)].map(|(r, c)| Cell::new(r, c));
        assert_eq!(s.cells(), expected);
        assert_eq!(s.size(), 6);
        let full = SkewShape::new(p(&[3, 1]), p(&[3, 1])).unwrap();
        assert!(full.cells().is_empty());
        assert_eq!(SkewShape::straight(p(&[1])).cells(), vec![Cell::new(1, 1)]);
    }

    #[test]
    fn hook_examples() {
        let l = p(&[3, 3, 2, 1]);
        assert_eq!(l.hook(Cell::new(1, 1)).unwrap(), 6);
        // (2,3) is an outer corner
        assert_eq!(l.hook(Cell::new(2, 3)).unwrap(), 1);
        assert_eq!(l.hook(Cell::new(1, 3)).unwrap(), 2);
        assert_eq!(p(&[1]).hook(Cell::new(1, 1)).unwrap(), 1);
        assert_eq!(l.hook(Cell::new(4, 2)), Err(Error::CellOutsideShape(Cell::new(4, 2))));
    }

    #[test]
    fn content_examples() {
        assert_eq!(Cell::new(1, 1).content(), 0);
        assert_eq!(Cell::new(2, 3).content(), 1);
        assert_eq!(Cell::new(4, 1).content(), -3);
    }

    #[test]
    fn b_stat_examples() {
        assert_eq!(p(&[3, 3, 2, 1]).b_stat(), 10);
        assert_eq!(Partition::empty().b_stat(), 0);
        assert_eq!(p(&[7]).b_stat(), 0);
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(partitions_up_to(0).collect::<Vec<_>>(), vec![Partition::empty()]);
        assert_eq!(partitions_up_to(3).count(), 7);
        assert_eq!(partitions_up_to(5).count(), 19);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);

        assert_eq!(subpartitions(&p(&[1])), vec![Partition::empty(), p(&[1])]);
        assert_eq!(
            subpartitions(&p(&[2, 1])),
            vec![Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])]
        );
        assert_eq!(subpartitions(&p(&[2, 2])).len(), 6);
    }

    #[test]
    fn parse_and_display() {
        let s: SkewShape = "5,5,3/3,2,1".parse().unwrap();
        assert_eq!(s.to_string(), "5,5,3/3,2,1");
        let straight: SkewShape = "2,1".parse().unwrap();
        assert!(straight.inner().is_empty());
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("2,2/3".parse::<SkewShape>().is_err());
        assert!("a,1".parse::<Partition>().is_err());
        assert_eq!("3,1/0".parse::<SkewShape>().unwrap().to_string(), "3,1");
    }
}
