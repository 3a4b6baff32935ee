//! Elementary excitations and the set of excited Young diagrams `EYD(λ/μ)`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition, SkewShape};

/// A finite set of cells kept in row-major order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    cells: BTreeSet<Cell>,
}

impl Diagram {
    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> Self {
        Diagram {
            cells: cells.into_iter().collect(),
        }
    }

    /// The Young diagram of `p`.
    pub fn of_partition(p: &Partition) -> Self {
        Diagram::from_cells(p.cells())
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Sorted contents of the cells.
    pub fn contents(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.cells.iter().map(Cell::content).collect();
        v.sort_unstable();
        v
    }

    /// True when `d` can slide to `(r+1, c+1)`: the three cells right, below
    /// and diagonal are free and the target lies in `outer`.
    pub fn can_excite(&self, d: Cell, outer: &Partition) -> Result<bool> {
        if !self.contains(d) {
            return Err(Error::CellNotInDiagram(d));
        }
        let right = Cell::new(d.row, d.col + 1);
        let below = Cell::new(d.row + 1, d.col);
        let diag = Cell::new(d.row + 1, d.col + 1);
        Ok(outer.contains_cell(diag)
            && !self.contains(right)
            && !self.contains(below)
            && !self.contains(diag))
    }

    pub fn excite(&self, d: Cell, outer: &Partition) -> Result<Diagram> {
        if !self.can_excite(d, outer)? {
            return Err(Error::ExcitationNotApplicable(d));
        }
        Ok(self.moved(d))
    }

    fn moved(&self, d: Cell) -> Diagram {
        let mut cells = self.cells.clone();
        cells.remove(&d);
        cells.insert(Cell::new(d.row + 1, d.col + 1));
        Diagram { cells }
    }

    /// Diagrams reachable by one elementary excitation inside `outer`.
    pub fn successors<'a>(&'a self, outer: &'a Partition) -> impl Iterator<Item = Diagram> + 'a {
        self.cells
            .iter()
            .filter(move |&&d| self.can_excite(d, outer).unwrap_or(false))
            .map(move |&d| self.moved(d))
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Breadth-first closure of `{μ}` under elementary excitations inside `λ`.
/// The result is sorted, so equal shapes always give identical vectors.
pub fn enumerate_eyd(shape: &SkewShape) -> Vec<Diagram> {
    let outer = shape.outer();
    let start = Diagram::of_partition(shape.inner());
    let mut seen: HashSet<Diagram> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(d) = queue.pop_front() {
        for next in d.successors(outer) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Diagram> = seen.into_iter().collect();
    out.sort();
    out
}
