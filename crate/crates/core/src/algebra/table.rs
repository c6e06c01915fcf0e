use std::fmt;

use thiserror::Error;

use super::{elements, Element};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("operation table must have at least one element")]
    Empty,
    #[error("carrier of size {0} is too large")]
    TooLarge(usize),
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("entry {value} at row {row}, column {col} is outside 1..={n}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
}

/// An `n × n` table of a binary operation on `{1, ..., n}`.
///
/// Row is the left operand, column the right operand.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OperationTable {
    n: usize,
    entries: Vec<Element>,
}

impl OperationTable {
    /// Builds a table from rows of 1-based labels.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self, TableError> {
        let n = rows.len();
        if n == 0 {
            return Err(TableError::Empty);
        }
        if n > Element::MAX_CARRIER {
            return Err(TableError::TooLarge(n));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(TableError::RowLength {
                    row: r + 1,
                    expected: n,
                    found: row.len(),
                });
            }
            for (c, &value) in row.iter().enumerate() {
                if value == 0 || value > n {
                    return Err(TableError::EntryOutOfRange {
                        row: r + 1,
                        col: c + 1,
                        value,
                        n,
                    });
                }
                entries.push(Element::from_label(value));
            }
        }
        Ok(OperationTable { n, entries })
    }

    /// Builds a table by evaluating `op` on every pair.
    ///
    /// Panics if `op` returns an element outside the carrier.
    pub fn from_fn(n: usize, mut op: impl FnMut(Element, Element) -> Element) -> Self {
        assert!(n > 0 && n <= Element::MAX_CARRIER);
        let mut entries = Vec::with_capacity(n * n);
        for x in elements(n) {
            for y in elements(n) {
                let z = op(x, y);
                assert!(z.index() < n, "operation produced {z} outside 1..={n}");
                entries.push(z);
            }
        }
        OperationTable { n, entries }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: Element, y: Element) -> Element {
        self.entries[x.index() * self.n + y.index()]
    }

    /// Copy of this table with one entry replaced.
    pub fn with_entry(&self, x: Element, y: Element, value: Element) -> Self {
        assert!(value.index() < self.n);
        let mut out = self.clone();
        out.entries[x.index() * self.n + y.index()] = value;
        out
    }

    pub fn row(&self, x: Element) -> &[Element] {
        let start = x.index() * self.n;
        &self.entries[start..start + self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> {
        self.entries.chunks(self.n)
    }

    pub fn is_commutative(&self) -> bool {
        elements(self.n).all(|x| elements(self.n).all(|y| self.get(x, y) == self.get(y, x)))
    }

    /// Whether `y ↦ x·y` is a bijection for the given column `y` fixed, i.e. right
    /// multiplication by `y` permutes the carrier.
    pub fn column_is_permutation(&self, y: Element) -> bool {
        let mut seen = vec![false; self.n];
        for x in elements(self.n) {
            let z = self.get(x, y).index();
            if seen[z] {
                return false;
            }
            seen[z] = true;
        }
        true
    }
}

impl fmt::Debug for OperationTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OperationTable(n={}) ", self.n)?;
        f.debug_list()
            .entries(self.rows().map(|r| r.iter().map(|e| e.label()).collect::<Vec<_>>()))
            .finish()
    }
}

/// Rows of space-separated labels, one row per line.
impl fmt::Display for OperationTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let mut first = true;
            for e in row {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{e}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}
