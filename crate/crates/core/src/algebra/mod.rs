//! Finite binary operations, groups and skew braces given by structure tables.
//!
//! Elements of a carrier of size `n` are the labels `1..=n`, exactly as they
//! appear in printed structure tables. Internally an [`Element`] stores the
//! zero-based index, so tables can be indexed directly.

mod brace;
mod file;
mod group;
mod table;

pub use brace::{validate_skew_brace, BraceError, SkewBrace, TableRole};
pub use file::{BraceFile, BraceFileError};
pub use group::{validate_group, FiniteGroup, GroupError};
pub use table::{OperationTable, TableError};

use std::fmt;

/// An element of a finite carrier `{1, ..., n}`.
///
/// Displays as its 1-based label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(u16);

impl Element {
    /// Largest carrier size representable.
    pub const MAX_CARRIER: usize = u16::MAX as usize;

    /// Element with the given 1-based label.
    ///
    /// Panics if `label` is zero or larger than [`Element::MAX_CARRIER`].
    pub fn from_label(label: usize) -> Self {
        assert!(
            (1..=Self::MAX_CARRIER).contains(&label),
            "element label {label} out of range"
        );
        Element((label - 1) as u16)
    }

    /// Element with the given 0-based index.
    pub fn from_index(index: usize) -> Self {
        assert!(index < Self::MAX_CARRIER, "element index {index} out of range");
        Element(index as u16)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn label(self) -> usize {
        self.0 as usize + 1
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Shorthand for [`Element::from_label`].
pub fn el(label: usize) -> Element {
    Element::from_label(label)
}

/// Iterator over all elements of a carrier of size `n`, in label order.
pub fn elements(n: usize) -> impl DoubleEndedIterator<Item = Element> + ExactSizeIterator + Clone {
    (0..n).map(Element::from_index)
}
