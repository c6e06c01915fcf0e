use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use super::{elements, validate_group, Element, FiniteGroup, GroupError, OperationTable};

/// Which of the two structure tables an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableRole {
    Circ,
    Star,
}

impl fmt::Display for TableRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableRole::Circ => "∘",
            TableRole::Star => "*",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BraceError {
    #[error("{role}-table is not a group: {source}")]
    Group { role: TableRole, source: GroupError },
    #[error("∘-table has size {circ} but *-table has size {star}")]
    SizeMismatch { circ: usize, star: usize },
    #[error("modified distributive law fails at x={0}, y={1}, z={2}")]
    DistributiveLawFails(Element, Element, Element),
    #[error("∘-identity {circ} differs from *-identity {star}")]
    IdentityMismatch { circ: Element, star: Element },
}

/// A finite skew brace `(X, ∘, *)`.
///
/// Both groups share the carrier `{1, ..., n}` and satisfy
/// `x∘(y*z) = (x∘y) * x^* * (x∘z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewBrace {
    circ: FiniteGroup,
    star: FiniteGroup,
}

/// Validates both tables as groups and checks the modified distributive law
/// on all `n³` triples.
pub fn validate_skew_brace(
    circ: OperationTable,
    star: OperationTable,
) -> Result<SkewBrace, BraceError> {
    if circ.size() != star.size() {
        return Err(BraceError::SizeMismatch {
            circ: circ.size(),
            star: star.size(),
        });
    }
    let circ = validate_group(circ).map_err(|source| BraceError::Group {
        role: TableRole::Circ,
        source,
    })?;
    let star = validate_group(star).map_err(|source| BraceError::Group {
        role: TableRole::Star,
        source,
    })?;

    let n = circ.order();
    let failure = (0..n).into_par_iter().find_map_first(|xi| {
        let x = Element::from_index(xi);
        let x_star_inv = star.inv(x);
        for y in elements(n) {
            let xy = circ.op(x, y);
            let left_prefix = star.op(xy, x_star_inv);
            for z in elements(n) {
                let lhs = circ.op(x, star.op(y, z));
                let rhs = star.op(left_prefix, circ.op(x, z));
                if lhs != rhs {
                    return Some(BraceError::DistributiveLawFails(x, y, z));
                }
            }
        }
        None
    });
    if let Some(err) = failure {
        return Err(err);
    }

    if circ.identity() != star.identity() {
        return Err(BraceError::IdentityMismatch {
            circ: circ.identity(),
            star: star.identity(),
        });
    }
    Ok(SkewBrace { circ, star })
}

impl SkewBrace {
    /// Parses two tables given as rows of labels and validates them.
    ///
    /// Panics on malformed tables; intended for literals in tests and examples.
    pub fn from_rows<R: AsRef<[usize]>>(circ: &[R], star: &[R]) -> Result<Self, BraceError> {
        let circ = OperationTable::from_rows(circ).expect("malformed ∘-table");
        let star = OperationTable::from_rows(star).expect("malformed *-table");
        validate_skew_brace(circ, star)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.circ.order()
    }

    /// The shared identity element.
    #[inline]
    pub fn identity(&self) -> Element {
        self.circ.identity()
    }

    #[inline]
    pub fn circ(&self, x: Element, y: Element) -> Element {
        self.circ.op(x, y)
    }

    #[inline]
    pub fn star(&self, x: Element, y: Element) -> Element {
        self.star.op(x, y)
    }

    /// `x^∘`
    #[inline]
    pub fn circ_inv(&self, x: Element) -> Element {
        self.circ.inv(x)
    }

    /// `x^*`
    #[inline]
    pub fn star_inv(&self, x: Element) -> Element {
        self.star.inv(x)
    }

    pub fn circ_group(&self) -> &FiniteGroup {
        &self.circ
    }

    pub fn star_group(&self) -> &FiniteGroup {
        &self.star
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Element> + ExactSizeIterator + Clone {
        elements(self.size())
    }

    pub fn is_star_commutative(&self) -> bool {
        self.star.is_commutative()
    }
}
