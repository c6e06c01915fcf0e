use rayon::prelude::*;
use thiserror::Error;

use super::{elements, Element, OperationTable};

/// Why a table fails to be a group. Witnesses are the first counterexample in
/// row-major scan order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not associative: ({0}·{1})·{2} ≠ {0}·({1}·{2})")]
    NotAssociative(Element, Element, Element),
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(Element),
}

/// A validated finite group on `{1, ..., n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: OperationTable,
    identity: Element,
    inverse: Vec<Element>,
}

/// Checks the group axioms exhaustively and computes identity and inverses.
pub fn validate_group(table: OperationTable) -> Result<FiniteGroup, GroupError> {
    let n = table.size();

    let non_assoc = (0..n).into_par_iter().find_map_first(|xi| {
        let x = Element::from_index(xi);
        for y in elements(n) {
            let xy = table.get(x, y);
            for z in elements(n) {
                if table.get(xy, z) != table.get(x, table.get(y, z)) {
                    return Some(GroupError::NotAssociative(x, y, z));
                }
            }
        }
        None
    });
    if let Some(err) = non_assoc {
        return Err(err);
    }

    let identity = elements(n)
        .find(|&e| elements(n).all(|x| table.get(e, x) == x && table.get(x, e) == x))
        .ok_or(GroupError::NoIdentity)?;

    let mut inverse = Vec::with_capacity(n);
    for x in elements(n) {
        let inv = elements(n)
            .find(|&y| table.get(x, y) == identity && table.get(y, x) == identity)
            .ok_or(GroupError::NoInverse(x))?;
        inverse.push(inv);
    }

    Ok(FiniteGroup {
        table,
        identity,
        inverse,
    })
}

impl FiniteGroup {
    #[inline]
    pub fn order(&self) -> usize {
        self.table.size()
    }

    #[inline]
    pub fn op(&self, x: Element, y: Element) -> Element {
        self.table.get(x, y)
    }

    #[inline]
    pub fn inv(&self, x: Element) -> Element {
        self.inverse[x.index()]
    }

    #[inline]
    pub fn identity(&self) -> Element {
        self.identity
    }

    pub fn table(&self) -> &OperationTable {
        &self.table
    }

    pub fn is_commutative(&self) -> bool {
        self.table.is_commutative()
    }
}
