//! The biquandle of a skew brace and the associated Yang–Baxter maps.
//!
//! For a skew brace `(X, ∘, *)` the operations
//!
//! ```text
//! x ⊴ y = y^∘ ∘ (x * y)        x ⊴⁻¹ y = (y ∘ x) * y^*
//! x ⊵ y = y^∘ ∘ (y * x)        x ⊵⁻¹ y = y^* * (y ∘ x)
//! ```
//!
//! make `X` a biquandle with `S(x, y) = (y ⊵ x, x ⊴ y)`.

use std::fmt;

use thiserror::Error;

use crate::algebra::{elements, Element, OperationTable, SkewBrace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `x ⊴ x = x ⊵ x`
    Idempotence,
    /// `⊴⁻¹` is a two-sided right inverse of `⊴`
    UnderRightInverse,
    /// `⊵⁻¹` is a two-sided right inverse of `⊵`
    OverRightInverse,
    /// `S` is a bijection of `X × X`
    SwitchBijective,
    /// `(x⊴y)⊴(z⊴y) = (x⊴z)⊴(y⊵z)`
    Exchange1,
    /// `(x⊴y)⊵(z⊴y) = (x⊵z)⊴(y⊵z)`
    Exchange2,
    /// `(x⊵y)⊵(z⊵y) = (x⊵z)⊵(y⊴z)`
    Exchange3,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::Idempotence,
        Axiom::UnderRightInverse,
        Axiom::OverRightInverse,
        Axiom::SwitchBijective,
        Axiom::Exchange1,
        Axiom::Exchange2,
        Axiom::Exchange3,
    ];
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Idempotence => "idempotence x⊴x = x⊵x",
            Axiom::UnderRightInverse => "right inverse of ⊴",
            Axiom::OverRightInverse => "right inverse of ⊵",
            Axiom::SwitchBijective => "S is a bijection",
            Axiom::Exchange1 => "exchange law (x⊴y)⊴(z⊴y) = (x⊴z)⊴(y⊵z)",
            Axiom::Exchange2 => "exchange law (x⊴y)⊵(z⊴y) = (x⊵z)⊴(y⊵z)",
            Axiom::Exchange3 => "exchange law (x⊵y)⊵(z⊵y) = (x⊵z)⊵(y⊴z)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BiquandleError {
    #[error("biquandle axiom violated ({axiom}) at {}", fmt_witness(.witness))]
    AxiomViolation {
        axiom: Axiom,
        witness: Vec<Element>,
    },
}

fn fmt_witness(w: &[Element]) -> String {
    let parts: Vec<String> = w.iter().map(|e| e.to_string()).collect();
    format!("({})", parts.join(", "))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    /// First counterexample in scan order, `None` if the axiom holds.
    pub witness: Option<Vec<Element>>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Pass/fail per biquandle axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn into_result(self) -> Result<(), BiquandleError> {
        match self.checks.into_iter().find(|c| !c.passed()) {
            Some(AxiomCheck { axiom, witness }) => Err(BiquandleError::AxiomViolation {
                axiom,
                witness: witness.unwrap_or_default(),
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "pass  {}", c.axiom)?,
                Some(w) => writeln!(f, "FAIL  {}  witness {}", c.axiom, fmt_witness(w))?,
            }
        }
        Ok(())
    }
}

/// Operation tables of a finite biquandle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biquandle {
    under: OperationTable,
    over: OperationTable,
    under_inv: OperationTable,
    over_inv: OperationTable,
    /// `S⁻¹` indexed by `x * n + y`, when `S` is invertible.
    switch_inv: Option<Vec<(Element, Element)>>,
}

impl Biquandle {
    /// Wraps four arbitrary tables. `S⁻¹` is obtained by inverting `S` on pairs
    /// when it is a bijection. No axioms are checked; see
    /// [`verify_biquandle_axioms`].
    pub fn from_tables(
        under: OperationTable,
        over: OperationTable,
        under_inv: OperationTable,
        over_inv: OperationTable,
    ) -> Self {
        let n = under.size();
        assert!(
            over.size() == n && under_inv.size() == n && over_inv.size() == n,
            "biquandle tables must share one carrier"
        );
        let mut bq = Biquandle {
            under,
            over,
            under_inv,
            over_inv,
            switch_inv: None,
        };
        bq.switch_inv = bq.invert_switch();
        bq
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.under.size()
    }

    /// `x ⊴ y`
    #[inline]
    pub fn under(&self, x: Element, y: Element) -> Element {
        self.under.get(x, y)
    }

    /// `x ⊵ y`
    #[inline]
    pub fn over(&self, x: Element, y: Element) -> Element {
        self.over.get(x, y)
    }

    /// `x ⊴⁻¹ y`
    #[inline]
    pub fn under_inv(&self, x: Element, y: Element) -> Element {
        self.under_inv.get(x, y)
    }

    /// `x ⊵⁻¹ y`
    #[inline]
    pub fn over_inv(&self, x: Element, y: Element) -> Element {
        self.over_inv.get(x, y)
    }

    pub fn under_table(&self) -> &OperationTable {
        &self.under
    }

    pub fn over_table(&self) -> &OperationTable {
        &self.over
    }

    pub fn under_inv_table(&self) -> &OperationTable {
        &self.under_inv
    }

    pub fn over_inv_table(&self) -> &OperationTable {
        &self.over_inv
    }

    /// `S(x, y) = (y ⊵ x, x ⊴ y)`
    #[inline]
    pub fn yb_map(&self, x: Element, y: Element) -> (Element, Element) {
        (self.over(y, x), self.under(x, y))
    }

    /// `S⁻¹(x, y)`. For biquandles derived from a brace this is the closed
    /// formula in the brace operations.
    ///
    /// Panics if `S` is not invertible.
    #[inline]
    pub fn yb_map_inverse(&self, x: Element, y: Element) -> (Element, Element) {
        let table = self
            .switch_inv
            .as_ref()
            .expect("S is not a bijection for these tables");
        table[x.index() * self.size() + y.index()]
    }

    /// `S⁻¹` computed by inverting `S` as a permutation of pairs.
    pub fn invert_switch(&self) -> Option<Vec<(Element, Element)>> {
        let n = self.size();
        let mut inv: Vec<Option<(Element, Element)>> = vec![None; n * n];
        for x in elements(n) {
            for y in elements(n) {
                let (a, b) = self.yb_map(x, y);
                let slot = &mut inv[a.index() * n + b.index()];
                if slot.is_some() {
                    return None;
                }
                *slot = Some((x, y));
            }
        }
        inv.into_iter().collect()
    }

    /// The derived `⊴` and `⊵` tables in the structure-table file layout.
    pub fn tables_text(&self) -> String {
        format!(
            "# ⊴ (under) table, then ⊵ (over) table\n{}\n{}\n{}",
            self.size(),
            self.under,
            self.over
        )
    }
}

/// Derives the biquandle of `brace` and verifies every axiom exhaustively.
pub fn derive_biquandle(brace: &SkewBrace) -> Result<Biquandle, BiquandleError> {
    let bq = derive_biquandle_unchecked(brace);
    verify_biquandle_axioms(&bq).into_result()?;
    Ok(bq)
}

/// Derives the biquandle tables without re-verifying the axioms.
pub fn derive_biquandle_unchecked(brace: &SkewBrace) -> Biquandle {
    let n = brace.size();
    let b = brace;
    let under = OperationTable::from_fn(n, |x, y| b.circ(b.circ_inv(y), b.star(x, y)));
    let over = OperationTable::from_fn(n, |x, y| b.circ(b.circ_inv(y), b.star(y, x)));
    let under_inv = OperationTable::from_fn(n, |x, y| b.star(b.circ(y, x), b.star_inv(y)));
    let over_inv = OperationTable::from_fn(n, |x, y| b.star(b.star_inv(y), b.circ(y, x)));

    let switch_inv = elements(n)
        .flat_map(|x| elements(n).map(move |y| switch_inverse_formula(b, x, y)))
        .collect();

    Biquandle {
        under,
        over,
        under_inv,
        over_inv,
        switch_inv: Some(switch_inv),
    }
}

/// `S⁻¹(x,y) = (w^∘, w^∘ ∘ x ∘ y^∘)` with `w = (x ∘ y^∘) * x^*`.
fn switch_inverse_formula(b: &SkewBrace, x: Element, y: Element) -> (Element, Element) {
    let x_circ_yinv = b.circ(x, b.circ_inv(y));
    let w = b.star(x_circ_yinv, b.star_inv(x));
    let w_inv = b.circ_inv(w);
    (w_inv, b.circ(w_inv, x_circ_yinv))
}

/// Exhaustively checks every biquandle axiom on the given tables.
pub fn verify_biquandle_axioms(bq: &Biquandle) -> AxiomReport {
    let n = bq.size();
    let pairs = || elements(n).flat_map(move |x| elements(n).map(move |y| (x, y)));
    let triples = || pairs().flat_map(move |(x, y)| elements(n).map(move |z| (x, y, z)));

    let idempotence = elements(n)
        .find(|&x| bq.under(x, x) != bq.over(x, x))
        .map(|x| vec![x]);

    let under_inv = pairs()
        .find(|&(x, y)| {
            bq.under_inv(bq.under(x, y), y) != x || bq.under(bq.under_inv(x, y), y) != x
        })
        .map(|(x, y)| vec![x, y]);

    let over_inv = pairs()
        .find(|&(x, y)| bq.over_inv(bq.over(x, y), y) != x || bq.over(bq.over_inv(x, y), y) != x)
        .map(|(x, y)| vec![x, y]);

    let switch = {
        let mut preimage: Vec<Option<(Element, Element)>> = vec![None; n * n];
        pairs().find_map(|(x, y)| {
            let (a, b) = bq.yb_map(x, y);
            let slot = &mut preimage[a.index() * n + b.index()];
            match *slot {
                Some((px, py)) => Some(vec![px, py, x, y]),
                None => {
                    *slot = Some((x, y));
                    None
                }
            }
        })
    };

    let (u, o) = (|a, b| bq.under(a, b), |a, b| bq.over(a, b));
    let exchange1 = triples()
        .find(|&(x, y, z)| u(u(x, y), u(z, y)) != u(u(x, z), o(y, z)))
        .map(|(x, y, z)| vec![x, y, z]);
    let exchange2 = triples()
        .find(|&(x, y, z)| o(u(x, y), u(z, y)) != u(o(x, z), o(y, z)))
        .map(|(x, y, z)| vec![x, y, z]);
    let exchange3 = triples()
        .find(|&(x, y, z)| o(o(x, y), o(z, y)) != o(o(x, z), u(y, z)))
        .map(|(x, y, z)| vec![x, y, z]);

    let witnesses = [
        idempotence,
        under_inv,
        over_inv,
        switch,
        exchange1,
        exchange2,
        exchange3,
    ];
    AxiomReport {
        checks: Axiom::ALL
            .into_iter()
            .zip(witnesses)
            .map(|(axiom, witness)| AxiomCheck { axiom, witness })
            .collect(),
    }
}

/// The vertical map `r(x,y) = (λ, λ^∘ ∘ x ∘ y)` with `λ = x^* * (x∘y)`.
pub fn r_map(brace: &SkewBrace, x: Element, y: Element) -> (Element, Element) {
    let b = brace;
    let lambda = b.star(b.star_inv(x), b.circ(x, y));
    let second = b.circ(b.circ(b.circ_inv(lambda), x), y);
    (lambda, second)
}

/// Whether `r ∘ r` is the identity on `X × X`.
pub fn is_involutive(brace: &SkewBrace) -> bool {
    brace.elements().all(|x| {
        brace.elements().all(|y| {
            let (a, b) = r_map(brace, x, y);
            r_map(brace, a, b) == (x, y)
        })
    })
}
