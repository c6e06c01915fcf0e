//! Integer polynomials in `u` (one variable) or `u, v` (two variables) with
//! non-negative exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use serde_json::{json, Value};

const VARIABLES: [&str; 2] = ["u", "v"];

/// A polynomial in the first `K` of the variables `u, v`.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial<const K: usize> {
    terms: BTreeMap<[u32; K], i64>,
}

pub type Polynomial1 = Polynomial<1>;
pub type Polynomial2 = Polynomial<2>;

impl<const K: usize> Polynomial<K> {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ([u32; K], i64)>) -> Self {
        let mut p = Self::zero();
        for (exps, c) in terms {
            p.add_term(exps, c);
        }
        p
    }

    pub fn add_term(&mut self, exponents: [u32; K], coefficient: i64) {
        let entry = self.terms.entry(exponents).or_insert(0);
        *entry += coefficient;
        if *entry == 0 {
            self.terms.remove(&exponents);
        }
    }

    pub fn coefficient(&self, exponents: [u32; K]) -> i64 {
        self.terms.get(&exponents).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms by descending total degree, then descending exponent of `u`.
    pub fn terms(&self) -> Vec<([u32; K], i64)> {
        let mut out: Vec<([u32; K], i64)> = self.terms.iter().map(|(e, c)| (*e, *c)).collect();
        out.sort_by(|(a, _), (b, _)| {
            let deg = |e: &[u32; K]| e.iter().map(|&x| u64::from(x)).sum::<u64>();
            deg(b).cmp(&deg(a)).then_with(|| b.cmp(a))
        });
        out
    }

    /// Value at `u = v = 1`.
    pub fn specialize(&self) -> i64 {
        self.terms.values().sum()
    }

    /// `{"terms": [{"u": a, "v": b, "coeff": c}, ...]}` in canonical order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .into_iter()
            .map(|(exps, c)| {
                let mut obj = serde_json::Map::new();
                for (var, e) in VARIABLES.iter().zip(exps) {
                    obj.insert((*var).to_string(), json!(e));
                }
                obj.insert("coeff".into(), json!(c));
                Value::Object(obj)
            })
            .collect();
        json!({ "terms": terms })
    }
}

impl<const K: usize> Add for Polynomial<K> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

/// Canonical form: `8u^4v^4 + 3u^2v^2 + uv`. Unit coefficients and unit
/// exponents are omitted; the zero polynomial prints as `0`.
impl<const K: usize> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (exps, c)) in self.terms().into_iter().enumerate() {
            let magnitude = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let constant = exps.iter().all(|&e| e == 0);
            if magnitude != 1 || constant {
                write!(f, "{magnitude}")?;
            }
            for (var, e) in VARIABLES.iter().zip(exps) {
                match e {
                    0 => {}
                    1 => f.write_str(var)?,
                    _ => write!(f, "{var}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl<const K: usize> fmt::Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Whether every term of a two-variable polynomial has equal `u` and `v`
/// exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentProfile {
    pub uniform: bool,
    /// Exponent pairs `(a, b)` with `a ≠ b`, in canonical term order.
    pub mismatched: Vec<(u32, u32)>,
}

pub fn exponent_profile(p: &Polynomial2) -> ExponentProfile {
    let mismatched: Vec<(u32, u32)> = p
        .terms()
        .into_iter()
        .filter(|([a, b], _)| a != b)
        .map(|([a, b], _)| (a, b))
        .collect();
    ExponentProfile {
        uniform: mismatched.is_empty(),
        mismatched,
    }
}

impl fmt::Display for ExponentProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.uniform {
            return f.write_str("uniform: every term has equal u and v exponents");
        }
        f.write_str("non-uniform:")?;
        for (a, b) in &self.mismatched {
            write!(f, " u^{a}v^{b}")?;
        }
        Ok(())
    }
}
