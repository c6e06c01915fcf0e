//! Closures inside a skew brace: subgroups, sub-biquandles and ideals.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::algebra::{elements, Element, FiniteGroup, SkewBrace};
use crate::biquandle::Biquandle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ClosureError {
    #[error("closure of the empty set requested")]
    EmptyGenerators,
}

/// A subset of the carrier `{1, ..., n}`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    n: usize,
    words: Vec<u64>,
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        Subset {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Subset::empty(n);
        for x in elements(n) {
            s.insert(x);
        }
        s
    }

    pub fn from_elements(n: usize, members: impl IntoIterator<Item = Element>) -> Self {
        let mut s = Subset::empty(n);
        for x in members {
            s.insert(x);
        }
        s
    }

    /// Subset from 1-based labels.
    pub fn from_labels(n: usize, labels: &[usize]) -> Self {
        Subset::from_elements(n, labels.iter().map(|&l| Element::from_label(l)))
    }

    /// The subset whose members are the set bits of `mask` (bit `i` is label `i + 1`).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64);
        let mut s = Subset::empty(n);
        if n > 0 {
            s.words[0] = mask;
        }
        s
    }

    #[inline]
    pub fn carrier_size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, x: Element) -> bool {
        let i = x.index();
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Inserts `x`, returning whether it was absent.
    #[inline]
    pub fn insert(&mut self, x: Element) -> bool {
        let i = x.index();
        assert!(i < self.n, "element {x} outside carrier of size {}", self.n);
        let word = &mut self.words[i / 64];
        let bit = 1u64 << (i % 64);
        let fresh = *word & bit == 0;
        *word |= bit;
        fresh
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        elements(self.n).filter(move |&x| self.contains(x))
    }

    pub fn union(&self, other: &Subset) -> Subset {
        assert_eq!(self.n, other.n);
        Subset {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn labels(&self) -> Vec<usize> {
        self.iter().map(Element::label).collect()
    }

    /// Sorted labels separated by commas, e.g. `1,3,5`.
    pub fn to_csv(&self) -> String {
        let parts: Vec<String> = self.iter().map(|e| e.to_string()).collect();
        parts.join(",")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_csv())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset{self}")
    }
}

/// Worklist fixpoint: starting from `seed`, repeatedly applies `expand` to each
/// newly added element together with the current set until nothing changes.
fn fixpoint(
    seed: &Subset,
    mut expand: impl FnMut(Element, &Subset, &mut Vec<Element>),
) -> Result<Subset, ClosureError> {
    if seed.is_empty() {
        return Err(ClosureError::EmptyGenerators);
    }
    let mut set = seed.clone();
    let mut work: Vec<Element> = seed.iter().collect();
    let mut produced = Vec::new();
    while let Some(x) = work.pop() {
        expand(x, &set, &mut produced);
        for z in produced.drain(..) {
            if set.insert(z) {
                work.push(z);
            }
        }
    }
    Ok(set)
}

/// Smallest subgroup containing `s`.
pub fn group_closure(group: &FiniteGroup, s: &Subset) -> Result<Subset, ClosureError> {
    assert_eq!(group.order(), s.carrier_size());
    fixpoint(s, |x, set, out| {
        for y in set.iter() {
            out.push(group.op(x, y));
            out.push(group.op(y, x));
        }
        out.push(group.op(x, x));
    })
}

/// Smallest superset of `s` closed under `⊴` and `⊵`.
pub fn biquandle_closure(bq: &Biquandle, s: &Subset) -> Result<Subset, ClosureError> {
    assert_eq!(bq.size(), s.carrier_size());
    fixpoint(s, |x, set, out| {
        for y in set.iter() {
            out.push(bq.under(x, y));
            out.push(bq.under(y, x));
            out.push(bq.over(x, y));
            out.push(bq.over(y, x));
        }
        out.push(bq.under(x, x));
        out.push(bq.over(x, x));
    })
}

/// Smallest ideal containing `s`: closed under `y^∘∘x`, `z^**x*z`,
/// `z^∘∘x∘z` and `z^**(z∘x)` for `x, y` in the set and `z` anywhere.
pub fn ideal_closure(brace: &SkewBrace, s: &Subset) -> Result<Subset, ClosureError> {
    assert_eq!(brace.size(), s.carrier_size());
    let b = brace;
    fixpoint(s, |x, set, out| {
        for y in set.iter() {
            out.push(b.circ(b.circ_inv(y), x));
            out.push(b.circ(b.circ_inv(x), y));
        }
        out.push(b.circ(b.circ_inv(x), x));
        for z in b.elements() {
            let zs = b.star_inv(z);
            out.push(b.star(b.star(zs, x), z));
            out.push(b.circ(b.circ(b.circ_inv(z), x), z));
            out.push(b.star(zs, b.circ(z, x)));
        }
    })
}

/// Whether `s` satisfies the ideal conditions. The empty set passes vacuously.
pub fn is_ideal(brace: &SkewBrace, s: &Subset) -> bool {
    let b = brace;
    s.iter().all(|x| {
        s.iter().all(|y| s.contains(b.circ(b.circ_inv(y), x)))
            && b.elements().all(|z| {
                let zs = b.star_inv(z);
                s.contains(b.star(b.star(zs, x), z))
                    && s.contains(b.circ(b.circ(b.circ_inv(z), x), z))
                    && s.contains(b.star(zs, b.circ(z, x)))
            })
    })
}

/// Strategy used by [`enumerate_ideals_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealSearch {
    /// Filter every nonempty subset through [`is_ideal`]. Requires `n ≤ 16`.
    Powerset,
    /// Close all singletons, then close unions of found ideals until stable.
    Closure,
}

/// Largest carrier for which [`enumerate_ideals`] filters the full powerset.
pub const POWERSET_LIMIT: usize = 16;

/// All nonempty ideals, ascending by size then lexicographically.
///
/// The empty set satisfies the ideal conditions vacuously and is omitted.
pub fn enumerate_ideals(brace: &SkewBrace) -> Vec<Subset> {
    let strategy = if brace.size() <= POWERSET_LIMIT {
        IdealSearch::Powerset
    } else {
        IdealSearch::Closure
    };
    enumerate_ideals_with(brace, strategy)
}

pub fn enumerate_ideals_with(brace: &SkewBrace, strategy: IdealSearch) -> Vec<Subset> {
    let n = brace.size();
    let found: Vec<Subset> = match strategy {
        IdealSearch::Powerset => {
            assert!(n <= POWERSET_LIMIT, "powerset search limited to n ≤ {POWERSET_LIMIT}");
            (1u64..(1u64 << n))
                .map(|mask| Subset::from_mask(n, mask))
                .filter(|s| is_ideal(brace, s))
                .collect()
        }
        IdealSearch::Closure => {
            let mut seen: HashSet<Subset> = HashSet::new();
            let mut frontier: Vec<Subset> = Vec::new();
            for x in brace.elements() {
                let c = ideal_closure(brace, &Subset::from_elements(n, [x]))
                    .expect("singleton is nonempty");
                if seen.insert(c.clone()) {
                    frontier.push(c);
                }
            }
            let mut all: Vec<Subset> = frontier.clone();
            while let Some(a) = frontier.pop() {
                let mut fresh = Vec::new();
                for b in &all {
                    if a.is_subset(b) || b.is_subset(&a) {
                        continue;
                    }
                    let c = ideal_closure(brace, &a.union(b)).expect("nonempty union");
                    if seen.insert(c.clone()) {
                        fresh.push(c);
                    }
                }
                all.extend(fresh.iter().cloned());
                frontier.extend(fresh);
            }
            all
        }
    };
    sort_subsets(found)
}

/// Sorts by size, then by the sorted member list.
pub fn sort_subsets(subsets: impl IntoIterator<Item = Subset>) -> Vec<Subset> {
    let keyed: BTreeMap<(usize, Vec<Element>), Subset> = subsets
        .into_iter()
        .map(|s| ((s.len(), s.iter().collect()), s))
        .collect();
    keyed.into_values().collect()
}
