//! Enumeration of skew brace colorings of a diagram.
//!
//! The search assigns colors to semiarcs and propagates crossing
//! constraints: once either side of a crossing is fully colored the other
//! side is forced through `S` or `S⁻¹`; with one or two colors known the
//! remaining candidate tuples are filtered, and a crossing left with a single
//! candidate is forced. Branching happens on the partially colored crossing
//! with the fewest candidates, or on the first uncolored semiarc.

use std::fmt;
use std::ops::Index;

use rayon::prelude::*;

use crate::algebra::{Element, SkewBrace};
use crate::biquandle::{derive_biquandle, Biquandle};
use crate::diagram::{build_constraints, LinkDiagram, SemiarcSystem};

/// An assignment of brace elements to the semiarcs of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring(Vec<Element>);

impl Coloring {
    pub fn new(colors: Vec<Element>) -> Self {
        Coloring(colors)
    }

    pub fn colors(&self) -> &[Element] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Index<usize> for Coloring {
    type Output = Element;

    fn index(&self, semiarc: usize) -> &Element {
        &self.0[semiarc]
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Whether `colors` satisfies every crossing constraint of `sys`.
pub fn is_coloring(bq: &Biquandle, sys: &SemiarcSystem, colors: &[Element]) -> bool {
    colors.len() == sys.semiarc_count
        && sys.constraints.iter().all(|c| {
            let (lu, lo) = c.left();
            let (ru, ro) = c.right();
            bq.yb_map(colors[lu], colors[lo]) == (colors[ro], colors[ru])
        })
}

/// All colorings of `d` by `brace`, in lexicographic order.
pub fn enumerate_colorings(brace: &SkewBrace, d: &LinkDiagram) -> Vec<Coloring> {
    let bq = derive_biquandle(brace).expect("validated braces yield biquandles");
    solve(&bq, &build_constraints(d))
}

/// Number of colorings of `d` by `brace`.
pub fn counting_invariant(brace: &SkewBrace, d: &LinkDiagram) -> usize {
    enumerate_colorings(brace, d).len()
}

/// All colorings of a semiarc system by a biquandle, in lexicographic order.
///
/// The search is split by the color of semiarc 0 and run on the rayon pool;
/// the partitions are concatenated in color order.
pub fn solve(bq: &Biquandle, sys: &SemiarcSystem) -> Vec<Coloring> {
    let n = bq.size();
    if sys.semiarc_count == 0 {
        return vec![Coloring(Vec::new())];
    }
    let parts: Vec<Vec<Coloring>> = (0..n)
        .into_par_iter()
        .map(|c| {
            let mut search = Search::new(bq, sys);
            let mut out = Vec::new();
            if search.assign(0, c as u16) && search.propagate() {
                search.run(&mut out);
            }
            out.sort_unstable();
            out
        })
        .collect();
    parts.into_iter().flatten().collect()
}

const UNSET: u16 = u16::MAX;

/// Semiarcs of one crossing: left under, left over, right under, right over.
type Quad = [usize; 4];

struct Search<'a> {
    bq: &'a Biquandle,
    n: usize,
    quads: Vec<Quad>,
    touching: Vec<Vec<usize>>,
    colors: Vec<u16>,
    trail: Vec<usize>,
    queue: Vec<usize>,
    queued: Vec<bool>,
}

enum Check {
    Conflict,
    /// Fully determined and consistent, or nothing known yet.
    Settled,
    Open(Vec<[u16; 4]>),
}

impl<'a> Search<'a> {
    fn new(bq: &'a Biquandle, sys: &SemiarcSystem) -> Self {
        let quads: Vec<Quad> = sys
            .constraints
            .iter()
            .map(|c| {
                let (lu, lo) = c.left();
                let (ru, ro) = c.right();
                [lu, lo, ru, ro]
            })
            .collect();
        let mut touching = vec![Vec::new(); sys.semiarc_count];
        for (i, q) in quads.iter().enumerate() {
            for &s in q {
                if !touching[s].contains(&i) {
                    touching[s].push(i);
                }
            }
        }
        Search {
            bq,
            n: bq.size(),
            queued: vec![false; quads.len()],
            quads,
            touching,
            colors: vec![UNSET; sys.semiarc_count],
            trail: Vec::new(),
            queue: Vec::new(),
        }
    }

    /// Colors semiarc `s`; false if it already has a different color.
    fn assign(&mut self, s: usize, v: u16) -> bool {
        let cur = self.colors[s];
        if cur != UNSET {
            return cur == v;
        }
        self.colors[s] = v;
        self.trail.push(s);
        for &c in &self.touching[s] {
            if !self.queued[c] {
                self.queued[c] = true;
                self.queue.push(c);
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let s = self.trail.pop().expect("trail above mark");
            self.colors[s] = UNSET;
        }
        for c in self.queue.drain(..) {
            self.queued[c] = false;
        }
    }

    fn tuple(&self, x: u16, y: u16) -> [u16; 4] {
        let (x, y) = (Element::from_index(x as usize), Element::from_index(y as usize));
        let (ro, ru) = self.bq.yb_map(x, y);
        [x.index() as u16, y.index() as u16, ru.index() as u16, ro.index() as u16]
    }

    fn tuple_from_right(&self, ru: u16, ro: u16) -> [u16; 4] {
        let (x, y) = self.bq.yb_map_inverse(
            Element::from_index(ro as usize),
            Element::from_index(ru as usize),
        );
        [x.index() as u16, y.index() as u16, ru, ro]
    }

    fn consistent(&self, quad: &Quad, t: &[u16; 4]) -> bool {
        (0..4).all(|i| {
            let cur = self.colors[quad[i]];
            (cur == UNSET || cur == t[i])
                && (0..i).all(|j| quad[j] != quad[i] || t[j] == t[i])
        })
    }

    fn check(&self, c: usize) -> Check {
        let q = self.quads[c];
        let [a, b, r_u, r_o] = q.map(|s| self.colors[s]);
        let single = |t: [u16; 4]| {
            if self.consistent(&q, &t) {
                Check::Open(vec![t])
            } else {
                Check::Conflict
            }
        };
        if a != UNSET && b != UNSET {
            return single(self.tuple(a, b));
        }
        if r_u != UNSET && r_o != UNSET {
            return single(self.tuple_from_right(r_u, r_o));
        }
        let n = self.n as u16;
        let candidates: Vec<[u16; 4]> = if a != UNSET {
            (0..n).map(|y| self.tuple(a, y)).collect()
        } else if b != UNSET {
            (0..n).map(|x| self.tuple(x, b)).collect()
        } else if r_u != UNSET {
            (0..n).map(|o| self.tuple_from_right(r_u, o)).collect()
        } else if r_o != UNSET {
            (0..n).map(|u| self.tuple_from_right(u, r_o)).collect()
        } else {
            return Check::Settled;
        };
        let feasible: Vec<[u16; 4]> = candidates
            .into_iter()
            .filter(|t| self.consistent(&q, t))
            .collect();
        if feasible.is_empty() {
            Check::Conflict
        } else {
            Check::Open(feasible)
        }
    }

    fn force(&mut self, c: usize, t: [u16; 4]) -> bool {
        let q = self.quads[c];
        (0..4).all(|i| self.assign(q[i], t[i]))
    }

    /// Runs queued checks to a fixpoint; false on conflict.
    fn propagate(&mut self) -> bool {
        while let Some(c) = self.queue.pop() {
            self.queued[c] = false;
            match self.check(c) {
                Check::Conflict => return false,
                Check::Settled => {}
                Check::Open(ts) if ts.len() == 1 => {
                    if !self.force(c, ts[0]) {
                        return false;
                    }
                }
                Check::Open(_) => {}
            }
        }
        true
    }

    fn run(&mut self, out: &mut Vec<Coloring>) {
        // pick the open crossing with the fewest candidates
        let mut best: Option<(usize, Vec<[u16; 4]>)> = None;
        for c in 0..self.quads.len() {
            if self.quads[c].iter().all(|&s| self.colors[s] != UNSET) {
                continue;
            }
            if let Check::Open(ts) = self.check(c) {
                if best.as_ref().is_none_or(|(_, b)| ts.len() < b.len()) {
                    best = Some((c, ts));
                }
            }
        }

        let mark = self.trail.len();
        match best {
            Some((c, tuples)) => {
                for t in tuples {
                    if self.force(c, t) && self.propagate() {
                        self.run(out);
                    }
                    self.undo_to(mark);
                }
            }
            None => match self.colors.iter().position(|&v| v == UNSET) {
                None => out.push(Coloring(
                    self.colors
                        .iter()
                        .map(|&v| Element::from_index(v as usize))
                        .collect(),
                )),
                Some(s) => {
                    for v in 0..self.n as u16 {
                        if self.assign(s, v) && self.propagate() {
                            self.run(out);
                        }
                        self.undo_to(mark);
                    }
                }
            },
        }
    }
}
