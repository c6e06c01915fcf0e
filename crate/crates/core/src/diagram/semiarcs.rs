use std::collections::BTreeMap;

use super::{LinkDiagram, Role, Sign};

/// The four semiarcs meeting at a classical crossing.
///
/// Drawing both strands pointing upward, each side of the crossing holds one
/// under and one over semiarc. Colorings must satisfy
///
/// ```text
/// right_under = left_under ⊴ left_over
/// right_over  = left_over ⊵ left_under
/// ```
///
/// i.e. `S(left_under, left_over) = (right_over, right_under)`. At a positive
/// crossing the left side holds the outgoing under semiarc and the incoming
/// over semiarc; at a negative crossing it holds the incoming under semiarc
/// and the outgoing over semiarc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingConstraint {
    pub crossing: u32,
    pub sign: Sign,
    pub under_in: usize,
    pub over_in: usize,
    pub under_out: usize,
    pub over_out: usize,
}

impl CrossingConstraint {
    /// `(under, over)` semiarcs on the left side.
    pub fn left(&self) -> (usize, usize) {
        match self.sign {
            Sign::Positive => (self.under_out, self.over_in),
            Sign::Negative => (self.under_in, self.over_out),
        }
    }

    /// `(under, over)` semiarcs on the right side.
    pub fn right(&self) -> (usize, usize) {
        match self.sign {
            Sign::Positive => (self.under_in, self.over_out),
            Sign::Negative => (self.under_out, self.over_in),
        }
    }
}

/// Semiarcs of a diagram and the coloring constraint at each crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiarcSystem {
    pub semiarc_count: usize,
    /// Sorted by crossing id.
    pub constraints: Vec<CrossingConstraint>,
    /// Component index of each semiarc.
    pub component_of: Vec<usize>,
}

/// Numbers semiarcs component by component: in a component with passages
/// `p_0, ..., p_{k-1}`, semiarc `i` runs from `p_i` to `p_{i+1}` (cyclically).
/// A crossingless component is a single semiarc.
pub fn build_constraints(d: &LinkDiagram) -> SemiarcSystem {
    #[derive(Default)]
    struct Ends {
        sign: Option<Sign>,
        under: Option<(usize, usize)>,
        over: Option<(usize, usize)>,
    }

    let mut ends: BTreeMap<u32, Ends> = BTreeMap::new();
    let mut component_of = Vec::with_capacity(d.semiarc_count());
    let mut base = 0;
    for (c, comp) in d.components().iter().enumerate() {
        let k = comp.len();
        if k == 0 {
            component_of.push(c);
            base += 1;
            continue;
        }
        for (i, p) in comp.iter().enumerate() {
            let incoming = base + (i + k - 1) % k;
            let outgoing = base + i;
            let e = ends.entry(p.crossing).or_default();
            e.sign = Some(p.sign);
            match p.role {
                Role::Under => e.under = Some((incoming, outgoing)),
                Role::Over => e.over = Some((incoming, outgoing)),
            }
            component_of.push(c);
        }
        base += k;
    }

    let constraints = ends
        .into_iter()
        .map(|(crossing, e)| {
            let (under_in, under_out) = e.under.expect("validated diagram");
            let (over_in, over_out) = e.over.expect("validated diagram");
            CrossingConstraint {
                crossing,
                sign: e.sign.expect("validated diagram"),
                under_in,
                over_in,
                under_out,
                over_out,
            }
        })
        .collect();

    SemiarcSystem {
        semiarc_count: base,
        constraints,
        component_of,
    }
}
