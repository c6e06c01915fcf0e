//! The counting invariant and its two polynomial enhancements.
//!
//! For a coloring `f` the image `Im(f)` is the biquandle closure of the colors
//! used by `f`, not the raw set of colors. Then
//!
//! ```text
//! Φ^SB = Σ_f u^|⟨Im f⟩_∘| v^|⟨Im f⟩_*|        Φ^I = Σ_f u^|I(Im f)|
//! ```
//!
//! where `⟨·⟩` is the generated subgroup and `I(·)` the generated ideal.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::SkewBrace;
use crate::biquandle::{derive_biquandle, Biquandle};
use crate::coloring::{solve, Coloring};
use crate::diagram::{build_constraints, LinkDiagram};
use crate::polynomial::{Polynomial1, Polynomial2};
use crate::structures::{biquandle_closure, group_closure, ideal_closure, Subset};

/// Closure sizes attached to one coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageData {
    pub image: Subset,
    pub circ_closure: usize,
    pub star_closure: usize,
    pub ideal_closure: usize,
}

/// All three invariants of one diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub count: usize,
    pub sb: Polynomial2,
    pub ideal: Polynomial1,
}

/// Closure data of the image generated by `used`.
pub fn image_data(brace: &SkewBrace, bq: &Biquandle, used: &Subset) -> ImageData {
    let image = biquandle_closure(bq, used).expect("colorings use at least one color");
    let circ = group_closure(brace.circ_group(), &image).expect("nonempty image");
    let star = group_closure(brace.star_group(), &image).expect("nonempty image");
    let ideal = ideal_closure(brace, &image).expect("nonempty image");
    ImageData {
        circ_closure: circ.len(),
        star_closure: star.len(),
        ideal_closure: ideal.len(),
        image,
    }
}

fn used_colors(n: usize, f: &Coloring) -> Subset {
    Subset::from_elements(n, f.colors().iter().copied())
}

/// Sums the contributions of `colorings`. Closure results are memoized per
/// set of used colors, one memo per rayon worker.
pub fn accumulate(brace: &SkewBrace, bq: &Biquandle, colorings: &[Coloring]) -> Invariants {
    let n = brace.size();
    let (sb, ideal) = colorings
        .par_iter()
        .fold(
            || (HashMap::<Subset, (u32, u32, u32)>::new(), Polynomial2::zero(), Polynomial1::zero()),
            |(mut memo, mut sb, mut ideal), f| {
                let used = used_colors(n, f);
                let &mut (a, b, i) = memo.entry(used).or_insert_with_key(|used| {
                    let d = image_data(brace, bq, used);
                    (
                        d.circ_closure as u32,
                        d.star_closure as u32,
                        d.ideal_closure as u32,
                    )
                });
                sb.add_term([a, b], 1);
                ideal.add_term([i], 1);
                (memo, sb, ideal)
            },
        )
        .map(|(_, sb, ideal)| (sb, ideal))
        .reduce(
            || (Polynomial2::zero(), Polynomial1::zero()),
            |(s1, i1), (s2, i2)| (s1 + s2, i1 + i2),
        );
    Invariants {
        count: colorings.len(),
        sb,
        ideal,
    }
}

/// Counting invariant, `Φ^SB` and `Φ^I` from a single enumeration.
pub fn compute_invariants(brace: &SkewBrace, d: &LinkDiagram) -> Invariants {
    let bq = derive_biquandle(brace).expect("validated braces yield biquandles");
    let colorings = solve(&bq, &build_constraints(d));
    accumulate(brace, &bq, &colorings)
}

/// The skew brace enhanced polynomial `Φ^SB`.
pub fn sb_polynomial(brace: &SkewBrace, d: &LinkDiagram) -> Polynomial2 {
    compute_invariants(brace, d).sb
}

/// The skew brace ideal polynomial `Φ^I`.
pub fn ideal_polynomial(brace: &SkewBrace, d: &LinkDiagram) -> Polynomial1 {
    compute_invariants(brace, d).ideal
}
