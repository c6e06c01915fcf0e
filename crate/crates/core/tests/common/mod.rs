//! Independent brute-force oracles. None of these reuse the search,
//! closure or enumeration code under test; they work from the definitions.

#![allow(dead_code)]

use skewbrace::algebra::{elements, Element, SkewBrace};
use skewbrace::biquandle::Biquandle;
use skewbrace::coloring::Coloring;
use skewbrace::diagram::SemiarcSystem;
use skewbrace::structures::Subset;

/// Every assignment of colors to semiarcs, filtered by the crossing
/// relations, in lexicographic order.
pub fn brute_force_colorings(bq: &Biquandle, sys: &SemiarcSystem) -> Vec<Coloring> {
    let n = bq.size();
    let s = sys.semiarc_count;
    let mut out = Vec::new();
    let mut colors = vec![Element::from_index(0); s];
    loop {
        let ok = sys.constraints.iter().all(|c| {
            let (lu, lo) = c.left();
            let (ru, ro) = c.right();
            bq.under(colors[lu], colors[lo]) == colors[ru]
                && bq.over(colors[lo], colors[lu]) == colors[ro]
        });
        if ok {
            out.push(Coloring::new(colors.clone()));
        }
        // odometer increment, last semiarc fastest
        let mut i = s;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            let next = colors[i].index() + 1;
            if next < n {
                colors[i] = Element::from_index(next);
                break;
            }
            colors[i] = Element::from_index(0);
        }
    }
}

/// All subsets of an `n`-element carrier (`n ≤ 16`), as bitmasks.
pub fn all_masks(n: usize) -> impl Iterator<Item = u64> {
    0u64..(1u64 << n)
}

fn has(mask: u64, x: Element) -> bool {
    mask >> x.index() & 1 == 1
}

fn members(n: usize, mask: u64) -> Vec<Element> {
    elements(n).filter(|&x| has(mask, x)).collect()
}

/// Smallest member of `closed` containing `seed`, found as the intersection
/// of all closed supersets.
pub fn smallest_closed_superset(closed: &[u64], n: usize, seed: u64) -> u64 {
    closed
        .iter()
        .filter(|&&c| c & seed == seed)
        .fold((1u64 << n) - 1, |acc, &c| acc & c)
}

pub fn closed_under_group(b: &SkewBrace, circ: bool, mask: u64) -> bool {
    let n = b.size();
    let g = if circ { b.circ_group() } else { b.star_group() };
    let m = members(n, mask);
    m.iter().all(|&x| m.iter().all(|&y| has(mask, g.op(x, y))))
}

pub fn closed_under_biquandle(bq: &Biquandle, mask: u64) -> bool {
    let n = bq.size();
    let m = members(n, mask);
    m.iter().all(|&x| {
        m.iter()
            .all(|&y| has(mask, bq.under(x, y)) && has(mask, bq.over(x, y)))
    })
}

/// The ideal conditions straight from the definition.
pub fn ideal_by_definition(b: &SkewBrace, mask: u64) -> bool {
    let n = b.size();
    let m = members(n, mask);
    m.iter().all(|&x| {
        m.iter().all(|&y| has(mask, b.circ(b.circ_inv(y), x)))
            && elements(n).all(|z| {
                has(mask, b.star(b.star(b.star_inv(z), x), z))
                    && has(mask, b.circ(b.circ(b.circ_inv(z), x), z))
                    && has(mask, b.star(b.star_inv(z), b.circ(z, x)))
            })
    })
}

pub fn mask_of(s: &Subset) -> u64 {
    s.iter().fold(0, |m, x| m | 1 << x.index())
}
