//! The virtual Hopf link against the two-component unlink.
//!
//! Both have the same number of colorings under the Klein/Z4 brace with the
//! tables swapped, yet the skew brace polynomial tells them apart.

use skewbrace::{compute_invariants, data, el, enumerate_colorings};

fn main() {
    let brace = data::vhopf_brace();
    let hopf = data::link("vhopf");
    let unlink = data::link("unlink2");

    for (name, d) in [("vHopf", &hopf), ("U2", &unlink)] {
        let inv = compute_invariants(&brace, d);
        println!("{name:5} {d}");
        println!("      count {}  SB {}  I {}", inv.count, inv.sb, inv.ideal);
    }

    // semiarc 1 lies on the under strand, semiarc 0 on the over strand
    let colorings = enumerate_colorings(&brace, &hopf);
    let mut missing = Vec::new();
    for x in 1..=4 {
        for y in 1..=4 {
            if !colorings.iter().any(|c| c[1] == el(x) && c[0] == el(y)) {
                missing.push(format!("({x},{y})"));
            }
        }
    }
    println!("pairs with no vHopf coloring: {}", missing.join(" "));
}
