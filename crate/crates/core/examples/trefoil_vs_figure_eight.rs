//! Counting, ideal and skew brace invariants of 3_1 and 4_1 under the
//! six-element ex:nab brace, plus the mirror trefoil.

use skewbrace::{compute_invariants, data, parse_gauss_code};

fn main() {
    let brace = data::exnab_brace();
    let mirror = parse_gauss_code("U1- O2- U3- O1- U2- O3-").unwrap();
    let knots = [
        ("3_1", data::link("trefoil")),
        ("3_1*", mirror),
        ("4_1", data::link("fig8")),
    ];
    for (name, d) in &knots {
        let inv = compute_invariants(&brace, d);
        println!("{name:5} Φ^Z = {:2}   Φ^I = {:16}   Φ^SB = {}", inv.count, inv.ideal, inv.sb);
    }
}
