//! Derive the biquandle of a skew brace, check its axioms and look at the
//! Yang-Baxter map and the r-map.

use skewbrace::biquandle::verify_biquandle_axioms;
use skewbrace::{data, derive_biquandle, el, is_involutive, r_map};

fn main() {
    let brace = data::exnab_brace();
    let bq = derive_biquandle(&brace).expect("bundled brace is a skew brace");

    print!("{}", bq.tables_text());
    println!();
    print!("{}", verify_biquandle_axioms(&bq));
    println!();

    let (x, y) = (el(4), el(3));
    let (a, b) = bq.yb_map(x, y);
    let (c, d) = bq.yb_map_inverse(a, b);
    println!("S({x},{y}) = ({a},{b}), S^-1 takes it back to ({c},{d})");

    let (p, q) = r_map(&brace, x, y);
    println!("r({x},{y}) = ({p},{q})");
    println!("ex:nab involutive: {}", is_involutive(&brace));
    println!("vHopf involutive:  {}", is_involutive(&data::vhopf_brace()));
}
