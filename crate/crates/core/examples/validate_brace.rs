//! Validate a skew brace file and report its basic properties.
//!
//! ```text
//! cargo run --example validate_brace -- data/braces/exnab_brace.txt
//! ```
//!
//! Without an argument every bundled brace is checked.

use std::env;
use std::fs;

use skewbrace::algebra::BraceFile;
use skewbrace::{data, el, is_involutive, SkewBrace};

fn describe(name: &str, b: &SkewBrace) {
    println!(
        "{name}: n={}, identity {}, *-commutative: {}, involutive: {}",
        b.size(),
        b.identity(),
        b.is_star_commutative(),
        is_involutive(b)
    );
}

fn main() {
    if let Some(path) = env::args().nth(1) {
        let text = fs::read_to_string(&path).expect("readable brace file");
        let file: BraceFile = match text.parse() {
            Ok(f) => f,
            Err(e) => {
                eprintln!("{path}: {e}");
                std::process::exit(1);
            }
        };
        match file.to_brace() {
            Ok(b) => describe(&path, &b),
            Err(e) => {
                eprintln!("{path}: not a skew brace: {e}");
                std::process::exit(1);
            }
        }
        return;
    }

    for (name, b) in data::all_braces() {
        describe(name, &b);
    }

    // Breaking one entry of the * table is caught by the group check.
    let b = data::klein4_z4_brace();
    let star = b.star_group().table().with_entry(el(2), el(2), el(2));
    let err = skewbrace::validate_skew_brace(b.circ_group().table().clone(), star).unwrap_err();
    println!("tampered table: {err}");
}
