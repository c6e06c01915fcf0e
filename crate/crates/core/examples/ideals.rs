//! Ideals and closures inside a finite skew brace.

use skewbrace::structures::{biquandle_closure, group_closure, ideal_closure};
use skewbrace::{data, derive_biquandle, enumerate_ideals, Subset};

fn main() {
    for (name, b) in data::all_braces() {
        let ideals: Vec<String> = enumerate_ideals(&b).iter().map(Subset::to_string).collect();
        println!("{name}: {}", ideals.join(" "));
    }

    let b = data::exnab_brace();
    let bq = derive_biquandle(&b).unwrap();
    println!();
    for labels in [&[2][..], &[4], &[2, 4]] {
        let s = Subset::from_labels(b.size(), labels);
        println!(
            "{s}: biquandle {}, ∘-subgroup {}, *-subgroup {}, ideal {}",
            biquandle_closure(&bq, &s).unwrap(),
            group_closure(b.circ_group(), &s).unwrap(),
            group_closure(b.star_group(), &s).unwrap(),
            ideal_closure(&b, &s).unwrap(),
        );
    }
}
