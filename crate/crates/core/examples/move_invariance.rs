//! Random Reidemeister I/II rewrites leave every invariant unchanged.
//!
//! ```text
//! cargo run --release --example move_invariance -- 500 7
//! ```
//! The optional arguments are the number of trials and the seed.

use std::env;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewbrace::diagram::random_moves;
use skewbrace::{compute_invariants, data};

fn main() {
    let mut args = env::args().skip(1);
    let trials: usize = args.next().map_or(50, |a| a.parse().expect("trial count"));
    let seed: u64 = args.next().map_or(0, |a| a.parse().expect("seed"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let brace = data::exnab_brace();
    for link in data::fixture_links() {
        let base = compute_invariants(&brace, &link.diagram);
        let mut largest = link.diagram.clone();
        for _ in 0..trials {
            let moves = rng.random_range(1..=3);
            let d = random_moves(&link.diagram, moves, &mut rng);
            assert_eq!(compute_invariants(&brace, &d), base, "{} changed on {d}", link.name);
            if d.crossing_count() > largest.crossing_count() {
                largest = d;
            }
        }
        println!("{:8} {trials} rewrites ok, SB {}", link.name, base.sb);
        println!("         e.g. {largest}");
    }
}
