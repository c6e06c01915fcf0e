//! Checks whether Φ^SB only ever has terms u^k v^k over the bundled braces
//! and links, and prints any term where the two closures differ in size.

use skewbrace::{compute_invariants, data, exponent_profile};

fn main() {
    for (name, brace) in data::all_braces() {
        for link in data::fixture_links() {
            let inv = compute_invariants(&brace, &link.diagram);
            let profile = exponent_profile(&inv.sb);
            println!("{name:22} {:8} {:40} {profile}", link.name, inv.sb.to_string());
            for (a, b) in &profile.mismatched {
                assert_eq!(brace.size() as u32 % a, 0);
                assert_eq!(brace.size() as u32 % b, 0);
            }
        }
    }
}
