//! Bundled structure tables and fixture links.

use crate::algebra::{BraceFile, SkewBrace};
use crate::diagram::{parse_link_file, LinkDiagram, NamedLink};

/// `(file stem, file contents)` for every bundled brace.
pub const BRACE_FILES: [(&str, &str); 6] = [
    ("klein4_z4_brace", include_str!("../data/braces/klein4_z4_brace.txt")),
    ("vhopf_brace", include_str!("../data/braces/vhopf_brace.txt")),
    ("exnab_brace", include_str!("../data/braces/exnab_brace.txt")),
    ("z6_ideal_brace", include_str!("../data/braces/z6_ideal_brace.txt")),
    ("order8_links_brace", include_str!("../data/braces/order8_links_brace.txt")),
    ("order8_atlas_brace", include_str!("../data/braces/order8_atlas_brace.txt")),
];

/// The fixture link file: `vhopf`, `unlink2`, `unknot`, `trefoil`, `fig8`.
pub const FIXTURE_LINKS: &str = include_str!("../data/links/fixtures.txt");

fn load(stem: &str) -> SkewBrace {
    let (_, text) = BRACE_FILES
        .iter()
        .find(|(s, _)| *s == stem)
        .unwrap_or_else(|| panic!("no bundled brace {stem:?}"));
    let file: BraceFile = text.parse().expect("bundled brace file parses");
    file.to_brace().expect("bundled brace validates")
}

/// `∘` the Klein four-group, `*` cyclic of order 4.
pub fn klein4_z4_brace() -> SkewBrace {
    load("klein4_z4_brace")
}

/// `∘` cyclic of order 4, `*` the Klein four-group; separates the virtual
/// Hopf link from the unlink.
pub fn vhopf_brace() -> SkewBrace {
    load("vhopf_brace")
}

/// Order 6 with nonabelian `*`; gives a non-involutive solution that
/// separates the trefoil from the figure-eight knot.
pub fn exnab_brace() -> SkewBrace {
    load("exnab_brace")
}

/// `∘` cyclic of order 6, with ideals `{1}`, `{1,3,5}` and the whole carrier.
pub fn z6_ideal_brace() -> SkewBrace {
    load("z6_ideal_brace")
}

pub fn order8_links_brace() -> SkewBrace {
    load("order8_links_brace")
}

pub fn order8_atlas_brace() -> SkewBrace {
    load("order8_atlas_brace")
}

pub fn trivial_brace() -> SkewBrace {
    SkewBrace::from_rows(&[[1]], &[[1]]).expect("one-element brace")
}

/// Every bundled brace with its file stem, in [`BRACE_FILES`] order.
pub fn all_braces() -> Vec<(&'static str, SkewBrace)> {
    BRACE_FILES.iter().map(|(stem, _)| (*stem, load(stem))).collect()
}

pub fn fixture_links() -> Vec<NamedLink> {
    parse_link_file(FIXTURE_LINKS).expect("bundled link file parses")
}

/// A fixture link by name.
pub fn link(name: &str) -> LinkDiagram {
    fixture_links()
        .into_iter()
        .find(|l| l.name == name)
        .unwrap_or_else(|| panic!("no fixture link {name:?}"))
        .diagram
}
