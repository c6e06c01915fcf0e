//! Skew brace colorings of oriented classical and virtual links.
//!
//! A finite skew brace `(X, ∘, *)` defines a biquandle, so it colors the
//! semiarcs of a link diagram. This crate validates braces given by
//! structure tables, derives their biquandles, enumerates colorings of
//! diagrams given as signed Gauss codes, and computes
//!
//! * the counting invariant `Φ^Z`, the number of colorings;
//! * the enhanced polynomial `Φ^SB`, recording for each coloring the sizes of
//!   the `∘`- and `*`-subgroups generated by its image;
//! * the ideal polynomial `Φ^I`, recording the size of the generated ideal.
//!
//! ```
//! use skewbrace::{data, invariants::compute_invariants};
//!
//! let brace = data::exnab_brace();
//! let inv = compute_invariants(&brace, &data::link("trefoil"));
//! assert_eq!(inv.count, 12);
//! assert_eq!(inv.ideal.to_string(), "9u^6 + 2u^3 + u");
//! ```

pub mod algebra;
pub mod biquandle;
pub mod cli;
pub mod coloring;
pub mod data;
pub mod diagram;
pub mod invariants;
pub mod polynomial;
pub mod structures;

pub use algebra::{el, validate_group, validate_skew_brace, Element, OperationTable, SkewBrace};
pub use biquandle::{derive_biquandle, is_involutive, r_map, Biquandle};
pub use coloring::{counting_invariant, enumerate_colorings, Coloring};
pub use diagram::{parse_gauss_code, LinkDiagram};
pub use invariants::{compute_invariants, ideal_polynomial, sb_polynomial, Invariants};
pub use polynomial::{exponent_profile, Polynomial1, Polynomial2};
pub use structures::{enumerate_ideals, Subset};
