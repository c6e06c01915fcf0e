//! Reidemeister I and II moves on Gauss codes.
//!
//! A location is a gap between consecutive passages of a component, indexed
//! like semiarcs: gap `i` is the semiarc leaving the `i`-th passage. A
//! crossingless component has the single gap of its one semiarc. Because
//! virtual crossings are invisible in a Gauss code, any two gaps can be
//! brought together for an R2 move.

use rand::Rng;
use thiserror::Error;

use super::{LinkDiagram, Passage, Role, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("gap {gap} does not exist (diagram has {gaps} gaps)")]
    InvalidLocation { gap: usize, gaps: usize },
}

/// Order of the two passages of an R1 kink along the strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kink {
    OverFirst,
    UnderFirst,
}

/// Relative orientation of the two strands in an R2 move, and the sign of the
/// first new crossing met along the over strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum R2Variant {
    /// Both strands meet the new crossings in the same order.
    Parallel(Sign),
    /// The under strand meets them in reverse order.
    Antiparallel(Sign),
}

/// Locates gap `gap` as (component, insertion index).
fn locate(d: &LinkDiagram, gap: usize) -> Result<(usize, usize), MoveError> {
    let mut base = 0;
    for (c, comp) in d.components().iter().enumerate() {
        let width = comp.len().max(1);
        if gap < base + width {
            let local = gap - base;
            let at = if comp.is_empty() { 0 } else { local + 1 };
            return Ok((c, at));
        }
        base += width;
    }
    Err(MoveError::InvalidLocation { gap, gaps: base })
}

/// Inserts a one-crossing kink into gap `gap`.
pub fn apply_r1(
    d: &LinkDiagram,
    gap: usize,
    sign: Sign,
    kink: Kink,
) -> Result<LinkDiagram, MoveError> {
    let (c, at) = locate(d, gap)?;
    let id = d.max_crossing_id() + 1;
    let (first, second) = match kink {
        Kink::OverFirst => (Role::Over, Role::Under),
        Kink::UnderFirst => (Role::Under, Role::Over),
    };
    let mut comps = d.components().to_vec();
    comps[c].splice(
        at..at,
        [Passage::new(id, first, sign), Passage::new(id, second, sign)],
    );
    Ok(LinkDiagram::new(comps).expect("R1 preserves validity"))
}

/// Pushes the strand through `under_gap` beneath the strand through
/// `over_gap`, creating two crossings of opposite sign. When both gaps
/// coincide the over pieces come first along the strand.
pub fn apply_r2(
    d: &LinkDiagram,
    over_gap: usize,
    under_gap: usize,
    variant: R2Variant,
) -> Result<LinkDiagram, MoveError> {
    let (oc, oat) = locate(d, over_gap)?;
    let (uc, uat) = locate(d, under_gap)?;
    let a = d.max_crossing_id() + 1;
    let b = a + 1;
    let (sign, reversed) = match variant {
        R2Variant::Parallel(s) => (s, false),
        R2Variant::Antiparallel(s) => (s, true),
    };
    let over = [
        Passage::new(a, Role::Over, sign),
        Passage::new(b, Role::Over, sign.flip()),
    ];
    let mut under = [
        Passage::new(a, Role::Under, sign),
        Passage::new(b, Role::Under, sign.flip()),
    ];
    if reversed {
        under.swap(0, 1);
    }

    let mut comps = d.components().to_vec();
    let mut edits = [(oc, oat, over, 0u8), (uc, uat, under, 1u8)];
    // later positions first so earlier indices stay valid; on a tie the under
    // pair goes in first and the over pair is then placed in front of it
    edits.sort_by_key(|e| std::cmp::Reverse((e.0, e.1, e.3)));
    for (c, at, pair, _) in edits {
        comps[c].splice(at..at, pair);
    }
    Ok(LinkDiagram::new(comps).expect("R2 preserves validity"))
}

/// Applies one uniformly chosen R1 or R2 move at random locations.
pub fn random_move<R: Rng + ?Sized>(d: &LinkDiagram, rng: &mut R) -> LinkDiagram {
    let gaps = d.semiarc_count();
    let sign = if rng.random_bool(0.5) {
        Sign::Positive
    } else {
        Sign::Negative
    };
    if rng.random_bool(0.5) {
        let kink = if rng.random_bool(0.5) {
            Kink::OverFirst
        } else {
            Kink::UnderFirst
        };
        apply_r1(d, rng.random_range(0..gaps), sign, kink).expect("gap in range")
    } else {
        let variant = if rng.random_bool(0.5) {
            R2Variant::Parallel(sign)
        } else {
            R2Variant::Antiparallel(sign)
        };
        let over_gap = rng.random_range(0..gaps);
        let under_gap = rng.random_range(0..gaps);
        apply_r2(d, over_gap, under_gap, variant).expect("gaps in range")
    }
}

/// Applies `count` random moves in sequence.
pub fn random_moves<R: Rng + ?Sized>(d: &LinkDiagram, count: usize, rng: &mut R) -> LinkDiagram {
    let mut cur = d.clone();
    for _ in 0..count {
        cur = random_move(&cur, rng);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_gauss_code;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn code(s: &str) -> LinkDiagram {
        parse_gauss_code(s).unwrap()
    }

    #[test]
    fn kink_on_unknot() {
        let d = apply_r1(&code("-"), 0, Sign::Positive, Kink::OverFirst).unwrap();
        assert_eq!(d.to_string(), "O1+ U1+");
        let d = apply_r1(&code("-"), 0, Sign::Negative, Kink::UnderFirst).unwrap();
        assert_eq!(d.to_string(), "U1- O1-");
    }

    #[test]
    fn kink_goes_after_the_gap_start() {
        let d = apply_r1(&code("O1+ U1+"), 0, Sign::Negative, Kink::OverFirst).unwrap();
        assert_eq!(d.to_string(), "O1+ O2- U2- U1+");
        let d = apply_r1(&code("O1+ U1+"), 1, Sign::Negative, Kink::OverFirst).unwrap();
        assert_eq!(d.to_string(), "O1+ U1+ O2- U2-");
    }

    #[test]
    fn r2_on_unlink() {
        let d = apply_r2(&code("- / -"), 0, 1, R2Variant::Parallel(Sign::Positive)).unwrap();
        assert_eq!(d.to_string(), "O1+ O2- / U1+ U2-");
        let d = apply_r2(&code("- / -"), 0, 1, R2Variant::Antiparallel(Sign::Negative)).unwrap();
        assert_eq!(d.to_string(), "O1- O2+ / U2+ U1-");
    }

    #[test]
    fn r2_within_one_gap() {
        let d = apply_r2(&code("-"), 0, 0, R2Variant::Parallel(Sign::Positive)).unwrap();
        assert_eq!(d.to_string(), "O1+ O2- U1+ U2-");
    }

    #[test]
    fn r2_on_same_component_keeps_order() {
        let d = apply_r2(&code("O1+ U1+"), 1, 0, R2Variant::Parallel(Sign::Positive)).unwrap();
        assert_eq!(d.to_string(), "O1+ U2+ U3- U1+ O2+ O3-");
    }

    #[test]
    fn invalid_gap() {
        assert_eq!(
            apply_r1(&code("O1+ U1+"), 2, Sign::Positive, Kink::OverFirst),
            Err(MoveError::InvalidLocation { gap: 2, gaps: 2 })
        );
        assert!(apply_r2(&code("-"), 0, 1, R2Variant::Parallel(Sign::Positive)).is_err());
    }

    #[test]
    fn random_moves_produce_valid_diagrams() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut d = code("O1+ U2+ O3+ U1+ O2+ U3+");
        for _ in 0..50 {
            d = random_move(&d, &mut rng);
            assert_eq!(parse_gauss_code(&d.to_string()).unwrap(), d);
        }
        assert!(d.crossing_count() >= 3 + 50);
    }
}
