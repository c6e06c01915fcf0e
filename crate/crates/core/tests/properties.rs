mod common;

use proptest::prelude::*;

use skewbrace::algebra::SkewBrace;
use skewbrace::diagram::{apply_r1, apply_r2, Kink, R2Variant, Sign};
use skewbrace::structures::{biquandle_closure, group_closure, ideal_closure, is_ideal, Subset};
use skewbrace::{
    compute_invariants, data, derive_biquandle, enumerate_ideals, exponent_profile, is_involutive,
};

use common::*;

fn braces() -> Vec<(&'static str, SkewBrace)> {
    data::all_braces()
}

fn brace_and_mask() -> impl Strategy<Value = (usize, u64)> {
    (0..6usize).prop_flat_map(|i| {
        let n = braces()[i].1.size();
        (Just(i), 1u64..(1u64 << n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closures_are_extensive_and_idempotent((i, mask) in brace_and_mask()) {
        let (_, b) = &braces()[i];
        let bq = derive_biquandle(b).unwrap();
        let s = Subset::from_mask(b.size(), mask);
        let closures: [fn(&SkewBrace, &skewbrace::Biquandle, &Subset) -> Subset; 3] = [
            |b, _, s| group_closure(b.circ_group(), s).unwrap(),
            |_, q, s| biquandle_closure(q, s).unwrap(),
            |b, _, s| ideal_closure(b, s).unwrap(),
        ];
        for close in closures {
            let c = close(b, &bq, &s);
            prop_assert!(s.is_subset(&c));
            prop_assert_eq!(close(b, &bq, &c), c);
        }
    }

    #[test]
    fn closures_are_monotone((i, a) in brace_and_mask(), extra in any::<u64>()) {
        let (_, b) = &braces()[i];
        let n = b.size();
        let big = Subset::from_mask(n, a | (extra & ((1 << n) - 1)));
        let small = Subset::from_mask(n, a);
        let g = b.star_group();
        prop_assert!(group_closure(g, &small).unwrap().is_subset(&group_closure(g, &big).unwrap()));
        prop_assert!(ideal_closure(b, &small).unwrap().is_subset(&ideal_closure(b, &big).unwrap()));
    }

    #[test]
    fn ideal_closure_is_an_ideal((i, mask) in brace_and_mask()) {
        let (_, b) = &braces()[i];
        let c = ideal_closure(b, &Subset::from_mask(b.size(), mask)).unwrap();
        prop_assert!(c.contains(b.identity()));
        prop_assert!(is_ideal(b, &c));
        prop_assert!(ideal_by_definition(b, mask_of(&c)));
    }

    #[test]
    fn moves_preserve_invariants(
        i in 0..6usize,
        which in 0..5usize,
        gap_a in any::<usize>(),
        gap_b in any::<usize>(),
        r2 in any::<bool>(),
        positive in any::<bool>(),
        flag in any::<bool>(),
    ) {
        let (_, b) = &braces()[i];
        let d = data::fixture_links().swap_remove(which).diagram;
        let gaps = d.semiarc_count();
        let sign = if positive { Sign::Positive } else { Sign::Negative };
        let moved = if r2 {
            let variant = if flag { R2Variant::Parallel(sign) } else { R2Variant::Antiparallel(sign) };
            apply_r2(&d, gap_a % gaps, gap_b % gaps, variant).unwrap()
        } else {
            let kink = if flag { Kink::OverFirst } else { Kink::UnderFirst };
            apply_r1(&d, gap_a % gaps, sign, kink).unwrap()
        };
        prop_assert_eq!(compute_invariants(b, &moved), compute_invariants(b, &d));
    }
}

#[test]
fn enumerate_ideals_matches_powerset_oracle() {
    for (name, b) in braces() {
        let n = b.size();
        let oracle: Vec<u64> = all_masks(n).filter(|&m| m != 0 && ideal_by_definition(&b, m)).collect();
        let mut listed: Vec<u64> = enumerate_ideals(&b).iter().map(mask_of).collect();
        listed.sort();
        assert_eq!(listed, oracle, "{name}");
    }
}

#[test]
fn exponents_divide_brace_order() {
    for (name, b) in braces() {
        let n = b.size() as u32;
        for link in data::fixture_links() {
            let inv = compute_invariants(&b, &link.diagram);
            for ([a, c], _) in inv.sb.terms() {
                assert!(n.is_multiple_of(a) && n.is_multiple_of(c), "{name} × {}: u^{a}v^{c}", link.name);
            }
            for ([a], _) in inv.ideal.terms() {
                assert_eq!(n % a, 0, "{name} × {}", link.name);
            }
            assert!(exponent_profile(&inv.sb).mismatched.iter().all(|&(a, c)| a != c));
        }
    }
}

#[test]
fn star_commutative_braces_are_involutive() {
    for (name, b) in braces() {
        if b.is_star_commutative() {
            assert!(is_involutive(&b), "{name}");
        }
    }
}

#[test]
fn bundled_brace_files_round_trip() {
    use skewbrace::algebra::BraceFile;
    for (stem, text) in data::BRACE_FILES {
        let file: BraceFile = text.parse().unwrap();
        assert_eq!(file.to_string(), text, "{stem}");
        let again = BraceFile::from_brace(&file.to_brace().unwrap());
        assert_eq!(again.circ, file.circ);
        assert_eq!(again.star, file.star);
    }
}

#[test]
fn swapped_klein_z4_tables_give_the_vhopf_brace() {
    let b = data::klein4_z4_brace();
    let swapped =
        skewbrace::validate_skew_brace(b.star_group().table().clone(), b.circ_group().table().clone()).unwrap();
    let v = data::vhopf_brace();
    assert_eq!(swapped.circ_group().table(), v.circ_group().table());
    assert_eq!(swapped.star_group().table(), v.star_group().table());
}

#[test]
fn solver_matches_brute_force_on_small_cases() {
    use skewbrace::coloring::solve;
    use skewbrace::diagram::build_constraints;
    for (name, b) in braces().into_iter().filter(|(_, b)| b.size() <= 6) {
        let bq = derive_biquandle(&b).unwrap();
        for link in data::fixture_links() {
            let sys = build_constraints(&link.diagram);
            if (b.size() as u64).pow(sys.semiarc_count as u32) > 200_000 {
                continue;
            }
            assert_eq!(solve(&bq, &sys), brute_force_colorings(&bq, &sys), "{name} × {}", link.name);
        }
    }
}
