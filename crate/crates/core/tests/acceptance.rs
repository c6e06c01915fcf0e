//! Acceptance criteria, one pass/fail line each.
//!
//! Runs as a plain binary (`harness = false`) so every criterion is reported
//! even when an earlier one fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skewbrace::algebra::{el, elements, BraceFile};
use skewbrace::biquandle::{derive_biquandle, is_involutive, r_map};
use skewbrace::coloring::{counting_invariant, enumerate_colorings, solve};
use skewbrace::data;
use skewbrace::diagram::{build_constraints, random_moves};
use skewbrace::invariants::{accumulate, compute_invariants};
use skewbrace::structures::{
    biquandle_closure, enumerate_ideals, group_closure, ideal_closure, Subset,
};

use common::*;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Wall-clock budget per criterion.
const BUDGET: Duration = Duration::from_secs(10);

fn brace_validation() -> Outcome {
    ensure!(data::BRACE_FILES.len() == 6, "expected six bundled braces");
    for (stem, text) in data::BRACE_FILES {
        let file: BraceFile = text.parse().map_err(|e| format!("{stem}: {e}"))?;
        ensure!(file.to_string() == text, "{stem}: file does not round-trip");
        let b = file.to_brace().map_err(|e| format!("{stem}: {e}"))?;
        ensure!(
            b.circ_group().identity() == b.star_group().identity(),
            "{stem}: identities differ"
        );
    }
    Ok(())
}

fn involutivity() -> Outcome {
    let nab = data::exnab_brace();
    let r = r_map(&nab, el(4), el(3));
    ensure!(r == (el(2), el(5)), "r(4,3) = ({}, {}), expected (2, 5)", r.0, r.1);
    ensure!(!is_involutive(&nab), "ex:nab brace reported involutive");
    ensure!(is_involutive(&data::vhopf_brace()), "vHopf brace reported non-involutive");
    Ok(())
}

fn vhopf_vs_unlink() -> Outcome {
    let b = data::vhopf_brace();
    let hopf = compute_invariants(&b, &data::link("vhopf"));
    let unlink = compute_invariants(&b, &data::link("unlink2"));
    ensure!(
        hopf.sb.to_string() == "8u^4v^4 + 3u^2v^2 + uv",
        "Φ^SB(vHopf) = {}",
        hopf.sb
    );
    ensure!(
        unlink.sb.to_string() == "12u^4v^4 + 3u^2v^2 + uv",
        "Φ^SB(U2) = {}",
        unlink.sb
    );
    // semiarc 1 carries x (under component), semiarc 0 carries y
    let cols = enumerate_colorings(&b, &data::link("vhopf"));
    ensure!(cols.len() == 12, "{} vHopf colorings", cols.len());
    let mut excluded: Vec<(usize, usize)> = Vec::new();
    for x in elements(4) {
        for y in elements(4) {
            if !cols.iter().any(|c| c[1] == x && c[0] == y) {
                excluded.push((x.label(), y.label()));
            }
        }
    }
    ensure!(
        excluded == [(2, 2), (2, 4), (4, 2), (4, 4)],
        "excluded pairs {excluded:?}"
    );
    Ok(())
}

fn classical_knots() -> Outcome {
    let b = data::exnab_brace();
    let t = compute_invariants(&b, &data::link("trefoil"));
    let f = compute_invariants(&b, &data::link("fig8"));
    ensure!(t.count == 12, "Φ^Z(3_1) = {}", t.count);
    ensure!(f.count == 6, "Φ^Z(4_1) = {}", f.count);
    ensure!(t.ideal.to_string() == "9u^6 + 2u^3 + u", "Φ^I(3_1) = {}", t.ideal);
    ensure!(f.ideal.to_string() == "3u^6 + 2u^3 + u", "Φ^I(4_1) = {}", f.ideal);
    ensure!(
        t.sb.to_string() == "8u^6v^6 + 2u^3v^3 + u^2v^2 + uv",
        "Φ^SB(3_1) = {}",
        t.sb
    );
    ensure!(
        f.sb.to_string() == "2u^6v^6 + 2u^3v^3 + u^2v^2 + uv",
        "Φ^SB(4_1) = {}",
        f.sb
    );
    Ok(())
}

fn ideals() -> Outcome {
    let ideals: Vec<String> = enumerate_ideals(&data::z6_ideal_brace())
        .iter()
        .map(Subset::to_csv)
        .collect();
    for want in ["1", "1,3,5", "1,2,3,4,5,6"] {
        ensure!(ideals.iter().any(|i| i == want), "missing ideal {{{want}}} in {ideals:?}");
    }
    Ok(())
}

fn oracle_equivalence() -> Outcome {
    let mut compared = 0;
    for (stem, b) in data::all_braces() {
        let bq = derive_biquandle(&b).map_err(|e| e.to_string())?;
        for link in data::fixture_links() {
            let sys = build_constraints(&link.diagram);
            let space = (b.size() as u64).checked_pow(sys.semiarc_count as u32);
            if space.is_none_or(|s| s > 1_000_000) {
                continue;
            }
            let fast = solve(&bq, &sys);
            let slow = brute_force_colorings(&bq, &sys);
            ensure!(fast == slow, "{stem} × {}: solver disagrees with brute force", link.name);
            compared += 1;
        }

        let n = b.size();
        if n > 8 {
            continue;
        }
        let masks: Vec<u64> = all_masks(n).collect();
        let circ_closed: Vec<u64> = masks.iter().copied().filter(|&m| closed_under_group(&b, true, m)).collect();
        let star_closed: Vec<u64> = masks.iter().copied().filter(|&m| closed_under_group(&b, false, m)).collect();
        let bq_closed: Vec<u64> = masks.iter().copied().filter(|&m| closed_under_biquandle(&bq, m)).collect();
        let ideal_sets: Vec<u64> = masks.iter().copied().filter(|&m| ideal_by_definition(&b, m)).collect();

        for &seed in &masks[1..] {
            let s = Subset::from_mask(n, seed);
            let checks = [
                ("∘-subgroup", group_closure(b.circ_group(), &s), &circ_closed),
                ("*-subgroup", group_closure(b.star_group(), &s), &star_closed),
                ("biquandle", biquandle_closure(&bq, &s), &bq_closed),
                ("ideal", ideal_closure(&b, &s), &ideal_sets),
            ];
            for (what, got, closed) in checks {
                let got = got.map_err(|e| e.to_string())?;
                let want = smallest_closed_superset(closed, n, seed);
                ensure!(
                    mask_of(&got) == want,
                    "{stem}: {what} closure of {s} is {got}, oracle {}",
                    Subset::from_mask(n, want)
                );
            }
        }

        let listed: Vec<u64> = enumerate_ideals(&b).iter().map(mask_of).collect();
        let mut oracle: Vec<u64> = ideal_sets.iter().copied().filter(|&m| m != 0).collect();
        oracle.sort_by_key(|&m| (m.count_ones(), members_key(n, m)));
        ensure!(listed == oracle, "{stem}: ideal list differs from powerset oracle");
    }
    ensure!(compared > 0, "no (brace, link) pair was small enough to compare");
    Ok(())
}

fn members_key(n: usize, mask: u64) -> Vec<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}

fn specialization() -> Outcome {
    for (stem, b) in data::all_braces() {
        for link in data::fixture_links() {
            let inv = compute_invariants(&b, &link.diagram);
            let count = counting_invariant(&b, &link.diagram) as i64;
            ensure!(
                inv.sb.specialize() == count && inv.ideal.specialize() == count,
                "{stem} × {}: Φ^SB(1,1)={}, Φ^I(1)={}, Φ^Z={count}",
                link.name,
                inv.sb.specialize(),
                inv.ideal.specialize()
            );
        }
    }
    Ok(())
}

fn move_invariance() -> Outcome {
    const TRIALS: usize = 100;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (stem, b) in data::all_braces() {
        let bq = derive_biquandle(&b).map_err(|e| e.to_string())?;
        for link in data::fixture_links() {
            let base = accumulate(&b, &bq, &solve(&bq, &build_constraints(&link.diagram)));
            for trial in 0..TRIALS {
                let moves = rng.random_range(1..=3);
                let d = random_moves(&link.diagram, moves, &mut rng);
                let inv = accumulate(&b, &bq, &solve(&bq, &build_constraints(&d)));
                ensure!(
                    inv.sb == base.sb && inv.ideal == base.ideal,
                    "{stem} × {} trial {trial}: {d} gives Φ^SB={} Φ^I={}",
                    link.name,
                    inv.sb,
                    inv.ideal
                );
            }
        }
    }
    Ok(())
}

fn involutive_triviality() -> Outcome {
    let b = data::vhopf_brace();
    let trefoil = compute_invariants(&b, &data::link("trefoil"));
    let unknot = compute_invariants(&b, &data::link("unknot"));
    ensure!(
        trefoil == unknot,
        "trefoil ({} | {} | {}) differs from unknot ({} | {} | {})",
        trefoil.count,
        trefoil.sb,
        trefoil.ideal,
        unknot.count,
        unknot.sb,
        unknot.ideal
    );
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("brace validation of the six bundled structure-table pairs", brace_validation),
        ("r(4,3) = (2,5); involutivity of ex:nab and vHopf braces", involutivity),
        ("vHopf vs two-component unlink", vhopf_vs_unlink),
        ("trefoil vs figure-eight: Φ^Z, Φ^I, Φ^SB", classical_knots),
        ("ideals {1}, {1,3,5}, X of the Z6 brace", ideals),
        ("solver and closures agree with brute-force oracles", oracle_equivalence),
        ("specialization Φ^SB(1,1) = Φ^I(1) = Φ^Z", specialization),
        ("Φ^SB, Φ^I unchanged under 100 random R1/R2 rewrites", move_invariance),
        ("commutative-* brace: trefoil matches unknot", involutive_triviality),
    ];

    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| {
                let msg = p
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                Err(format!("panicked: {msg}"))
            })
            .and_then(|()| {
                let took = start.elapsed();
                if took > BUDGET {
                    Err(format!("took {took:.1?}, budget {BUDGET:?}"))
                } else {
                    Ok(())
                }
            });
        let took = start.elapsed();
        match outcome {
            Ok(()) => println!("PASS  criterion {}: {name} ({took:.2?})", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL  criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} acceptance criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

