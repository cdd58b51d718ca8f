//! Granularity conditions transcribed as clause lists, independently of the
//! classifier under test.
#![allow(dead_code)]

use fpa_core::granularity::is_granular_counts;
use fpa_core::FunctionKind;

use FunctionKind::*;

/// A granularity clause: structural count relation and DET ceiling.
#[derive(Clone, Copy)]
pub enum Structural {
    AtMost(u32),
    Exactly(u32),
}

/// Disjunction of conjunctive clauses, one list per kind, read off the
/// condition table row by row.
fn clauses(kind: FunctionKind) -> &'static [(Structural, u32)] {
    use Structural::*;
    match kind {
        Ilf => &[(AtMost(5), 19)],
        Eif => &[(AtMost(5), 19)],
        Ei => &[(AtMost(1), 15), (Exactly(2), 4)],
        Eo => &[(AtMost(1), 19), (AtMost(3), 5)],
        Eq => &[(AtMost(1), 19), (AtMost(3), 5)],
    }
}

pub fn oracle(kind: FunctionKind, s: u32, d: u32) -> bool {
    clauses(kind).iter().any(|&(rel, det_max)| {
        let structural_ok = match rel {
            Structural::AtMost(n) => s <= n,
            Structural::Exactly(n) => s == n,
        };
        structural_ok && d <= det_max
    })
}

/// Edge cells asserted one by one: (kind, structural, det, granular).
pub const BOUNDARIES: [(FunctionKind, u32, u32, bool); 16] = [
    (Ilf, 5, 19, true),
    (Eif, 5, 19, true),
    (Ilf, 1, 20, false),
    (Eif, 1, 20, false),
    (Ilf, 6, 1, false),
    (Ei, 2, 4, true),
    (Ei, 2, 5, false),
    (Ei, 1, 15, true),
    (Ei, 1, 16, false),
    (Eo, 3, 5, true),
    (Eo, 3, 6, false),
    (Eq, 3, 5, true),
    (Eq, 3, 6, false),
    (Eo, 1, 19, true),
    (Eq, 1, 19, true),
    (Eq, 4, 1, false),
];

/// Grid points compared and the disagreements found.
pub fn check_full_grid() -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for kind in FunctionKind::ALL {
        for s in kind.min_structural()..=8 {
            for d in 1..=60 {
                checked += 1;
                if is_granular_counts(kind, s, d) != oracle(kind, s, d) {
                    mismatches.push(format!("{kind} s={s} d={d}"));
                }
            }
        }
    }
    (checked, mismatches)
}
