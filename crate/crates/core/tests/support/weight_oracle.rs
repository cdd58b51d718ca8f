//! Published weight grids transcribed cell by cell, plus a second,
//! rule-chain implementation of both methods. Shared by the golden tests
//! and the acceptance suite.
#![allow(dead_code)]

use fpa_core::counting::{
    extended_weight_matrix, standard_complexity_matrix, unit_points, Complexity, OPEN,
};
use fpa_core::{classify_standard, weight_extended, weight_standard, FunctionKind, Method};

use Complexity::{Average as A, High as H, Low as L};
use FunctionKind::*;

pub const MAX_STRUCTURAL: u32 = 8;
pub const MAX_DET: u32 = 60;

/// Printed band as (lower, upper) inclusive; `OPEN` upper for "or more".
pub type Band = (u32, u32);

pub struct Printed<T> {
    pub kind: FunctionKind,
    pub rows: &'static [Band],
    pub cols: &'static [Band],
    pub cells: Vec<Vec<Option<T>>>,
}

pub fn points_in(row: Band, col: Band) -> impl Iterator<Item = (u32, u32)> {
    let rmax = row.1.min(MAX_STRUCTURAL);
    let cmax = col.1.min(MAX_DET);
    (row.0..=rmax).flat_map(move |s| (col.0..=cmax).map(move |d| (s, d)))
}

const DATA_ROWS: &[Band] = &[(1, 1), (2, 5), (6, OPEN)];
const DATA_COLS: &[Band] = &[(1, 19), (20, 50), (51, OPEN)];
const EI_ROWS: &[Band] = &[(0, 1), (2, 2), (3, OPEN)];
const EI_COLS: &[Band] = &[(1, 4), (5, 15), (16, OPEN)];
const OUT_ROWS: &[Band] = &[(0, 1), (2, 3), (4, OPEN)];
const OUT_COLS: &[Band] = &[(1, 5), (6, 19), (20, OPEN)];

pub fn standard_tables() -> Vec<Printed<Complexity>> {
    let grid = || vec![vec![Some(L), Some(L), Some(A)], vec![Some(L), Some(A), Some(H)], vec![Some(A), Some(H), Some(H)]];
    vec![
        Printed { kind: Ilf, rows: DATA_ROWS, cols: DATA_COLS, cells: grid() },
        Printed { kind: Eif, rows: DATA_ROWS, cols: DATA_COLS, cells: grid() },
        Printed { kind: Ei, rows: EI_ROWS, cols: EI_COLS, cells: grid() },
        Printed { kind: Eo, rows: OUT_ROWS, cols: OUT_COLS, cells: grid() },
        Printed { kind: Eq, rows: OUT_ROWS, cols: OUT_COLS, cells: grid() },
    ]
}

const EXT_DATA_ROWS: &[Band] = &[(1, 1), (2, 2), (3, 3), (4, 4), (5, 5), (6, OPEN)];
const EXT_DATA_COLS: &[Band] = &[(1, 3), (4, 6), (7, 9), (10, 14), (15, 19), (20, 50), (51, OPEN)];
const EXT_IN_ROWS: &[Band] = &[(0, 1), (2, 2), (3, OPEN)];
const EXT_IN_COLS: &[Band] = &[(1, 2), (3, 4), (5, 6), (7, 8), (9, 11), (12, 15), (16, OPEN)];
const EXT_EO_ROWS: &[Band] = &[(0, 1), (2, 2), (3, 3), (4, OPEN)];
const EXT_EO_COLS: &[Band] = &[
    (1, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 12), (13, 15), (16, 19), (20, OPEN),
];

/// Parses a printed row; `-` is a blank cell, `0,5` style decimals allowed.
fn cells(rows: &[&str]) -> Vec<Vec<Option<f64>>> {
    rows.iter()
        .map(|r| {
            r.split_whitespace()
                .map(|c| (c != "-").then(|| c.replace(',', ".").parse().unwrap()))
                .collect()
        })
        .collect()
}

pub fn extended_tables() -> Vec<Printed<f64>> {
    vec![
        Printed {
            kind: Ilf,
            rows: EXT_DATA_ROWS,
            cols: EXT_DATA_COLS,
            cells: cells(&[
                "1 1 2 3 5 7 10",
                "1 2 3 5 7 10 15",
                "2 3 5 7 7 - -",
                "3 5 7 7 7 - -",
                "5 7 7 7 7 - -",
                "10 - - - - 15 15",
            ]),
        },
        Printed {
            kind: Eif,
            rows: EXT_DATA_ROWS,
            cols: EXT_DATA_COLS,
            cells: cells(&[
                "1 1 2 3 4 5 7",
                "1 2 3 4 5 7 10",
                "2 3 4 5 5 - -",
                "3 4 5 5 5 - -",
                "4 5 5 5 5 - -",
                "7 - - - - 10 10",
            ]),
        },
        Printed {
            kind: Ei,
            rows: EXT_IN_ROWS,
            cols: EXT_IN_COLS,
            cells: cells(&[
                "0,5 1 1,5 2 2,5 3 4",
                "2 3 4 - - - 6",
                "4 - 6 - - - 6",
            ]),
        },
        Printed {
            kind: Eo,
            rows: EXT_EO_ROWS,
            cols: EXT_EO_COLS,
            cells: cells(&[
                "0,5 1 1,5 2 2,5 3 3,5 4 5",
                "1 1,5 2 - - - - - -",
                "1,5 2 4 5 - - - - 7",
                "5 - - 7 - - - - 7",
            ]),
        },
        Printed {
            kind: Eq,
            rows: EXT_IN_ROWS,
            cols: EXT_IN_COLS,
            cells: cells(&[
                "0,5 1 1,5 2 2,5 3 4",
                "2 3 4 - - - 6",
                "4 - 6 - - - 6",
            ]),
        },
    ]
}

pub const WEIGHTS: [(FunctionKind, [f64; 3]); 5] = [
    (Ilf, [7.0, 10.0, 15.0]),
    (Eif, [5.0, 7.0, 10.0]),
    (Ei, [3.0, 4.0, 6.0]),
    (Eo, [4.0, 5.0, 7.0]),
    (Eq, [3.0, 4.0, 6.0]),
];

pub fn band_lowers(bands: &[Band]) -> Vec<u32> {
    bands.iter().map(|b| b.0).collect()
}

pub fn band_uppers(bands: &[Band]) -> Vec<u32> {
    bands.iter().map(|b| b.1).collect()
}

/// Second implementation: nested thresholds written straight from the
/// printed tables, with blank cells resolved by hand.
pub mod rule_chain {
    use super::*;

    fn rating_points(kind: FunctionKind, r: usize) -> f64 {
        let row = WEIGHTS.iter().find(|(k, _)| *k == kind).unwrap().1;
        row[r]
    }

    pub fn standard(kind: FunctionKind, s: u32, d: u32) -> f64 {
        // 0 = Low, 1 = Average, 2 = High
        let r = match kind {
            Ilf | Eif => {
                if s == 1 {
                    if d <= 50 { 0 } else { 1 }
                } else if s <= 5 {
                    if d <= 19 { 0 } else if d <= 50 { 1 } else { 2 }
                } else if d <= 19 {
                    1
                } else {
                    2
                }
            }
            Ei => {
                if s <= 1 {
                    if d <= 15 { 0 } else { 1 }
                } else if s == 2 {
                    if d <= 4 { 0 } else if d <= 15 { 1 } else { 2 }
                } else if d <= 4 {
                    1
                } else {
                    2
                }
            }
            Eo | Eq => {
                if s <= 1 {
                    if d <= 19 { 0 } else { 1 }
                } else if s <= 3 {
                    if d <= 5 { 0 } else if d <= 19 { 1 } else { 2 }
                } else if d <= 5 {
                    1
                } else {
                    2
                }
            }
        };
        rating_points(kind, r)
    }

    fn low_col(d: u32) -> usize {
        if d <= 3 {
            0
        } else if d <= 6 {
            1
        } else if d <= 9 {
            2
        } else if d <= 14 {
            3
        } else {
            4
        }
    }

    pub fn extended(kind: FunctionKind, s: u32, d: u32) -> f64 {
        match kind {
            Ilf => {
                if d >= 20 {
                    let wide = d >= 51;
                    match s {
                        1 => if wide { 10.0 } else { 7.0 },
                        2..=5 => if wide { 15.0 } else { 10.0 },
                        _ => 15.0,
                    }
                } else if s >= 6 {
                    10.0
                } else {
                    const LOW: [[f64; 5]; 5] = [
                        [1.0, 1.0, 2.0, 3.0, 5.0],
                        [1.0, 2.0, 3.0, 5.0, 7.0],
                        [2.0, 3.0, 5.0, 7.0, 7.0],
                        [3.0, 5.0, 7.0, 7.0, 7.0],
                        [5.0, 7.0, 7.0, 7.0, 7.0],
                    ];
                    LOW[(s - 1) as usize][low_col(d)]
                }
            }
            Eif => {
                if d >= 20 {
                    let wide = d >= 51;
                    match s {
                        1 => if wide { 7.0 } else { 5.0 },
                        2..=5 => if wide { 10.0 } else { 7.0 },
                        _ => 10.0,
                    }
                } else if s >= 6 {
                    7.0
                } else {
                    const LOW: [[f64; 5]; 5] = [
                        [1.0, 1.0, 2.0, 3.0, 4.0],
                        [1.0, 2.0, 3.0, 4.0, 5.0],
                        [2.0, 3.0, 4.0, 5.0, 5.0],
                        [3.0, 4.0, 5.0, 5.0, 5.0],
                        [4.0, 5.0, 5.0, 5.0, 5.0],
                    ];
                    LOW[(s - 1) as usize][low_col(d)]
                }
            }
            Ei | Eq => {
                if s <= 1 {
                    if d <= 2 {
                        0.5
                    } else if d <= 4 {
                        1.0
                    } else if d <= 6 {
                        1.5
                    } else if d <= 8 {
                        2.0
                    } else if d <= 11 {
                        2.5
                    } else if d <= 15 {
                        3.0
                    } else {
                        4.0
                    }
                } else if s == 2 {
                    if d <= 2 {
                        2.0
                    } else if d <= 4 {
                        3.0
                    } else if d <= 15 {
                        4.0
                    } else {
                        6.0
                    }
                } else if d <= 4 {
                    4.0
                } else {
                    6.0
                }
            }
            Eo => {
                if s <= 1 {
                    match d {
                        1 => 0.5,
                        2..=3 => 1.0,
                        4..=5 => 1.5,
                        6..=7 => 2.0,
                        8..=9 => 2.5,
                        10..=12 => 3.0,
                        13..=15 => 3.5,
                        16..=19 => 4.0,
                        _ => 5.0,
                    }
                } else if s == 2 {
                    match d {
                        1 => 1.0,
                        2..=3 => 1.5,
                        4..=5 => 2.0,
                        6..=19 => 5.0,
                        _ => 7.0,
                    }
                } else if s == 3 {
                    match d {
                        1 => 1.5,
                        2..=3 => 2.0,
                        4..=5 => 4.0,
                        6..=19 => 5.0,
                        _ => 7.0,
                    }
                } else if d <= 5 {
                    5.0
                } else {
                    7.0
                }
            }
        }
    }
}

pub fn grid() -> impl Iterator<Item = (FunctionKind, u32, u32)> {
    FunctionKind::ALL.into_iter().flat_map(|k| {
        (k.min_structural()..=MAX_STRUCTURAL).flat_map(move |s| (1..=MAX_DET).map(move |d| (k, s, d)))
    })
}

/// Assertions made and the mismatches among them.
#[derive(Debug, Default)]
pub struct Tally {
    pub cells: usize,
    pub mismatches: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.mismatches.push(what());
        }
    }
}

/// Band edges and every lattice point of each printed rating cell.
pub fn check_standard_ratings() -> Tally {
    let mut t = Tally::default();
    for table in standard_tables() {
        let m = standard_complexity_matrix(table.kind);
        t.check(m.structural_upper == band_uppers(table.rows).as_slice(), || format!("{} row bands", table.kind));
        t.check(m.det_upper == band_uppers(table.cols).as_slice(), || format!("{} column bands", table.kind));
        t.check(m.structural_lower() == band_lowers(table.rows), || format!("{} row lowers", table.kind));
        t.check(m.det_lower() == band_lowers(table.cols), || format!("{} column lowers", table.kind));
        for (ri, row) in table.rows.iter().enumerate() {
            for (ci, col) in table.cols.iter().enumerate() {
                let want = table.cells[ri][ci].unwrap();
                t.cells += 1;
                for (s, d) in points_in(*row, *col) {
                    if s < table.kind.min_structural() {
                        continue;
                    }
                    let got = classify_standard(table.kind, s, d).unwrap();
                    t.check(got == want, || format!("{} s={s} d={d}: {got:?} vs {want:?}", table.kind));
                }
            }
        }
    }
    t
}

pub fn check_standard_weights() -> Tally {
    let mut t = Tally::default();
    for (kind, row) in WEIGHTS {
        for (rating, want) in Complexity::ALL.into_iter().zip(row) {
            t.cells += 1;
            let got = weight_standard(kind, rating).value();
            t.check(got == want, || format!("{kind} {rating:?}: {got} vs {want}"));
        }
    }
    t
}

/// Printed (non-blank) extended cells; blanks are counted separately.
pub fn check_extended_printed() -> Tally {
    let mut t = Tally::default();
    for table in extended_tables() {
        let m = extended_weight_matrix(table.kind);
        t.check(m.structural_upper == band_uppers(table.rows).as_slice(), || format!("{} row bands", table.kind));
        t.check(m.det_upper == band_uppers(table.cols).as_slice(), || format!("{} column bands", table.kind));
        for (ri, row) in table.rows.iter().enumerate() {
            for (ci, col) in table.cols.iter().enumerate() {
                let Some(want) = table.cells[ri][ci] else { continue };
                t.cells += 1;
                for (s, d) in points_in(*row, *col) {
                    let got = weight_extended(table.kind, s, d).unwrap().value();
                    t.check(got == want, || format!("{} s={s} d={d}: {got} vs {want}", table.kind));
                }
            }
        }
    }
    t
}

/// Blank cells take the standard value of their region; the EQ grid, whose
/// rows do not line up with the standard EQ rows, takes the EI values.
pub fn check_extended_blanks() -> Tally {
    let mut t = Tally::default();
    for table in extended_tables() {
        let reference = if table.kind == Eq { Ei } else { table.kind };
        for (ri, row) in table.rows.iter().enumerate() {
            for (ci, col) in table.cols.iter().enumerate() {
                if table.cells[ri][ci].is_some() {
                    continue;
                }
                t.cells += 1;
                for (s, d) in points_in(*row, *col) {
                    let want = unit_points(Method::Fp41, reference, s, d).unwrap();
                    let got = weight_extended(table.kind, s, d).unwrap();
                    t.check(got == want, || format!("{} s={s} d={d}: {got} vs {want}", table.kind));
                }
            }
        }
    }
    t
}

/// Both methods against the rule chain at every grid point.
pub fn check_rule_chain() -> Tally {
    let mut t = Tally::default();
    for (kind, s, d) in grid() {
        for method in Method::ALL {
            t.cells += 1;
            let got = unit_points(method, kind, s, d).unwrap().value();
            let want = match method {
                Method::Fp41 => rule_chain::standard(kind, s, d),
                Method::Efp41 => rule_chain::extended(kind, s, d),
            };
            t.check(got == want, || format!("{method} {kind} s={s} d={d}: {got} vs {want}"));
        }
    }
    t
}
