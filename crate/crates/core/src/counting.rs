//! The two counting methods.
//!
//! IFPUG 4.1 rates each function Low/Average/High from a RET-or-FTR by DET
//! grid and converts the rating to points with a per-kind weight row. The
//! extended method replaces that with a finer grid of point values that
//! splits the low-complexity region into sub-intervals.
//!
//! Blank cells of the published extended grids are compiled in already
//! resolved: each one carries the value the standard method gives for the
//! same region. The EQ grid is published identical to the EI grid and is
//! resolved identically.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{
    FunctionKind, FunctionPoints, InventoryItem, ProjectCorpus, ProjectId, RaterMeasurement,
};

/// Standard complexity rating.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Complexity {
    Low,
    Average,
    High,
}

impl Complexity {
    pub const ALL: [Complexity; 3] = [Self::Low, Self::Average, Self::High];
}

impl fmt::Display for Complexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Low => "Low",
            Self::Average => "Average",
            Self::High => "High",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    /// IFPUG 4.1.
    Fp41,
    /// IFPUG 4.1 with the finer extended weight grids.
    Efp41,
}

impl Method {
    pub const ALL: [Method; 2] = [Method::Fp41, Method::Efp41];

    /// Lower-case identifier used on the command line and in CSV headers.
    pub fn key(self) -> &'static str {
        match self {
            Method::Fp41 => "fp41",
            Method::Efp41 => "efp41",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Fp41 => "FP4.1",
            Method::Efp41 => "EFP4.1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown method `{0}` (expected fp41 or efp41)")]
pub struct ParseMethodError(pub String);

impl FromStr for Method {
    type Err = ParseMethodError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        Method::ALL
            .into_iter()
            .find(|m| m.key().eq_ignore_ascii_case(s) || m.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| ParseMethodError(s.to_string()))
    }
}

/// Upper bound of an open-ended band.
pub const OPEN: u32 = u32::MAX;

/// A step function over (RET/FTR, DET). Bands are given by their inclusive
/// upper bounds; the last band of each axis is open.
#[derive(Debug)]
pub struct StepMatrix<T: 'static> {
    pub kind: FunctionKind,
    pub structural_upper: &'static [u32],
    pub det_upper: &'static [u32],
    /// Indexed `[structural band][det band]`.
    pub cells: &'static [&'static [T]],
}

/// Extended-method point grid for one kind.
pub type WeightMatrix = StepMatrix<FunctionPoints>;

/// Standard-method rating grid for one kind.
pub type ComplexityMatrix = StepMatrix<Complexity>;

fn band(upper: &[u32], value: u32) -> usize {
    upper
        .iter()
        .position(|&u| value <= u)
        .expect("last band is open")
}

impl<T: Copy + PartialOrd> StepMatrix<T> {
    /// Cell for a (RET/FTR, DET) pair that has already been validated.
    pub fn lookup(&self, structural: u32, det: u32) -> T {
        self.cells[band(self.structural_upper, structural)][band(self.det_upper, det)]
    }

    /// Lower bound of each structural band, starting at the kind's minimum.
    pub fn structural_lower(&self) -> Vec<u32> {
        lower_bounds(self.kind.min_structural(), self.structural_upper)
    }

    pub fn det_lower(&self) -> Vec<u32> {
        lower_bounds(1, self.det_upper)
    }

    /// True when cells never decrease along either axis.
    pub fn is_monotone(&self) -> bool {
        let rows_ok = self.cells.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .cells
            .windows(2)
            .all(|pair| pair[0].iter().zip(pair[1].iter()).all(|(a, b)| a <= b));
        rows_ok && cols_ok
    }
}

fn lower_bounds(first: u32, upper: &[u32]) -> Vec<u32> {
    std::iter::once(first)
        .chain(upper.iter().take(upper.len() - 1).map(|u| u + 1))
        .collect()
}

use Complexity::{Average as A, High as H, Low as L};

const RATING_PATTERN: &[&[Complexity]] = &[&[L, L, A], &[L, A, H], &[A, H, H]];

static DATA_COMPLEXITY: [ComplexityMatrix; 2] = [
    StepMatrix {
        kind: FunctionKind::Ilf,
        structural_upper: &[1, 5, OPEN],
        det_upper: &[19, 50, OPEN],
        cells: RATING_PATTERN,
    },
    StepMatrix {
        kind: FunctionKind::Eif,
        structural_upper: &[1, 5, OPEN],
        det_upper: &[19, 50, OPEN],
        cells: RATING_PATTERN,
    },
];

static EI_COMPLEXITY: ComplexityMatrix = StepMatrix {
    kind: FunctionKind::Ei,
    structural_upper: &[1, 2, OPEN],
    det_upper: &[4, 15, OPEN],
    cells: RATING_PATTERN,
};

static OUTPUT_COMPLEXITY: [ComplexityMatrix; 2] = [
    StepMatrix {
        kind: FunctionKind::Eo,
        structural_upper: &[1, 3, OPEN],
        det_upper: &[5, 19, OPEN],
        cells: RATING_PATTERN,
    },
    StepMatrix {
        kind: FunctionKind::Eq,
        structural_upper: &[1, 3, OPEN],
        det_upper: &[5, 19, OPEN],
        cells: RATING_PATTERN,
    },
];

/// Points per rating, indexed by kind then Low/Average/High.
const STANDARD_WEIGHTS: [[u64; 3]; 5] = [
    [7, 10, 15], // ILF
    [5, 7, 10],  // EIF
    [3, 4, 6],   // EI
    [4, 5, 7],   // EO
    [3, 4, 6],   // EQ
];

const fn fp(points: f64) -> FunctionPoints {
    FunctionPoints::from_half_units((points * 2.0) as u64)
}

macro_rules! row {
    ($($v:expr),* $(,)?) => { &[$(fp($v as f64)),*] };
}

static ILF_EXTENDED: WeightMatrix = StepMatrix {
    kind: FunctionKind::Ilf,
    structural_upper: &[1, 2, 3, 4, 5, OPEN],
    det_upper: &[3, 6, 9, 14, 19, 50, OPEN],
    cells: &[
        row![1, 1, 2, 3, 5, 7, 10],
        row![1, 2, 3, 5, 7, 10, 15],
        row![2, 3, 5, 7, 7, 10, 15],
        row![3, 5, 7, 7, 7, 10, 15],
        row![5, 7, 7, 7, 7, 10, 15],
        row![10, 10, 10, 10, 10, 15, 15],
    ],
};

static EIF_EXTENDED: WeightMatrix = StepMatrix {
    kind: FunctionKind::Eif,
    structural_upper: &[1, 2, 3, 4, 5, OPEN],
    det_upper: &[3, 6, 9, 14, 19, 50, OPEN],
    cells: &[
        row![1, 1, 2, 3, 4, 5, 7],
        row![1, 2, 3, 4, 5, 7, 10],
        row![2, 3, 4, 5, 5, 7, 10],
        row![3, 4, 5, 5, 5, 7, 10],
        row![4, 5, 5, 5, 5, 7, 10],
        row![7, 7, 7, 7, 7, 10, 10],
    ],
};

const INPUT_EXTENDED_CELLS: &[&[FunctionPoints]] = &[
    row![0.5, 1, 1.5, 2, 2.5, 3, 4],
    row![2, 3, 4, 4, 4, 4, 6],
    row![4, 4, 6, 6, 6, 6, 6],
];

static EI_EXTENDED: WeightMatrix = StepMatrix {
    kind: FunctionKind::Ei,
    structural_upper: &[1, 2, OPEN],
    det_upper: &[2, 4, 6, 8, 11, 15, OPEN],
    cells: INPUT_EXTENDED_CELLS,
};

static EO_EXTENDED: WeightMatrix = StepMatrix {
    kind: FunctionKind::Eo,
    structural_upper: &[1, 2, 3, OPEN],
    det_upper: &[1, 3, 5, 7, 9, 12, 15, 19, OPEN],
    cells: &[
        row![0.5, 1, 1.5, 2, 2.5, 3, 3.5, 4, 5],
        row![1, 1.5, 2, 5, 5, 5, 5, 5, 7],
        row![1.5, 2, 4, 5, 5, 5, 5, 5, 7],
        row![5, 5, 5, 7, 7, 7, 7, 7, 7],
    ],
};

static EQ_EXTENDED: WeightMatrix = StepMatrix {
    kind: FunctionKind::Eq,
    structural_upper: &[1, 2, OPEN],
    det_upper: &[2, 4, 6, 8, 11, 15, OPEN],
    cells: INPUT_EXTENDED_CELLS,
};

pub fn standard_complexity_matrix(kind: FunctionKind) -> &'static ComplexityMatrix {
    match kind {
        FunctionKind::Ilf => &DATA_COMPLEXITY[0],
        FunctionKind::Eif => &DATA_COMPLEXITY[1],
        FunctionKind::Ei => &EI_COMPLEXITY,
        FunctionKind::Eo => &OUTPUT_COMPLEXITY[0],
        FunctionKind::Eq => &OUTPUT_COMPLEXITY[1],
    }
}

pub fn extended_weight_matrix(kind: FunctionKind) -> &'static WeightMatrix {
    match kind {
        FunctionKind::Ilf => &ILF_EXTENDED,
        FunctionKind::Eif => &EIF_EXTENDED,
        FunctionKind::Ei => &EI_EXTENDED,
        FunctionKind::Eo => &EO_EXTENDED,
        FunctionKind::Eq => &EQ_EXTENDED,
    }
}

fn check_counts(kind: FunctionKind, structural: u32, det: u32) -> Result<()> {
    if structural < kind.min_structural() {
        return Err(Error::MissingRet { kind, structural });
    }
    if det == 0 {
        return Err(Error::ZeroDet);
    }
    Ok(())
}

pub fn classify_standard(kind: FunctionKind, structural: u32, det: u32) -> Result<Complexity> {
    check_counts(kind, structural, det)?;
    Ok(standard_complexity_matrix(kind).lookup(structural, det))
}

pub fn weight_standard(kind: FunctionKind, rating: Complexity) -> FunctionPoints {
    FunctionPoints::whole(STANDARD_WEIGHTS[kind.index()][rating as usize])
}

pub fn weight_extended(kind: FunctionKind, structural: u32, det: u32) -> Result<FunctionPoints> {
    check_counts(kind, structural, det)?;
    Ok(extended_weight_matrix(kind).lookup(structural, det))
}

/// Points for a single function under `method`.
pub fn unit_points(
    method: Method,
    kind: FunctionKind,
    structural: u32,
    det: u32,
) -> Result<FunctionPoints> {
    match method {
        Method::Fp41 => classify_standard(kind, structural, det).map(|r| weight_standard(kind, r)),
        Method::Efp41 => weight_extended(kind, structural, det),
    }
}

pub fn item_points(method: Method, item: &InventoryItem) -> Result<FunctionPoints> {
    unit_points(method, item.kind(), item.structural(), item.det())?.checked_mul(item.multiplicity())
}

/// Unadjusted function points of one rater's inventory.
pub fn measure(method: Method, measurement: &RaterMeasurement) -> Result<FunctionPoints> {
    measurement
        .items
        .iter()
        .enumerate()
        .try_fold(FunctionPoints::ZERO, |total, (index, item)| {
            let points = item_points(method, item).map_err(|source| Error::InvalidItem {
                project: measurement.project_id.to_string(),
                rater: measurement.rater_id.clone(),
                index,
                source: Box::new(source),
            })?;
            total.checked_add(points)
        })
}

/// Rater-mean function points for one project.
pub fn project_points(method: Method, corpus: &ProjectCorpus, project_id: &ProjectId) -> Result<f64> {
    let raters = corpus.raters(project_id)?;
    let counts = raters
        .iter()
        .map(|m| measure(method, m))
        .collect::<Result<Vec<_>>>()?;
    crate::model::fp_mean(&counts)
}
