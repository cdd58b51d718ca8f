//! Static calibration and sensitivity curves by perturbation simulation.
//!
//! Every function in every inventory is perturbed together: DETs rise by
//! `k` (1..=9) and, optionally, RETs/FTRs rise by one. The functionality
//! increase is the change in unadjusted points, averaged over raters and
//! then over projects. Sensitivity is that increase divided by the input
//! increase `k + 10 r`.

use rayon::prelude::*;

use crate::counting::{measure, Method};
use crate::error::{Error, Result};
use crate::model::{ProjectCorpus, RaterMeasurement};

/// Weight of a one-step RET/FTR increment relative to a one-step DET
/// increment in the sensitivity denominator.
pub const STRUCTURAL_STEP_WEIGHT: u32 = 10;

pub const MAX_DET_INCREMENT: u32 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PerturbationSpec {
    ret_ftr: u32,
    det: u32,
}

impl PerturbationSpec {
    pub fn new(ret_ftr: u32, det: u32) -> Result<Self> {
        if ret_ftr > 1 || det == 0 || det > MAX_DET_INCREMENT {
            return Err(Error::PerturbationRange { ret_ftr, det });
        }
        Ok(PerturbationSpec { ret_ftr, det })
    }

    pub fn ret_ftr(&self) -> u32 {
        self.ret_ftr
    }

    pub fn det(&self) -> u32 {
        self.det
    }

    /// Input increase `k + 10 r`.
    pub fn input_increase(&self) -> u32 {
        self.det + STRUCTURAL_STEP_WEIGHT * self.ret_ftr
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CalibrationPoint {
    pub spec: PerturbationSpec,
    /// Mean functionality increase in unadjusted function points.
    pub mean_increase: f64,
    pub sensitivity: f64,
}

/// Copy of `m` with every item's RET/FTR count raised by `r` and its DET
/// count raised by `k`.
pub fn perturb(m: &RaterMeasurement, spec: PerturbationSpec) -> RaterMeasurement {
    perturb_by(m, spec.ret_ftr, spec.det)
}

/// Unchecked form of [`perturb`]; any non-negative increment keeps items valid.
pub fn perturb_by(m: &RaterMeasurement, ret_ftr: u32, det: u32) -> RaterMeasurement {
    RaterMeasurement {
        project_id: m.project_id.clone(),
        rater_id: m.rater_id.clone(),
        items: m.items.iter().map(|i| i.incremented(ret_ftr, det)).collect(),
    }
}

pub fn perturb_corpus(corpus: &ProjectCorpus, spec: PerturbationSpec) -> ProjectCorpus {
    corpus.map_measurements(|m| perturb(m, spec))
}

fn increase_half_units(method: Method, m: &RaterMeasurement, spec: PerturbationSpec) -> Result<i128> {
    let before = measure(method, m)?;
    let after = measure(method, &perturb(m, spec))?;
    Ok(after.diff_half_units(before))
}

/// Per-project rater-mean increases, in project order.
pub fn project_increases(
    method: Method,
    corpus: &ProjectCorpus,
    spec: PerturbationSpec,
) -> Result<Vec<f64>> {
    let projects: Vec<&[RaterMeasurement]> = corpus.projects().map(|(_, ms)| ms).collect();
    projects
        .par_iter()
        .map(|raters| {
            if raters.is_empty() {
                return Err(Error::EmptyAggregate);
            }
            let total = raters
                .iter()
                .map(|m| increase_half_units(method, m, spec))
                .sum::<Result<i128>>()?;
            Ok(total as f64 / 2.0 / raters.len() as f64)
        })
        .collect()
}

/// Mean functionality increase over the corpus: rater mean first, then the
/// unweighted mean across projects.
pub fn functionality_increase(
    method: Method,
    corpus: &ProjectCorpus,
    spec: PerturbationSpec,
) -> Result<f64> {
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let per_project = project_increases(method, corpus, spec)?;
    // sequential sum keeps the result independent of thread scheduling
    Ok(per_project.iter().sum::<f64>() / per_project.len() as f64)
}

pub fn sensitivity_value(increase: f64, spec: PerturbationSpec) -> f64 {
    increase / f64::from(spec.input_increase())
}

/// Nine calibration points, `k = 1..=9`, for one RET/FTR increment.
pub fn curves(method: Method, corpus: &ProjectCorpus, ret_ftr: u32) -> Result<Vec<CalibrationPoint>> {
    (1..=MAX_DET_INCREMENT)
        .map(|k| {
            let spec = PerturbationSpec::new(ret_ftr, k)?;
            let mean_increase = functionality_increase(method, corpus, spec)?;
            Ok(CalibrationPoint {
                spec,
                mean_increase,
                sensitivity: sensitivity_value(mean_increase, spec),
            })
        })
        .collect()
}

/// One row of a published calibration table, values in hundredths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PublishedRow {
    pub ret_ftr: u32,
    pub det: u32,
    pub increase_fp41: i64,
    pub increase_efp41: i64,
    pub sensitivity_fp41: i64,
    pub sensitivity_efp41: i64,
}

/// Whether a two-decimal sensitivity is within half a hundredth of the
/// two-decimal increase divided by the input increase. Evaluated in
/// integers so ties at exactly 0.005 are decided exactly.
pub fn rounded_sensitivity_consistent(increase_centi: i64, sensitivity_centi: i64, spec: PerturbationSpec) -> bool {
    let dx = i64::from(spec.input_increase());
    2 * (sensitivity_centi * dx - increase_centi).abs() <= dx
}
