//! Domain types shared by the counting, granularity, sensitivity and
//! statistics modules.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The five IFPUG function types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FunctionKind {
    Ilf,
    Eif,
    Ei,
    Eo,
    Eq,
}

impl FunctionKind {
    pub const ALL: [FunctionKind; 5] = [Self::Ilf, Self::Eif, Self::Ei, Self::Eo, Self::Eq];

    /// ILF and EIF are rated by RETs; the transactional kinds by FTRs.
    pub fn is_data(self) -> bool {
        matches!(self, Self::Ilf | Self::Eif)
    }

    pub fn is_transactional(self) -> bool {
        !self.is_data()
    }

    /// Smallest RET/FTR count the weight tables accept for this kind.
    pub fn min_structural(self) -> u32 {
        if self.is_data() {
            1
        } else {
            0
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Ilf => "ILF",
            Self::Eif => "EIF",
            Self::Ei => "EI",
            Self::Eo => "EO",
            Self::Eq => "EQ",
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for FunctionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parse error for [`FunctionKind`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown function kind `{0}` (expected ILF, EIF, EI, EO or EQ)")]
pub struct ParseKindError(pub String);

impl FromStr for FunctionKind {
    type Err = ParseKindError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let trimmed = s.trim();
        FunctionKind::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(trimmed))
            .ok_or_else(|| ParseKindError(trimmed.to_string()))
    }
}

/// An unadjusted function-point quantity held as an integer number of
/// half points, so sums and differences of counts are exact.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FunctionPoints(u64);

impl FunctionPoints {
    pub const ZERO: FunctionPoints = FunctionPoints(0);

    pub const fn from_half_units(half_units: u64) -> Self {
        FunctionPoints(half_units)
    }

    pub const fn whole(points: u64) -> Self {
        FunctionPoints(points * 2)
    }

    pub const fn half_units(self) -> u64 {
        self.0
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn checked_add(self, other: FunctionPoints) -> Result<FunctionPoints> {
        self.0
            .checked_add(other.0)
            .map(FunctionPoints)
            .ok_or(Error::Overflow)
    }

    pub fn checked_mul(self, factor: u32) -> Result<FunctionPoints> {
        self.0
            .checked_mul(u64::from(factor))
            .map(FunctionPoints)
            .ok_or(Error::Overflow)
    }

    /// Signed difference `self - other` in half units.
    pub fn diff_half_units(self, other: FunctionPoints) -> i128 {
        i128::from(self.0) - i128::from(other.0)
    }
}

/// Exact addition; fails only when the half-unit range overflows.
pub fn fp_add(a: FunctionPoints, b: FunctionPoints) -> Result<FunctionPoints> {
    a.checked_add(b)
}

/// Arithmetic mean of a non-empty list of counts.
pub fn fp_mean(values: &[FunctionPoints]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyAggregate);
    }
    let total: u128 = values.iter().map(|v| u128::from(v.0)).sum();
    Ok(total as f64 / 2.0 / values.len() as f64)
}

impl fmt::Display for FunctionPoints {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let whole = self.0 / 2;
        if self.0.is_multiple_of(2) {
            write!(f, "{whole}.00")
        } else {
            write!(f, "{whole}.50")
        }
    }
}

impl Sum for FunctionPoints {
    /// Panics on overflow; use [`fp_add`] when the inputs are untrusted.
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(FunctionPoints::ZERO, |acc, x| {
            acc.checked_add(x).expect("function point overflow")
        })
    }
}

/// One counted function, or `multiplicity` identical ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InventoryItem {
    kind: FunctionKind,
    structural: u32,
    det: u32,
    multiplicity: u32,
}

impl InventoryItem {
    /// `structural` is the RET count for data kinds and the FTR count for
    /// transactional kinds.
    pub fn new(kind: FunctionKind, structural: u32, det: u32, multiplicity: u32) -> Result<Self> {
        if structural < kind.min_structural() {
            return Err(Error::MissingRet { kind, structural });
        }
        if det == 0 {
            return Err(Error::ZeroDet);
        }
        if multiplicity == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        Ok(InventoryItem {
            kind,
            structural,
            det,
            multiplicity,
        })
    }

    /// Shorthand for a single function.
    pub fn single(kind: FunctionKind, structural: u32, det: u32) -> Result<Self> {
        Self::new(kind, structural, det, 1)
    }

    pub fn kind(&self) -> FunctionKind {
        self.kind
    }

    pub fn structural(&self) -> u32 {
        self.structural
    }

    pub fn det(&self) -> u32 {
        self.det
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// Same function with RET/FTR and DET counts raised. Increments can only
    /// keep an item valid, so no check is needed.
    pub fn incremented(&self, structural: u32, det: u32) -> Self {
        InventoryItem {
            structural: self.structural + structural,
            det: self.det + det,
            ..*self
        }
    }

    pub fn with_multiplicity(&self, multiplicity: u32) -> Result<Self> {
        Self::new(self.kind, self.structural, self.det, multiplicity)
    }
}

/// Project identifier. Ordered numerically when both ids are integers,
/// lexically otherwise, so `2` sorts before `10`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectId(String);

impl ProjectId {
    pub fn new(id: impl Into<String>) -> Self {
        ProjectId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn numeric(&self) -> Option<u128> {
        if self.0.is_empty() || !self.0.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        self.0.parse().ok()
    }
}

impl Ord for ProjectId {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.numeric(), other.numeric()) {
            (Some(a), Some(b)) => a.cmp(&b).then_with(|| self.0.cmp(&other.0)),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => self.0.cmp(&other.0),
        }
    }
}

impl PartialOrd for ProjectId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ProjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for ProjectId {
    fn from(s: &str) -> Self {
        ProjectId::new(s)
    }
}

impl From<String> for ProjectId {
    fn from(s: String) -> Self {
        ProjectId(s)
    }
}

/// One rater's inventory for one project.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaterMeasurement {
    pub project_id: ProjectId,
    pub rater_id: String,
    pub items: Vec<InventoryItem>,
}

impl RaterMeasurement {
    pub fn new(
        project_id: impl Into<ProjectId>,
        rater_id: impl Into<String>,
        items: Vec<InventoryItem>,
    ) -> Self {
        RaterMeasurement {
            project_id: project_id.into(),
            rater_id: rater_id.into(),
            items,
        }
    }
}

/// Projects keyed by id, each measured by one or two raters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProjectCorpus {
    projects: BTreeMap<ProjectId, Vec<RaterMeasurement>>,
}

impl ProjectCorpus {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a measurement. A measurement for a rater already present in the
    /// project is merged into that rater's inventory.
    pub fn insert(&mut self, measurement: RaterMeasurement) -> Result<()> {
        let raters = self
            .projects
            .entry(measurement.project_id.clone())
            .or_default();
        if let Some(existing) = raters
            .iter_mut()
            .find(|m| m.rater_id == measurement.rater_id)
        {
            existing.items.extend(measurement.items);
            return Ok(());
        }
        if raters.len() >= 2 {
            return Err(Error::TooManyRaters {
                project: measurement.project_id.to_string(),
                rater: measurement.rater_id,
            });
        }
        raters.push(measurement);
        Ok(())
    }

    /// Appends one item to a project/rater inventory, creating either if needed.
    pub fn push_item(
        &mut self,
        project_id: impl Into<ProjectId>,
        rater_id: &str,
        item: InventoryItem,
    ) -> Result<()> {
        self.insert(RaterMeasurement::new(project_id, rater_id, vec![item]))
    }

    pub fn len(&self) -> usize {
        self.projects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.projects.is_empty()
    }

    pub fn project_ids(&self) -> impl Iterator<Item = &ProjectId> {
        self.projects.keys()
    }

    /// Projects in id order with their rater measurements.
    pub fn projects(&self) -> impl Iterator<Item = (&ProjectId, &[RaterMeasurement])> {
        self.projects.iter().map(|(id, m)| (id, m.as_slice()))
    }

    pub fn raters(&self, project_id: &ProjectId) -> Result<&[RaterMeasurement]> {
        self.projects
            .get(project_id)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::UnknownProject(project_id.to_string()))
    }

    /// All measurements in project order, raters in insertion order.
    pub fn measurements(&self) -> impl Iterator<Item = &RaterMeasurement> {
        self.projects.values().flatten()
    }

    pub(crate) fn map_measurements<F>(&self, mut f: F) -> ProjectCorpus
    where
        F: FnMut(&RaterMeasurement) -> RaterMeasurement,
    {
        ProjectCorpus {
            projects: self
                .projects
                .iter()
                .map(|(id, ms)| (id.clone(), ms.iter().map(&mut f).collect()))
                .collect(),
        }
    }
}
