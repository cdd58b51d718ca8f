//! Granular vs non-granular functions and per-project breakdowns.
//!
//! A function is granular when its RET/FTR and DET counts fall in the
//! low-count region where the standard method assigns the same weight to
//! functions of visibly different size. All bounds are inclusive.

use crate::error::{Error, Result};
use crate::model::{FunctionKind, InventoryItem, ProjectCorpus, ProjectId};

pub fn is_granular_counts(kind: FunctionKind, structural: u32, det: u32) -> bool {
    match kind {
        FunctionKind::Ilf | FunctionKind::Eif => structural <= 5 && det <= 19,
        FunctionKind::Ei => (structural <= 1 && det <= 15) || (structural == 2 && det <= 4),
        FunctionKind::Eo | FunctionKind::Eq => {
            (structural <= 1 && det <= 19) || (structural <= 3 && det <= 5)
        }
    }
}

pub fn is_granular(item: &InventoryItem) -> bool {
    is_granular_counts(item.kind(), item.structural(), item.det())
}

/// Rater-mean function counts for one kind.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct KindCounts {
    pub granular: f64,
    pub non_granular: f64,
}

impl KindCounts {
    pub fn total(&self) -> f64 {
        self.granular + self.non_granular
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GranularityBreakdown {
    pub project_id: ProjectId,
    /// Indexed in [`FunctionKind::ALL`] order.
    pub per_kind: [KindCounts; 5],
}

impl GranularityBreakdown {
    pub fn kind(&self, kind: FunctionKind) -> KindCounts {
        self.per_kind[kind.index()]
    }

    pub fn granular_total(&self) -> f64 {
        self.per_kind.iter().map(|c| c.granular).sum()
    }

    pub fn total(&self) -> f64 {
        self.per_kind.iter().map(KindCounts::total).sum()
    }

    /// Share of granular functions in percent; `None` for a project with no
    /// functions.
    pub fn percent(&self) -> Option<f64> {
        percent_of(self.granular_total(), self.total())
    }

    /// [`percent`](Self::percent) rounded half-up to an integer.
    pub fn display_percent(&self) -> Option<u32> {
        self.percent().map(round_half_up)
    }
}

fn percent_of(part: f64, whole: f64) -> Option<f64> {
    (whole > 0.0).then(|| 100.0 * part / whole)
}

pub(crate) fn round_half_up(x: f64) -> u32 {
    // counts are multiples of 1/2 so the ratio is well away from f64 noise,
    // but nudge by a relative epsilon so exact .5 ties always go up
    (x + 0.5 + x.abs() * 1e-12).floor() as u32
}

pub fn breakdown(corpus: &ProjectCorpus, project_id: &ProjectId) -> Result<GranularityBreakdown> {
    let raters = corpus.raters(project_id)?;
    if raters.is_empty() {
        return Err(Error::EmptyAggregate);
    }
    let mut sums = [[0u64; 2]; 5];
    for item in raters.iter().flat_map(|m| m.items.iter()) {
        let slot = if is_granular(item) { 0 } else { 1 };
        sums[item.kind().index()][slot] += u64::from(item.multiplicity());
    }
    let n = raters.len() as f64;
    let per_kind = sums.map(|[g, ng]| KindCounts {
        granular: g as f64 / n,
        non_granular: ng as f64 / n,
    });
    Ok(GranularityBreakdown {
        project_id: project_id.clone(),
        per_kind,
    })
}

/// Breakdowns for every project, in project order.
pub fn breakdowns(corpus: &ProjectCorpus) -> Result<Vec<GranularityBreakdown>> {
    corpus.project_ids().map(|id| breakdown(corpus, id)).collect()
}

/// Corpus-wide granular share over the rater-mean counts of all projects.
pub fn corpus_percent(breakdowns: &[GranularityBreakdown]) -> Option<f64> {
    let granular: f64 = breakdowns.iter().map(GranularityBreakdown::granular_total).sum();
    let total: f64 = breakdowns.iter().map(GranularityBreakdown::total).sum();
    percent_of(granular, total)
}
