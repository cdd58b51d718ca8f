//! Text and CSV renderings for each command. Every function here is pure:
//! the same inputs always give the same bytes.

use std::fmt::Write as _;

use fpa_core::granularity::{breakdowns, GranularityBreakdown, KindCounts};
use fpa_core::sensitivity::curves;
use fpa_core::stats::{
    descriptives, merged_differences, paired_differences, rater_anova, test_differences,
    AnovaResult, DescriptiveStats, DifferenceTests, PairedDifference, ALPHA,
};
use fpa_core::{project_points, Error as CoreError, FunctionKind, Method, ProjectCorpus, ProjectId};

use crate::error::Result;
use crate::fp_table::MergedRow;

/// Which methods a count report covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodSelection {
    Fp41,
    Efp41,
    Both,
}

impl MethodSelection {
    pub fn methods(self) -> &'static [Method] {
        match self {
            MethodSelection::Fp41 => &[Method::Fp41],
            MethodSelection::Efp41 => &[Method::Efp41],
            MethodSelection::Both => &Method::ALL,
        }
    }
}

/// Per-project counts, one column per method, sorted by project id.
#[derive(Debug, Clone, PartialEq)]
pub struct CountTable {
    pub methods: Vec<Method>,
    pub rows: Vec<(ProjectId, Vec<f64>)>,
}

impl CountTable {
    pub fn from_corpus(corpus: &ProjectCorpus, selection: MethodSelection) -> Result<Self> {
        let methods = selection.methods().to_vec();
        let rows = corpus
            .project_ids()
            .map(|id| {
                let values = methods
                    .iter()
                    .map(|&m| project_points(m, corpus, id))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok((id.clone(), values))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CountTable { methods, rows })
    }

    pub fn from_merged(rows: &[MergedRow], selection: MethodSelection) -> Self {
        let methods = selection.methods().to_vec();
        let rows = rows
            .iter()
            .map(|r| {
                let values = methods
                    .iter()
                    .map(|m| match m {
                        Method::Fp41 => r.fp41,
                        Method::Efp41 => r.efp41,
                    })
                    .collect();
                (r.project_id.clone(), values)
            })
            .collect();
        CountTable { methods, rows }
    }

    pub fn column(&self, method: Method) -> Option<Vec<f64>> {
        let idx = self.methods.iter().position(|&m| m == method)?;
        Some(self.rows.iter().map(|(_, v)| v[idx]).collect())
    }

    /// Summary per method; empty when there are no projects.
    pub fn summary(&self) -> Result<Vec<(Method, DescriptiveStats)>> {
        if self.rows.is_empty() {
            return Ok(Vec::new());
        }
        self.methods
            .iter()
            .map(|&m| Ok((m, descriptives(&self.column(m).expect("method is present"))?)))
            .collect()
    }

    pub fn render(&self) -> Result<String> {
        let mut out = String::from("project");
        for m in &self.methods {
            write!(out, ",{}", m.key()).unwrap();
        }
        out.push('\n');
        for (id, values) in &self.rows {
            out.push_str(id.as_str());
            for v in values {
                write!(out, ",{v:.2}").unwrap();
            }
            out.push('\n');
        }
        let summary = self.summary()?;
        if !summary.is_empty() {
            out.push_str("\nmethod,n,min,max,mean,std\n");
            for (m, s) in summary {
                let std = s.std.map_or_else(|| "NA".to_string(), |v| format!("{v:.4}"));
                writeln!(out, "{},{},{:.2},{:.2},{:.4},{}", m.key(), s.n, s.min, s.max, s.mean, std).unwrap();
            }
        }
        Ok(out)
    }
}

fn kind_key(kind: FunctionKind) -> String {
    kind.as_str().to_ascii_lowercase()
}

fn push_breakdown_row(out: &mut String, label: &str, b: &GranularityBreakdown) {
    out.push_str(label);
    for c in &b.per_kind {
        write!(out, ",{:.2},{:.2}", c.granular, c.non_granular).unwrap();
    }
    match b.display_percent() {
        Some(p) => writeln!(out, ",{p}").unwrap(),
        None => out.push_str(",NA\n"),
    }
}

/// Sum of all project rows, reported as the `all` row.
pub fn corpus_breakdown(rows: &[GranularityBreakdown]) -> GranularityBreakdown {
    let mut per_kind = [KindCounts::default(); 5];
    for b in rows {
        for (acc, c) in per_kind.iter_mut().zip(&b.per_kind) {
            acc.granular += c.granular;
            acc.non_granular += c.non_granular;
        }
    }
    GranularityBreakdown {
        project_id: ProjectId::new("all"),
        per_kind,
    }
}

/// Per project and kind, rater-mean granular and non-granular counts plus
/// the integer granular percent.
pub fn granularity_report(corpus: &ProjectCorpus) -> Result<String> {
    let rows = breakdowns(corpus)?;
    let mut out = String::from("project");
    for kind in FunctionKind::ALL {
        let k = kind_key(kind);
        write!(out, ",{k}_granular,{k}_non_granular").unwrap();
    }
    out.push_str(",granular_percent\n");
    for b in &rows {
        push_breakdown_row(&mut out, b.project_id.as_str(), b);
    }
    if !rows.is_empty() {
        push_breakdown_row(&mut out, "all", &corpus_breakdown(&rows));
    }
    Ok(out)
}

pub const SENSITIVITY_HEADER: &str = "k,increase_fp41,sens_fp41,increase_efp41,sens_efp41";

/// Curves for both methods at one RET/FTR increment, as CSV.
pub fn sensitivity_csv(corpus: &ProjectCorpus, ret_ftr: u32) -> Result<String> {
    let std = curves(Method::Fp41, corpus, ret_ftr)?;
    let ext = curves(Method::Efp41, corpus, ret_ftr)?;
    let mut out = format!("{SENSITIVITY_HEADER}\n");
    for (a, b) in std.iter().zip(&ext) {
        writeln!(
            out,
            "{},{:.2},{:.2},{:.2},{:.2}",
            a.spec.det(),
            a.mean_increase,
            a.sensitivity,
            b.mean_increase,
            b.sensitivity
        )
        .unwrap();
    }
    Ok(out)
}

/// Everything `compare` computes, before rendering.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    /// Per-method rater ANOVA; `None` for rater-merged input.
    pub anova: Option<Vec<(Method, std::result::Result<AnovaResult, CoreError>)>>,
    pub differences: Vec<PairedDifference>,
    /// `None` when `d_ab` has no spread.
    pub tests: Option<DifferenceTests>,
}

impl Comparison {
    pub fn from_corpus(corpus: &ProjectCorpus) -> Result<Self> {
        let differences = paired_differences(corpus, Method::Fp41, Method::Efp41)?;
        let anova = Method::ALL.iter().map(|&m| (m, rater_anova(corpus, m))).collect();
        Self::finish(Some(anova), differences)
    }

    pub fn from_merged(rows: &[MergedRow]) -> Result<Self> {
        let differences = merged_differences(rows.iter().map(|r| (&r.project_id, r.fp41, r.efp41)));
        Self::finish(None, differences)
    }

    fn finish(
        anova: Option<Vec<(Method, std::result::Result<AnovaResult, CoreError>)>>,
        differences: Vec<PairedDifference>,
    ) -> Result<Self> {
        let tests = match test_differences(&differences) {
            Ok(t) => Some(t),
            Err(CoreError::ZeroVariance) => None,
            Err(e) => return Err(e.into()),
        };
        Ok(Comparison {
            anova,
            differences,
            tests,
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("Step 1. Rater influence: one-way ANOVA of inter-rater differences by rater pair\n");
        match &self.anova {
            None => out.push_str("  skipped: input is rater-merged\n"),
            Some(results) => {
                writeln!(
                    out,
                    "{:<8}{:<16}{:>16}{:>6}{:>14}{:>10}{:>10}",
                    "Method", "Source", "Sum of Squares", "df", "Mean Square", "F", "Sig."
                )
                .unwrap();
                for (m, r) in results {
                    match r {
                        Ok(a) => render_anova(&mut out, *m, a),
                        Err(e) => writeln!(out, "{:<8}skipped: {e}", m.to_string()).unwrap(),
                    }
                }
            }
        }

        out.push_str("\nStep 2. d_ab = mean over both raters of (FP4.1 - EFP4.1)\n");
        out.push_str("project,d1,d2,d_ab\n");
        for d in &self.differences {
            writeln!(out, "{},{:.2},{:.2},{:.2}", d.project_id, d.d1, d.d2, d.d_ab).unwrap();
        }

        let Some(tests) = &self.tests else {
            out.push_str("\nnotice: d_ab has zero variance; normality and t tests skipped\n");
            return out;
        };
        let ks = &tests.ks;
        out.push_str("\nStep 3a. One-sample Kolmogorov-Smirnov test (normal, estimated parameters)\n");
        writeln!(
            out,
            "{:<6}{:>4}{:>10}{:>16}{:>10}{:>10}{:>10}{:>8}{:>8}",
            "Var", "N", "Mean", "Std. Deviation", "Absolute", "Positive", "Negative", "K-S Z", "Sig."
        )
        .unwrap();
        writeln!(
            out,
            "{:<6}{:>4}{:>10.4}{:>16.4}{:>10.3}{:>10.3}{:>10.3}{:>8.3}{:>8.3}",
            "d_ab", ks.n, ks.est_mean, ks.est_std, ks.d, ks.d_plus, ks.d_minus, ks.z, ks.p
        )
        .unwrap();

        let t = &tests.ttest;
        out.push_str("\nStep 3b. One-sample t-test (test value = 0)\n");
        writeln!(
            out,
            "{:<6}{:>10}{:>6}{:>10}{:>12}{:>12}{:>12}",
            "Var", "t", "df", "Sig.", "Mean Diff.", "95% Lower", "95% Upper"
        )
        .unwrap();
        writeln!(
            out,
            "{:<6}{:>10.3}{:>6}{:>10.3}{:>12.4}{:>12.4}{:>12.4}",
            "d_ab", t.t, t.df, t.p, t.mean, t.ci_lower, t.ci_upper
        )
        .unwrap();

        out.push('\n');
        out.push_str(&verdict(tests));
        out.push('\n');
        out
    }
}

fn render_anova(out: &mut String, method: Method, a: &AnovaResult) {
    let label = method.to_string();
    writeln!(
        out,
        "{:<8}{:<16}{:>16.4}{:>6}{:>14.4}{:>10.3}{:>10.3}",
        label, "Between Groups", a.ss_between, a.df_between, a.ms_between, a.f, a.p
    )
    .unwrap();
    writeln!(
        out,
        "{:<8}{:<16}{:>16.4}{:>6}{:>14.4}",
        "", "Within Groups", a.ss_within, a.df_within, a.ms_within
    )
    .unwrap();
    writeln!(out, "{:<8}{:<16}{:>16.4}{:>6}", "", "Total", a.ss_total, a.df_total).unwrap();
}

/// One line quoting both decisions at the 0.05 level.
pub fn verdict(tests: &DifferenceTests) -> String {
    let normal = if tests.normality_accepted() {
        format!("K-S p = {:.3} > {ALPHA}: d_ab is compatible with a normal distribution", tests.ks.p)
    } else {
        format!(
            "K-S p = {:.3} <= {ALPHA}: normality of d_ab rejected, t-test reported regardless",
            tests.ks.p
        )
    };
    let differ = if tests.methods_differ() {
        format!("t-test p = {:.3} < {ALPHA}: FP4.1 and EFP4.1 differ significantly", tests.ttest.p)
    } else {
        format!("t-test p = {:.3} >= {ALPHA}: no significant difference between FP4.1 and EFP4.1", tests.ttest.p)
    };
    format!("Verdict: {normal}; {differ}.")
}

/// The embedded merged table as `project,fp41,efp41` CSV.
pub fn fixture_csv(rows: &[MergedRow]) -> String {
    let mut out = String::from("project,fp41,efp41\n");
    for r in rows {
        writeln!(out, "{},{:.2},{:.2}", r.project_id, r.fp41, r.efp41).unwrap();
    }
    out
}
