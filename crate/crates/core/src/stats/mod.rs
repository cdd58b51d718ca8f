//! Method-comparison statistics.
//!
//! The pipeline: check that raters do not influence the counts (one-way
//! ANOVA), remove rater influence by averaging each project's per-rater
//! method differences into `d_ab`, test `d_ab` for normality
//! (Kolmogorov-Smirnov with estimated parameters), then test its mean
//! against zero (one-sample t).

pub mod special;

use std::collections::BTreeMap;

use crate::counting::{measure, Method};
use crate::error::{Error, Result};
use crate::model::{ProjectCorpus, ProjectId};

pub use special::{f_sf, kolmogorov_q, normal_cdf, t_cdf, t_quantile};

/// Significance level used for every decision in the pipeline.
pub const ALPHA: f64 = 0.05;

#[derive(Debug, Clone, PartialEq)]
pub struct PairedDifference {
    pub project_id: ProjectId,
    /// First rater, method A minus method B.
    pub d1: f64,
    /// Second rater.
    pub d2: f64,
    pub d_ab: f64,
}

impl PairedDifference {
    pub fn new(project_id: ProjectId, d1: f64, d2: f64) -> Self {
        PairedDifference {
            project_id,
            d1,
            d2,
            d_ab: (d1 + d2) / 2.0,
        }
    }
}

/// `d_ab` per project, in project order. Every project needs exactly two
/// raters.
pub fn paired_differences(corpus: &ProjectCorpus, a: Method, b: Method) -> Result<Vec<PairedDifference>> {
    corpus
        .projects()
        .map(|(id, raters)| {
            let [first, second] = raters else {
                return Err(Error::RaterCount {
                    project: id.to_string(),
                    found: raters.len(),
                });
            };
            let diff = |m| -> Result<f64> {
                let da = measure(a, m)?;
                let db = measure(b, m)?;
                Ok(da.diff_half_units(db) as f64 / 2.0)
            };
            Ok(PairedDifference::new(id.clone(), diff(first)?, diff(second)?))
        })
        .collect()
}

/// `d_ab` from rater-merged counts: each merged value stands in for both
/// raters, so `d1 = d2 = a - b`.
pub fn merged_differences<'a, I>(rows: I) -> Vec<PairedDifference>
where
    I: IntoIterator<Item = (&'a ProjectId, f64, f64)>,
{
    rows.into_iter()
        .map(|(id, a, b)| PairedDifference::new(id.clone(), a - b, a - b))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DescriptiveStats {
    pub n: usize,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    /// Sample standard deviation (n - 1 divisor); `None` when n = 1.
    pub std: Option<f64>,
}

pub fn descriptives(sample: &[f64]) -> Result<DescriptiveStats> {
    if sample.is_empty() {
        return Err(Error::SampleTooSmall { needed: 1, got: 0 });
    }
    let n = sample.len();
    let mean = mean(sample);
    let min = sample.iter().copied().fold(f64::INFINITY, f64::min);
    let max = sample.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let std = (n > 1).then(|| (sum_sq_dev(sample, mean) / (n - 1) as f64).sqrt());
    Ok(DescriptiveStats {
        n,
        min,
        max,
        mean: mean.clamp(min, max),
        std,
    })
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

fn sum_sq_dev(xs: &[f64], mean: f64) -> f64 {
    xs.iter().map(|x| (x - mean).powi(2)).sum()
}

fn sample_std(xs: &[f64]) -> f64 {
    (sum_sq_dev(xs, mean(xs)) / (xs.len() - 1) as f64).sqrt()
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnovaResult {
    pub ss_between: f64,
    pub ss_within: f64,
    pub ss_total: f64,
    pub df_between: usize,
    pub df_within: usize,
    pub df_total: usize,
    pub ms_between: f64,
    pub ms_within: f64,
    pub f: f64,
    pub p: f64,
}

/// One-way ANOVA over labelled groups.
///
/// With zero within-group variance the F ratio is infinite (p = 0) when the
/// group means differ, and 0 (p = 1) when they do not.
pub fn one_way_anova<L>(groups: &[(L, Vec<f64>)]) -> Result<AnovaResult> {
    if groups.len() < 2 {
        return Err(Error::DegenerateGroups("at least two groups are required"));
    }
    if groups.iter().any(|(_, g)| g.is_empty()) {
        return Err(Error::DegenerateGroups("every group needs at least one value"));
    }
    let n: usize = groups.iter().map(|(_, g)| g.len()).sum();
    let k = groups.len();
    if n <= k {
        return Err(Error::DegenerateGroups("total size must exceed the number of groups"));
    }
    let all: Vec<f64> = groups.iter().flat_map(|(_, g)| g.iter().copied()).collect();
    let grand = mean(&all);
    let mut ss_between = 0.0;
    let mut ss_within = 0.0;
    for (_, g) in groups {
        let m = mean(g);
        ss_between += g.len() as f64 * (m - grand).powi(2);
        ss_within += sum_sq_dev(g, m);
    }
    let ss_total = sum_sq_dev(&all, grand);
    let df_between = k - 1;
    let df_within = n - k;
    let ms_between = ss_between / df_between as f64;
    let ms_within = ss_within / df_within as f64;
    // relative to the data scale, anything this small is rounding noise
    let noise = 1e-12 * ss_total.max(f64::MIN_POSITIVE);
    let f = if ss_within <= noise {
        if ss_between <= noise {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        ms_between / ms_within
    };
    let p = special::f_sf(f, df_between as f64, df_within as f64)?;
    Ok(AnovaResult {
        ss_between,
        ss_within,
        ss_total,
        df_between,
        df_within,
        df_total: n - 1,
        ms_between,
        ms_within,
        f,
        p,
    })
}

/// Rater-influence ANOVA for one method: the dependent variable is each
/// project's inter-rater difference (second rater minus first, raters
/// ordered by id), grouped by rater pair.
pub fn rater_anova(corpus: &ProjectCorpus, method: Method) -> Result<AnovaResult> {
    let mut groups: BTreeMap<(String, String), Vec<f64>> = BTreeMap::new();
    for (id, raters) in corpus.projects() {
        let [a, b] = raters else {
            return Err(Error::RaterCount {
                project: id.to_string(),
                found: raters.len(),
            });
        };
        let (first, second) = if a.rater_id <= b.rater_id { (a, b) } else { (b, a) };
        let diff = measure(method, second)?.diff_half_units(measure(method, first)?) as f64 / 2.0;
        groups
            .entry((first.rater_id.clone(), second.rater_id.clone()))
            .or_default()
            .push(diff);
    }
    let groups: Vec<(String, Vec<f64>)> = groups
        .into_iter()
        .map(|((a, b), v)| (format!("{a}-{b}"), v))
        .collect();
    one_way_anova(&groups)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KsResult {
    pub n: usize,
    pub est_mean: f64,
    pub est_std: f64,
    /// Largest `F_n(x) - F(x)`.
    pub d_plus: f64,
    /// Most negative `F_n(x-) - F(x)`; reported with its sign.
    pub d_minus: f64,
    pub d: f64,
    pub z: f64,
    pub p: f64,
}

/// One-sample Kolmogorov-Smirnov test against a normal distribution whose
/// mean and standard deviation are estimated from the sample. The p-value
/// is the asymptotic Kolmogorov tail at `z = sqrt(n) d`, without a
/// small-sample or estimated-parameter correction.
pub fn ks_normality(sample: &[f64]) -> Result<KsResult> {
    let n = sample.len();
    if n < 3 {
        return Err(Error::SampleTooSmall { needed: 3, got: n });
    }
    let est_mean = mean(sample);
    let est_std = sample_std(sample);
    if est_std.is_nan() || est_std <= 0.0 {
        return Err(Error::ZeroVariance);
    }
    let mut sorted = sample.to_vec();
    sorted.sort_by(f64::total_cmp);
    let nf = n as f64;
    let mut d_plus = f64::NEG_INFINITY;
    let mut d_minus = f64::INFINITY;
    for (i, x) in sorted.iter().enumerate() {
        let cdf = special::normal_cdf((x - est_mean) / est_std);
        d_plus = d_plus.max((i + 1) as f64 / nf - cdf);
        d_minus = d_minus.min(i as f64 / nf - cdf);
    }
    let d = d_plus.max(-d_minus);
    let z = nf.sqrt() * d;
    Ok(KsResult {
        n,
        est_mean,
        est_std,
        d_plus,
        d_minus,
        d,
        z,
        p: special::kolmogorov_q(z)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TTestResult {
    pub n: usize,
    pub mean: f64,
    pub std: f64,
    pub t: f64,
    pub df: usize,
    /// Two-tailed.
    pub p: f64,
    pub ci_lower: f64,
    pub ci_upper: f64,
}

/// Confidence level of the reported interval.
pub const CONFIDENCE: f64 = 0.95;

pub fn one_sample_t(sample: &[f64], mu0: f64) -> Result<TTestResult> {
    let n = sample.len();
    if n < 2 {
        return Err(Error::SampleTooSmall { needed: 2, got: n });
    }
    let m = mean(sample);
    let std = sample_std(sample);
    if std.is_nan() || std <= 0.0 {
        return Err(Error::ZeroVariance);
    }
    let se = std / (n as f64).sqrt();
    let t = (m - mu0) / se;
    let df = n - 1;
    let p = special::t_two_sided_p(t, df as f64)?;
    let q = special::t_quantile(0.5 + CONFIDENCE / 2.0, df as f64)?;
    Ok(TTestResult {
        n,
        mean: m,
        std,
        t,
        df,
        p,
        ci_lower: m - q * se,
        ci_upper: m + q * se,
    })
}

/// Normality check followed by the t-test of `d_ab` against zero.
#[derive(Debug, Clone, PartialEq)]
pub struct DifferenceTests {
    pub ks: KsResult,
    pub ttest: TTestResult,
}

impl DifferenceTests {
    /// `d_ab` is taken as normal when the K-S p-value exceeds [`ALPHA`].
    pub fn normality_accepted(&self) -> bool {
        self.ks.p > ALPHA
    }

    /// The methods differ when the t-test p-value is below [`ALPHA`].
    pub fn methods_differ(&self) -> bool {
        self.ttest.p < ALPHA
    }
}

pub fn test_differences(diffs: &[PairedDifference]) -> Result<DifferenceTests> {
    let sample: Vec<f64> = diffs.iter().map(|d| d.d_ab).collect();
    Ok(DifferenceTests {
        ks: ks_normality(&sample)?,
        ttest: one_sample_t(&sample, 0.0)?,
    })
}
