use thiserror::Error;

use crate::model::FunctionKind;

/// Errors raised by the counting, simulation and statistics routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{kind} requires at least one RET (got {structural})")]
    MissingRet { kind: FunctionKind, structural: u32 },

    #[error("DET count must be at least 1")]
    ZeroDet,

    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,

    #[error("project {project}, rater {rater}, item {index}: {source}")]
    InvalidItem {
        project: String,
        rater: String,
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("function point total exceeds the representable range")]
    Overflow,

    #[error("cannot aggregate an empty set of values")]
    EmptyAggregate,

    #[error("unknown project `{0}`")]
    UnknownProject(String),

    #[error("project `{project}` already has two raters; cannot add `{rater}`")]
    TooManyRaters { project: String, rater: String },

    #[error("project `{project}` has {found} rater(s); exactly two are required")]
    RaterCount { project: String, found: usize },

    #[error("corpus contains no projects")]
    EmptyCorpus,

    #[error("perturbation out of range: RET/FTR increment {ret_ftr} (0 or 1), DET increment {det} (1..=9)")]
    PerturbationRange { ret_ftr: u32, det: u32 },

    #[error("sample needs at least {needed} values, got {got}")]
    SampleTooSmall { needed: usize, got: usize },

    #[error("sample has zero variance")]
    ZeroVariance,

    #[error("degenerate grouping: {0}")]
    DegenerateGroups(&'static str),

    #[error("parameter out of domain: {0}")]
    Domain(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
