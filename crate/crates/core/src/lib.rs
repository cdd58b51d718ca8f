//! Functional size measurement under IFPUG 4.1 and its extended variant.
//!
//! * [`counting`] rates and weights functions under both methods.
//! * [`granularity`] separates granular from non-granular functions.
//! * [`sensitivity`] simulates perturbed inventories to build static
//!   calibration and sensitivity curves.
//! * [`stats`] tests whether the two methods give different counts.

pub mod counting;
pub mod error;
pub mod fixtures;
pub mod granularity;
pub mod model;
pub mod sensitivity;
pub mod stats;

pub use counting::{
    classify_standard, item_points, measure, project_points, weight_extended, weight_standard,
    Complexity, Method,
};
pub use error::{Error, Result};
pub use model::{
    fp_add, fp_mean, FunctionKind, FunctionPoints, InventoryItem, ProjectCorpus, ProjectId,
    RaterMeasurement,
};
