//! Rater-merged count tables: `project,fp41,efp41`.

use std::collections::BTreeSet;
use std::io::Read;

use fpa_core::fixtures::MergedCount;
use fpa_core::ProjectId;

use crate::error::{CliError, Result};

pub const HEADER: [&str; 3] = ["project", "fp41", "efp41"];

#[derive(Debug, Clone, PartialEq)]
pub struct MergedRow {
    pub project_id: ProjectId,
    pub fp41: f64,
    pub efp41: f64,
}

impl From<&MergedCount> for MergedRow {
    fn from(m: &MergedCount) -> Self {
        MergedRow {
            project_id: m.project_id(),
            fp41: m.fp41(),
            efp41: m.efp41(),
        }
    }
}

fn data_error(source: &str, line: u64, field: &'static str, message: impl ToString) -> CliError {
    CliError::Data {
        file: source.to_string(),
        line,
        field,
        message: message.to_string(),
    }
}

/// Reads a merged table, returned sorted by project id.
pub fn read_fp_table<R: Read>(reader: R, source: &str) -> Result<Vec<MergedRow>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(reader);
    let mut records = rdr.records();
    let to_err = |e: csv::Error| {
        let line = e.position().map_or(0, |p| p.line());
        data_error(source, line, "row", e)
    };

    let header = match records.next() {
        Some(r) => r.map_err(to_err)?,
        None => return Err(data_error(source, 1, "header", "missing header line")),
    };
    let header: Vec<String> = header.iter().map(str::to_ascii_lowercase).collect();
    if header != HEADER {
        return Err(data_error(
            source,
            1,
            "header",
            format!("expected `{}`, found `{}`", HEADER.join(","), header.join(",")),
        ));
    }

    let mut seen = BTreeSet::new();
    let mut rows = Vec::new();
    for record in records {
        let record = record.map_err(to_err)?;
        let line = record.position().map_or(0, |p| p.line());
        if record.iter().all(str::is_empty) {
            continue;
        }
        if record.len() != HEADER.len() {
            return Err(data_error(
                source,
                line,
                "row",
                format!("expected {} fields, found {}", HEADER.len(), record.len()),
            ));
        }
        let project = ProjectId::new(&record[0]);
        if project.as_str().is_empty() {
            return Err(data_error(source, line, "project", "empty project id"));
        }
        if !seen.insert(project.clone()) {
            return Err(data_error(source, line, "project", format!("duplicate project `{project}`")));
        }
        let value = |idx: usize, field: &'static str| -> Result<f64> {
            let raw = &record[idx];
            match raw.parse::<f64>() {
                Ok(v) if v.is_finite() && v >= 0.0 => Ok(v),
                _ => Err(data_error(source, line, field, format!("`{raw}` is not a non-negative number"))),
            }
        };
        rows.push(MergedRow {
            project_id: project,
            fp41: value(1, "fp41")?,
            efp41: value(2, "efp41")?,
        });
    }
    rows.sort_by(|a, b| a.project_id.cmp(&b.project_id));
    Ok(rows)
}
