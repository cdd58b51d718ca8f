//! Corpus files: `project,rater,kind,ret_ftr,det,count`, one inventory row
//! per line. Rows for the same project and rater accumulate into one
//! inventory, in file order.

use std::io::{Read, Write};

use fpa_core::{Error as CoreError, FunctionKind, InventoryItem, ProjectCorpus};

use crate::error::{CliError, Result};

pub const HEADER: [&str; 6] = ["project", "rater", "kind", "ret_ftr", "det", "count"];

fn data_error(source: &str, line: u64, field: &'static str, message: impl ToString) -> CliError {
    CliError::Data {
        file: source.to_string(),
        line,
        field,
        message: message.to_string(),
    }
}

fn parse_count(source: &str, line: u64, field: &'static str, raw: &str) -> Result<u32> {
    raw.parse::<u32>()
        .map_err(|_| data_error(source, line, field, format!("`{raw}` is not a non-negative integer")))
}

/// Reads a corpus. `source` names the input in error messages.
pub fn read_corpus<R: Read>(reader: R, source: &str) -> Result<ProjectCorpus> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(reader);
    let mut records = rdr.records();

    let header = match records.next() {
        Some(r) => r.map_err(|e| csv_error(source, e))?,
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

    let mut corpus = ProjectCorpus::new();
    for record in records {
        let record = record.map_err(|e| csv_error(source, e))?;
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
        let project = &record[0];
        let rater = &record[1];
        if project.is_empty() {
            return Err(data_error(source, line, "project", "empty project id"));
        }
        if rater.is_empty() {
            return Err(data_error(source, line, "rater", "empty rater id"));
        }
        let kind: FunctionKind = record[2]
            .parse()
            .map_err(|e| data_error(source, line, "kind", e))?;
        let structural = parse_count(source, line, "ret_ftr", &record[3])?;
        let det = parse_count(source, line, "det", &record[4])?;
        let count = parse_count(source, line, "count", &record[5])?;
        let item = InventoryItem::new(kind, structural, det, count).map_err(|e| {
            let field = match e {
                CoreError::MissingRet { .. } => "ret_ftr",
                CoreError::ZeroDet => "det",
                _ => "count",
            };
            data_error(source, line, field, e)
        })?;
        corpus
            .push_item(project, rater, item)
            .map_err(|e| data_error(source, line, "rater", e))?;
    }
    Ok(corpus)
}

fn csv_error(source: &str, e: csv::Error) -> CliError {
    let line = e.position().map_or(0, |p| p.line());
    data_error(source, line, "row", e)
}

/// Writes a corpus, kinds upper-case, LF line endings.
pub fn write_corpus<W: Write>(corpus: &ProjectCorpus, writer: W) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(writer);
    w.write_record(HEADER)?;
    for m in corpus.measurements() {
        for item in &m.items {
            w.write_record([
                m.project_id.as_str(),
                m.rater_id.as_str(),
                item.kind().as_str(),
                &item.structural().to_string(),
                &item.det().to_string(),
                &item.multiplicity().to_string(),
            ])?;
        }
    }
    w.flush()
}

pub fn corpus_to_string(corpus: &ProjectCorpus) -> String {
    let mut buf = Vec::new();
    write_corpus(corpus, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("corpus ids are UTF-8")
}
