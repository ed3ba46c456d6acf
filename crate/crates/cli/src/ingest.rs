//! CSV ingestion.
//!
//! The accepted dialect is deliberately small: UTF-8, comma-separated,
//! `.` decimal point, no quoting, header `group,v1[,v2,...]`. Rows carry a
//! group label followed by one value per header column; the file may contain
//! one or two distinct groups.

use std::path::Path;

use crate::errors::{CliError, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct GroupData {
    pub label: String,
    pub rows: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DataFile {
    /// One or two groups, in order of first appearance.
    pub groups: Vec<GroupData>,
    /// Number of value columns.
    pub dim: usize,
}

pub fn ingest_csv(path: &Path) -> Result<DataFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Data(format!("cannot read {}: {e}", path.display())))?;
    parse_csv(&text, &path.display().to_string())
}

fn parse_csv(text: &str, origin: &str) -> Result<DataFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim_end_matches('\r')))
        .filter(|(_, line)| !line.trim().is_empty());

    let (_, header) = lines
        .next()
        .ok_or_else(|| CliError::Data(format!("{origin}: file is empty")))?;
    let header_fields: Vec<&str> = header.split(',').map(str::trim).collect();
    if header_fields.first() != Some(&"group") {
        return Err(CliError::Data(format!(
            "{origin}:1: header must start with 'group' (got '{header}')"
        )));
    }
    let dim = header_fields.len() - 1;
    if dim == 0 {
        return Err(CliError::Data(format!(
            "{origin}:1: header needs at least one value column after 'group'"
        )));
    }

    let mut groups: Vec<GroupData> = Vec::new();
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != dim + 1 {
            return Err(CliError::Data(format!(
                "{origin}:{line_no}: expected {} fields, found {}",
                dim + 1,
                fields.len()
            )));
        }
        let label = fields[0];
        if label.is_empty() {
            return Err(CliError::Data(format!("{origin}:{line_no}: empty group label")));
        }
        let mut row = Vec::with_capacity(dim);
        for (col, field) in fields[1..].iter().enumerate() {
            let value: f64 = field.parse().map_err(|_| {
                CliError::Data(format!(
                    "{origin}:{line_no}: column '{}' has unparseable value '{field}'",
                    header_fields[col + 1]
                ))
            })?;
            if !value.is_finite() {
                return Err(CliError::Data(format!(
                    "{origin}:{line_no}: column '{}' has non-finite value '{field}'",
                    header_fields[col + 1]
                )));
            }
            row.push(value);
        }
        match groups.iter_mut().find(|g| g.label == label) {
            Some(group) => group.rows.push(row),
            None => {
                if groups.len() == 2 {
                    return Err(CliError::Data(format!(
                        "{origin}:{line_no}: third group '{label}' found; at most two are allowed"
                    )));
                }
                groups.push(GroupData { label: label.to_string(), rows: vec![row] });
            }
        }
    }

    if groups.is_empty() {
        return Err(CliError::Data(format!("{origin}: no data rows")));
    }
    Ok(DataFile { groups, dim })
}
