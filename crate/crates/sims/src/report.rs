//! Flat renderings of simulation results.

use crate::harness::SimResult;

/// Quote a CSV field when it contains a delimiter, quote, or newline.
fn csv_field(raw: &str) -> String {
    if raw.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}

/// One row per (design, method, level) cell.
///
/// Lengths are in natural parameter units (not the scaled presentation some
/// summaries use); floats print in shortest round-trip form, so the output
/// is byte-stable for identical results.
pub fn results_to_csv(results: &[SimResult]) -> String {
    let mut out = String::from(
        "design,method,level,coverage_pct,coverage_se_pct,mean_length,failed,replications,seed\n",
    );
    for result in results {
        for cell in &result.cells {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                csv_field(&result.design),
                cell.method.label(),
                cell.level,
                cell.coverage_pct,
                cell.coverage_se_pct,
                cell.mean_length,
                cell.failed,
                result.replications,
                result.seed,
            ));
        }
    }
    out
}

/// The full result set as a pretty-printed JSON array.
pub fn results_to_json(results: &[SimResult]) -> serde_json::Result<String> {
    serde_json::to_string_pretty(results)
}
