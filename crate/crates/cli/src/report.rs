//! Rendering of command results.
//!
//! Every JSON document carries `schema_version` (currently 1) and a
//! `command` discriminator. Infinite likelihood-ratio statistics are
//! represented as `null` in JSON and as `inf` in CSV; all finite numbers
//! print in shortest round-trip form, so re-parsing a report reproduces
//! the computed values bit for bit.

use ajel::{ConfidenceInterval, Method, TestResult};
use ajel_sims::SimResult;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DesignEcho {
    OneSample { group: String, n: usize },
    TwoSample { x_group: String, n_x: usize, y_group: String, n_y: usize },
}

impl DesignEcho {
    fn describe(&self) -> String {
        match self {
            DesignEcho::OneSample { group, n } => format!("{group} (n={n})"),
            DesignEcho::TwoSample { x_group, n_x, y_group, n_y } => {
                format!("X={x_group} (n={n_x}) vs Y={y_group} (n={n_y})")
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IntervalRow {
    pub method: Method,
    pub level: f64,
    pub lower: f64,
    pub upper: f64,
    pub length: f64,
    pub a_n: Option<f64>,
    pub degenerate: bool,
    pub lower_hull_edge: bool,
    pub upper_hull_edge: bool,
}

impl From<&ConfidenceInterval> for IntervalRow {
    fn from(ci: &ConfidenceInterval) -> Self {
        IntervalRow {
            method: ci.method,
            level: ci.level,
            lower: ci.lower,
            upper: ci.upper,
            length: ci.length(),
            a_n: ci.a_n,
            degenerate: ci.diagnostics.degenerate,
            lower_hull_edge: ci.diagnostics.lower_hull_edge,
            upper_hull_edge: ci.diagnostics.upper_hull_edge,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CiReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub kernel: String,
    pub design: DesignEcho,
    pub point_estimate: f64,
    pub intervals: Vec<IntervalRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TestRow {
    pub method: Method,
    /// None encodes an infinite statistic (theta0 outside the hull).
    pub statistic: Option<f64>,
    pub p_value: f64,
    pub a_n: Option<f64>,
}

impl From<&TestResult> for TestRow {
    fn from(t: &TestResult) -> Self {
        TestRow {
            method: t.method,
            statistic: t.statistic.is_finite().then_some(t.statistic),
            p_value: t.p_value,
            a_n: t.a_n,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TestReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub kernel: String,
    pub design: DesignEcho,
    pub point_estimate: f64,
    pub theta0: f64,
    pub tests: Vec<TestRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SimulateReport<'a> {
    pub schema_version: u32,
    pub command: &'static str,
    pub preset: &'a str,
    pub master_seed: u64,
    pub replications: usize,
    pub results: &'a [SimResult],
}

fn fmt_opt(value: Option<f64>) -> String {
    value.map_or_else(String::new, |v| v.to_string())
}

fn flags(row: &IntervalRow) -> String {
    let mut notes = Vec::new();
    if row.degenerate {
        notes.push("degenerate");
    }
    if row.lower_hull_edge {
        notes.push("lower at hull edge");
    }
    if row.upper_hull_edge {
        notes.push("upper at hull edge");
    }
    notes.join(", ")
}

impl CiReport {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "kernel: {}\ndesign: {}\npoint estimate: {}\n\n{:<7} {:>6}  {:<22} {:>10}  {}\n",
            self.kernel,
            self.design.describe(),
            self.point_estimate,
            "method",
            "level",
            "interval",
            "length",
            "notes"
        );
        for row in &self.intervals {
            let interval = format!("({:.6}, {:.6})", row.lower, row.upper);
            let mut notes = flags(row);
            if let Some(a_n) = row.a_n {
                let prefix = if notes.is_empty() { String::new() } else { format!("{notes}; ") };
                notes = format!("{prefix}a_n={a_n:.4}");
            }
            out.push_str(&format!(
                "{:<7} {:>5}%  {:<22} {:>10.6}  {}\n",
                row.method.label(),
                100.0 * row.level,
                interval,
                row.length,
                notes
            ));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "kernel,method,level,lower,upper,length,point_estimate,a_n,degenerate,lower_hull_edge,upper_hull_edge\n",
        );
        for row in &self.intervals {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{}\n",
                self.kernel,
                row.method.label(),
                row.level,
                row.lower,
                row.upper,
                row.length,
                self.point_estimate,
                fmt_opt(row.a_n),
                row.degenerate,
                row.lower_hull_edge,
                row.upper_hull_edge,
            ));
        }
        out
    }
}

impl TestReport {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "kernel: {}\ndesign: {}\npoint estimate: {}\nH0: theta = {}\n\n{:<7} {:>14} {:>14}  {}\n",
            self.kernel,
            self.design.describe(),
            self.point_estimate,
            self.theta0,
            "method",
            "statistic",
            "p-value",
            "notes"
        );
        for row in &self.tests {
            let (stat, note) = match row.statistic {
                Some(w) => (format!("{w:.6}"), String::new()),
                None => ("inf".to_string(), "theta0 outside the pseudo-value hull".to_string()),
            };
            let note = match row.a_n {
                Some(a_n) if note.is_empty() => format!("a_n={a_n:.4}"),
                Some(a_n) => format!("{note}; a_n={a_n:.4}"),
                None => note,
            };
            out.push_str(&format!(
                "{:<7} {:>14} {:>14.6}  {}\n",
                row.method.label(),
                stat,
                row.p_value,
                note
            ));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("kernel,method,theta0,statistic,p_value,a_n\n");
        for row in &self.tests {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                self.kernel,
                row.method.label(),
                self.theta0,
                row.statistic.map_or_else(|| "inf".to_string(), |w| w.to_string()),
                row.p_value,
                fmt_opt(row.a_n),
            ));
        }
        out
    }
}

impl SimulateReport<'_> {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "preset: {} (master seed {}, {} replications per design)\n",
            self.preset, self.master_seed, self.replications
        );
        for result in self.results {
            out.push_str(&format!(
                "\n{}  [kernel {}, theta {}, rng {}, stream seed {}]\n",
                result.design, result.kernel, result.theta_true, result.rng, result.seed
            ));
            out.push_str(&format!(
                "  {:<7} {:>6} {:>10} {:>8} {:>13} {:>7}\n",
                "method", "level", "coverage%", "(se)", "mean length", "failed"
            ));
            for cell in &result.cells {
                out.push_str(&format!(
                    "  {:<7} {:>5}% {:>10.2} {:>8} {:>13.6} {:>7}\n",
                    cell.method.label(),
                    100.0 * cell.level,
                    cell.coverage_pct,
                    format!("({:.2})", cell.coverage_se_pct),
                    cell.mean_length,
                    cell.failed
                ));
            }
            if result.degenerate_replicates > 0 {
                out.push_str(&format!(
                    "  note: {} degenerate replicate(s) produced point intervals\n",
                    result.degenerate_replicates
                ));
            }
            if result.interval_order_violations > 0 || result.statistic_order_violations > 0 {
                out.push_str(&format!(
                    "  warning: ordering violations (interval {}, statistic {})\n",
                    result.interval_order_violations, result.statistic_order_violations
                ));
            }
        }
        out
    }
}

pub fn to_json<T: Serialize>(report: &T) -> String {
    // serde_json can only fail here on non-string map keys or a failing
    // Serialize impl; the report types contain neither.
    let mut text = serde_json::to_string_pretty(report).expect("report serialization");
    text.push('\n');
    text
}
