//! Confidence intervals and tests calibrated by the χ²₁ limit.
//!
//! The -2 log-ratio statistic W(θ) is asymptotically χ²₁ under the null, so
//! a level-p confidence region is {θ : W(θ) ≤ q} with q the χ²₁ p-quantile.
//! W is zero at the point estimate and grows monotonically on each side, so
//! the region is an interval and each endpoint is found by expanding a
//! bracket geometrically away from U_n until W ≥ q (treating +∞ past the
//! convex hull as ≥ q), then bisecting on that predicate.
//!
//! One caveat for the adjusted method at very small n: W_AJEL has a finite
//! supremum (the adjustment point caps how degenerate the weights can get),
//! and when the requested quantile exceeds it the confidence region is the
//! whole real line. The endpoint search then reports the expansion-cap
//! error rather than inventing an endpoint.

use serde::Serialize;

use crate::dist::{chi2_df1_cdf, chi2_df1_quantile};
use crate::el::{ajel_statistic, default_a_n, jel_statistic};
use crate::error::{Error, Result};
use crate::ustat::PseudoValueSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Jel,
    Ajel,
}

impl Method {
    pub fn label(&self) -> &'static str {
        match self {
            Method::Jel => "JEL",
            Method::Ajel => "AJEL",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Search bookkeeping attached to an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct IntervalDiagnostics {
    /// All pseudo-values identical: the interval collapses to the point
    /// estimate and the EL machinery was never invoked.
    pub degenerate: bool,
    /// The statistic was still +∞ on the outer side when bisection
    /// terminated, i.e. the endpoint sits at the hull boundary itself.
    pub lower_hull_edge: bool,
    pub upper_hull_edge: bool,
    /// Geometric bracket expansions, summed over both sides.
    pub expansions: usize,
    /// Bisection steps, summed over both sides.
    pub bisections: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfidenceInterval {
    pub lower: f64,
    pub upper: f64,
    pub level: f64,
    pub method: Method,
    pub point_estimate: f64,
    /// Adjustment level actually applied; None for the plain method.
    pub a_n: Option<f64>,
    pub diagnostics: IntervalDiagnostics,
}

impl ConfidenceInterval {
    pub fn length(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn contains(&self, theta: f64) -> bool {
        self.lower <= theta && theta <= self.upper
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TestResult {
    /// W(θ₀); +∞ when θ₀ is outside the hull (plain method only).
    pub statistic: f64,
    /// 1 - F_{χ²₁}(W); exactly 0 for an infinite statistic.
    pub p_value: f64,
    pub theta0: f64,
    pub method: Method,
    pub a_n: Option<f64>,
}

/// Invert the likelihood-ratio test into a two-sided confidence interval.
pub fn confidence_interval(
    pv: &PseudoValueSet,
    level: f64,
    method: Method,
    a_n: Option<f64>,
) -> Result<ConfidenceInterval> {
    if !(level > 0.0 && level < 1.0) {
        return Err(Error::InvalidParameter {
            name: "level",
            value: level,
            requirement: "0 < level < 1",
        });
    }
    let applied_a_n = resolve_a_n(pv, method, a_n);
    let u = pv.u_stat();
    let spread = pv.spread();

    if spread == 0.0 {
        return Ok(ConfidenceInterval {
            lower: u,
            upper: u,
            level,
            method,
            point_estimate: u,
            a_n: applied_a_n,
            diagnostics: IntervalDiagnostics {
                degenerate: true,
                ..IntervalDiagnostics::default()
            },
        });
    }

    let q = chi2_df1_quantile(level)?;
    let statistic = |theta: f64| -> Result<f64> {
        let sol = match method {
            Method::Jel => jel_statistic(pv, theta)?,
            Method::Ajel => ajel_statistic(pv, theta, applied_a_n.unwrap())?,
        };
        Ok(sol.statistic)
    };

    let n = pv.len() as f64;
    let step0 = (pv.sd() / n.sqrt()).max(1e-8 * (1.0 + u.abs()));
    let tol = 1e-8 * (1.0 + spread);

    let lower = search_endpoint(&statistic, u, q, step0, tol, -1.0, "lower")?;
    let upper = search_endpoint(&statistic, u, q, step0, tol, 1.0, "upper")?;

    Ok(ConfidenceInterval {
        lower: lower.theta,
        upper: upper.theta,
        level,
        method,
        point_estimate: u,
        a_n: applied_a_n,
        diagnostics: IntervalDiagnostics {
            degenerate: false,
            lower_hull_edge: lower.hull_edge,
            upper_hull_edge: upper.hull_edge,
            expansions: lower.expansions + upper.expansions,
            bisections: lower.bisections + upper.bisections,
        },
    })
}

/// Likelihood-ratio test of θ = θ₀.
pub fn test_theta(
    pv: &PseudoValueSet,
    theta0: f64,
    method: Method,
    a_n: Option<f64>,
) -> Result<TestResult> {
    let applied_a_n = resolve_a_n(pv, method, a_n);
    let sol = match method {
        Method::Jel => jel_statistic(pv, theta0)?,
        Method::Ajel => ajel_statistic(pv, theta0, applied_a_n.unwrap())?,
    };
    let p_value = 1.0 - chi2_df1_cdf(sol.statistic)?;
    Ok(TestResult {
        statistic: sol.statistic,
        p_value,
        theta0,
        method,
        a_n: applied_a_n,
    })
}

fn resolve_a_n(pv: &PseudoValueSet, method: Method, a_n: Option<f64>) -> Option<f64> {
    match method {
        Method::Jel => None,
        Method::Ajel => Some(a_n.unwrap_or_else(|| default_a_n(pv.len()))),
    }
}

struct Endpoint {
    theta: f64,
    hull_edge: bool,
    expansions: usize,
    bisections: usize,
}

/// Walk outward from the point estimate in direction `dir` until the
/// statistic reaches q, then bisect on the predicate W ≥ q. The returned
/// θ is the innermost point of the final bracket, so W(θ) < q and the
/// point estimate stays inside the interval by construction.
fn search_endpoint(
    statistic: &impl Fn(f64) -> Result<f64>,
    u: f64,
    q: f64,
    step0: f64,
    tol: f64,
    dir: f64,
    side: &'static str,
) -> Result<Endpoint> {
    const EXPANSION_CAP: usize = 200;

    let mut inner = u;
    let mut step = step0;
    let mut expansions = 0;
    let (mut outer, mut outer_w);
    loop {
        let probe = u + dir * step;
        let w = statistic(probe)?;
        if w >= q {
            outer = probe;
            outer_w = w;
            break;
        }
        inner = probe;
        expansions += 1;
        if expansions >= EXPANSION_CAP {
            return Err(Error::ExpansionCap {
                side,
                cap: EXPANSION_CAP,
            });
        }
        step *= 2.0;
    }

    let mut bisections = 0;
    while (outer - inner).abs() > tol {
        let mid = 0.5 * (inner + outer);
        if mid == inner || mid == outer {
            break; // bracket narrower than one ulp
        }
        let w = statistic(mid)?;
        if w >= q {
            outer = mid;
            outer_w = w;
        } else {
            inner = mid;
        }
        bisections += 1;
    }

    Ok(Endpoint {
        theta: inner,
        hull_edge: outer_w.is_infinite(),
        expansions,
        bisections,
    })
}
