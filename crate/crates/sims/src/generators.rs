//! Data-generating processes for the simulation designs.

use ajel::{Error, Result};
use rand::Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

/// A univariate sampling distribution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GeneratorSpec {
    /// Chi-squared with one degree of freedom, drawn as the square of a
    /// standard normal variate.
    ChiSquared1,
    /// Exponential with the given rate (mean 1/rate), drawn by inverse CDF:
    /// -ln(u)/rate with u uniform on (0, 1].
    Exponential { rate: f64 },
    Normal { mean: f64, sd: f64 },
    /// Point mass; exists to exercise the degenerate (zero-spread) paths.
    Constant { value: f64 },
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            GeneratorSpec::ChiSquared1 => Ok(()),
            GeneratorSpec::Exponential { rate } => {
                if rate.is_finite() && rate > 0.0 {
                    Ok(())
                } else {
                    Err(Error::InvalidParameter {
                        name: "rate",
                        value: rate,
                        requirement: "finite and > 0",
                    })
                }
            }
            GeneratorSpec::Normal { mean, sd } => {
                if !mean.is_finite() {
                    return Err(Error::InvalidParameter {
                        name: "mean",
                        value: mean,
                        requirement: "finite",
                    });
                }
                if sd.is_finite() && sd > 0.0 {
                    Ok(())
                } else {
                    Err(Error::InvalidParameter {
                        name: "sd",
                        value: sd,
                        requirement: "finite and > 0",
                    })
                }
            }
            GeneratorSpec::Constant { value } => {
                if value.is_finite() {
                    Ok(())
                } else {
                    Err(Error::InvalidParameter {
                        name: "value",
                        value,
                        requirement: "finite",
                    })
                }
            }
        }
    }

    pub fn label(&self) -> String {
        match *self {
            GeneratorSpec::ChiSquared1 => "chi2(1)".to_string(),
            GeneratorSpec::Exponential { rate } => format!("exp(rate={rate})"),
            GeneratorSpec::Normal { mean, sd } => format!("normal({mean},{sd})"),
            GeneratorSpec::Constant { value } => format!("constant({value})"),
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match *self {
            GeneratorSpec::ChiSquared1 => {
                let z: f64 = rng.sample(StandardNormal);
                z * z
            }
            GeneratorSpec::Exponential { rate } => {
                // gen::<f64>() is uniform on [0, 1), so 1 - u lies in (0, 1]
                // and the logarithm never overflows.
                let u = 1.0 - rng.gen::<f64>();
                -u.ln() / rate
            }
            GeneratorSpec::Normal { mean, sd } => {
                let z: f64 = rng.sample(StandardNormal);
                mean + sd * z
            }
            GeneratorSpec::Constant { value } => value,
        }
    }

    pub fn fill<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> Vec<f64> {
        (0..n).map(|_| self.sample(rng)).collect()
    }
}
