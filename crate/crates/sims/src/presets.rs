//! The two canned coverage studies.

use crate::generators::GeneratorSpec;
use crate::harness::{DesignSpec, ExperimentSpec};
use crate::seeding::substream_seed;

/// E[X F(X)] for X ~ chi-squared(1): exactly 1/2 + 1/pi.
pub const THETA_PWM_CHI2: f64 = 0.8183098861837907;

/// P(Y > X) for X ~ Exp(1), Y ~ Exp(1/9): rate_x / (rate_x + rate_y).
pub const THETA_AUC_EXP: f64 = 0.9;

/// Probability-weighted-moment study: pwm kernel on chi-squared(1) data,
/// n in {20, 30, 50}, both methods at 90% and 95%.
pub fn table1(master_seed: u64, replications: usize) -> Vec<ExperimentSpec> {
    [20usize, 30, 50]
        .iter()
        .enumerate()
        .map(|(i, &n)| {
            ExperimentSpec::new(
                format!("pwm-chi2-n{n}"),
                DesignSpec::OneSample { n, generator: GeneratorSpec::ChiSquared1 },
                "pwm",
                THETA_PWM_CHI2,
                // Disjoint stream indices keep the three designs (and the
                // second study below) on unrelated substreams of the master.
                substream_seed(master_seed, i as u64),
            )
            .with_replications(replications)
        })
        .collect()
}

/// ROC-area study: auc kernel on Exp(1) vs Exp(1/9) data,
/// (n_x, n_y) in {(10,10), (15,15), (35,30)}, both methods at 90% and 95%.
pub fn table2(master_seed: u64, replications: usize) -> Vec<ExperimentSpec> {
    [(10usize, 10usize), (15, 15), (35, 30)]
        .iter()
        .enumerate()
        .map(|(i, &(n_x, n_y))| {
            ExperimentSpec::new(
                format!("auc-exp-{n_x}-{n_y}"),
                DesignSpec::TwoSample {
                    n_x,
                    generator_x: GeneratorSpec::Exponential { rate: 1.0 },
                    n_y,
                    generator_y: GeneratorSpec::Exponential { rate: 1.0 / 9.0 },
                },
                "auc",
                THETA_AUC_EXP,
                substream_seed(master_seed, 16 + i as u64),
            )
            .with_replications(replications)
        })
        .collect()
}
