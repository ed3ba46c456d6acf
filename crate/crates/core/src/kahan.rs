//! Compensated summation.
//!
//! U-statistic accumulation sums many terms of similar magnitude; Kahan
//! compensation keeps the result independent of chunking decisions, which the
//! deterministic simulation harness relies on.

/// Kahan compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let y = value - self.compensation;
        let t = self.sum + y;
        self.compensation = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// Compensated sum of a slice.
pub fn kahan_sum(values: &[f64]) -> f64 {
    let mut acc = KahanSum::new();
    for &v in values {
        acc.add(v);
    }
    acc.value()
}

/// Compensated mean of a non-empty slice.
pub fn kahan_mean(values: &[f64]) -> f64 {
    debug_assert!(!values.is_empty());
    kahan_sum(values) / values.len() as f64
}
