//! Symmetric kernels and the registry of built-in estimands.
//!
//! A kernel is the function of m observations (or m1 + m2 split across two
//! samples) whose expectation is the parameter of interest. Kernels must be
//! symmetric within each sample block; the evaluation machinery exploits that
//! symmetry, so an asymmetric function will silently estimate something else.
//! Tests spot-check symmetry of the built-ins by permutation.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sample::Observation;

/// Hard cap on kernel degree; subset enumeration is combinatorial and the
/// supported estimands all have total degree at most two.
pub const MAX_TOTAL_DEGREE: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelArity {
    /// m observations from a single sample.
    OneSample { degree: usize },
    /// m1 observations from the first sample, m2 from the second.
    TwoSample { degree_x: usize, degree_y: usize },
}

impl KernelArity {
    pub fn total_degree(&self) -> usize {
        match *self {
            KernelArity::OneSample { degree } => degree,
            KernelArity::TwoSample { degree_x, degree_y } => degree_x + degree_y,
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            KernelArity::OneSample { .. } => "one-sample",
            KernelArity::TwoSample { .. } => "two-sample",
        }
    }
}

type EvalFn = dyn Fn(&[&Observation]) -> f64 + Send + Sync;

/// A named symmetric kernel together with its arity and the number of
/// coordinates it reads from each observation.
#[derive(Clone)]
pub struct Kernel {
    name: String,
    arity: KernelArity,
    min_dim: usize,
    eval: Arc<EvalFn>,
}

impl fmt::Debug for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Kernel")
            .field("name", &self.name)
            .field("arity", &self.arity)
            .field("min_dim", &self.min_dim)
            .finish()
    }
}

impl Kernel {
    pub fn one_sample<F>(name: impl Into<String>, degree: usize, min_dim: usize, eval: F) -> Result<Self>
    where
        F: Fn(&[&Observation]) -> f64 + Send + Sync + 'static,
    {
        let arity = KernelArity::OneSample { degree };
        Self::build(name.into(), arity, min_dim, Arc::new(eval))
    }

    pub fn two_sample<F>(
        name: impl Into<String>,
        degree_x: usize,
        degree_y: usize,
        min_dim: usize,
        eval: F,
    ) -> Result<Self>
    where
        F: Fn(&[&Observation]) -> f64 + Send + Sync + 'static,
    {
        let arity = KernelArity::TwoSample { degree_x, degree_y };
        Self::build(name.into(), arity, min_dim, Arc::new(eval))
    }

    fn build(name: String, arity: KernelArity, min_dim: usize, eval: Arc<EvalFn>) -> Result<Self> {
        let per_block_ok = match arity {
            KernelArity::OneSample { degree } => degree >= 1,
            KernelArity::TwoSample { degree_x, degree_y } => degree_x >= 1 && degree_y >= 1,
        };
        if !per_block_ok {
            return Err(Error::InvalidParameter {
                name: "degree",
                value: 0.0,
                requirement: "every sample block must contribute at least one observation",
            });
        }
        let total = arity.total_degree();
        if total > MAX_TOTAL_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree: total,
                max: MAX_TOTAL_DEGREE,
            });
        }
        if min_dim == 0 {
            return Err(Error::InvalidParameter {
                name: "min_dim",
                value: 0.0,
                requirement: "kernels read at least one coordinate",
            });
        }
        Ok(Self {
            name,
            arity,
            min_dim,
            eval,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> KernelArity {
        self.arity
    }

    /// Number of coordinates the kernel reads from each observation.
    pub fn min_dim(&self) -> usize {
        self.min_dim
    }

    /// Evaluate on an argument tuple. For two-sample kernels the first
    /// `degree_x` arguments come from the first sample, the rest from the
    /// second. The caller guarantees the tuple length matches the arity.
    pub fn eval(&self, args: &[&Observation]) -> f64 {
        debug_assert_eq!(args.len(), self.arity.total_degree());
        (self.eval)(args)
    }

    /// Look up a built-in kernel by registry name.
    pub fn by_name(name: &str) -> Option<Kernel> {
        let kernel = match name {
            "mean" => Kernel::one_sample("mean", 1, 1, |a| a[0].coords()[0]),
            "pwm" => Kernel::one_sample("pwm", 2, 1, |a| {
                a[0].coords()[0].max(a[1].coords()[0]) / 2.0
            }),
            "variance" => Kernel::one_sample("variance", 2, 1, |a| {
                let d = a[0].coords()[0] - a[1].coords()[0];
                d * d / 2.0
            }),
            "auc" => Kernel::two_sample("auc", 1, 1, 1, |a| {
                f64::from(a[1].coords()[0] > a[0].coords()[0])
            }),
            "auc-midrank" => Kernel::two_sample("auc-midrank", 1, 1, 1, |a| {
                let (x, y) = (a[0].coords()[0], a[1].coords()[0]);
                f64::from(y > x) + 0.5 * f64::from(y == x)
            }),
            "auc-diff" => Kernel::two_sample("auc-diff", 1, 1, 2, |a| {
                let (x, y) = (a[0].coords(), a[1].coords());
                f64::from(x[0] < y[0]) - f64::from(x[1] < y[1])
            }),
            _ => return None,
        };
        Some(kernel.expect("built-in kernels are well-formed"))
    }

    /// Registry names with short descriptions, for `--help`-style listings.
    pub fn builtin_names() -> &'static [(&'static str, &'static str)] {
        &[
            ("mean", "population mean, degree-1 identity kernel"),
            ("pwm", "probability weighted moment E[X F(X)], kernel max(x,y)/2"),
            ("variance", "population variance, kernel (x-y)^2/2"),
            ("auc", "P(Y > X), strict Mann-Whitney indicator"),
            ("auc-midrank", "P(Y > X) + P(Y = X)/2, midrank indicator for ties"),
            (
                "auc-diff",
                "paired AUC difference I(x1 < y1) - I(x2 < y2) on two-column data",
            ),
        ]
    }
}
