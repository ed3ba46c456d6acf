//! Jackknife empirical likelihood inference for one- and two-sample
//! U-statistics, in plain (JEL) and adjusted (AJEL) forms.
//!
//! The pipeline: pick a [`Kernel`] (built-in registry or custom closure),
//! compute jackknife pseudo-values of the corresponding U-statistic with
//! [`jackknife_pseudo_values`] / [`jackknife_pseudo_values_two`], then treat
//! the pseudo-values as approximately independent mean-θ observations and
//! run empirical likelihood on them. Wilks' theorem calibrates the -2
//! log-ratio against χ²₁, giving tests and confidence intervals for θ.
//!
//! The adjusted variant appends one synthetic centered value
//! g_{n+1} = -a_n·ḡ_n before solving, which keeps zero inside the convex
//! hull at every θ: the adjusted statistic is always finite, intervals
//! never die at the hull boundary, and coverage improves at small n.
//!
//! ```
//! use ajel::{confidence_interval, jackknife_pseudo_values, Kernel, Method, Sample};
//!
//! let data = Sample::from_values("x", &[1.2, 0.4, 2.8, 1.9, 0.7, 3.3, 1.1, 2.2])?;
//! let kernel = Kernel::by_name("pwm").unwrap();
//! let pv = jackknife_pseudo_values(&kernel, &data)?;
//! let ci = confidence_interval(&pv, 0.95, Method::Ajel, None)?;
//! assert!(ci.lower < pv.u_stat() && pv.u_stat() < ci.upper);
//! # Ok::<(), ajel::Error>(())
//! ```

mod dist;
pub mod el;
pub mod error;
pub mod inference;
pub mod kahan;
pub mod kernel;
pub mod sample;
pub mod ustat;

pub use dist::{chi2_df1_cdf, chi2_df1_quantile};
pub use el::{
    ajel_statistic, default_a_n, el_solution, jel_statistic, solve_lambda, CenteredValues,
    ElSolution, LambdaSolution, SolveStatus,
};
pub use error::{Error, Result};
pub use inference::{
    confidence_interval, test_theta, ConfidenceInterval, IntervalDiagnostics, Method, TestResult,
};
pub use kernel::{Kernel, KernelArity, MAX_TOTAL_DEGREE};
pub use sample::{Observation, Sample};
pub use ustat::{
    eval_u_statistic, eval_u_statistic_two, jackknife_pseudo_values, jackknife_pseudo_values_two,
    Design, PseudoValueSet,
};
