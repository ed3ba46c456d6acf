//! U-statistic evaluation and jackknife pseudo-values.
//!
//! For a one-sample kernel h of degree m, the U-statistic averages h over all
//! C(n, m) subsets. The jackknife pseudo-values are
//!
//! ```text
//! V_i = n * U_n - (n - 1) * U_{n-1}^(-i)
//! ```
//!
//! where `U_{n-1}^(-i)` drops observation i. Their mean equals `U_n` exactly,
//! and [`PseudoValueSet::new`] re-checks that identity numerically as a guard
//! against kernel or bookkeeping bugs.
//!
//! Two-sample designs are pooled: with samples of size n1 and n2, index
//! i < n1 drops the i-th observation of the first sample and index n1 + j
//! drops the j-th of the second, giving n1 + n2 pseudo-values whose mean is
//! again the two-sample U-statistic.
//!
//! Every statistic has two evaluation routes: a generic subset-enumeration
//! path that works for any supported degree, and closed fast paths for the
//! common cases (degree-2 one-sample kernels via pairwise row sums, (1,1)
//! two-sample kernels via the bipartite kernel matrix). The public functions
//! dispatch to the fast path when one applies; tests pin the two routes
//! against each other.

use crate::error::{Error, Result};
use crate::kahan::{kahan_mean, KahanSum};
use crate::kernel::{Kernel, KernelArity};
use crate::sample::{Observation, Sample};

/// Sampling design a set of pseudo-values was computed under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Design {
    OneSample { n: usize },
    TwoSample { n_x: usize, n_y: usize },
}

impl Design {
    /// Total number of observations, which is also the pseudo-value count.
    pub fn total(&self) -> usize {
        match *self {
            Design::OneSample { n } => n,
            Design::TwoSample { n_x, n_y } => n_x + n_y,
        }
    }
}

/// Jackknife pseudo-values together with the point estimate they came from.
///
/// The constructor validates the defining identity mean(V) = U, so a value of
/// this type is always internally consistent. Downstream code (the likelihood
/// solver, interval inversion) relies on that.
#[derive(Debug, Clone, PartialEq)]
pub struct PseudoValueSet {
    values: Vec<f64>,
    u_stat: f64,
    design: Design,
}

impl PseudoValueSet {
    pub fn new(values: Vec<f64>, u_stat: f64, design: Design) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty("pseudo-value set"));
        }
        if values.len() != design.total() {
            return Err(Error::InvalidParameter {
                name: "pseudo_values",
                value: values.len() as f64,
                requirement: "length equal to the design's total sample size",
            });
        }
        if let Some(&bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                context: "pseudo-values",
                value: bad,
            });
        }
        if !u_stat.is_finite() {
            return Err(Error::NonFinite {
                context: "point estimate",
                value: u_stat,
            });
        }
        let set = Self {
            values,
            u_stat,
            design,
        };
        let mean = kahan_mean(&set.values);
        let scale = 1.0_f64.max(u_stat.abs()).max(set.spread());
        if (mean - u_stat).abs() > 1e-10 * scale {
            return Err(Error::InconsistentPseudoValues { mean, u_stat });
        }
        Ok(set)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn u_stat(&self) -> f64 {
        self.u_stat
    }

    pub fn design(&self) -> Design {
        self.design
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Range max(V) - min(V); zero means the likelihood is degenerate.
    pub fn spread(&self) -> f64 {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &v in &self.values {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        hi - lo
    }

    /// Sample standard deviation of the pseudo-values (n - 1 denominator).
    pub fn sd(&self) -> f64 {
        let n = self.values.len();
        if n < 2 {
            return 0.0;
        }
        let mean = kahan_mean(&self.values);
        let mut ss = KahanSum::new();
        for &v in &self.values {
            let d = v - mean;
            ss.add(d * d);
        }
        (ss.value() / (n as f64 - 1.0)).sqrt()
    }
}

/// One-sample U-statistic.
pub fn eval_u_statistic(kernel: &Kernel, sample: &Sample) -> Result<f64> {
    let m = require_one_sample(kernel)?;
    check_dim(kernel, sample)?;
    require_len(sample, m, "the U-statistic")?;
    let (total, _) = subset_sums_one(kernel, sample, m, true)?;
    Ok(total / binomial(sample.len(), m))
}

/// Two-sample U-statistic; the kernel sees `degree_x` arguments from `x`
/// followed by `degree_y` from `y`.
pub fn eval_u_statistic_two(kernel: &Kernel, x: &Sample, y: &Sample) -> Result<f64> {
    let (m1, m2) = require_two_sample(kernel)?;
    check_dim(kernel, x)?;
    check_dim(kernel, y)?;
    require_len(x, m1, "the U-statistic")?;
    require_len(y, m2, "the U-statistic")?;
    let (total, _, _) = subset_sums_two(kernel, x, y, m1, m2, true)?;
    Ok(total / (binomial(x.len(), m1) * binomial(y.len(), m2)))
}

/// Jackknife pseudo-values of a one-sample U-statistic.
pub fn jackknife_pseudo_values(kernel: &Kernel, sample: &Sample) -> Result<PseudoValueSet> {
    pseudo_values_one(kernel, sample, true)
}

/// Pooled jackknife pseudo-values of a two-sample U-statistic (first all
/// deletions from `x`, then all deletions from `y`).
pub fn jackknife_pseudo_values_two(kernel: &Kernel, x: &Sample, y: &Sample) -> Result<PseudoValueSet> {
    pseudo_values_two(kernel, x, y, true)
}

fn pseudo_values_one(kernel: &Kernel, sample: &Sample, use_fast: bool) -> Result<PseudoValueSet> {
    let m = require_one_sample(kernel)?;
    check_dim(kernel, sample)?;
    // Leave-one-out statistics need n - 1 >= m.
    require_len(sample, m + 1, "the jackknife")?;
    let (total, per) = subset_sums_one(kernel, sample, m, use_fast)?;
    let n = sample.len();
    let c_full = binomial(n, m);
    let c_loo = binomial(n - 1, m);
    let u = total / c_full;
    let nf = n as f64;
    let values = (0..n)
        .map(|i| {
            let u_loo = (total - per[i]) / c_loo;
            nf * u - (nf - 1.0) * u_loo
        })
        .collect();
    PseudoValueSet::new(values, u, Design::OneSample { n })
}

fn pseudo_values_two(kernel: &Kernel, x: &Sample, y: &Sample, use_fast: bool) -> Result<PseudoValueSet> {
    let (m1, m2) = require_two_sample(kernel)?;
    check_dim(kernel, x)?;
    check_dim(kernel, y)?;
    require_len(x, m1 + 1, "the jackknife")?;
    require_len(y, m2 + 1, "the jackknife")?;
    let (total, per_x, per_y) = subset_sums_two(kernel, x, y, m1, m2, use_fast)?;
    let (n1, n2) = (x.len(), y.len());
    let n = n1 + n2;
    let cx = binomial(n1, m1);
    let cy = binomial(n2, m2);
    let cx_loo = binomial(n1 - 1, m1);
    let cy_loo = binomial(n2 - 1, m2);
    let u = total / (cx * cy);
    let nf = n as f64;
    let mut values = Vec::with_capacity(n);
    for i in 0..n1 {
        let u_loo = (total - per_x[i]) / (cx_loo * cy);
        values.push(nf * u - (nf - 1.0) * u_loo);
    }
    for j in 0..n2 {
        let u_loo = (total - per_y[j]) / (cx * cy_loo);
        values.push(nf * u - (nf - 1.0) * u_loo);
    }
    PseudoValueSet::new(values, u, Design::TwoSample { n_x: n1, n_y: n2 })
}

/// Exact binomial coefficient as f64 (degrees are capped, so the integer
/// product stays far below u128 overflow for any realistic n).
fn binomial(n: usize, k: usize) -> f64 {
    debug_assert!(k <= n);
    let k = k.min(n - k);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (n - i) as u128;
        den *= (i + 1) as u128;
    }
    // A product of k consecutive integers is divisible by k!.
    (num / den) as f64
}

/// Visit the k-subsets of {0, .., n-1} in lexicographic order.
fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    debug_assert!(k >= 1);
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    'outer: loop {
        f(&idx);
        let mut i = k - 1;
        loop {
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                continue 'outer;
            }
            if i == 0 {
                break 'outer;
            }
            i -= 1;
        }
    }
}

fn require_one_sample(kernel: &Kernel) -> Result<usize> {
    match kernel.arity() {
        KernelArity::OneSample { degree } => Ok(degree),
        KernelArity::TwoSample { .. } => Err(Error::KernelArityMismatch {
            kernel: kernel.name().to_string(),
            arity: "two-sample",
        }),
    }
}

fn require_two_sample(kernel: &Kernel) -> Result<(usize, usize)> {
    match kernel.arity() {
        KernelArity::TwoSample { degree_x, degree_y } => Ok((degree_x, degree_y)),
        KernelArity::OneSample { .. } => Err(Error::KernelArityMismatch {
            kernel: kernel.name().to_string(),
            arity: "one-sample",
        }),
    }
}

fn check_dim(kernel: &Kernel, sample: &Sample) -> Result<()> {
    if sample.dim() < kernel.min_dim() {
        return Err(Error::KernelDimension {
            kernel: kernel.name().to_string(),
            needed: kernel.min_dim(),
            found: sample.dim(),
        });
    }
    Ok(())
}

fn require_len(sample: &Sample, needed: usize, context: &'static str) -> Result<()> {
    if sample.len() < needed {
        return Err(Error::InsufficientSample {
            label: sample.label().to_string(),
            found: sample.len(),
            needed,
            context,
        });
    }
    Ok(())
}

fn fmt_subset(indices: &[usize]) -> String {
    let inner: Vec<String> = indices.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

fn non_finite_kernel(kernel: &Kernel, value: f64, subset: String) -> Error {
    Error::NonFiniteKernel {
        kernel: kernel.name().to_string(),
        value,
        subset,
    }
}

/// Kernel total and per-index totals T_i = sum over subsets containing i.
/// These determine both the U-statistic (total / C(n, m)) and every
/// leave-one-out statistic ((total - T_i) / C(n-1, m)).
fn subset_sums_one(
    kernel: &Kernel,
    sample: &Sample,
    m: usize,
    use_fast: bool,
) -> Result<(f64, Vec<f64>)> {
    if use_fast && m == 2 {
        subset_sums_pairwise(kernel, sample)
    } else {
        subset_sums_generic(kernel, sample, m)
    }
}

fn subset_sums_generic(kernel: &Kernel, sample: &Sample, m: usize) -> Result<(f64, Vec<f64>)> {
    let obs = sample.observations();
    let n = obs.len();
    let mut total = KahanSum::new();
    let mut per = vec![KahanSum::new(); n];
    let mut args: Vec<&Observation> = Vec::with_capacity(m);
    let mut failure: Option<Error> = None;
    for_each_combination(n, m, |subset| {
        if failure.is_some() {
            return;
        }
        args.clear();
        args.extend(subset.iter().map(|&i| &obs[i]));
        let h = kernel.eval(&args);
        if !h.is_finite() {
            failure = Some(non_finite_kernel(kernel, h, fmt_subset(subset)));
            return;
        }
        total.add(h);
        for &i in subset {
            per[i].add(h);
        }
    });
    if let Some(err) = failure {
        return Err(err);
    }
    Ok((total.value(), per.iter().map(KahanSum::value).collect()))
}

/// Degree-2 fast path: one pass over the strict upper triangle of the kernel
/// matrix, accumulating the grand total and the row sums in place.
fn subset_sums_pairwise(kernel: &Kernel, sample: &Sample) -> Result<(f64, Vec<f64>)> {
    let obs = sample.observations();
    let n = obs.len();
    let mut total = KahanSum::new();
    let mut row = vec![KahanSum::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            let h = kernel.eval(&[&obs[i], &obs[j]]);
            if !h.is_finite() {
                return Err(non_finite_kernel(kernel, h, fmt_subset(&[i, j])));
            }
            total.add(h);
            row[i].add(h);
            row[j].add(h);
        }
    }
    Ok((total.value(), row.iter().map(KahanSum::value).collect()))
}

fn subset_sums_two(
    kernel: &Kernel,
    x: &Sample,
    y: &Sample,
    m1: usize,
    m2: usize,
    use_fast: bool,
) -> Result<(f64, Vec<f64>, Vec<f64>)> {
    if use_fast && m1 == 1 && m2 == 1 {
        subset_sums_matrix(kernel, x, y)
    } else {
        subset_sums_two_generic(kernel, x, y, m1, m2)
    }
}

fn subset_sums_two_generic(
    kernel: &Kernel,
    x: &Sample,
    y: &Sample,
    m1: usize,
    m2: usize,
) -> Result<(f64, Vec<f64>, Vec<f64>)> {
    let xo = x.observations();
    let yo = y.observations();
    let mut total = KahanSum::new();
    let mut per_x = vec![KahanSum::new(); xo.len()];
    let mut per_y = vec![KahanSum::new(); yo.len()];
    let mut args: Vec<&Observation> = Vec::with_capacity(m1 + m2);
    let mut failure: Option<Error> = None;
    for_each_combination(xo.len(), m1, |a| {
        if failure.is_some() {
            return;
        }
        for_each_combination(yo.len(), m2, |b| {
            if failure.is_some() {
                return;
            }
            args.clear();
            args.extend(a.iter().map(|&i| &xo[i]));
            args.extend(b.iter().map(|&j| &yo[j]));
            let h = kernel.eval(&args);
            if !h.is_finite() {
                let subset = format!("x{} y{}", fmt_subset(a), fmt_subset(b));
                failure = Some(non_finite_kernel(kernel, h, subset));
                return;
            }
            total.add(h);
            for &i in a {
                per_x[i].add(h);
            }
            for &j in b {
                per_y[j].add(h);
            }
        });
    });
    if let Some(err) = failure {
        return Err(err);
    }
    Ok((
        total.value(),
        per_x.iter().map(KahanSum::value).collect(),
        per_y.iter().map(KahanSum::value).collect(),
    ))
}

/// (1,1) fast path: row and column sums of the bipartite kernel matrix
/// h(x_i, y_j) in one row-major sweep.
fn subset_sums_matrix(kernel: &Kernel, x: &Sample, y: &Sample) -> Result<(f64, Vec<f64>, Vec<f64>)> {
    let xo = x.observations();
    let yo = y.observations();
    let mut total = KahanSum::new();
    let mut rows = vec![KahanSum::new(); xo.len()];
    let mut cols = vec![KahanSum::new(); yo.len()];
    for (i, xi) in xo.iter().enumerate() {
        for (j, yj) in yo.iter().enumerate() {
            let h = kernel.eval(&[xi, yj]);
            if !h.is_finite() {
                let subset = format!("x{{{i}}} y{{{j}}}");
                return Err(non_finite_kernel(kernel, h, subset));
            }
            total.add(h);
            rows[i].add(h);
            cols[j].add(h);
        }
    }
    Ok((
        total.value(),
        rows.iter().map(KahanSum::value).collect(),
        cols.iter().map(KahanSum::value).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn sample(values: &[f64]) -> Sample {
        Sample::from_values("x", values).unwrap()
    }

    #[test]
    fn combinations_enumerate_in_lexicographic_order() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |s| seen.push(s.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        let mut count = 0;
        for_each_combination(7, 3, |_| count += 1);
        assert_eq!(count, 35);
    }

    #[test]
    fn binomial_is_exact() {
        assert_eq!(binomial(4, 2), 6.0);
        assert_eq!(binomial(10, 2), 45.0);
        assert_eq!(binomial(49, 4), 211_876.0);
        assert_eq!(binomial(4, 4), 1.0);
        assert_eq!(binomial(5, 1), 5.0);
    }

    #[test]
    fn pwm_on_three_points() {
        // max/2 kernel on {1,2,3}: pair values 1, 1.5, 1.5 so U = 4/3 and
        // the pseudo-values work out to exactly [1, 1, 2].
        let k = Kernel::by_name("pwm").unwrap();
        let s = sample(&[1.0, 2.0, 3.0]);
        assert_eq!(eval_u_statistic(&k, &s).unwrap(), 4.0 / 3.0);
        let pv = jackknife_pseudo_values(&k, &s).unwrap();
        assert_eq!(pv.u_stat(), 4.0 / 3.0);
        assert_eq!(pv.values(), &[1.0, 1.0, 2.0]);
        assert_eq!(pv.design(), Design::OneSample { n: 3 });
    }

    #[test]
    fn auc_on_two_by_two() {
        let k = Kernel::by_name("auc").unwrap();
        let x = sample(&[1.0, 3.0]);
        let y = Sample::from_values("y", &[2.0, 4.0]).unwrap();
        assert_eq!(eval_u_statistic_two(&k, &x, &y).unwrap(), 0.75);
        let pv = jackknife_pseudo_values_two(&k, &x, &y).unwrap();
        assert_eq!(pv.values(), &[1.5, 0.0, 0.0, 1.5]);
        assert_eq!(pv.design(), Design::TwoSample { n_x: 2, n_y: 2 });
        assert_eq!(pv.u_stat(), 0.75);
    }

    #[test]
    fn mean_kernel_pseudo_values_reproduce_the_data() {
        // For the identity kernel the jackknife is exact: V_i = x_i.
        let k = Kernel::by_name("mean").unwrap();
        let data = [0.5, 1.25, -2.0, 3.75];
        let pv = jackknife_pseudo_values(&k, &sample(&data)).unwrap();
        assert_eq!(pv.values(), &data);
        assert_eq!(pv.u_stat(), 0.875);
    }

    #[test]
    fn variance_kernel_matches_sample_variance() {
        let k = Kernel::by_name("variance").unwrap();
        let s = sample(&[1.0, 2.0, 3.0, 4.0]);
        assert_relative_eq!(eval_u_statistic(&k, &s).unwrap(), 5.0 / 3.0, max_relative = 1e-15);
        let pv = jackknife_pseudo_values(&k, &s).unwrap();
        let expected = [11.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0, 11.0 / 3.0];
        for (got, want) in pv.values().iter().zip(expected) {
            assert_relative_eq!(got, &want, max_relative = 1e-12);
        }
    }

    #[test]
    fn degree_three_generic_path() {
        // Product kernel on {1,2,3,4}: all quantities are small integers.
        let k = Kernel::one_sample("product3", 3, 1, |a| {
            a.iter().map(|o| o.coords()[0]).product()
        })
        .unwrap();
        let s = sample(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(eval_u_statistic(&k, &s).unwrap(), 12.5);
        let pv = jackknife_pseudo_values(&k, &s).unwrap();
        assert_eq!(pv.values(), &[-22.0, 14.0, 26.0, 32.0]);
    }

    #[test]
    fn mixed_degree_two_sample_generic_path() {
        // h = I(max(x1, x2) < y), degrees (2, 1); hand-computed totals.
        let k = Kernel::two_sample("max-below", 2, 1, 1, |a| {
            let m = a[0].coords()[0].max(a[1].coords()[0]);
            f64::from(m < a[2].coords()[0])
        })
        .unwrap();
        let x = sample(&[1.0, 2.0, 3.0]);
        let y = Sample::from_values("y", &[2.5, 4.0]).unwrap();
        let u = eval_u_statistic_two(&k, &x, &y).unwrap();
        assert_relative_eq!(u, 2.0 / 3.0, max_relative = 1e-15);
        let pv = jackknife_pseudo_values_two(&k, &x, &y).unwrap();
        let expected = [4.0 / 3.0, 4.0 / 3.0, -2.0 / 3.0, -2.0 / 3.0, 2.0];
        for (got, want) in pv.values().iter().zip(expected) {
            assert_relative_eq!(got, &want, max_relative = 1e-12);
        }
    }

    #[test]
    fn arity_and_size_guards() {
        let auc = Kernel::by_name("auc").unwrap();
        let pwm = Kernel::by_name("pwm").unwrap();
        let s = sample(&[1.0, 2.0, 3.0]);

        let err = jackknife_pseudo_values(&auc, &s).unwrap_err();
        assert!(matches!(err, Error::KernelArityMismatch { .. }));
        let err = jackknife_pseudo_values_two(&pwm, &s, &s).unwrap_err();
        assert!(matches!(err, Error::KernelArityMismatch { .. }));

        // Degree-2 jackknife needs at least three observations.
        let tiny = sample(&[1.0, 2.0]);
        assert!(eval_u_statistic(&pwm, &tiny).is_ok());
        let err = jackknife_pseudo_values(&pwm, &tiny).unwrap_err();
        assert!(matches!(
            err,
            Error::InsufficientSample { found: 2, needed: 3, .. }
        ));
    }

    #[test]
    fn dimension_guard() {
        let diff = Kernel::by_name("auc-diff").unwrap();
        let x = sample(&[1.0, 2.0]);
        let err = eval_u_statistic_two(&diff, &x, &x).unwrap_err();
        assert!(matches!(
            err,
            Error::KernelDimension { needed: 2, found: 1, .. }
        ));
    }

    #[test]
    fn non_finite_kernel_values_are_reported_with_their_subset() {
        let k = Kernel::one_sample("recip-gap", 2, 1, |a| {
            1.0 / (a[0].coords()[0] - a[1].coords()[0])
        })
        .unwrap();
        let s = sample(&[1.0, 1.0, 2.0]);
        match jackknife_pseudo_values(&k, &s).unwrap_err() {
            Error::NonFiniteKernel { subset, .. } => assert_eq!(subset, "{0, 1}"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn pseudo_value_set_rejects_inconsistent_inputs() {
        let design = Design::OneSample { n: 3 };
        let err = PseudoValueSet::new(vec![1.0, 2.0, 3.0], 5.0, design).unwrap_err();
        assert!(matches!(err, Error::InconsistentPseudoValues { .. }));
        let err = PseudoValueSet::new(vec![1.0, 2.0], 1.5, design).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter { .. }));
        let ok = PseudoValueSet::new(vec![1.0, 2.0, 3.0], 2.0, design).unwrap();
        assert_eq!(ok.spread(), 2.0);
        assert_relative_eq!(ok.sd(), 1.0, max_relative = 1e-15);
    }

    proptest! {
        #[test]
        fn fast_and_generic_routes_agree_one_sample(
            data in proptest::collection::vec(-1.0e3..1.0e3f64, 5..40)
        ) {
            let s = sample(&data);
            for name in ["pwm", "variance"] {
                let k = Kernel::by_name(name).unwrap();
                let fast = pseudo_values_one(&k, &s, true).unwrap();
                let slow = pseudo_values_one(&k, &s, false).unwrap();
                prop_assert_eq!(fast.len(), slow.len());
                let scale = 1.0_f64.max(fast.spread());
                for (a, b) in fast.values().iter().zip(slow.values()) {
                    prop_assert!((a - b).abs() <= 1e-10 * scale);
                }
                prop_assert!((fast.u_stat() - slow.u_stat()).abs() <= 1e-10 * scale);
            }
        }

        #[test]
        fn fast_and_generic_routes_agree_two_sample(
            xs in proptest::collection::vec(-50.0..50.0f64, 3..20),
            ys in proptest::collection::vec(-50.0..50.0f64, 3..20)
        ) {
            let x = Sample::from_values("x", &xs).unwrap();
            let y = Sample::from_values("y", &ys).unwrap();
            let k = Kernel::by_name("auc").unwrap();
            let fast = pseudo_values_two(&k, &x, &y, true).unwrap();
            let slow = pseudo_values_two(&k, &x, &y, false).unwrap();
            for (a, b) in fast.values().iter().zip(slow.values()) {
                prop_assert!((a - b).abs() <= 1e-10);
            }
            prop_assert!((fast.u_stat() - slow.u_stat()).abs() <= 1e-10);
        }

        #[test]
        fn pseudo_value_mean_recovers_the_statistic(
            data in proptest::collection::vec(-1.0e2..1.0e2f64, 4..30)
        ) {
            // PseudoValueSet::new re-derives mean(V) = U with a tight
            // tolerance, so constructing one is itself the assertion.
            let k = Kernel::by_name("pwm").unwrap();
            let pv = jackknife_pseudo_values(&k, &sample(&data)).unwrap();
            let u = eval_u_statistic(&k, &sample(&data)).unwrap();
            prop_assert_eq!(pv.u_stat(), u);
        }
    }
}
