//! `Reg*`: the constant term `P(0)` of an expansion
//! `a_N = P(log N + γ_E) + O(N⁻¹ log^• N)`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::theta::ThetaPoly;
use crate::Float;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082;

/// Relative tolerance for the held-out samples.
pub const FIT_TOL: f64 = 1e-5;

/// `N = 2^10, …, 2^16`.
pub fn default_n_list() -> Vec<i64> {
    (10..=16).map(|j| 1i64 << j).collect()
}

/// `N = 2^10, …, 2^12`, the cap for exact samplers.
pub fn exact_n_list() -> Vec<i64> {
    (10..=12).map(|j| 1i64 << j).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct RegFit {
    pub n: Vec<i64>,
    /// `[re, im]` per sample.
    pub samples: Vec<[f64; 2]>,
    /// Coefficients of `P` in `X = log N + γ_E`, lowest first.
    pub poly: Vec<[f64; 2]>,
    /// Coefficients of the `X^j / N` tail terms, lowest first.
    pub tail_poly: Vec<[f64; 2]>,
    pub value: [f64; 2],
    /// Largest misfit over the held-out samples.
    pub residual: f64,
    pub tolerance: f64,
    pub degree: usize,
    /// Highest log power in the tail model, if any.
    pub tail: Option<usize>,
}

impl RegFit {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.value[0], self.value[1])
    }
}

/// Largest tail degree leaving at least one sample for validation.
pub fn default_tail(degree: usize, samples: usize) -> Option<usize> {
    let room = samples.checked_sub(degree + 3)?;
    Some(room.min(degree + 1))
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

/// Fits `P` of degree `degree` (plus `X^j/N`, `j ≤ tail`) exactly at the
/// largest samples and checks the prediction at the others.
pub fn fit(ns: &[i64], values: &[Complex64], degree: usize, tail: Option<usize>) -> Result<RegFit> {
    if ns.len() != values.len() {
        return Err(Error::Precondition("sample count mismatch".into()));
    }
    if ns.windows(2).any(|p| p[0] >= p[1]) || ns.first().is_some_and(|&n| n < 1) {
        return Err(Error::Precondition("N list must be positive and strictly increasing".into()));
    }
    let ncols = degree + 1 + tail.map_or(0, |c| c + 1);
    if ns.len() < ncols + 1 {
        return Err(Error::Precondition(format!(
            "{} samples cannot fit {ncols} terms and validate",
            ns.len()
        )));
    }
    let row = |n: i64| -> Vec<f64> {
        let x = (n as f64).ln() + EULER_GAMMA;
        let mut r: Vec<f64> = (0..=degree).map(|j| x.powi(j as i32)).collect();
        if let Some(c) = tail {
            r.extend((0..=c).map(|j| x.powi(j as i32) / n as f64));
        }
        r
    };
    let fit_at = ns.len() - ncols;
    let mut a = DMatrix::<f64>::zeros(ncols, ncols);
    let mut b = DMatrix::<f64>::zeros(ncols, 2);
    for (i, (&n, v)) in ns[fit_at..].iter().zip(&values[fit_at..]).enumerate() {
        for (j, x) in row(n).into_iter().enumerate() {
            a[(i, j)] = x;
        }
        b[(i, 0)] = v.re;
        b[(i, 1)] = v.im;
    }
    let scale: Vec<f64> = (0..ncols).map(|j| a.column(j).amax().max(f64::MIN_POSITIVE)).collect();
    for (j, s) in scale.iter().enumerate() {
        a.column_mut(j).scale_mut(1.0 / s);
    }
    let coef = a
        .svd(true, true)
        .solve(&b, 1e-14)
        .map_err(|e| Error::ModelMismatch(format!("least squares failed: {e}")))?;
    let c: Vec<Complex64> = (0..ncols).map(|j| Complex64::new(coef[(j, 0)], coef[(j, 1)]) / scale[j]).collect();
    let predict = |n: i64| -> Complex64 { row(n).into_iter().zip(&c).map(|(x, k)| k * x).sum() };
    let residual = ns[..fit_at]
        .iter()
        .zip(&values[..fit_at])
        .map(|(&n, v)| (predict(n) - v).norm())
        .fold(0.0, f64::max);
    let size = values.iter().map(|v| v.norm()).fold(1.0, f64::max);
    let tolerance = FIT_TOL * size;
    if !residual.is_finite() || residual > tolerance {
        return Err(Error::ModelMismatch(format!(
            "degree {degree} fit misses held-out samples by {residual:.3e} (tolerance {tolerance:.3e})"
        )));
    }
    Ok(RegFit {
        n: ns.to_vec(),
        samples: values.iter().copied().map(pair).collect(),
        poly: c[..=degree].iter().copied().map(pair).collect(),
        tail_poly: c[degree + 1..].iter().copied().map(pair).collect(),
        value: pair(c[0]),
        residual,
        tolerance,
        degree,
        tail,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RegLimit {
    /// `Reg*` per θ-coefficient.
    pub value: Vec<[f64; 2]>,
    pub fits: Vec<RegFit>,
}

impl RegLimit {
    pub fn poly(&self) -> ThetaPoly<Float> {
        ThetaPoly::from_coeffs(self.value.iter().map(|v| Complex64::new(v[0], v[1])).collect())
    }

    pub fn coeff(&self, i: usize) -> Complex64 {
        self.value.get(i).map_or(Complex64::new(0.0, 0.0), |v| Complex64::new(v[0], v[1]))
    }
}

/// Samples in parallel, then fits every θ-coefficient with the default tail.
pub fn reg_star_limit<F>(sampler: F, degree_bound: usize, n_list: &[i64]) -> Result<RegLimit>
where
    F: Fn(i64) -> Result<ThetaPoly<Float>> + Sync,
{
    reg_star_limit_with(sampler, degree_bound, default_tail(degree_bound, n_list.len()), n_list)
}

/// As [`reg_star_limit`] with an explicit tail degree (`None`: plain polynomial).
pub fn reg_star_limit_with<F>(sampler: F, degree_bound: usize, tail: Option<usize>, n_list: &[i64]) -> Result<RegLimit>
where
    F: Fn(i64) -> Result<ThetaPoly<Float>> + Sync,
{
    if n_list.len() < degree_bound + 2 {
        return Err(Error::Precondition(format!(
            "need at least {} samples for degree {degree_bound}",
            degree_bound + 2
        )));
    }
    let samples: Vec<ThetaPoly<Float>> = n_list.par_iter().map(|&n| sampler(n)).collect::<Result<_>>()?;
    let top = samples.iter().filter_map(|p| p.degree()).max();
    let mut fits = Vec::new();
    let mut value = Vec::new();
    for i in 0..=top.unwrap_or(0) {
        let vs: Vec<Complex64> = samples.iter().map(|p| p.coeff(i)).collect();
        let f = fit(n_list, &vs, degree_bound, tail)?;
        value.push(f.value);
        fits.push(f);
    }
    Ok(RegLimit { value, fits })
}
