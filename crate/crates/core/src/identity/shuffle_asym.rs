//! Decay of the shuffle residual `Δ(w)Δ(w′) − Δ(w ⧢ w′)` as N doubles.

use serde::Serialize;

use super::shuffleable::shuffle_violation;
use crate::algebra::{shuffle, LinComb, Word};
use crate::error::{Error, Result};
use crate::eval::{delta, delta_lin};
use crate::path::PathSpec;
use crate::scalar::Scalar;
use crate::theta::ThetaPoly;
use crate::Float;

/// Allowed growth between consecutive normalized residuals.
pub const SLACK: f64 = 1.5;

#[derive(Clone, Debug, Serialize)]
pub struct ShuffleRow {
    pub n: i64,
    pub product: Vec<String>,
    pub shuffle: Vec<String>,
    pub residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShuffleAsymptotic {
    pub rows: Vec<ShuffleRow>,
    /// The log power `d` whose normalized sequence `N·r_N / log^d N` grows least.
    pub best_d: usize,
    pub normalized: Vec<f64>,
    pub worst_ratio: f64,
    pub passed: bool,
}

/// Largest ratio `x_{j+1}/x_j` of a sequence; 0/0 counts as 1.
fn worst_growth(xs: &[f64]) -> f64 {
    xs.windows(2)
        .map(|p| {
            if p[1] == 0.0 {
                0.0
            } else if p[0] == 0.0 {
                f64::INFINITY
            } else {
                p[1] / p[0]
            }
        })
        .fold(0.0, f64::max)
}

pub fn residual<S: Scalar>(
    path: &crate::path::DiscretePath,
    w: &Word,
    w2: &Word,
) -> Result<(ThetaPoly<S>, ThetaPoly<S>)> {
    let product = &delta::<S>(path, w)? * &delta::<S>(path, w2)?;
    let sh = delta_lin::<S>(path, &shuffle(&LinComb::word(w.clone()), &LinComb::word(w2.clone())))?;
    Ok((product, sh))
}

pub fn check_shuffle_asymptotic(spec: &PathSpec, w: &Word, w2: &Word, n_list: &[i64]) -> Result<ShuffleAsymptotic> {
    if n_list.len() < 2 || n_list.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::Precondition("need at least two increasing N".into()));
    }
    let first = spec.build(n_list[0])?;
    if let Some(v) = shuffle_violation(&first, w, w2) {
        return Err(Error::NotShuffleable(v));
    }
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let path = spec.build(n)?;
        let (product, sh) = residual::<Float>(&path, w, w2)?;
        let r = (&product - &sh).max_magnitude();
        rows.push(ShuffleRow { n, product: product.render(), shuffle: sh.render(), residual: r });
    }
    let mut best = (0, f64::INFINITY, Vec::new());
    for d in 0..=w.len() + w2.len() {
        let xs: Vec<f64> = rows.iter().map(|r| r.n as f64 * r.residual / (r.n as f64).ln().powi(d as i32)).collect();
        let g = worst_growth(&xs);
        if g < best.1 {
            best = (d, g, xs);
        }
    }
    let (best_d, worst_ratio, normalized) = best;
    Ok(ShuffleAsymptotic { rows, best_d, normalized, worst_ratio, passed: worst_ratio <= SLACK })
}
