//! Literal enumeration of the chains in the definition of Δ.

use super::forms::{omega, FormValue};
use crate::algebra::{Label, MultiWord, Word};
use crate::error::{Error, Result};
use crate::path::{DiscretePath, ProvisionIndex};
use crate::scalar::Scalar;
use crate::theta::ThetaPoly;

pub const DEFAULT_CHAIN_GUARD: u64 = 10_000_000;

/// Number of chains `n_1 ≤ … ≤ n_k` in a set of size `s`: `C(s+k-1, k)`.
pub fn chain_count(s: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (s + i) as f64 / (i + 1) as f64)
}

pub fn delta_bruteforce<S: Scalar>(path: &DiscretePath, w: &Word) -> Result<ThetaPoly<S>> {
    delta_bruteforce_guarded(path, w, DEFAULT_CHAIN_GUARD)
}

pub fn delta_bruteforce_guarded<S: Scalar>(path: &DiscretePath, w: &Word, guard: u64) -> Result<ThetaPoly<S>> {
    let letters: Vec<Vec<Label>> = w.letters().iter().map(|a| vec![a.clone()]).collect();
    enumerate(path, &letters, guard)
}

/// Brute force over a P_D word, on any path.
pub fn delta_multi_bruteforce<S: Scalar>(path: &DiscretePath, w: &MultiWord) -> Result<ThetaPoly<S>> {
    let letters: Vec<Vec<Label>> = w.letters().iter().map(|m| m.labels().to_vec()).collect();
    enumerate(path, &letters, DEFAULT_CHAIN_GUARD)
}

fn enumerate<S: Scalar>(path: &DiscretePath, letters: &[Vec<Label>], guard: u64) -> Result<ThetaPoly<S>> {
    for a in letters.iter().flatten() {
        path.grid().alphabet().check(a)?;
    }
    let points: Vec<ProvisionIndex> = path.provision().collect();
    let k = letters.len();
    let count = chain_count(points.len(), k);
    if count > guard as f64 {
        return Err(Error::GuardExceeded(format!("{count:.3e} chains exceed the guard {guard}")));
    }
    if k == 0 {
        return Ok(ThetaPoly::one());
    }
    // table[i][j] = product of the forms of letter i at point j
    let mut table: Vec<Vec<FormValue<S>>> = Vec::with_capacity(k);
    for letter in letters {
        let mut row = Vec::with_capacity(points.len());
        for p in &points {
            let mut v = FormValue::scalar(S::one());
            for a in letter {
                let f = omega::<S>(path, a, p)?;
                v = FormValue { coef: v.coef * f.coef, power: v.power + f.power };
            }
            row.push(v);
        }
        table.push(row);
    }
    let mut total = ThetaPoly::zero();
    if points.is_empty() {
        return Ok(total);
    }
    let mut idx = vec![0usize; k];
    loop {
        let mut coef = S::one();
        let mut power = 0;
        for (i, &j) in idx.iter().enumerate() {
            coef *= table[i][j].coef.clone();
            power += table[i][j].power as usize;
        }
        total += &ThetaPoly::monomial(coef, power);
        // next non-decreasing tuple
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(total);
            }
            i -= 1;
            if idx[i] + 1 < points.len() {
                idx[i] += 1;
                let v = idx[i];
                idx[i + 1..].iter_mut().for_each(|x| *x = v);
                break;
            }
        }
    }
}
