//! Reference values from truncated defining series.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// A truncated series and a bound (or, where noted, an estimate) for what
/// was left out.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SeriesValue {
    pub value: [f64; 2],
    pub tail: f64,
}

impl SeriesValue {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.value[0], self.value[1])
    }

    fn new(z: Complex64, tail: f64) -> Self {
        SeriesValue { value: [z.re, z.im], tail }
    }
}

/// `ζ(k) = Σ_{n≥1} n^{−k}` for `k ≥ 2`, summed to `M − 1` with the
/// Euler–Maclaurin tail `M^{1−k}/(k−1) + M^{−k}/2 + k M^{−k−1}/12`.
/// The next correction bounds the error.
pub fn zeta(k: u32) -> Result<SeriesValue> {
    if k < 2 {
        return Err(Error::Precondition(format!("ζ({k}) diverges")));
    }
    const M: u32 = 1000;
    let k = k as i32;
    let head: f64 = (1..M).rev().map(|n| (n as f64).powi(-k)).sum();
    let m = M as f64;
    let kf = k as f64;
    let em = m.powi(1 - k) / (kf - 1.0) + m.powi(-k) / 2.0 + kf * m.powi(-k - 1) / 12.0;
    let bound = kf * (kf + 1.0) * (kf + 2.0) * m.powi(-k - 3) / 720.0;
    Ok(SeriesValue::new(Complex64::new(head + em, 0.0), bound + f64::EPSILON * (head + em)))
}

/// `Σ_{0<n_1<…<n_r<N} Π n_i^{−k_i}`.
pub fn nested_harmonic(ks: &[u32], n: i64) -> f64 {
    let r = ks.len();
    // b[j] = Σ over chains of length j with n_j ≤ current n
    let mut b = vec![0.0; r + 1];
    b[0] = 1.0;
    for m in 1..n {
        let x = m as f64;
        for j in (1..=r).rev() {
            b[j] += b[j - 1] * x.powi(-(ks[j - 1] as i32));
        }
    }
    b[r]
}

/// Partial sums `A(n)` of the series at `n = cut − 1, cut` for each cut.
fn li_partial(zs: &[Complex64], ks: &[u32], cuts: &[usize]) -> Vec<[Complex64; 2]> {
    let r = ks.len();
    // a[j] = Σ_{n_1<…<n_j≤n} z_1^{n_1} z_2^{n_2−n_1} ⋯ z_{j+1}^{n−n_j} / Π n_i^{k_i}
    let mut a = vec![Complex64::new(0.0, 0.0); r + 1];
    a[0] = Complex64::new(1.0, 0.0);
    let mut out = vec![[a[r]; 2]; cuts.len()];
    let last = cuts.iter().copied().max().unwrap_or(0);
    for n in 1..=last {
        let x = n as f64;
        for j in (1..=r).rev() {
            let carry = if j < r { zs[j] } else { Complex64::new(1.0, 0.0) };
            a[j] = carry * a[j] + zs[j - 1] * a[j - 1] / x.powi(ks[j - 1] as i32);
        }
        a[0] *= zs[0];
        for (c, slot) in cuts.iter().zip(out.iter_mut()) {
            if n + 1 == *c {
                slot[0] = a[r];
            } else if n == *c {
                slot[1] = a[r];
            }
        }
    }
    out
}

/// Number of terms summed by [`li`].
pub const LI_TERMS: usize = 1 << 22;

/// `Li^sh(z_1,…,z_r; k_1,…,k_r) = Σ_{0<n_1<…<n_r} z_1^{n_1} z_2^{n_2−n_1} ⋯ / Π n_i^{k_i}`.
///
/// Partial sums are averaged over two consecutive cutoffs, which also damps
/// alternating tails; `tail` is the change of that average between `M/2` and
/// `M`, an a-posteriori estimate rather than a bound. Depth one with `z = 1`
/// goes through [`zeta`].
pub fn li(zs: &[Complex64], ks: &[u32]) -> Result<SeriesValue> {
    li_terms(zs, ks, LI_TERMS)
}

pub fn li_terms(zs: &[Complex64], ks: &[u32], terms: usize) -> Result<SeriesValue> {
    if zs.len() != ks.len() || ks.contains(&0) {
        return Err(Error::Precondition("Li needs matching positive depths".into()));
    }
    if zs.iter().any(|z| z.norm() > 1.0 + 1e-12) {
        return Err(Error::Precondition("Li needs |z_i| ≤ 1".into()));
    }
    if let (Some(&k), Some(z)) = (ks.last(), zs.last()) {
        if k == 1 && (z - 1.0).norm() < 1e-12 {
            return Err(Error::Inadmissible("Li with (k_r, z_r) = (1, 1)".into()));
        }
    }
    if ks.is_empty() {
        return Ok(SeriesValue::new(Complex64::new(1.0, 0.0), 0.0));
    }
    if ks.len() == 1 && (zs[0] - 1.0).norm() < 1e-15 {
        return zeta(ks[0]);
    }
    let sums = li_partial(zs, ks, &[terms / 2, terms]);
    let avg = |p: [Complex64; 2]| (p[0] + p[1]) / 2.0;
    let v = avg(sums[1]);
    Ok(SeriesValue::new(v, (v - avg(sums[0])).norm()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn zeta_two_and_three() {
        let z2 = zeta(2).unwrap();
        assert!(z2.tail < 1e-10);
        // Σ 1/n² by pairing with the telescoping 1/(n(n+1)) series
        let direct: f64 = 1.0 + (1..200_000u64).map(|n| 1.0 / (n as f64 * n as f64 * (n as f64 + 1.0))).sum::<f64>();
        assert!((z2.value[0] - direct).abs() < 1e-10, "{} {}", z2.value[0], direct);
        assert!(zeta(1).is_err());
        let z4 = zeta(4).unwrap().value[0];
        // ζ(2)² = (5/2) ζ(4)
        assert!((z2.value[0].powi(2) - 2.5 * z4).abs() < 1e-12);
    }

    #[test]
    fn nested_sums_by_loops() {
        let n = 30;
        let mut want = 0.0;
        for a in 1..n {
            for b in a + 1..n {
                want += 1.0 / ((a * a) as f64 * b as f64);
            }
        }
        assert!((nested_harmonic(&[2, 1], n) - want).abs() < 1e-13);
        assert_eq!(nested_harmonic(&[], 5), 1.0);
    }

    #[test]
    fn depth_one_polylog() {
        // Li_2(−1) = −ζ(2)/2
        let v = li(&[re(-1.0)], &[2]).unwrap();
        assert!((v.value[0] + zeta(2).unwrap().value[0] / 2.0).abs() < 1e-11, "{v:?}");
        // Li_1(1/2) = log 2
        let v = li_terms(&[re(0.5)], &[1], 200).unwrap();
        assert!((v.value[0] - 2f64.ln()).abs() < 1e-15);
        assert!(li(&[re(1.0)], &[1]).is_err());
        assert!(li(&[re(2.0)], &[2]).is_err());
    }

    #[test]
    fn depth_two_matches_loops() {
        let zs = [re(0.5), re(-0.25)];
        let mut want = re(0.0);
        for a in 1..80 {
            for b in a + 1..80 {
                want += zs[0].powi(a) * zs[1].powi(b - a) / ((a * a) as f64 * b as f64);
            }
        }
        let got = li_terms(&zs, &[2, 1], 200).unwrap().value();
        assert!((got - want).norm() < 1e-14);
    }

    /// Li_3(−1) = Li^sh(1,−1; 2,1) + Li^sh(1,−1; 1,2) − Li^sh(−1,−1; 2,1).
    #[test]
    fn cyclic_sum_for_li3() {
        let l = |z: [f64; 2], k: [u32; 2]| li(&[re(z[0]), re(z[1])], &k).unwrap().value[0];
        let lhs = li(&[re(-1.0)], &[3]).unwrap().value[0];
        let rhs = l([1.0, -1.0], [2, 1]) + l([1.0, -1.0], [1, 2]) - l([-1.0, -1.0], [2, 1]);
        assert!((lhs - rhs).abs() < 1e-8, "{lhs} {rhs}");
        // Li_3(−1) = −(3/4) ζ(3)
        assert!((lhs + 0.75 * zeta(3).unwrap().value[0]).abs() < 1e-12);
    }
}
