use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceRow {
    pub n: i64,
    pub re: f64,
    pub im: f64,
    /// `|value − reference|`.
    pub error: f64,
    /// `N·error / log N`.
    pub normalized: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceTable {
    pub reference: [f64; 2],
    pub rows: Vec<ConvergenceRow>,
    /// `p` in `error ≈ C·N^{−p}`, by least squares on the log-log data.
    pub exponent: Option<f64>,
}

pub const CSV_HEADER: &str = "N,re,im,abs_error,normalized_error";

impl ConvergenceTable {
    pub fn new(samples: &[(i64, Complex64)], reference: Complex64) -> Result<Self> {
        if samples.windows(2).any(|p| p[0].0 >= p[1].0) {
            return Err(Error::Precondition("N column must increase".into()));
        }
        let rows: Vec<ConvergenceRow> = samples
            .iter()
            .map(|&(n, v)| {
                let error = (v - reference).norm();
                ConvergenceRow { n, re: v.re, im: v.im, error, normalized: n as f64 * error / (n as f64).ln() }
            })
            .collect();
        let exponent = decay_exponent(&rows.iter().map(|r| (r.n, r.error)).collect::<Vec<_>>());
        Ok(ConvergenceTable { reference: [reference.re, reference.im], rows, exponent })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!("{},{:e},{:e},{:e},{:e}\n", r.n, r.re, r.im, r.error, r.normalized));
        }
        out
    }
}

/// Slope of `−log error` against `log N`; `None` with fewer than two nonzero errors.
pub fn decay_exponent(points: &[(i64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> =
        points.iter().filter(|(_, e)| *e > 0.0).map(|&(n, e)| ((n as f64).ln(), e.ln())).collect();
    if pts.len() < 2 {
        return None;
    }
    let m = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let (num, den) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + (x - mx) * (y - my), b + (x - mx).powi(2)));
    Some(-num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_of_power_law() {
        let pts: Vec<_> = (4..10).map(|j| (1i64 << j, 3.0 / (1u64 << (2 * j)) as f64)).collect();
        assert!((decay_exponent(&pts).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(decay_exponent(&[(2, 0.0), (4, 1.0)]), None);
    }

    #[test]
    fn table_and_csv() {
        let s = [(8, Complex64::new(1.5, 0.0)), (16, Complex64::new(1.25, 0.0))];
        let t = ConvergenceTable::new(&s, Complex64::new(1.0, 0.0)).unwrap();
        assert_eq!(t.rows[1].error, 0.25);
        assert!((t.exponent.unwrap() - 1.0).abs() < 1e-12);
        let csv = t.to_csv();
        assert!(csv.starts_with(CSV_HEADER));
        assert_eq!(csv.lines().count(), 3);
        assert!(ConvergenceTable::new(&[s[1], s[0]], Complex64::new(0.0, 0.0)).is_err());
    }
}
