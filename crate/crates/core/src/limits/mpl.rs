//! `ζ*`, `Li^sh`, `L^sh` and the symmetric values along `β^Δ`.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::reg::{reg_star_limit, RegLimit};
use super::series::{li, nested_harmonic, SeriesValue};
use super::table::ConvergenceTable;
use crate::algebra::{word_of_index, Alphabet, Index, Label, Word};
use crate::error::{Error, Result};
use crate::eval::delta;
use crate::path::PathSpec;
use crate::scalar::Scalar;
use crate::theta::ThetaPoly;
use crate::Float;

/// Tolerance for comparing two regularized values.
pub const LIMIT_TOL: f64 = 1e-4;

fn c64(a: &Label) -> Complex64 {
    Float::from_gauss(a.value())
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

/// Log degree of `Δ(w)` on a straight piece `(x, y)`: leading `x` letters
/// plus trailing `y` letters.
pub fn straight_log_degree(w: &Word, x: &Label, y: &Label) -> usize {
    let lead = w.letters().iter().take_while(|a| *a == x).count();
    if lead == w.len() {
        return lead;
    }
    lead + w.letters().iter().rev().take_while(|a| *a == y).count()
}

/// Log degree of the θ-coefficient of `Δ_β(w)`: the loop takes one `e_1`
/// and the legs are straight words on `(0, 1)`.
pub fn beta_theta_log_degree(w: &Word) -> usize {
    let (zero, one) = (Label::int(0), Label::int(1));
    (0..w.len())
        .filter(|&p| w.letters()[p] == one)
        .map(|p| {
            straight_log_degree(&w.slice(0, p), &zero, &one)
                + straight_log_degree(&w.slice(p + 1, w.len()).reversed(), &zero, &one)
        })
        .max()
        .unwrap_or(0)
}

/// Trailing `k_i = 1` entries.
pub fn zeta_log_degree(ks: &[u32]) -> usize {
    ks.iter().rev().take_while(|&&k| k == 1).count()
}

/// `ζ*(k_1,…,k_r) = Reg* Σ_{0<n_1<…<n_r<N} Π n_i^{−k_i}`.
pub fn zeta_star(ks: &[u32], n_list: &[i64]) -> Result<RegLimit> {
    if ks.contains(&0) {
        return Err(Error::Precondition("depths must be positive".into()));
    }
    reg_star_limit(|n| Ok(ThetaPoly::constant(Complex64::new(nested_harmonic(ks, n), 0.0))), zeta_log_degree(ks), n_list)
}

fn with_labels(base: &[i64], extra: impl IntoIterator<Item = Label>) -> Alphabet {
    Alphabet::new(base.iter().map(|&v| Label::int(v)).chain(extra))
}

/// `I_dch(w) = Reg* Δ_{(0,1)}(w)`.
pub fn i_dch(w: &Word, alphabet: &Alphabet, n_list: &[i64]) -> Result<RegLimit> {
    let spec = PathSpec::new("pos:0..1", alphabet.clone());
    let degree = straight_log_degree(w, &Label::int(0), &Label::int(1));
    reg_star_limit(|n| delta::<Float>(&spec.build(n)?, w), degree, n_list)
}

/// `I_β(w)[θ]`, the regularized θ-coefficient along `β^Δ`.
pub fn i_beta_theta(w: &Word, alphabet: &Alphabet, n_list: &[i64]) -> Result<RegLimit> {
    let spec = PathSpec::new("beta", alphabet.clone());
    reg_star_limit(
        |n| Ok(ThetaPoly::constant(delta::<Float>(&spec.build(n)?, w)?.coeff_at_theta())),
        beta_theta_log_degree(w),
        n_list,
    )
}

fn inverse(z: &Label) -> Result<Label> {
    Label::int(1).div(z).ok_or_else(|| Error::Precondition("z_i = 0 has no inverse".into()))
}

/// `(−1)^r Li^sh(1/z_1,…,1/z_r; k)` for `ι = (k; z)`.
pub fn li_reference(iota: &Index) -> Result<SeriesValue> {
    let zs: Vec<Complex64> = iota.points().iter().map(|z| inverse(z).map(|w| c64(&w))).collect::<Result<_>>()?;
    let mut v = li(&zs, iota.depths())?;
    if iota.depth() % 2 == 1 {
        v.value = [-v.value[0], -v.value[1]];
    }
    Ok(v)
}

/// Δ along `(0, 1)` for `W(ι)` against its limit `(−1)^r Li^sh(1/z; k)`.
pub fn li_shuffle(iota: &Index, n_list: &[i64]) -> Result<ConvergenceTable> {
    iota.check_admissible()?;
    for z in iota.points() {
        if z.is_zero() || c64(z).norm() < 1.0 {
            return Err(Error::Precondition(format!("label {z} must satisfy |z| ≥ 1")));
        }
    }
    let alphabet = with_labels(&[0, 1], iota.points().iter().cloned());
    let w = word_of_index(iota, &alphabet)?;
    let reference = li_reference(iota)?;
    let spec = PathSpec::new("pos:0..1", alphabet);
    let samples: Vec<(i64, Complex64)> = n_list
        .par_iter()
        .map(|&n| Ok((n, delta::<Float>(&spec.build(n)?, &w)?.coeff(0))))
        .collect::<Result<_>>()?;
    ConvergenceTable::new(&samples, reference.value())
}

/// `L^sh(z; k) = I_dch(e_{1/z_1} e_0^{k_1−1} ⋯ e_{1/z_r} e_0^{k_r−1})`.
pub fn l_shuffle(ks: &[u32], zs: &[Label], n_list: &[i64]) -> Result<RegLimit> {
    let labels: Vec<Label> = zs.iter().map(inverse).collect::<Result<_>>()?;
    let alphabet = with_labels(&[0, 1], labels.iter().cloned());
    l_shuffle_in(ks, &labels, &alphabet, n_list)
}

/// `L^sh` given the word labels `1/z_i` directly, evaluated over `alphabet`.
fn l_shuffle_in(ks: &[u32], labels: &[Label], alphabet: &Alphabet, n_list: &[i64]) -> Result<RegLimit> {
    if ks.is_empty() {
        return Ok(RegLimit { value: vec![[1.0, 0.0]], fits: Vec::new() });
    }
    let iota = Index::new(ks.to_vec(), labels.to_vec())?;
    i_dch(&word_of_index(&iota, alphabet)?, alphabet, n_list)
}

#[derive(Clone, Debug, Serialize)]
pub struct LimitComparison {
    pub name: String,
    pub args: String,
    pub lhs: [f64; 2],
    pub rhs: [f64; 2],
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl LimitComparison {
    pub fn new(name: &str, args: String, lhs: Complex64, rhs: Complex64, tolerance: f64) -> Self {
        let residual = (lhs - rhs).norm();
        let tolerance = tolerance * lhs.norm().max(rhs.norm()).max(1.0);
        LimitComparison { name: name.into(), args, lhs: pair(lhs), rhs: pair(rhs), residual, tolerance, passed: residual <= tolerance }
    }
}

/// `e_{u/z_1} e_0^{k_1−1} ⋯ e_{u/z_r} e_0^{k_r−1} e_{u/z_{r+1}}`.
fn symmetric_word(u: &Label, ks: &[u32], zs: &[Label], alphabet: &Alphabet) -> Result<Word> {
    let ratio = |z: &Label| -> Result<Label> {
        let q = u.div(z).ok_or_else(|| Error::Precondition("z_i = 0".into()))?;
        if !alphabet.contains(&q) {
            return Err(Error::ClosureViolation { u: u.to_string(), z: z.to_string() });
        }
        Ok(q)
    };
    let (last, head) = zs.split_last().expect("r + 1 ≥ 1 points");
    let iota = Index::new(ks.to_vec(), head.iter().map(ratio).collect::<Result<_>>()?)?;
    Ok(word_of_index(&iota, alphabet)?.append(&ratio(last)?))
}

/// Both sides of the symmetric MPL theorem:
///
/// ```text
/// Σ_{u∈D} u^α I_β(w_u)[θ]
///   = Σ_{i=0}^{r} (−1)^{k_{i+1}+…+k_r} z_{i+1}^α
///       L^sh(z_1/z_{i+1},…,z_i/z_{i+1}; k_1,…,k_i) L^sh(z_{r+1}/z_{i+1},…,z_{i+2}/z_{i+1}; k_r,…,k_{i+1})
/// ```
///
/// `u = 0` is skipped (its term vanishes for α ≥ 1), including its closure check.
pub fn symmetric_mpl_check(
    alpha: u32,
    ks: &[u32],
    zs: &[Label],
    alphabet: &Alphabet,
    n_list: &[i64],
) -> Result<LimitComparison> {
    if alpha == 0 || ks.contains(&0) {
        return Err(Error::Precondition("α and k_i must be positive".into()));
    }
    if zs.len() != ks.len() + 1 {
        return Err(Error::Precondition(format!("need r + 1 = {} points, got {}", ks.len() + 1, zs.len())));
    }
    for z in zs {
        alphabet.check(z)?;
        if z.is_zero() {
            return Err(Error::Precondition("z_i must be nonzero".into()));
        }
    }
    let units: Vec<&Label> = alphabet.labels().iter().filter(|u| !u.is_zero()).collect();
    let words: Vec<(Complex64, Word)> = units
        .iter()
        .map(|u| Ok((c64(u).powu(alpha), symmetric_word(u, ks, zs, alphabet)?)))
        .collect::<Result<_>>()?;
    let mut lhs = Complex64::new(0.0, 0.0);
    for (weight, w) in &words {
        lhs += weight * i_beta_theta(w, alphabet, n_list)?.coeff(0);
    }
    let r = ks.len();
    let mut rhs = Complex64::new(0.0, 0.0);
    for i in 0..=r {
        let zi = &zs[i];
        // labels of L^sh are the inverses z_{i+1}/z_j
        let over = |j: usize| zi.div(&zs[j]).expect("nonzero");
        let left: Vec<Label> = (0..i).map(over).collect();
        let right: Vec<Label> = (i + 1..=r).rev().map(over).collect();
        let right_k: Vec<u32> = ks[i..].iter().rev().copied().collect();
        let a = l_shuffle_in(&ks[..i], &left, alphabet, n_list)?.coeff(0);
        let b = l_shuffle_in(&right_k, &right, alphabet, n_list)?.coeff(0);
        let sign = if ks[i..].iter().sum::<u32>() % 2 == 0 { 1.0 } else { -1.0 };
        rhs += sign * c64(zi).powu(alpha) * a * b;
    }
    let args = format!(
        "alpha={alpha}; k=({}); z=({}); D={alphabet}",
        join(ks.iter()),
        join(zs.iter())
    );
    Ok(LimitComparison::new("symmetric-mpl", args, lhs, rhs, LIMIT_TOL))
}

fn join<T: ToString>(xs: impl Iterator<Item = T>) -> String {
    xs.map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Clone, Debug, Serialize)]
pub struct ZetaSReport {
    pub k: Vec<u32>,
    /// `I_β(e_1 e_0^{k_1−1} ⋯ e_1 e_0^{k_r−1} e_1)[θ]`.
    pub beta_route: [f64; 2],
    /// `Σ_i (−1)^{k_{i+1}+…+k_r} ζ*(k_1,…,k_i) ζ*(k_r,…,k_{i+1})`.
    pub combinatorial: [f64; 2],
    pub residual: f64,
    /// Residual against `(−1)^r` times the combinatorial value.
    pub signed_residual: f64,
}

pub fn zeta_s_star(ks: &[u32], n_list: &[i64]) -> Result<ZetaSReport> {
    if ks.contains(&0) {
        return Err(Error::Precondition("depths must be positive".into()));
    }
    let r = ks.len();
    let d = Alphabet::ints(&[0, 1]);
    let w = word_of_index(&Index::zeta(ks)?, &d)?.append(&Label::int(1));
    let beta = i_beta_theta(&w, &d, n_list)?.coeff(0);
    let zs = |k: &[u32]| -> Result<Complex64> {
        if k.is_empty() {
            Ok(Complex64::new(1.0, 0.0))
        } else {
            Ok(zeta_star(k, n_list)?.coeff(0))
        }
    };
    let mut comb = Complex64::new(0.0, 0.0);
    for i in 0..=r {
        let rev: Vec<u32> = ks[i..].iter().rev().copied().collect();
        let sign = if ks[i..].iter().sum::<u32>() % 2 == 0 { 1.0 } else { -1.0 };
        comb += sign * zs(&ks[..i])? * zs(&rev)?;
    }
    let flip = if r % 2 == 0 { 1.0 } else { -1.0 };
    Ok(ZetaSReport {
        k: ks.to_vec(),
        beta_route: pair(beta),
        combinatorial: pair(comb),
        residual: (beta - comb).norm(),
        signed_residual: (beta - flip * comb).norm(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::reg::default_n_list;
    use crate::limits::series::zeta;

    fn small() -> Vec<i64> {
        (9..=14).map(|j| 1i64 << j).collect()
    }

    #[test]
    fn degrees() {
        let (x, y) = (Label::int(0), Label::int(1));
        assert_eq!(straight_log_degree(&Word::ints(&[0, 0]), &x, &y), 2);
        assert_eq!(straight_log_degree(&Word::ints(&[0, 1, 0, 1]), &x, &y), 2);
        assert_eq!(straight_log_degree(&Word::ints(&[1, 0]), &x, &y), 0);
        assert_eq!(straight_log_degree(&Word::empty(), &x, &y), 0);
        assert_eq!(beta_theta_log_degree(&Word::ints(&[1, 0, 1])), 0);
        assert_eq!(beta_theta_log_degree(&Word::ints(&[1, 0, 1, 1])), 1);
        assert_eq!(zeta_log_degree(&[2, 1, 1]), 2);
    }

    #[test]
    fn zeta_star_values() {
        let ns = default_n_list();
        let z2 = zeta(2).unwrap().value[0];
        assert!((zeta_star(&[2], &ns).unwrap().coeff(0).re - z2).abs() < 1e-6);
        assert!(zeta_star(&[1], &ns).unwrap().coeff(0).norm() < 1e-6);
        // ζ*(1,1) = (ζ*(1)² − ζ(2))/2
        assert!((zeta_star(&[1, 1], &ns).unwrap().coeff(0).re + z2 / 2.0).abs() < 1e-5);
    }

    #[test]
    fn straight_limits_match_zeta_star() {
        let ns = small();
        for ks in [vec![2], vec![3], vec![2, 1]] {
            let sign = if ks.len() % 2 == 0 { 1.0 } else { -1.0 };
            let want = sign * zeta_star(&ks, &default_n_list()).unwrap().coeff(0).re;
            let ones = vec![Label::int(1); ks.len()];
            let got = l_shuffle(&ks, &ones, &ns).unwrap().coeff(0).re;
            assert!((got - want).abs() < 1e-5, "{ks:?}: {got} {want}");
        }
    }

    #[test]
    fn li_shuffle_table() {
        let iota = Index::new(vec![2], vec![Label::int(-1)]).unwrap();
        let t = li_shuffle(&iota, &small()).unwrap();
        // −Li_2(−1) = ζ(2)/2
        assert!((t.reference[0] - zeta(2).unwrap().value[0] / 2.0).abs() < 1e-10);
        assert!(t.rows.windows(2).all(|p| p[1].error < p[0].error));
        assert!(t.exponent.unwrap() >= 0.9);
        let bad = Index::new(vec![1], vec![Label::int(1)]).unwrap();
        assert!(matches!(li_shuffle(&bad, &small()), Err(Error::Inadmissible(_))));
    }

    #[test]
    fn l_shuffle_regularizes() {
        let ns = small();
        assert!(l_shuffle(&[1], &[Label::int(1)], &ns).unwrap().coeff(0).norm() < 1e-5);
        let l = l_shuffle(&[2], &[Label::int(-1)], &ns).unwrap().coeff(0).re;
        let t = li_shuffle(&Index::new(vec![2], vec![Label::int(-1)]).unwrap(), &ns).unwrap();
        assert!((l - t.reference[0]).abs() < 1e-5);
        assert!(l_shuffle(&[2], &[Label::int(0)], &ns).is_err());
    }

    #[test]
    fn symmetric_theorem_holds() {
        let ns = small();
        let d = Alphabet::ints(&[0, 1]);
        for (ks, alpha) in [(vec![2], 1), (vec![2, 1], 2), (vec![1], 1)] {
            let zs = vec![Label::int(1); ks.len() + 1];
            let r = symmetric_mpl_check(alpha, &ks, &zs, &d, &ns).unwrap();
            assert!(r.passed, "{r:?}");
        }
        let d = Alphabet::ints(&[0, 1, -1]);
        let zs = [Label::int(1), Label::int(-1)];
        let r = symmetric_mpl_check(1, &[2], &zs, &d, &ns).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn closure_is_enforced() {
        let d = Alphabet::ints(&[0, 1, 2]);
        let zs = [Label::int(1), Label::int(2)];
        let e = symmetric_mpl_check(1, &[2], &zs, &d, &small()).unwrap_err();
        assert!(matches!(e, Error::ClosureViolation { .. }), "{e:?}");
    }

    #[test]
    fn zeta_s_routes() {
        let ns = default_n_list();
        let z2 = zeta(2).unwrap().value[0];
        let two = zeta_s_star(&[2], &ns).unwrap();
        assert!((two.combinatorial[0] - 2.0 * z2).abs() < 1e-5);
        assert!((two.beta_route[0] + 2.0 * z2).abs() < 1e-5);
        assert!(two.signed_residual < 1e-5);
        let one = zeta_s_star(&[1], &ns).unwrap();
        assert!(one.combinatorial[0].abs() < 1e-5);
        let mixed = zeta_s_star(&[2, 1], &ns).unwrap();
        assert!(mixed.residual < 1e-5, "{mixed:?}");
    }
}
