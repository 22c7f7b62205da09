//! Streaming prefix-sum evaluation of Δ_{N,γ}.
//!
//! With `acc[i]` holding the sum over chains `n_1 ≤ … ≤ n_i ≤ n` of the first
//! `i` forms, one provision point `n` updates `acc[i] += ω_{a_i}(n)·acc[i-1]`
//! for `i` ascending. Processing S_γ in `<_γ` order gives Δ in `acc[k]`.

use super::forms::{check_poles, label_at_tick, scaled_label, singular_coef};
use crate::algebra::{Label, LinComb, MultiWord, Word};
use crate::error::{Error, Result};
use crate::path::{DiscretePath, Piece};
use crate::scalar::Scalar;
use crate::theta::ThetaPoly;

/// Labels carried by each summation index, deduplicated.
pub(crate) struct Slots {
    labels: Vec<Label>,
    positions: Vec<Vec<usize>>,
}

impl Slots {
    pub(crate) fn from_word(w: &Word) -> Self {
        Self::build(w.letters().iter().map(std::slice::from_ref))
    }

    pub(crate) fn from_multi(w: &MultiWord) -> Self {
        Self::build(w.letters().iter().map(|m| m.labels()))
    }

    fn build<'a>(letters: impl Iterator<Item = &'a [Label]>) -> Self {
        let mut labels: Vec<Label> = Vec::new();
        let mut positions = Vec::new();
        for letter in letters {
            let slot = letter
                .iter()
                .map(|a| match labels.iter().position(|b| b == a) {
                    Some(j) => j,
                    None => {
                        labels.push(a.clone());
                        labels.len() - 1
                    }
                })
                .collect();
            positions.push(slot);
        }
        Slots { labels, positions }
    }

    fn k(&self) -> usize {
        self.positions.len()
    }
}

/// Row-major `(k+1) × width` table of θ-coefficients.
struct Chain<S> {
    width: usize,
    acc: Vec<S>,
    top: Vec<Option<usize>>,
}

impl<S: Scalar> Chain<S> {
    fn new(k: usize, width: usize) -> Self {
        let mut acc = vec![S::zero(); (k + 1) * width];
        acc[0] = S::one();
        let mut top = vec![None; k + 1];
        top[0] = Some(0);
        Chain { width, acc, top }
    }

    fn step(&mut self, coefs: &[S], powers: &[usize]) {
        let w = self.width;
        for i in 1..self.top.len() {
            let c = &coefs[i - 1];
            let Some(hi) = self.top[i - 1] else { continue };
            if c.is_zero() {
                continue;
            }
            let p = powers[i - 1];
            let (lower, upper) = self.acc.split_at_mut(i * w);
            let prev = &lower[(i - 1) * w..];
            let row = &mut upper[..w];
            for d in 0..=hi {
                if !prev[d].is_zero() {
                    row[d + p] += c.clone() * prev[d].clone();
                }
            }
            self.top[i] = Some(self.top[i].map_or(hi + p, |t| t.max(hi + p)));
        }
    }

    fn finish(mut self) -> ThetaPoly<S> {
        let k = self.top.len() - 1;
        ThetaPoly::from_coeffs(self.acc.split_off(k * self.width))
    }
}

/// General nested sum over the provision with the given slot forms.
pub(crate) fn run<S: Scalar>(path: &DiscretePath, slots: &Slots, absolute: bool) -> Result<ThetaPoly<S>> {
    let grid = path.grid();
    for a in &slots.labels {
        grid.alphabet().check(a)?;
    }
    let k = slots.k();
    let has_singular = path.pieces().iter().any(|p| matches!(p, Piece::Singular { .. }));
    let powers: Vec<usize> = slots.positions.iter().map(Vec::len).collect();
    let width = if has_singular { 1 + powers.iter().sum::<usize>() } else { 1 };
    let mut chain = Chain::<S>::new(k, width);
    let zeros = vec![0; k];
    let mut values = vec![S::zero(); slots.labels.len()];
    let mut coefs = vec![S::zero(); k];

    let fill = |values: &[S], coefs: &mut [S]| {
        for (c, pos) in coefs.iter_mut().zip(&slots.positions) {
            *c = match pos.as_slice() {
                [j] => values[*j].clone(),
                _ => pos.iter().fold(S::one(), |acc, &j| acc * values[j].clone()),
            };
        }
    };
    let take_abs = |v: S| -> Result<S> {
        v.modulus().ok_or_else(|| Error::Precondition(format!("|·| of the non-real factor {} is not exact", v.render())))
    };

    for piece in path.pieces() {
        match *piece {
            Piece::Positive { .. } | Piece::Negative { .. } => {
                check_poles(grid, piece, &slots.labels)?;
                let (lo, hi) = piece.integer_range().expect("straight piece");
                let positive = matches!(piece, Piece::Positive { .. });
                let shifts: Vec<S> = slots
                    .labels
                    .iter()
                    .map(|a| {
                        let s = scaled_label::<S>(a, grid.n());
                        if positive { -s } else { s }
                    })
                    .collect();
                for n in lo..=hi {
                    let x = S::from_i64(n);
                    for (v, s) in values.iter_mut().zip(&shifts) {
                        *v = S::one() / (x.clone() + s.clone());
                        if absolute {
                            *v = take_abs(v.clone())?;
                        }
                    }
                    fill(&values, &mut coefs);
                    chain.step(&coefs, &zeros);
                }
            }
            Piece::Singular { center, start, end, sign } => {
                for (v, a) in values.iter_mut().zip(&slots.labels) {
                    *v = if label_at_tick(grid, a, center) { singular_coef(sign, grid.n()) } else { S::zero() };
                    if absolute {
                        *v = take_abs(v.clone())?;
                    }
                }
                fill(&values, &mut coefs);
                for _ in start..end {
                    chain.step(&coefs, &powers);
                }
            }
            Piece::Trivial(_) => {}
        }
    }
    Ok(chain.finish())
}

/// `Δ_{N,γ}(w)`; `O(k·|S_γ|)` field operations, streaming the provision.
pub fn delta<S: Scalar>(path: &DiscretePath, w: &Word) -> Result<ThetaPoly<S>> {
    run(path, &Slots::from_word(w), false)
}

/// Linear extension of [`delta`].
pub fn delta_lin<S: Scalar>(path: &DiscretePath, u: &LinComb) -> Result<ThetaPoly<S>> {
    let mut total = ThetaPoly::zero();
    for (w, c) in u.terms() {
        total += &delta::<S>(path, w)?.scale(&S::from_ratio(c));
    }
    Ok(total)
}

fn single_straight(path: &DiscretePath) -> Result<()> {
    match path.pieces() {
        [p] if p.is_straight() => Ok(()),
        _ => Err(Error::Precondition(format!("multi-letter sums are defined on a single straight piece, got {path}"))),
    }
}

/// Nested sum over a P_D word: index `n_i` carries the product of the forms of
/// all labels of the i-th multi-letter.
pub fn delta_multi<S: Scalar>(path: &DiscretePath, w: &MultiWord) -> Result<S> {
    single_straight(path)?;
    Ok(run::<S>(path, &Slots::from_multi(w), false)?.coeff(0))
}

/// `|Δ|`: the same sum with every form replaced by its absolute value.
pub fn delta_multi_abs<S: Scalar>(path: &DiscretePath, w: &MultiWord) -> Result<S> {
    single_straight(path)?;
    Ok(run::<S>(path, &Slots::from_multi(w), true)?.coeff(0))
}

/// Δ through the decomposition over pieces: the sum over splittings
/// `0 = i_0 ≤ … ≤ i_r = k` of the per-piece values of the word's segments.
pub fn delta_piecewise<S: Scalar>(path: &DiscretePath, w: &Word) -> Result<ThetaPoly<S>> {
    let k = w.len();
    let r = path.pieces().len();
    // tail[i] = value of the remaining pieces on w[i..]
    let mut tail: Vec<ThetaPoly<S>> = (0..=k).map(|i| if i == k { ThetaPoly::one() } else { ThetaPoly::zero() }).collect();
    for j in (0..r).rev() {
        let piece = path.subpath(j..j + 1);
        let mut next = vec![ThetaPoly::zero(); k + 1];
        for (i, slot) in next.iter_mut().enumerate() {
            for m in i..=k {
                if tail[m].is_zero() {
                    continue;
                }
                let v = delta::<S>(&piece, &w.slice(i, m))?;
                *slot += &(&v * &tail[m]);
            }
        }
        tail = next;
    }
    Ok(tail.swap_remove(0))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::Alphabet;
    use crate::path::{parse_path, Grid};
    use crate::scalar::parse_gauss;
    use crate::{Exact, Float};

    fn grid(n: i64, d: &[i64]) -> Arc<Grid> {
        Arc::new(Grid::new(n, Alphabet::ints(d)).unwrap())
    }

    fn exact(s: &str) -> Exact {
        parse_gauss(s).unwrap()
    }

    #[test]
    fn empty_word_is_one() {
        let p = DiscretePath::beta(grid(4, &[0, 1])).unwrap();
        assert_eq!(delta::<Exact>(&p, &Word::empty()).unwrap(), ThetaPoly::one());
    }

    #[test]
    fn example_sum_at_four() {
        // Σ_{0<a≤b≤c<4} 1/((a-4)bc)
        let mut want = exact("0");
        for a in 1..4i64 {
            for b in a..4 {
                for c in b..4 {
                    want += exact(&format!("1/{}", (a - 4) * b * c));
                }
            }
        }
        let p = DiscretePath::dch(grid(4, &[0, 1])).unwrap();
        let got = delta::<Exact>(&p, &Word::ints(&[1, 0, 0])).unwrap();
        assert_eq!(got, ThetaPoly::constant(want));
    }

    #[test]
    fn multi_letter_examples() {
        let p = DiscretePath::dch(grid(4, &[0, 1])).unwrap();
        let w = MultiWord::parse("e[1,1]").unwrap();
        assert_eq!(delta_multi::<Exact>(&p, &w).unwrap(), exact("49/36"));
        let w = MultiWord::parse("e[0]").unwrap();
        assert_eq!(delta_multi_abs::<Exact>(&p, &w).unwrap(), exact("11/6"));
        let w = MultiWord::parse("e[1]").unwrap();
        assert_eq!(delta_multi_abs::<Exact>(&p, &w).unwrap(), exact("11/6"));
        let single = MultiWord::parse("e[1]e[0]e[0]").unwrap();
        assert_eq!(
            ThetaPoly::constant(delta_multi::<Exact>(&p, &single).unwrap()),
            delta::<Exact>(&p, &Word::ints(&[1, 0, 0])).unwrap()
        );
        let beta = DiscretePath::beta(grid(4, &[0, 1])).unwrap();
        assert!(delta_multi::<Exact>(&beta, &single).is_err());
    }

    #[test]
    fn absolute_rejects_non_real_exact() {
        let g = Arc::new(Grid::new(4, Alphabet::parse("0,1,i").unwrap()).unwrap());
        let p = DiscretePath::dch(g).unwrap();
        let w = MultiWord::parse("e[i]").unwrap();
        assert!(delta_multi_abs::<Exact>(&p, &w).is_err());
        assert!(delta_multi_abs::<Float>(&p, &w).is_ok());
    }

    #[test]
    fn beta_has_theta_term() {
        let p = DiscretePath::beta(grid(4, &[0, 1])).unwrap();
        let v = delta::<Exact>(&p, &Word::ints(&[1])).unwrap();
        assert_eq!(v.coeff(1), exact("1"));
        assert_eq!(v.degree(), Some(1));
    }

    #[test]
    fn piecewise_matches() {
        let g = grid(6, &[0, 1, -1]);
        let p = parse_path("beta", g.clone()).unwrap();
        for w in [[1, 0, 1], [0, 1, 1], [-1, 1, 0], [1, 1, 1]] {
            let w = Word::ints(&w);
            assert_eq!(delta_piecewise::<Exact>(&p, &w).unwrap(), delta::<Exact>(&p, &w).unwrap());
        }
    }

    #[test]
    fn rejects_labels_outside_alphabet() {
        let p = DiscretePath::dch(grid(4, &[0, 1])).unwrap();
        assert!(matches!(delta::<Exact>(&p, &Word::ints(&[2])), Err(Error::LabelNotInAlphabet(_))));
    }

    #[test]
    fn float_agrees_with_exact() {
        let p = DiscretePath::beta(grid(8, &[0, 1, -1])).unwrap();
        let w = Word::ints(&[1, -1, 0, 1]);
        let e = delta::<Exact>(&p, &w).unwrap();
        let f = delta::<Float>(&p, &w).unwrap();
        assert!(e.map(|z| z.to_c64()).approx_eq(&f, 1e-12));
    }
}
