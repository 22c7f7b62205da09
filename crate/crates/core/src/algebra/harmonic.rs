//! The harmonic product on H¹ = Q ⊕ e1 Q⟨e0,e1⟩ and harmonic regularization.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::lincomb::LinComb;
use super::word::{Label, Word};
use crate::error::{Error, Result};

fn is_binary(w: &Word) -> bool {
    w.letters().iter().all(|a| a.is_zero() || a.is_one())
}

/// Empty, or a word over {0,1} starting with e1.
pub fn in_h1(w: &Word) -> bool {
    is_binary(w) && w.first().is_none_or(Label::is_one)
}

/// Empty, or a word over {0,1} starting with e1 and ending with e0.
pub fn in_h0(w: &Word) -> bool {
    in_h1(w) && w.last().is_none_or(Label::is_zero)
}

fn check_h1(u: &LinComb) -> Result<()> {
    match u.terms().find(|(w, _)| !in_h1(w)) {
        Some((w, _)) => Err(Error::NotInH1(w.to_string())),
        None => Ok(()),
    }
}

/// `u ∗ v` for words over {0,1}; no membership check.
pub(crate) fn harmonic_words(u: &Word, v: &Word) -> LinComb {
    let (a, b) = (u.letters(), v.letters());
    let (k, l) = (a.len(), b.len());
    let zero = Label::int(0);
    let mut table: Vec<Vec<LinComb>> = vec![vec![LinComb::zero(); l + 1]; k + 1];
    for i in (0..=k).rev() {
        for j in (0..=l).rev() {
            table[i][j] = if i == k {
                LinComb::word(Word::new(b[j..].to_vec()))
            } else if j == l {
                LinComb::word(Word::new(a[i..].to_vec()))
            } else {
                let head = a[i].mul(&b[j]);
                let mut inner = &table[i + 1][j] + &table[i][j + 1];
                inner.add_scaled(&-BigRational::one(), &table[i + 1][j + 1].map_words(|w| w.prepend(&zero)));
                inner.map_words(|w| w.prepend(&head))
            };
        }
    }
    std::mem::take(&mut table[0][0])
}

pub fn harmonic(u: &LinComb, v: &LinComb) -> Result<LinComb> {
    check_h1(u)?;
    check_h1(v)?;
    Ok(u.bilinear(v, harmonic_words))
}

/// `e1 ∗ e1 ∗ ⋯ ∗ e1` (n factors).
pub fn harmonic_power(n: usize) -> LinComb {
    let e1 = LinComb::word(Word::ints(&[1]));
    (0..n).fold(LinComb::one(), |acc, _| acc.bilinear(&e1, harmonic_words))
}

fn trailing_ones(w: &Word) -> usize {
    w.letters().iter().rev().take_while(|a| a.is_one()).count()
}

/// Coefficients `w_0, …, w_n ∈ H⁰` with `u = Σ_i w_i ∗ e1^{∗i}`.
///
/// Triangular in the number of trailing e1: for `v = x e1^n` with `x ∈ H⁰`,
/// `x ∗ e1^{∗n}` contains `v` with coefficient n! and otherwise only words with
/// fewer trailing e1.
pub fn hoffman_decomposition(u: &LinComb) -> Result<Vec<LinComb>> {
    check_h1(u)?;
    let mut rest = u.clone();
    let mut parts: Vec<LinComb> = Vec::new();
    let mut powers: Vec<LinComb> = vec![LinComb::one()];
    while let Some(n) = rest.terms().map(|(w, _)| trailing_ones(w)).max() {
        let (v, c) = rest
            .terms()
            .find(|(w, _)| trailing_ones(w) == n)
            .map(|(w, c)| (w.clone(), c.clone()))
            .expect("max exists");
        let head = v.slice(0, v.len() - n);
        while powers.len() <= n {
            let next = powers.last().unwrap().bilinear(&LinComb::word(Word::ints(&[1])), harmonic_words);
            powers.push(next);
        }
        let product = LinComb::word(head.clone()).bilinear(&powers[n], harmonic_words);
        let lead = product.coefficient(&v);
        debug_assert!(!lead.is_zero(), "leading term missing for {v}");
        let factor = c / lead;
        if parts.len() <= n {
            parts.resize(n + 1, LinComb::zero());
        }
        parts[n].add_term(factor.clone(), head);
        rest.add_scaled(&-factor, &product);
    }
    if parts.is_empty() {
        parts.push(LinComb::zero());
    }
    Ok(parts)
}

/// Constant term of the Hoffman decomposition.
pub fn reg_star(u: &LinComb) -> Result<LinComb> {
    Ok(hoffman_decomposition(u)?.swap_remove(0))
}

pub fn reg_star_word(w: &Word) -> Result<LinComb> {
    reg_star(&LinComb::word(w.clone()))
}
