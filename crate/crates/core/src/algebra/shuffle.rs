//! Shuffle product, deconcatenation coproduct and antipode.

use num_rational::BigRational;
use num_traits::One;

use super::lincomb::LinComb;
use super::word::Word;

/// `u ⧢ v` on words, by the recursion on first letters. The table holds the
/// shuffle of every pair of suffixes.
pub fn shuffle_words(u: &Word, v: &Word) -> LinComb {
    let (a, b) = (u.letters(), v.letters());
    let (k, l) = (a.len(), b.len());
    let mut table: Vec<Vec<LinComb>> = vec![vec![LinComb::zero(); l + 1]; k + 1];
    for i in (0..=k).rev() {
        for j in (0..=l).rev() {
            table[i][j] = if i == k {
                LinComb::word(Word::new(b[j..].to_vec()))
            } else if j == l {
                LinComb::word(Word::new(a[i..].to_vec()))
            } else {
                let mut t = table[i + 1][j].map_words(|w| w.prepend(&a[i]));
                t.add_scaled(&BigRational::one(), &table[i][j + 1].map_words(|w| w.prepend(&b[j])));
                t
            };
        }
    }
    std::mem::take(&mut table[0][0])
}

pub fn shuffle(u: &LinComb, v: &LinComb) -> LinComb {
    u.bilinear(v, shuffle_words)
}

/// Deconcatenation `Σ_i (a1…ai) ⊗ (a(i+1)…ak)`.
pub fn coproduct(w: &Word) -> Vec<(Word, Word)> {
    (0..=w.len()).map(|i| (w.slice(0, i), w.slice(i, w.len()))).collect()
}

/// `S(e_{a1}⋯e_{ak}) = (-1)^k e_{ak}⋯e_{a1}`.
pub fn antipode(w: &Word) -> LinComb {
    let sign = if w.len() % 2 == 0 { BigRational::one() } else { -BigRational::one() };
    LinComb::term(sign, w.reversed())
}

pub fn antipode_lin(u: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (w, c) in u.terms() {
        out.add_scaled(c, &antipode(w));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn w(v: &[i64]) -> Word {
        Word::ints(v)
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffle_words(&Word::empty(), &w(&[0, 1])), LinComb::word(w(&[0, 1])));
        let mut expected = LinComb::word(w(&[0, 1]));
        expected.add_term(ratio(1, 1), w(&[1, 0]));
        assert_eq!(shuffle_words(&w(&[0]), &w(&[1])), expected);
        let mut expected = LinComb::term(ratio(2, 1), w(&[1, 1, 0]));
        expected.add_term(ratio(1, 1), w(&[1, 0, 1]));
        assert_eq!(shuffle_words(&w(&[1]), &w(&[1, 0])), expected);
    }

    #[test]
    fn shuffle_counts_binomially() {
        let s = shuffle_words(&w(&[0, 0, 0]), &w(&[1, 1]));
        let total: BigRational = s.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, ratio(10, 1));
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(coproduct(&Word::empty()), vec![(Word::empty(), Word::empty())]);
        assert_eq!(coproduct(&w(&[0])), vec![(Word::empty(), w(&[0])), (w(&[0]), Word::empty())]);
        assert_eq!(
            coproduct(&w(&[1, 0])),
            vec![(Word::empty(), w(&[1, 0])), (w(&[1]), w(&[0])), (w(&[1, 0]), Word::empty())]
        );
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&Word::empty()), LinComb::one());
        assert_eq!(antipode(&w(&[0, 1])), LinComb::word(w(&[1, 0])));
        assert_eq!(antipode(&w(&[0, 1, 0])), LinComb::term(ratio(-1, 1), w(&[0, 1, 0])));
    }
}
