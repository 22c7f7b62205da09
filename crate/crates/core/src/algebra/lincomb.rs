use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::word::Word;
use crate::scalar::render_ratio;

/// A finitely supported rational combination of words, without zero terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LinComb {
    terms: BTreeMap<Word, BigRational>,
}

impl LinComb {
    pub fn zero() -> Self {
        LinComb::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::term(BigRational::one(), w)
    }

    pub fn term(c: BigRational, w: Word) -> Self {
        let mut out = LinComb::zero();
        out.add_term(c, w);
        out
    }

    pub fn add_term(&mut self, c: BigRational, w: Word) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &BigRational, other: &LinComb) {
        for (w, d) in &other.terms {
            self.add_term(c * d, w.clone());
        }
    }

    pub fn scale(&self, c: &BigRational) -> LinComb {
        let mut out = LinComb::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn coefficient(&self, w: &Word) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Applies `f` to every word and extends linearly.
    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> LinComb {
        let mut out = LinComb::zero();
        for (w, c) in &self.terms {
            out.add_term(c.clone(), f(w));
        }
        out
    }

    /// Extends a word-valued bilinear map to combinations.
    pub fn bilinear(&self, other: &LinComb, f: impl Fn(&Word, &Word) -> LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_scaled(&(a * b), &f(u, v));
            }
        }
        out
    }
}

impl From<Word> for LinComb {
    fn from(w: Word) -> Self {
        LinComb::word(w)
    }
}

impl Add for &LinComb {
    type Output = LinComb;
    fn add(self, rhs: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(&BigRational::one(), rhs);
        out
    }
}

impl Sub for &LinComb {
    type Output = LinComb;
    fn sub(self, rhs: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(&-BigRational::one(), rhs);
        out
    }
}

impl Neg for &LinComb {
    type Output = LinComb;
    fn neg(self) -> LinComb {
        self.scale(&-BigRational::one())
    }
}

/// Concatenation product.
impl Mul for &LinComb {
    type Output = LinComb;
    fn mul(self, rhs: &LinComb) -> LinComb {
        self.bilinear(rhs, |u, v| LinComb::word(u.concat(v)))
    }
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                f.write_str(" ")?;
            }
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{sign}{w}")?;
            } else {
                write!(f, "{sign}{}*{w}", render_ratio(&mag))?;
            }
        }
        Ok(())
    }
}
