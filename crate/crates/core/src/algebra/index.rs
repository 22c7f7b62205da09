use std::fmt;

use super::word::{Alphabet, Label, Word};
use crate::error::{Error, Result};

/// A pair of sequences `(k_1,…,k_r; z_1,…,z_r)` with `k_i ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Index {
    depths: Vec<u32>,
    points: Vec<Label>,
}

impl Index {
    pub fn new(depths: Vec<u32>, points: Vec<Label>) -> Result<Self> {
        if depths.len() != points.len() {
            return Err(Error::Precondition(format!(
                "{} depths but {} points",
                depths.len(),
                points.len()
            )));
        }
        if depths.contains(&0) {
            return Err(Error::Precondition("depths must be positive".into()));
        }
        Ok(Index { depths, points })
    }

    /// All points equal to 1.
    pub fn zeta(depths: &[u32]) -> Result<Self> {
        Self::new(depths.to_vec(), vec![Label::int(1); depths.len()])
    }

    pub fn depths(&self) -> &[u32] {
        &self.depths
    }

    pub fn points(&self) -> &[Label] {
        &self.points
    }

    pub fn depth(&self) -> usize {
        self.depths.len()
    }

    pub fn weight(&self) -> u32 {
        self.depths.iter().sum()
    }

    /// `(k_r, z_r) ≠ (1, 1)`.
    pub fn is_admissible(&self) -> bool {
        match (self.depths.last(), self.points.last()) {
            (Some(&k), Some(z)) => !(k == 1 && z.is_one()),
            _ => true,
        }
    }

    pub fn check_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::Inadmissible(self.to_string()))
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k: Vec<String> = self.depths.iter().map(|k| k.to_string()).collect();
        let z: Vec<String> = self.points.iter().map(|z| z.to_string()).collect();
        write!(f, "(k=({}); z=({}))", k.join(","), z.join(","))
    }
}

/// `W(ι) = e_{z1} e0^{k1−1} ⋯ e_{zr} e0^{kr−1}`.
pub fn word_of_index(iota: &Index, alphabet: &Alphabet) -> Result<Word> {
    let zero = Label::int(0);
    alphabet.check(&zero)?;
    let mut letters = Vec::with_capacity(iota.weight() as usize);
    for (k, z) in iota.depths.iter().zip(&iota.points) {
        alphabet.check(z)?;
        letters.push(z.clone());
        letters.extend(std::iter::repeat_n(zero.clone(), *k as usize - 1));
    }
    Ok(Word::new(letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_of_indices() {
        let d = Alphabet::ints(&[0, 1, -1]);
        let w = |k: Vec<u32>, z: &[i64]| {
            let iota = Index::new(k, z.iter().map(|&v| Label::int(v)).collect()).unwrap();
            word_of_index(&iota, &d).unwrap()
        };
        assert_eq!(w(vec![2], &[1]), Word::ints(&[1, 0]));
        assert_eq!(w(vec![1, 2], &[1, 1]), Word::ints(&[1, 1, 0]));
        assert_eq!(w(vec![3], &[-1]), Word::ints(&[-1, 0, 0]));
    }

    #[test]
    fn label_outside_alphabet_rejected() {
        let iota = Index::new(vec![1], vec![Label::int(2)]).unwrap();
        assert!(word_of_index(&iota, &Alphabet::ints(&[0, 1])).is_err());
    }

    #[test]
    fn admissibility() {
        assert!(!Index::zeta(&[1]).unwrap().is_admissible());
        assert!(Index::zeta(&[1, 2]).unwrap().is_admissible());
        assert!(Index::new(vec![1], vec![Label::int(-1)]).unwrap().is_admissible());
        assert!(Index::new(vec![0], vec![Label::int(1)]).is_err());
    }
}
