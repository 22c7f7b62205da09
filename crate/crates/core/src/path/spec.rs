use std::fmt;
use std::sync::Arc;

use super::discrete::DiscretePath;
use super::dsl::parse_path;
use super::grid::Grid;
use crate::algebra::Alphabet;
use crate::error::Result;

/// A path given by its text form, rebuilt on the grid of each N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSpec {
    src: String,
    alphabet: Alphabet,
}

impl PathSpec {
    pub fn new(src: impl Into<String>, alphabet: Alphabet) -> Self {
        PathSpec { src: src.into(), alphabet }
    }

    pub fn src(&self) -> &str {
        &self.src
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn build(&self, n: i64) -> Result<DiscretePath> {
        parse_path(&self.src, Arc::new(Grid::new(n, self.alphabet.clone())?))
    }
}

impl fmt::Display for PathSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.src)
    }
}
