use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::algebra::{Alphabet, Label};
use crate::error::{Error, Result};
use crate::scalar::render_ratio;

/// The mesh 1/N and the alphabet D every path on it refers to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grid {
    n: i64,
    alphabet: Alphabet,
}

impl Grid {
    pub fn new(n: i64, alphabet: Alphabet) -> Result<Self> {
        if n <= 0 || n % 2 != 0 {
            return Err(Error::Precondition(format!("N must be a positive even integer, got {n}")));
        }
        Ok(Grid { n, alphabet })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// `N q` when it is an integer.
    pub fn tick_of(&self, q: &BigRational) -> Result<i64> {
        let scaled = q * BigRational::from_integer(BigInt::from(self.n));
        if !scaled.is_integer() {
            return Err(Error::InvalidPiece(format!("{} is not a multiple of 1/{}", render_ratio(q), self.n)));
        }
        scaled
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::InvalidPiece(format!("{} is out of range", render_ratio(q))))
    }

    pub fn coord(&self, tick: i64) -> BigRational {
        BigRational::new(BigInt::from(tick), BigInt::from(self.n))
    }

    /// The element of D located at `tick / N`, if any.
    pub fn label_at(&self, tick: i64) -> Option<&Label> {
        let q = self.coord(tick);
        self.alphabet.labels().iter().find(|a| a.as_real() == Some(&q))
    }

    pub fn in_alphabet(&self, tick: i64) -> bool {
        self.label_at(tick).is_some()
    }

    /// Whether some element of D lies strictly between `lo/N` and `hi/N`.
    pub fn meets_open(&self, lo: i64, hi: i64) -> bool {
        let (lo, hi) = (self.coord(lo), self.coord(hi));
        self.alphabet.labels().iter().any(|a| match a.as_real() {
            Some(q) => *q > lo && *q < hi,
            None => false,
        })
    }

    /// Labels on the real axis, as ticks where they are grid points.
    pub fn labels_on_grid(&self) -> Vec<i64> {
        self.alphabet.labels().iter().filter_map(|a| a.as_real()).filter_map(|q| self.tick_of(q).ok()).collect()
    }

    pub fn render_tick(&self, tick: i64) -> String {
        render_ratio(&self.coord(tick))
    }
}

/// An element of B: a grid point outside D, or a point of D with a
/// direction index `i ∈ {1,…,N}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    Grid(i64),
    Marked { tick: i64, index: i64 },
}

impl Endpoint {
    /// `(a, i)` with `i = 0` read as `i = N`.
    pub fn marked(grid: &Grid, tick: i64, index: i64) -> Result<Endpoint> {
        if !grid.in_alphabet(tick) {
            return Err(Error::InvalidPiece(format!("{} is not in D", grid.render_tick(tick))));
        }
        if !(0..=grid.n()).contains(&index) {
            return Err(Error::InvalidPiece(format!("direction index {index} outside 0..={}", grid.n())));
        }
        let index = if index == 0 { grid.n() } else { index };
        Ok(Endpoint::Marked { tick, index })
    }

    /// `(a,+) = (a, N/2)`
    pub fn plus(grid: &Grid, tick: i64) -> Result<Endpoint> {
        Self::marked(grid, tick, grid.n() / 2)
    }

    /// `(a,−) = (a, N)`
    pub fn minus(grid: &Grid, tick: i64) -> Result<Endpoint> {
        Self::marked(grid, tick, grid.n())
    }

    pub fn point(grid: &Grid, tick: i64) -> Result<Endpoint> {
        if grid.in_alphabet(tick) {
            return Err(Error::InvalidPiece(format!(
                "{} is in D and needs a direction",
                grid.render_tick(tick)
            )));
        }
        Ok(Endpoint::Grid(tick))
    }

    /// Start or end of a straight piece at `tick`: marked with `index` when
    /// the point is in D, bare otherwise.
    pub(crate) fn straight(grid: &Grid, tick: i64, index: i64) -> Endpoint {
        if grid.in_alphabet(tick) {
            Endpoint::Marked { tick, index: if index == 0 { grid.n() } else { index } }
        } else {
            Endpoint::Grid(tick)
        }
    }

    /// The underlying grid position `x̂`, in ticks.
    pub fn hat(&self) -> i64 {
        match *self {
            Endpoint::Grid(t) => t,
            Endpoint::Marked { tick, .. } => tick,
        }
    }

    pub fn validate(&self, grid: &Grid) -> Result<()> {
        match *self {
            Endpoint::Grid(t) => Endpoint::point(grid, t).map(|_| ()),
            Endpoint::Marked { tick, index } => {
                if index < 1 {
                    return Err(Error::InvalidPiece(format!("direction index {index} below 1")));
                }
                Endpoint::marked(grid, tick, index).map(|_| ())
            }
        }
    }

    pub fn render(&self, grid: &Grid) -> String {
        match *self {
            Endpoint::Grid(t) => grid.render_tick(t),
            Endpoint::Marked { tick, index } => {
                let dir = if index == grid.n() {
                    "-".to_string()
                } else if index == grid.n() / 2 {
                    "+".to_string()
                } else {
                    index.to_string()
                };
                format!("({},{dir})", grid.render_tick(tick))
            }
        }
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={} D={}", self.n, self.alphabet)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Grid {
        Grid::new(4, Alphabet::ints(&[0, 1])).unwrap()
    }

    #[test]
    fn n_must_be_positive_even() {
        assert!(Grid::new(3, Alphabet::ints(&[0])).is_err());
        assert!(Grid::new(0, Alphabet::ints(&[0])).is_err());
    }

    #[test]
    fn ticks() {
        let g = grid();
        assert_eq!(g.tick_of(&"3/4".parse::<Label>().unwrap().as_real().unwrap().clone()).unwrap(), 3);
        assert!(g.tick_of(&BigRational::new(1.into(), 3.into())).is_err());
        assert!(g.in_alphabet(4));
        assert!(!g.in_alphabet(2));
        assert!(!g.meets_open(0, 4));
        assert!(g.meets_open(-1, 1));
    }

    #[test]
    fn endpoint_aliases() {
        let g = grid();
        assert_eq!(Endpoint::marked(&g, 4, 0).unwrap(), Endpoint::minus(&g, 4).unwrap());
        assert_eq!(Endpoint::plus(&g, 0).unwrap(), Endpoint::Marked { tick: 0, index: 2 });
        assert!(Endpoint::point(&g, 0).is_err());
        assert!(Endpoint::marked(&g, 2, 1).is_err());
        assert_eq!(Endpoint::minus(&g, 4).unwrap().render(&g), "(1,-)");
        assert_eq!(Endpoint::Grid(2).render(&g), "1/2");
    }
}
