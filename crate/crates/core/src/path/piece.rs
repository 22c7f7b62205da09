use std::fmt;

use serde::{Deserialize, Serialize};

use super::grid::{Endpoint, Grid};
use crate::error::{Error, Result};

/// Orientation of a singular piece, or of a θ symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn factor(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// One segment of a discrete path. Coordinates are ticks, i.e. multiples of 1/N.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Piece {
    /// `(x, y)` with `x < y`.
    Positive { from: i64, to: i64 },
    /// `(x, y)` with `y < x`.
    Negative { from: i64, to: i64 },
    /// `(x, a, b, σ)`: winding around `x ∈ D` through the directions `a+1..=b`.
    Singular { center: i64, start: i64, end: i64, sign: Sign },
    Trivial(Endpoint),
}

impl Piece {
    pub fn is_straight(&self) -> bool {
        matches!(self, Piece::Positive { .. } | Piece::Negative { .. })
    }

    pub fn validate(&self, grid: &Grid) -> Result<()> {
        let show = |t| grid.render_tick(t);
        match *self {
            Piece::Positive { from, to } => {
                if from >= to {
                    return Err(Error::InvalidPiece(format!("positive piece needs {} < {}", show(from), show(to))));
                }
                if grid.meets_open(from, to) {
                    return Err(Error::InvalidPiece(format!("({}, {}) meets D", show(from), show(to))));
                }
            }
            Piece::Negative { from, to } => {
                if to >= from {
                    return Err(Error::InvalidPiece(format!("negative piece needs {} < {}", show(to), show(from))));
                }
                if grid.meets_open(to, from) {
                    return Err(Error::InvalidPiece(format!("({}, {}) meets D", show(to), show(from))));
                }
            }
            Piece::Singular { center, start, end, .. } => {
                if !grid.in_alphabet(center) {
                    return Err(Error::InvalidPiece(format!("singular centre {} is not in D", show(center))));
                }
                if !(0 <= start && start <= end && end <= grid.n()) {
                    return Err(Error::InvalidPiece(format!(
                        "singular range needs 0 <= {start} <= {end} <= {}",
                        grid.n()
                    )));
                }
            }
            Piece::Trivial(p) => p.validate(grid)?,
        }
        Ok(())
    }

    /// `(s(p), t(p))`.
    pub fn endpoints(&self, grid: &Grid) -> (Endpoint, Endpoint) {
        let n = grid.n();
        match *self {
            Piece::Positive { from, to } => {
                (Endpoint::straight(grid, from, n / 2), Endpoint::straight(grid, to, n))
            }
            Piece::Negative { from, to } => {
                (Endpoint::straight(grid, from, n), Endpoint::straight(grid, to, n / 2))
            }
            Piece::Singular { center, start, end, sign } => {
                let (s, t) = match sign {
                    Sign::Plus => (start, end),
                    Sign::Minus => (n - start, n - end),
                };
                let mark = |i: i64| Endpoint::Marked { tick: center, index: if i == 0 { n } else { i } };
                (mark(s), mark(t))
            }
            Piece::Trivial(p) => (p, p),
        }
    }

    pub fn inverse(&self, grid: &Grid) -> Piece {
        match *self {
            Piece::Positive { from, to } => Piece::Negative { from: to, to: from },
            Piece::Negative { from, to } => Piece::Positive { from: to, to: from },
            Piece::Singular { center, start, end, sign } => Piece::Singular {
                center,
                start: grid.n() - end,
                end: grid.n() - start,
                sign: sign.flip(),
            },
            Piece::Trivial(p) => Piece::Trivial(p),
        }
    }

    /// `|S_p|`.
    pub fn provision_len(&self) -> usize {
        match *self {
            Piece::Positive { from, to } => (to - from - 1).max(0) as usize,
            Piece::Negative { from, to } => (from - to - 1).max(0) as usize,
            Piece::Singular { start, end, .. } => (end - start).max(0) as usize,
            Piece::Trivial(_) => 0,
        }
    }

    /// First and last integer of a straight provision, `{xN+1..yN-1}` or
    /// `{-xN+1..-yN-1}`.
    pub fn integer_range(&self) -> Option<(i64, i64)> {
        match *self {
            Piece::Positive { from, to } => Some((from + 1, to - 1)),
            Piece::Negative { from, to } => Some((-from + 1, -to - 1)),
            _ => None,
        }
    }

    pub fn render(&self, grid: &Grid) -> String {
        let show = |t| grid.render_tick(t);
        match *self {
            Piece::Positive { from, to } => format!("pos:{}..{}", show(from), show(to)),
            Piece::Negative { from, to } => format!("neg:{}..{}", show(from), show(to)),
            Piece::Singular { center, start, end, sign } => {
                format!("sing:{},{start},{end},{sign}", show(center))
            }
            Piece::Trivial(p) => format!("triv:{}", p.render(grid)),
        }
    }
}
