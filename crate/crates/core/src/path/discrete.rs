use std::fmt;
use std::sync::Arc;

use super::grid::{Endpoint, Grid};
use super::piece::{Piece, Sign};
use super::provision::{PieceSymbols, ProvisionIndex};
use crate::error::{Error, Result};

/// A nonempty sequence of pieces with matching endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscretePath {
    grid: Arc<Grid>,
    pieces: Vec<Piece>,
}

impl DiscretePath {
    pub fn new(grid: Arc<Grid>, pieces: Vec<Piece>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::InvalidPiece("a path needs at least one piece".into()));
        }
        for p in &pieces {
            p.validate(&grid)?;
        }
        for (i, w) in pieces.windows(2).enumerate() {
            let t = w[0].endpoints(&grid).1;
            let s = w[1].endpoints(&grid).0;
            if t != s {
                return Err(Error::EndpointMismatch(format!(
                    "piece {} ends at {} but piece {} starts at {}",
                    i + 1,
                    t.render(&grid),
                    i + 2,
                    s.render(&grid)
                )));
            }
        }
        Ok(DiscretePath { grid, pieces })
    }

    pub fn piece(grid: Arc<Grid>, piece: Piece) -> Result<Self> {
        Self::new(grid, vec![piece])
    }

    /// The straight piece (0, 1).
    pub fn dch(grid: Arc<Grid>) -> Result<Self> {
        let n = grid.n();
        Self::piece(grid, Piece::Positive { from: 0, to: n })
    }

    /// `((0,1), (1,0,N,+), (1,0))`.
    pub fn beta(grid: Arc<Grid>) -> Result<Self> {
        let n = grid.n();
        Self::new(
            grid,
            vec![
                Piece::Positive { from: 0, to: n },
                Piece::Singular { center: n, start: 0, end: n, sign: Sign::Plus },
                Piece::Negative { from: n, to: 0 },
            ],
        )
    }

    pub fn grid(&self) -> &Arc<Grid> {
        &self.grid
    }

    pub fn n(&self) -> i64 {
        self.grid.n()
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn source(&self) -> Endpoint {
        self.pieces[0].endpoints(&self.grid).0
    }

    pub fn target(&self) -> Endpoint {
        self.pieces[self.pieces.len() - 1].endpoints(&self.grid).1
    }

    /// Concatenation; requires `t(self) = s(other)`.
    pub fn compose(&self, other: &DiscretePath) -> Result<DiscretePath> {
        if self.grid != other.grid {
            return Err(Error::Precondition(format!("paths on different grids: {} vs {}", self.grid, other.grid)));
        }
        if self.target() != other.source() {
            return Err(Error::EndpointMismatch(format!(
                "{} then {}",
                self.target().render(&self.grid),
                other.source().render(&self.grid)
            )));
        }
        let mut pieces = self.pieces.clone();
        pieces.extend_from_slice(&other.pieces);
        Ok(DiscretePath { grid: self.grid.clone(), pieces })
    }

    pub fn inverse(&self) -> DiscretePath {
        let pieces = self.pieces.iter().rev().map(|p| p.inverse(&self.grid)).collect();
        DiscretePath { grid: self.grid.clone(), pieces }
    }

    /// The sub-path made of pieces `range`; each piece is a path on its own.
    pub fn subpath(&self, range: std::ops::Range<usize>) -> DiscretePath {
        DiscretePath { grid: self.grid.clone(), pieces: self.pieces[range].to_vec() }
    }

    /// S_γ in increasing `<_γ` order, generated lazily.
    pub fn provision(&self) -> impl Iterator<Item = ProvisionIndex> + '_ {
        self.pieces.iter().enumerate().flat_map(|(i, p)| {
            PieceSymbols::new(p).map(move |symbol| ProvisionIndex { piece: i, symbol })
        })
    }

    pub fn provision_len(&self) -> usize {
        self.pieces.iter().map(Piece::provision_len).sum()
    }

    pub fn contains(&self, m: &ProvisionIndex) -> bool {
        self.pieces.get(m.piece).is_some_and(|p| super::provision::piece_contains(p, &m.symbol))
    }

    pub(crate) fn from_parts(grid: Arc<Grid>, pieces: Vec<Piece>) -> DiscretePath {
        DiscretePath { grid, pieces }
    }
}

impl fmt::Display for DiscretePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pieces.iter().map(|p| p.render(&self.grid)).collect();
        f.write_str(&parts.join(";"))
    }
}
