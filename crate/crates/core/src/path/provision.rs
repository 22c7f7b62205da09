use std::fmt;

use super::piece::{Piece, Sign};

/// A point of a piece's provision: an integer on straight pieces, `θ_j^σ` on
/// singular ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Int(i64),
    Theta { index: i64, sign: Sign },
}

/// An element `(ñ, i)` of the provision S_γ. The derived order is `<_γ`:
/// piece first, then the symbol within the piece.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProvisionIndex {
    pub piece: usize,
    pub symbol: Symbol,
}

impl ProvisionIndex {
    pub fn int(piece: usize, n: i64) -> Self {
        ProvisionIndex { piece, symbol: Symbol::Int(n) }
    }

    pub fn theta(piece: usize, index: i64, sign: Sign) -> Self {
        ProvisionIndex { piece, symbol: Symbol::Theta { index, sign } }
    }

    /// `ñ` for integer symbols.
    pub fn tilde(&self) -> Option<i64> {
        match self.symbol {
            Symbol::Int(n) => Some(n),
            Symbol::Theta { .. } => None,
        }
    }
}

impl fmt::Display for ProvisionIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.symbol {
            Symbol::Int(n) => write!(f, "({n},{})", self.piece + 1),
            Symbol::Theta { index, sign } => write!(f, "(θ{index}{sign},{})", self.piece + 1),
        }
    }
}

/// Symbols of one piece in increasing order.
#[derive(Clone, Debug)]
pub struct PieceSymbols {
    kind: Option<Sign>,
    next: i64,
    last: i64,
}

impl PieceSymbols {
    pub fn new(piece: &Piece) -> Self {
        match *piece {
            Piece::Singular { start, end, sign, .. } => PieceSymbols { kind: Some(sign), next: start + 1, last: end },
            _ => match piece.integer_range() {
                Some((a, b)) => PieceSymbols { kind: None, next: a, last: b },
                None => PieceSymbols { kind: None, next: 1, last: 0 },
            },
        }
    }
}

impl Iterator for PieceSymbols {
    type Item = Symbol;

    fn next(&mut self) -> Option<Symbol> {
        if self.next > self.last {
            return None;
        }
        let v = self.next;
        self.next += 1;
        Some(match self.kind {
            Some(sign) => Symbol::Theta { index: v, sign },
            None => Symbol::Int(v),
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.last - self.next + 1).max(0) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for PieceSymbols {}

pub(crate) fn piece_contains(piece: &Piece, symbol: &Symbol) -> bool {
    match (*piece, *symbol) {
        (Piece::Singular { start, end, sign, .. }, Symbol::Theta { index, sign: s }) => {
            s == sign && start < index && index <= end
        }
        (_, Symbol::Int(n)) => piece.integer_range().is_some_and(|(a, b)| a <= n && n <= b),
        _ => false,
    }
}
