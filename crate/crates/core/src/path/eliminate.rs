//! Elimination γ_{m,n}: the part of γ between two provision points.
//!
//! The cut pieces keep both m and n, so the provision of γ_{m,n} is the
//! closed interval `[m, n]` of S_γ when `m ≠ n`. For `m = n` the result is the
//! trivial piece at m.

use super::discrete::DiscretePath;
use super::grid::Endpoint;
use super::piece::Piece;
use super::provision::{ProvisionIndex, Symbol};
use crate::error::{Error, Result};

impl DiscretePath {
    pub fn eliminate(&self, m: &ProvisionIndex, n: &ProvisionIndex) -> Result<DiscretePath> {
        for p in [m, n] {
            if !self.contains(p) {
                return Err(Error::Precondition(format!("{p} is not in the provision of {self}")));
            }
        }
        if m > n {
            return Err(Error::Precondition(format!("{m} comes after {n}")));
        }
        let pieces = self.pieces();
        let grid = self.grid();
        if m == n {
            let point = match (pieces[m.piece], m.symbol) {
                (Piece::Positive { .. }, Symbol::Int(k)) => Endpoint::Grid(k),
                (Piece::Negative { .. }, Symbol::Int(k)) => Endpoint::Grid(-k),
                (Piece::Singular { center, .. }, Symbol::Theta { index, .. }) => {
                    Endpoint::Marked { tick: center, index }
                }
                _ => unreachable!("membership checked"),
            };
            return Ok(DiscretePath::from_parts(grid.clone(), vec![Piece::Trivial(point)]));
        }
        let head = cut_start(&pieces[m.piece], m);
        let out = if m.piece == n.piece {
            vec![cut_end(&head, n)]
        } else {
            let mut v = Vec::with_capacity(n.piece - m.piece + 1);
            v.push(head);
            v.extend_from_slice(&pieces[m.piece + 1..n.piece]);
            v.push(cut_end(&pieces[n.piece], n));
            v
        };
        DiscretePath::new(grid.clone(), out)
    }
}

/// Drops the provision points of `piece` before `m`.
fn cut_start(piece: &Piece, m: &ProvisionIndex) -> Piece {
    match (*piece, m.symbol) {
        (Piece::Positive { to, .. }, Symbol::Int(k)) => Piece::Positive { from: k - 1, to },
        (Piece::Negative { to, .. }, Symbol::Int(k)) => Piece::Negative { from: -(k - 1), to },
        (Piece::Singular { center, end, sign, .. }, Symbol::Theta { index, .. }) => {
            Piece::Singular { center, start: index - 1, end, sign }
        }
        _ => unreachable!("membership checked"),
    }
}

/// Drops the provision points of `piece` after `n`.
fn cut_end(piece: &Piece, n: &ProvisionIndex) -> Piece {
    match (*piece, n.symbol) {
        (Piece::Positive { from, .. }, Symbol::Int(k)) => Piece::Positive { from, to: k + 1 },
        (Piece::Negative { from, .. }, Symbol::Int(k)) => Piece::Negative { from, to: -(k + 1) },
        (Piece::Singular { center, start, sign, .. }, Symbol::Theta { index, .. }) => {
            Piece::Singular { center, start, end: index, sign }
        }
        _ => unreachable!("membership checked"),
    }
}

/// Position of `p` inside `γ_{m,n}`, given its position in γ.
pub fn relocate(p: &ProvisionIndex, m: &ProvisionIndex) -> ProvisionIndex {
    ProvisionIndex { piece: p.piece - m.piece, symbol: p.symbol }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::Alphabet;
    use crate::path::{Grid, Sign};

    fn grid(n: i64) -> Arc<Grid> {
        Arc::new(Grid::new(n, Alphabet::ints(&[0, 1])).unwrap())
    }

    #[test]
    fn same_piece_examples() {
        let dch = DiscretePath::dch(grid(4)).unwrap();
        let m = ProvisionIndex::int(0, 1);
        let n = ProvisionIndex::int(0, 3);
        assert_eq!(dch.eliminate(&m, &n).unwrap().pieces(), &[Piece::Positive { from: 0, to: 4 }]);
        let two = ProvisionIndex::int(0, 2);
        assert_eq!(dch.eliminate(&two, &two).unwrap().pieces(), &[Piece::Trivial(Endpoint::Grid(2))]);
        assert!(dch.eliminate(&n, &m).is_err());
        assert!(dch.eliminate(&m, &ProvisionIndex::int(0, 4)).is_err());
    }

    #[test]
    fn provision_is_closed_interval() {
        let beta = DiscretePath::beta(grid(6)).unwrap();
        let s: Vec<_> = beta.provision().collect();
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                let e = beta.eliminate(&s[i], &s[j]).unwrap();
                let got: Vec<_> = e.provision().collect();
                let want: Vec<_> = s[i..=j].iter().map(|p| relocate(p, &s[i])).collect();
                assert_eq!(got, want, "{} {}", s[i], s[j]);
            }
        }
    }

    #[test]
    fn nested_elimination() {
        let g = grid(4);
        let beta = DiscretePath::beta(g.clone()).unwrap();
        let s: Vec<_> = beta.provision().collect();
        for a in 0..s.len() {
            for b in a + 1..s.len() {
                let outer = beta.eliminate(&s[a], &s[b]).unwrap();
                for m in a..=b {
                    for n in m..=b {
                        let inner = outer.eliminate(&relocate(&s[m], &s[a]), &relocate(&s[n], &s[a])).unwrap();
                        let direct = beta.eliminate(&s[m], &s[n]).unwrap();
                        assert_eq!(inner, direct);
                    }
                }
            }
        }
    }

    #[test]
    fn singular_cut() {
        let g = grid(4);
        let sing =
            DiscretePath::piece(g, Piece::Singular { center: 4, start: 0, end: 4, sign: Sign::Minus }).unwrap();
        let m = ProvisionIndex::theta(0, 2, Sign::Minus);
        let n = ProvisionIndex::theta(0, 3, Sign::Minus);
        let e = sing.eliminate(&m, &n).unwrap();
        assert_eq!(e.pieces(), &[Piece::Singular { center: 4, start: 1, end: 3, sign: Sign::Minus }]);
        let t = sing.eliminate(&m, &m).unwrap();
        assert_eq!(t.pieces(), &[Piece::Trivial(Endpoint::Marked { tick: 4, index: 2 })]);
    }
}
