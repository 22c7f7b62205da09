//! γ-shuffleability of a pair of words.

use crate::algebra::{Label, Word};
use crate::path::DiscretePath;

/// Letters that can open (resp. close) the segment of `w` on piece `c` of an
/// `r`-piece path, over all splittings of `w`.
fn openers(w: &Word, c: usize) -> &[Label] {
    match w.letters() {
        [] => &[],
        all if c == 0 => &all[..1],
        all => all,
    }
}

fn closers(w: &Word, c: usize, r: usize) -> &[Label] {
    match w.letters() {
        [] => &[],
        all if c + 1 == r => &all[all.len() - 1..],
        all => all,
    }
}

/// The first violated clause, if `(w, w′)` is not γ-shuffleable.
///
/// Empty segments impose nothing, so a pair involving the empty word is
/// always shuffleable.
pub fn shuffle_violation(path: &DiscretePath, w: &Word, w2: &Word) -> Option<String> {
    let grid = path.grid();
    let r = path.pieces().len();
    for (c, piece) in path.pieces().iter().enumerate() {
        let (s, t) = piece.endpoints(grid);
        if let Some(a) = grid.label_at(s.hat()) {
            if openers(w, c).contains(a) && openers(w2, c).contains(a) {
                return Some(format!("both words can start with e[{a}] = ŝ on piece {}", c + 1));
            }
        }
        if let Some(a) = grid.label_at(t.hat()) {
            if closers(w, c, r).contains(a) && closers(w2, c, r).contains(a) {
                return Some(format!("both words can end with e[{a}] = t̂ on piece {}", c + 1));
            }
        }
    }
    None
}

pub fn is_shuffleable(path: &DiscretePath, w: &Word, w2: &Word) -> bool {
    shuffle_violation(path, w, w2).is_none()
}
