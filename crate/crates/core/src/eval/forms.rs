//! Discrete differential forms ω_a(n) and ω(m, n).

use crate::algebra::Label;
use crate::error::{Error, Result};
use crate::path::{DiscretePath, Grid, Piece, ProvisionIndex, Sign, Symbol};
use crate::scalar::Scalar;
use crate::theta::ThetaPoly;

/// A form value `coef · θ^power`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormValue<S> {
    pub coef: S,
    pub power: u32,
}

impl<S: Scalar> FormValue<S> {
    pub fn scalar(coef: S) -> Self {
        FormValue { coef, power: 0 }
    }

    pub fn to_poly(&self) -> ThetaPoly<S> {
        ThetaPoly::monomial(self.coef.clone(), self.power as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.coef.is_zero()
    }
}

/// `aN` in the working field.
pub(crate) fn scaled_label<S: Scalar>(a: &Label, n: i64) -> S {
    S::from_gauss(a.value()) * S::from_i64(n)
}

/// Whether `a` sits at the grid position `tick`.
pub(crate) fn label_at_tick(grid: &Grid, a: &Label, tick: i64) -> bool {
    a.as_real().is_some_and(|q| *q == grid.coord(tick))
}

/// The integer `ñ` at which `ω_a` has a pole on a straight piece, if any.
pub(crate) fn pole(grid: &Grid, piece: &Piece, a: &Label) -> Option<i64> {
    let t = grid.tick_of(a.as_real()?).ok()?;
    match piece {
        Piece::Positive { .. } => Some(t),
        Piece::Negative { .. } => Some(-t),
        _ => None,
    }
}

/// Rejects labels whose form would divide by zero somewhere on `piece`.
pub(crate) fn check_poles(grid: &Grid, piece: &Piece, labels: &[Label]) -> Result<()> {
    if let Some((lo, hi)) = piece.integer_range() {
        for a in labels {
            if let Some(p) = pole(grid, piece, a) {
                if lo <= p && p <= hi {
                    return Err(Error::InvalidPiece(format!(
                        "ω_{a} has a pole at n = {p} on {}",
                        piece.render(grid)
                    )));
                }
            }
        }
    }
    Ok(())
}

/// `ω_a(n)` on the path.
pub fn omega<S: Scalar>(path: &DiscretePath, a: &Label, n: &ProvisionIndex) -> Result<FormValue<S>> {
    if !path.contains(n) {
        return Err(Error::Precondition(format!("{n} is not in the provision of {path}")));
    }
    let grid = path.grid();
    let piece = &path.pieces()[n.piece];
    match (piece, n.symbol) {
        (Piece::Positive { .. } | Piece::Negative { .. }, Symbol::Int(k)) => {
            check_poles(grid, piece, std::slice::from_ref(a))?;
            let shift = scaled_label::<S>(a, grid.n());
            let denom = match piece {
                Piece::Positive { .. } => S::from_i64(k) - shift,
                _ => S::from_i64(k) + shift,
            };
            Ok(FormValue::scalar(S::one() / denom))
        }
        (Piece::Singular { center, sign, .. }, Symbol::Theta { .. }) => {
            if label_at_tick(grid, a, *center) {
                Ok(FormValue { coef: singular_coef(*sign, grid.n()), power: 1 })
            } else {
                Ok(FormValue { coef: S::zero(), power: 1 })
            }
        }
        _ => unreachable!("membership checked"),
    }
}

/// `±1/N`.
pub(crate) fn singular_coef<S: Scalar>(sign: Sign, n: i64) -> S {
    S::from_i64(sign.factor()) / S::from_i64(n)
}

/// `ω(m, n) = 1/(ñ − m̃)` when both points lie on straight pieces of the same
/// orientation and differ; zero otherwise.
pub fn omega_pair<S: Scalar>(path: &DiscretePath, m: &ProvisionIndex, n: &ProvisionIndex) -> S {
    let (pm, pn) = (&path.pieces()[m.piece], &path.pieces()[n.piece]);
    let same_kind = matches!(
        (pm, pn),
        (Piece::Positive { .. }, Piece::Positive { .. }) | (Piece::Negative { .. }, Piece::Negative { .. })
    );
    match (m.tilde(), n.tilde()) {
        (Some(a), Some(b)) if same_kind && a != b => S::one() / S::from_i64(b - a),
        _ => S::zero(),
    }
}
