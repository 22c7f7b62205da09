//! Closed form of Δ on a singular piece.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::forms::{label_at_tick, singular_coef};
use crate::algebra::Label;
use crate::error::{Error, Result};
use crate::path::{Grid, Piece};
use crate::scalar::Scalar;
use crate::theta::ThetaPoly;

/// `Δ(e_label^k)` on `(x,a,b,±)`: `((b−a)_k / k!)·(±θ/N)^k` when `label = x`,
/// zero otherwise (and 1 for `k = 0`).
pub fn delta_singular_closed<S: Scalar>(grid: &Grid, piece: &Piece, k: usize, label: &Label) -> Result<ThetaPoly<S>> {
    let Piece::Singular { center, start, end, sign } = *piece else {
        return Err(Error::Precondition(format!("{} is not a singular piece", piece.render(grid))));
    };
    if k == 0 {
        return Ok(ThetaPoly::one());
    }
    if !label_at_tick(grid, label, center) {
        return Ok(ThetaPoly::zero());
    }
    // (m)_k / k! = C(m+k-1, k)
    let m = end - start;
    let mut binom = BigRational::one();
    for i in 0..k as i64 {
        binom = binom * BigRational::from_integer(BigInt::from(m + i)) / BigRational::from_integer(BigInt::from(i + 1));
    }
    let step: S = singular_coef(sign, grid.n());
    let mut c = S::from_ratio(&binom);
    for _ in 0..k {
        c *= step.clone();
    }
    Ok(ThetaPoly::monomial(c, k))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{Alphabet, Word};
    use crate::eval::delta_bruteforce;
    use crate::path::{DiscretePath, Sign};
    use crate::Exact;

    #[test]
    fn matches_bruteforce() {
        let g = Arc::new(Grid::new(4, Alphabet::ints(&[0, 1])).unwrap());
        let piece = Piece::Singular { center: 4, start: 1, end: 3, sign: Sign::Plus };
        let path = DiscretePath::piece(g.clone(), piece).unwrap();
        for k in 0..=3 {
            for a in [0, 1] {
                let w = Word::new(vec![Label::int(a); k]);
                let closed = delta_singular_closed::<Exact>(&g, &piece, k, &Label::int(a)).unwrap();
                assert_eq!(closed, delta_bruteforce::<Exact>(&path, &w).unwrap(), "k={k} a={a}");
            }
        }
    }

    #[test]
    fn full_loop() {
        let g = Grid::new(4, Alphabet::ints(&[0, 1])).unwrap();
        let piece = Piece::Singular { center: 4, start: 0, end: 4, sign: Sign::Plus };
        // (4)_2/2! = 10, (θ/4)^2
        let v = delta_singular_closed::<Exact>(&g, &piece, 2, &Label::int(1)).unwrap();
        assert_eq!(v.coeff(2), Exact::from_ratio(&crate::scalar::ratio(10, 16)));
        assert!(delta_singular_closed::<Exact>(&g, &Piece::Positive { from: 0, to: 4 }, 1, &Label::int(1)).is_err());
    }
}
