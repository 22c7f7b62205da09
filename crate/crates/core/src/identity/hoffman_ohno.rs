//! Boundary-coupled sums Δ^O and Δ^{O′} on a positive straight piece (x, y)
//! with x, y ∈ D.

use crate::algebra::{Label, Word};
use crate::error::{Error, Result};
use crate::eval::{omega, omega_pair};
use crate::path::{DiscretePath, Piece, ProvisionIndex};
use crate::scalar::Scalar;

/// Largest |S_γ| accepted by the `O(k·|S|²)` evaluation.
pub const MAX_PROVISION: usize = 4096;

/// The labels `x`, `y` of a positive straight piece with both ends in D.
pub fn straight_ends(path: &DiscretePath) -> Result<(Label, Label)> {
    let grid = path.grid();
    let [Piece::Positive { from, to }] = path.pieces() else {
        return Err(Error::Precondition(format!("expected a single positive straight piece, got {path}")));
    };
    match (grid.label_at(*from), grid.label_at(*to)) {
        (Some(x), Some(y)) => Ok((x.clone(), y.clone())),
        _ => Err(Error::Precondition(format!("both ends of {path} must lie in D"))),
    }
}

struct Table<S> {
    points: Vec<ProvisionIndex>,
    /// forms[i][j] = ω_{a_i}(points[j])
    forms: Vec<Vec<S>>,
}

impl<S: Scalar> Table<S> {
    fn new(path: &DiscretePath, labels: &[Label]) -> Result<Self> {
        let points: Vec<ProvisionIndex> = path.provision().collect();
        if points.len() > MAX_PROVISION {
            return Err(Error::GuardExceeded(format!("|S| = {} exceeds {MAX_PROVISION}", points.len())));
        }
        let forms = labels
            .iter()
            .map(|a| points.iter().map(|p| omega::<S>(path, a, p).map(|f| f.coef)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Table { points, forms })
    }

    fn len(&self) -> usize {
        self.points.len()
    }
}

/// Chains `n_1 ≤ … ≤ n_k` of `forms[first..]` started at point `start`:
/// calls `visit(j, v)` with the sum over chains whose last index is `j`.
fn sweep<S: Scalar>(forms: &[Vec<S>], start: usize, len: usize, mut visit: impl FnMut(usize, S)) {
    let k = forms.len();
    let mut acc = vec![S::zero(); k + 1];
    acc[0] = S::one();
    for j in start..len {
        let before = acc[k].clone();
        for i in 1..=k {
            let c = forms[i - 1][j].clone();
            if !c.is_zero() {
                let add = c * acc[i - 1].clone();
                acc[i] += add;
            }
        }
        if k == 0 {
            visit(j, S::one());
        } else {
            visit(j, acc[k].clone() - before);
        }
    }
}

/// `Σ_{n_1≤…≤n_{k+1}} Π ω_{a_i}(n_i)·(ω(n_1, n_{k+1}) − ω_x(n_{k+1}))`.
pub fn delta_o<S: Scalar>(path: &DiscretePath, w: &Word) -> Result<S> {
    let (x, _) = straight_ends(path)?;
    path.grid().alphabet().check_word(w)?;
    let mut labels = w.letters().to_vec();
    labels.push(x);
    let t = Table::<S>::new(path, &labels)?;
    let k = w.len();
    let omega_x = &t.forms[k];
    let mut total = S::zero();
    if k == 0 {
        for j in 0..t.len() {
            total -= omega_x[j].clone();
        }
        return Ok(total);
    }
    for m in 0..t.len() {
        let head = t.forms[0][m].clone();
        if head.is_zero() {
            continue;
        }
        // n_1 = m fixed; chains n_2..n_k on [m, c], n_{k+1} = c
        let rest = &t.forms[1..k];
        let mut acc = vec![S::zero(); k];
        acc[0] = head;
        for c in m..t.len() {
            for i in 1..k {
                let f = rest[i - 1][c].clone();
                if !f.is_zero() {
                    let add = f * acc[i - 1].clone();
                    acc[i] += add;
                }
            }
            let g = omega_pair::<S>(path, &t.points[m], &t.points[c]) - omega_x[c].clone();
            total += acc[k - 1].clone() * g;
        }
    }
    Ok(total)
}

/// `Σ_{n_0≤…≤n_k} Π ω_{a_i}(n_i)·(ω_y(n_0) − ω(n_k, n_0))`.
pub fn delta_o_prime<S: Scalar>(path: &DiscretePath, w: &Word) -> Result<S> {
    let (_, y) = straight_ends(path)?;
    path.grid().alphabet().check_word(w)?;
    let mut labels = w.letters().to_vec();
    labels.push(y);
    let t = Table::<S>::new(path, &labels)?;
    let k = w.len();
    let omega_y = &t.forms[k];
    let mut total = S::zero();
    for d in 0..t.len() {
        let lead = omega_y[d].clone();
        let mut part = S::zero();
        sweep(&t.forms[..k], d, t.len(), |j, v| {
            if v.is_zero() {
                return;
            }
            let g = lead.clone() - omega_pair::<S>(path, &t.points[j], &t.points[d]);
            part += v * g;
        });
        total += part;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::Alphabet;
    use crate::path::Grid;
    use crate::Exact;

    fn dch(n: i64, d: &[i64]) -> DiscretePath {
        DiscretePath::dch(Arc::new(Grid::new(n, Alphabet::ints(d)).unwrap())).unwrap()
    }

    /// Literal double loop for a one-letter word.
    #[test]
    fn one_letter_double_loop() {
        let n = 4i64;
        let q = |a: i64, b: i64| Exact::from_ratio(&crate::scalar::ratio(a, b));
        let mut want_o = Exact::from_i64(0);
        let mut want_op = Exact::from_i64(0);
        for n1 in 1..n {
            for n2 in n1..n {
                // w = e0 on (0,1): ω_0(n) = 1/n, x = 0, y = 1
                let pair = if n1 == n2 { q(0, 1) } else { q(1, n2 - n1) };
                want_o += q(1, n1) * (pair.clone() - q(1, n2));
                want_op += q(1, n2) * (q(1, n1 - n) + pair);
            }
        }
        let p = dch(n, &[0, 1]);
        assert_eq!(delta_o::<Exact>(&p, &Word::ints(&[0])).unwrap(), want_o);
        assert_eq!(delta_o_prime::<Exact>(&p, &Word::ints(&[0])).unwrap(), want_op);
    }

    /// A(m, n) = B(m, n) from the telescoping argument.
    #[test]
    fn telescoping_witness() {
        let p = dch(4, &[0, 1]);
        let s: Vec<_> = p.provision().collect();
        let x = Label::int(0);
        let y = Label::int(1);
        let w = |a: &Label, i: usize| omega::<Exact>(&p, a, &s[i]).unwrap().coef;
        for m in 0..s.len() {
            for n in m..s.len() {
                let mut a = Exact::from_i64(0);
                for c in n..s.len() {
                    a += omega_pair::<Exact>(&p, &s[m], &s[c]) - w(&x, c);
                }
                let mut b = Exact::from_i64(0);
                for d in 0..=m {
                    b += w(&y, d) - omega_pair::<Exact>(&p, &s[n], &s[d]);
                }
                assert_eq!(a, b, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn shape_checked() {
        let g = Arc::new(Grid::new(4, Alphabet::ints(&[0, 1])).unwrap());
        let beta = DiscretePath::beta(g.clone()).unwrap();
        assert!(delta_o::<Exact>(&beta, &Word::ints(&[0])).is_err());
        let half = crate::path::parse_path("pos:1/2..1", g).unwrap();
        assert!(delta_o_prime::<Exact>(&half, &Word::ints(&[0])).is_err());
    }
}
