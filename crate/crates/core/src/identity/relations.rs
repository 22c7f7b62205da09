//! Exact finite-N identities: composition, reversal, transport, cyclic sum.

use super::hoffman_ohno::{delta_o, delta_o_prime, straight_ends};
use super::report::IdentityReport;
use crate::algebra::{Label, MultiLetter, MultiWord, Word};
use crate::error::{Error, Result};
use crate::eval::{delta, delta_multi};
use crate::path::DiscretePath;
use crate::scalar::Scalar;
use crate::theta::ThetaPoly;

/// `Δ_{γγ′}(w) = Σ_i Δ_γ(a_1…a_i)·Δ_{γ′}(a_{i+1}…a_k)`.
pub fn check_composition<S: Scalar>(g1: &DiscretePath, g2: &DiscretePath, w: &Word) -> Result<IdentityReport> {
    let whole = g1.compose(g2)?;
    let lhs = delta::<S>(&whole, w)?;
    let mut rhs = ThetaPoly::zero();
    for i in 0..=w.len() {
        let a = delta::<S>(g1, &w.slice(0, i))?;
        let b = delta::<S>(g2, &w.slice(i, w.len()))?;
        rhs += &(&a * &b);
    }
    Ok(IdentityReport::compare("composition", format!("{g1} | {g2}"), vec![w.to_string()], whole.n(), &lhs, &rhs))
}

/// `Δ_γ(e_{a_1}…e_{a_k}) = (−1)^k Δ_{γ⁻¹}(e_{a_k}…e_{a_1})`.
pub fn check_reversal<S: Scalar>(path: &DiscretePath, w: &Word) -> Result<IdentityReport> {
    let lhs = delta::<S>(path, w)?;
    let mut rhs = delta::<S>(&path.inverse(), &w.reversed())?;
    if w.len() % 2 == 1 {
        rhs = -rhs;
    }
    Ok(IdentityReport::compare("reversal", path.to_string(), vec![w.to_string()], path.n(), &lhs, &rhs))
}

fn constant<S: Scalar>(v: S) -> ThetaPoly<S> {
    ThetaPoly::constant(v)
}

fn single_letter(labels: Vec<Label>) -> Result<MultiWord> {
    Ok(MultiWord::new(vec![MultiLetter::new(labels)?]))
}

/// Transport relations (1) and (2) for `w e_z`.
pub fn check_transport<S: Scalar>(path: &DiscretePath, w: &Word, z: &Label) -> Result<[IdentityReport; 2]> {
    if w.is_empty() {
        return Err(Error::Precondition("transport needs a nonempty word".into()));
    }
    let (x, y) = straight_ends(path)?;
    let wz = w.append(z);
    let zw = w.prepend(z);
    let o = delta_o::<S>(path, &wz)?;
    let o_prime = delta_o_prime::<S>(path, &wz)?;
    let words = vec![w.to_string(), format!("e[{z}]")];
    let first = IdentityReport::compare("transport-1", path.to_string(), words.clone(), path.n(), &constant(o), &constant(o_prime.clone()));

    let d = |u: &Word| delta::<S>(path, u).map(|p| p.coeff(0));
    let mut rhs = delta_o::<S>(path, &zw)?;
    if *z != x {
        rhs += d(&zw.append(&x))?;
    }
    if *z != y {
        rhs += d(&w.prepend(&y).append(z))?;
    }
    if *z != x && *z != y {
        rhs -= d(&zw.append(z))?;
    }
    let mut diag = vec![z.clone()];
    diag.extend_from_slice(w.letters());
    diag.push(z.clone());
    rhs += delta_multi::<S>(path, &single_letter(diag)?)?;
    let second = IdentityReport::compare("transport-2", path.to_string(), words, path.n(), &constant(o_prime), &constant(rhs));
    Ok([first, second])
}

/// The rotation `a_i … a_k a_1 … a_{i-1}` (0-based `i`).
fn rotation(w: &Word, i: usize) -> Word {
    w.slice(i, w.len()).concat(&w.slice(0, i))
}

/// Both sides of the cyclic sum formula on `(x, y)`:
///
/// ```text
/// Σ_{a_i≠x} Δ(e_{a_i}…e_{a_{i-1}} e_x) + Σ_{a_i≠y} Δ(e_y e_{a_{i+1}}…e_{a_{i-1}} e_{a_i})
///   = Σ_{a_i∉{x,y}} Δ(e_{a_i}…e_{a_{i-1}} e_{a_i}) − Σ_i Δ(e_{a_1,…,a_i,a_i,…,a_k})
/// ```
///
/// where the last terms are single multi-letters.
pub fn cyclic_sides<S: Scalar>(path: &DiscretePath, w: &Word) -> Result<(S, S)> {
    let k = w.len();
    if k < 2 {
        return Err(Error::Precondition(format!("the cyclic sum needs length ≥ 2, got {w}")));
    }
    let (x, y) = straight_ends(path)?;
    let d = |u: &Word| delta::<S>(path, u).map(|p| p.coeff(0));
    let mut lhs = S::zero();
    let mut rhs = S::zero();
    for (i, a) in w.letters().iter().enumerate() {
        let rot = rotation(w, i);
        if *a != x {
            lhs += d(&rot.append(&x))?;
        }
        if *a != y {
            let tail = rotation(w, i + 1).slice(0, k - 1);
            lhs += d(&tail.prepend(&y).append(a))?;
        }
        if *a != x && *a != y {
            rhs += d(&rot.append(a))?;
        }
        let mut doubled = w.letters().to_vec();
        doubled.insert(i, a.clone());
        rhs -= delta_multi::<S>(path, &single_letter(doubled)?)?;
    }
    Ok((lhs, rhs))
}

pub fn check_cyclic<S: Scalar>(path: &DiscretePath, w: &Word) -> Result<IdentityReport> {
    let (lhs, rhs) = cyclic_sides::<S>(path, w)?;
    Ok(IdentityReport::compare("cyclic", path.to_string(), vec![w.to_string()], path.n(), &constant(lhs), &constant(rhs)))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::Alphabet;
    use crate::eval::{delta_bruteforce, delta_multi_bruteforce};
    use crate::path::{parse_path, Grid};
    use crate::Exact;

    fn grid(n: i64, d: &[i64]) -> Arc<Grid> {
        Arc::new(Grid::new(n, Alphabet::ints(d)).unwrap())
    }

    #[test]
    fn transport_examples() {
        let p = DiscretePath::dch(grid(6, &[0, 1])).unwrap();
        for (w, z) in [(vec![0], 1), (vec![0], 0), (vec![1], 1), (vec![1, 0], 0)] {
            let [a, b] = check_transport::<Exact>(&p, &Word::ints(&w), &Label::int(z)).unwrap();
            assert!(a.passed() && b.passed(), "{w:?} {z}: {a:?} {b:?}");
        }
    }

    #[test]
    fn cyclic_examples() {
        let p = DiscretePath::dch(grid(6, &[0, 1])).unwrap();
        for w in [[1, 0], [0, 0], [1, 1], [0, 1]] {
            assert!(check_cyclic::<Exact>(&p, &Word::ints(&w)).unwrap().passed(), "{w:?}");
        }
        let p = DiscretePath::dch(grid(8, &[0, 1, -1])).unwrap();
        for w in [[1, -1, 0], [-1, -1, 1], [0, 1, 0]] {
            assert!(check_cyclic::<Exact>(&p, &Word::ints(&w)).unwrap().passed(), "{w:?}");
        }
        assert!(check_cyclic::<Exact>(&p, &Word::ints(&[1])).is_err());
    }

    /// Every term of the cyclic sum by brute force, for w = e1 e0 at N = 6.
    #[test]
    fn cyclic_bruteforce_terms() {
        let p = DiscretePath::dch(grid(6, &[0, 1])).unwrap();
        let b = |w: &[i64]| delta_bruteforce::<Exact>(&p, &Word::ints(w)).unwrap().coeff(0);
        let m = |w: &[i64]| {
            let mw = single_letter(w.iter().map(|&a| Label::int(a)).collect()).unwrap();
            delta_multi_bruteforce::<Exact>(&p, &mw).unwrap().coeff(0)
        };
        // x = 0, y = 1; a = (1, 0)
        let lhs = b(&[1, 0, 0]) + b(&[1, 1, 0]);
        let rhs = -m(&[1, 1, 0]) - m(&[1, 0, 0]);
        assert_eq!(cyclic_sides::<Exact>(&p, &Word::ints(&[1, 0])).unwrap(), (lhs.clone(), rhs.clone()));
        assert_eq!(lhs, rhs);
    }

    /// Summing transport (2) around the cycle, the Δ^O terms cancel and what
    /// is left is the cyclic sum.
    #[test]
    fn transport_around_the_cycle() {
        let p = DiscretePath::dch(grid(8, &[0, 1, -1])).unwrap();
        let w = Word::ints(&[1, -1, 0]);
        let k = w.len();
        let mut o_terms = Exact::from_i64(0);
        for i in 0..k {
            // rotation ending in a_{i}: (a_{i+1} … a_{i-1}) e_{a_i}
            let rot = rotation(&w, i + 1);
            let o_prime = delta_o_prime::<Exact>(&p, &rot).unwrap();
            let o_next = delta_o::<Exact>(&p, &rotation(&w, i)).unwrap();
            o_terms += o_prime - o_next;
        }
        let (lhs, rhs) = cyclic_sides::<Exact>(&p, &w).unwrap();
        assert_eq!(lhs - rhs, o_terms);
    }

    #[test]
    fn composition_and_reversal() {
        let g = grid(6, &[0, 1, -1]);
        let a = parse_path("pos:0..1;sing:1,0,N,+", g.clone()).unwrap();
        let b = parse_path("neg:1..0", g.clone()).unwrap();
        let w = Word::ints(&[1, 0, -1, 1]);
        assert!(check_composition::<Exact>(&a, &b, &w).unwrap().passed());
        assert!(check_reversal::<Exact>(&a.compose(&b).unwrap(), &w).unwrap().passed());
        assert!(check_composition::<Exact>(&b, &a, &w).unwrap().passed());
        assert!(check_composition::<Exact>(&a, &a, &w).is_err());
    }
}
