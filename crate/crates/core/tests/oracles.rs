use std::sync::Arc;

use dii_core::algebra::{Alphabet, Index, Label, Word};
use dii_core::eval::{delta, delta_singular_closed};
use dii_core::limits::{li, li_reference, nested_harmonic, zeta, zeta_star, default_n_list};
use dii_core::path::{parse_path, DiscretePath, Grid};
use dii_core::scalar::{gauss, ratio};
use dii_core::{Exact, Scalar};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

/// `Σ_{0<n_1≤…≤n_k<N} Π 1/(n_i − a_i N)` by literal recursion.
fn straight_sum(word: &[i64], n: i64) -> BigRational {
    fn go(word: &[i64], n: i64, from: i64) -> BigRational {
        let Some((&a, rest)) = word.split_first() else {
            return BigRational::from_integer(1.into());
        };
        let mut total = BigRational::zero();
        for m in from..n {
            total += go(rest, n, m) / BigRational::from_integer(BigInt::from(m - a * n));
        }
        total
    }
    go(word, n, 1)
}

fn words(letters: &[i64], max: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<i64>| letters.iter().map(move |&a| [w.clone(), vec![a]].concat()))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[test]
fn straight_piece_by_nested_loops() {
    for n in [4, 6, 8] {
        let g = Arc::new(Grid::new(n, Alphabet::ints(&[-1, 0, 1])).unwrap());
        let p = DiscretePath::dch(g).unwrap();
        for w in words(&[-1, 0, 1], 3) {
            let got = delta::<Exact>(&p, &Word::ints(&w)).unwrap();
            let want = straight_sum(&w, n);
            assert_eq!(got.coeff(0), gauss(want, BigRational::zero()), "N={n} w={w:?}");
            assert!(got.degree().unwrap_or(0) == 0);
        }
    }
}

#[test]
fn small_exact_values() {
    let g = Arc::new(Grid::new(4, Alphabet::ints(&[0, 1])).unwrap());
    let p = DiscretePath::dch(g).unwrap();
    assert_eq!(delta::<Exact>(&p, &Word::ints(&[1, 0])).unwrap().coeff(0).render(), "-49/36");
    assert_eq!(delta::<Exact>(&p, &Word::ints(&[1, 0, 0])).unwrap().coeff(0).render(), "-251/216");
}

/// A full loop picks up `C(N+k−1, k)(σθ/N)^k`; the k = 1 term is `σθ`.
#[test]
fn singular_loop_counts_multisets() {
    let g = Arc::new(Grid::new(6, Alphabet::ints(&[0, 1])).unwrap());
    let p = parse_path("sing:1,0,N,-", g.clone()).unwrap();
    let v = delta::<Exact>(&p, &Word::ints(&[1])).unwrap();
    assert_eq!(v.coeff(1), Exact::from_i64(-1));
    let piece = p.pieces()[0];
    for k in 0..4 {
        let closed = delta_singular_closed::<Exact>(&g, &piece, k, &Label::int(1)).unwrap();
        let binom: i64 = (0..k as i64).fold(1, |acc, i| acc * (6 + i) / (i + 1));
        let want = Exact::from_ratio(&(ratio(binom, 1) * ratio(if k % 2 == 0 { 1 } else { -1 }, 6i64.pow(k as u32))));
        assert_eq!(closed.coeff(k), want, "k={k}");
    }
}

fn central_binomial(n: u64) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * (n + i) as f64 / i as f64)
}

/// ζ(2) = 3 Σ 1/(n² C(2n,n)) and ζ(3) = (5/2) Σ (−1)^{n+1}/(n³ C(2n,n)).
#[test]
fn zeta_against_fast_series() {
    let z2: f64 = 3.0 * (1..40u64).map(|n| 1.0 / ((n * n) as f64 * central_binomial(n))).sum::<f64>();
    let z3: f64 = 2.5
        * (1..40u64)
            .map(|n| if n % 2 == 1 { 1.0 } else { -1.0 } / ((n * n * n) as f64 * central_binomial(n)))
            .sum::<f64>();
    let a = zeta(2).unwrap();
    let b = zeta(3).unwrap();
    assert!(a.tail <= 1e-10 && b.tail <= 1e-10);
    assert!((a.value[0] - z2).abs() < 1e-13, "{} {z2}", a.value[0]);
    assert!((b.value[0] - z3).abs() < 1e-13, "{} {z3}", b.value[0]);
}

/// Euler: ζ(1,2) = Σ_{m<n} 1/(m n²) = ζ(3).
#[test]
fn euler_relation() {
    let z3 = zeta(3).unwrap().value[0];
    let v = li(&[Complex64::new(1.0, 0.0); 2], &[1, 2]).unwrap();
    assert!((v.value[0] - z3).abs() < 1e-5, "{v:?}");
    let reg = zeta_star(&[1, 2], &default_n_list()).unwrap().coeff(0).re;
    assert!((reg - z3).abs() < 1e-6);
}

/// Stuffle: ζ*(1)ζ*(2) = ζ*(1,2) + ζ*(2,1) + ζ(3) with ζ*(1) = 0.
#[test]
fn regularized_stuffle() {
    let ns = default_n_list();
    let z = |k: &[u32]| zeta_star(k, &ns).unwrap().coeff(0).re;
    let lhs = z(&[1]) * z(&[2]);
    let rhs = z(&[1, 2]) + z(&[2, 1]) + zeta(3).unwrap().value[0];
    assert!((lhs - rhs).abs() < 1e-5, "{lhs} {rhs}");
    // the truncated sums satisfy it exactly at every N
    let n = 500;
    let h = |k: &[u32]| nested_harmonic(k, n);
    assert!((h(&[1]) * h(&[2]) - h(&[1, 2]) - h(&[2, 1]) - h(&[3])).abs() < 1e-12);
}

#[test]
fn li_reference_sign() {
    // W(ι) for k = (2), z = (−1) tends to −Li₂(−1) = ζ(2)/2
    let iota = Index::new(vec![2], vec![Label::int(-1)]).unwrap();
    let r = li_reference(&iota).unwrap();
    assert!((r.value[0] - zeta(2).unwrap().value[0] / 2.0).abs() < 1e-10);
}
