//! Polynomials in the formal winding symbol θ.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// `c0 + c1 θ + c2 θ² + …`, kept with a nonzero leading coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaPoly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> ThetaPoly<S> {
    pub fn zero() -> Self {
        ThetaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c θ^deg`
    pub fn monomial(c: S, deg: usize) -> Self {
        let mut coeffs = vec![S::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn theta() -> Self {
        Self::monomial(S::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ThetaPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    /// Coefficient of θ¹.
    pub fn coeff_at_theta(&self) -> S {
        self.coeff(1)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> ThetaPoly<T> {
        ThetaPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| self.coeff(i).approx_eq(&other.coeff(i), tol))
    }

    /// Largest coefficient modulus; zero for the zero polynomial.
    pub fn max_magnitude(&self) -> f64 {
        self.coeffs.iter().map(|c| c.magnitude()).fold(0.0, f64::max)
    }

    pub fn render(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.render()).collect()
    }
}

impl<S: Scalar> Default for ThetaPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> From<S> for ThetaPoly<S> {
    fn from(c: S) -> Self {
        Self::constant(c)
    }
}

impl<S: Scalar> AddAssign<&ThetaPoly<S>> for ThetaPoly<S> {
    fn add_assign(&mut self, rhs: &ThetaPoly<S>) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), S::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b.clone();
        }
        let c = std::mem::take(&mut self.coeffs);
        *self = Self::from_coeffs(c);
    }
}

impl<S: Scalar> SubAssign<&ThetaPoly<S>> for ThetaPoly<S> {
    fn sub_assign(&mut self, rhs: &ThetaPoly<S>) {
        *self += &-rhs;
    }
}

impl<S: Scalar> Add for ThetaPoly<S> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<S: Scalar> Add for &ThetaPoly<S> {
    type Output = ThetaPoly<S>;
    fn add(self, rhs: Self) -> ThetaPoly<S> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<S: Scalar> Sub for ThetaPoly<S> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<S: Scalar> Sub for &ThetaPoly<S> {
    type Output = ThetaPoly<S>;
    fn sub(self, rhs: Self) -> ThetaPoly<S> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<S: Scalar> Neg for &ThetaPoly<S> {
    type Output = ThetaPoly<S>;
    fn neg(self) -> ThetaPoly<S> {
        ThetaPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<S: Scalar> Neg for ThetaPoly<S> {
    type Output = ThetaPoly<S>;
    fn neg(self) -> ThetaPoly<S> {
        -&self
    }
}

impl<S: Scalar> Mul for &ThetaPoly<S> {
    type Output = ThetaPoly<S>;
    fn mul(self, rhs: Self) -> ThetaPoly<S> {
        if self.is_zero() || rhs.is_zero() {
            return ThetaPoly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a.clone() * b.clone();
            }
        }
        ThetaPoly::from_coeffs(out)
    }
}

impl<S: Scalar> Mul for ThetaPoly<S> {
    type Output = ThetaPoly<S>;
    fn mul(self, rhs: Self) -> ThetaPoly<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Zero for ThetaPoly<S> {
    fn zero() -> Self {
        ThetaPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<S: Scalar> One for ThetaPoly<S> {
    fn one() -> Self {
        ThetaPoly::one()
    }
}

impl<S: Scalar> fmt::Display for ThetaPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c.render())?,
                1 => write!(f, "({})*t", c.render())?,
                _ => write!(f, "({})*t^{i}", c.render())?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::gauss_int;
    use crate::Exact;

    fn p(cs: &[i64]) -> ThetaPoly<Exact> {
        ThetaPoly::from_coeffs(cs.iter().map(|&c| gauss_int(c)).collect())
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p(&[0, 1]) * &p(&[0, 1]), p(&[0, 0, 1]));
        assert!((&p(&[3, 4]) * &ThetaPoly::zero()).is_zero());
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
    }

    #[test]
    fn canonical_form_trims() {
        let q = &p(&[1, 2]) - &p(&[0, 2]);
        assert_eq!(q.degree(), Some(0));
        assert_eq!(q.coeffs().len(), 1);
        assert!((&q - &q).is_zero());
        assert_eq!(ThetaPoly::<Exact>::zero().degree(), None);
    }

    #[test]
    fn theta_coefficient() {
        assert_eq!(p(&[3, 5, 2]).coeff_at_theta(), gauss_int(5));
        assert_eq!(p(&[7]).coeff_at_theta(), gauss_int(0));
        assert_eq!(ThetaPoly::<Exact>::theta().coeff_at_theta(), gauss_int(1));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -2]).to_string(), "1 + (-2)*t^2");
        assert_eq!(ThetaPoly::<Exact>::zero().to_string(), "0");
    }
}
