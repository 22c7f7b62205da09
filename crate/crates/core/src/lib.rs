//! Discrete iterated integrals along discrete paths.
//!
//! Values `Δ_{N,γ}(w)` are nested sums over the provision of a path `γ` on the
//! grid `Z/N`, with values in `C[θ]`. The crate evaluates them exactly over the
//! Gaussian rationals or in floating point, checks the finite-N identities they
//! satisfy, and extracts regularized limits as `N → ∞`.
//!
//! ```
//! use std::sync::Arc;
//! use dii_core::{algebra::{Alphabet, Word}, eval::delta, path::{DiscretePath, Grid}, Exact, Scalar};
//!
//! let grid = Arc::new(Grid::new(4, Alphabet::ints(&[0, 1])).unwrap());
//! let dch = DiscretePath::dch(grid).unwrap();
//! let v = delta::<Exact>(&dch, &Word::ints(&[1, 0])).unwrap();
//! assert_eq!(v.coeff(0).render(), "-49/36");
//! ```

pub mod algebra;
pub mod error;
pub mod eval;
pub mod identity;
pub mod limits;
pub mod path;
pub mod scalar;
pub mod theta;

pub use error::{Error, Result};
pub use scalar::{Backend, GaussRational, Scalar};
pub use theta::ThetaPoly;

/// Exact Gaussian rationals.
pub type Exact = num_complex::Complex<num_rational::BigRational>;
/// Double precision complex numbers.
pub type Float = num_complex::Complex<f64>;
/// Single precision complex numbers.
pub type Float32 = num_complex::Complex<f32>;

pub type ExactPoly = ThetaPoly<Exact>;
pub type FloatPoly = ThetaPoly<Float>;
