//! Scalar fields for discrete iterated integral values.
//!
//! Every value computed by this crate lives in a field implementing [`Scalar`]:
//! exact Gaussian rationals for identity work, or IEEE complex numbers for
//! large-N convergence runs. Labels of the alphabet are always stored exactly
//! (see [`crate::algebra::Label`]) and converted into the working field on use.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{NumAssign, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Gaussian rational `a + b i` with arbitrary-precision rational parts.
pub type GaussRational = Complex<BigRational>;

/// Which arithmetic a computation runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Exact => f.write_str("exact"),
            Backend::Float => f.write_str("float"),
        }
    }
}

impl FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Backend::Exact),
            "float" => Ok(Backend::Float),
            other => Err(Error::parse(0, format!("unknown backend `{other}`"))),
        }
    }
}

/// A field the evaluator can run on.
///
/// Equality on exact scalars is decidable and used by the identity suites.
/// Float scalars compare exactly under `==`; use [`Scalar::approx_eq`] for
/// tolerance comparisons.
pub trait Scalar:
    Clone + fmt::Debug + PartialEq + Send + Sync + 'static + NumAssign + Neg<Output = Self>
{
    const BACKEND: Backend;

    fn from_gauss(z: &GaussRational) -> Self;

    fn from_i64(n: i64) -> Self;

    fn from_ratio(q: &BigRational) -> Self {
        Self::from_gauss(&Complex::new(q.clone(), BigRational::zero()))
    }

    fn to_c64(&self) -> Complex<f64>;

    /// `|self|` as an element of the field, when the field can represent it.
    fn modulus(&self) -> Option<Self>;

    fn magnitude(&self) -> f64 {
        self.to_c64().norm()
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.to_c64() - other.to_c64()).norm() <= tol
    }

    fn render(&self) -> String;
}

impl Scalar for GaussRational {
    const BACKEND: Backend = Backend::Exact;

    fn from_gauss(z: &GaussRational) -> Self {
        z.clone()
    }

    fn from_i64(n: i64) -> Self {
        Complex::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    fn to_c64(&self) -> Complex<f64> {
        Complex::new(ratio_to_f64(&self.re), ratio_to_f64(&self.im))
    }

    fn modulus(&self) -> Option<Self> {
        if self.im.is_zero() {
            Some(Complex::new(self.re.abs(), BigRational::zero()))
        } else if self.re.is_zero() {
            Some(Complex::new(self.im.abs(), BigRational::zero()))
        } else {
            None
        }
    }

    fn render(&self) -> String {
        render_gauss(self)
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for Complex<$t> {
            const BACKEND: Backend = Backend::Float;

            fn from_gauss(z: &GaussRational) -> Self {
                Complex::new(ratio_to_f64(&z.re) as $t, ratio_to_f64(&z.im) as $t)
            }

            fn from_i64(n: i64) -> Self {
                Complex::new(n as $t, 0.0)
            }

            fn to_c64(&self) -> Complex<f64> {
                Complex::new(self.re as f64, self.im as f64)
            }

            fn modulus(&self) -> Option<Self> {
                Some(Complex::new(self.norm(), 0.0))
            }

            fn render(&self) -> String {
                render_float(self.re as f64, self.im as f64)
            }
        }
    };
}

float_scalar!(f64);
float_scalar!(f32);

pub(crate) fn ratio_to_f64(q: &BigRational) -> f64 {
    if let Some(v) = q.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Huge numerators and denominators: scale both down before dividing.
    let n = q.numer();
    let d = q.denom();
    let shift = n.bits().max(d.bits()).saturating_sub(1000);
    let n = (n >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (d >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

pub(crate) fn render_ratio(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Renders as `a/b+c/di`; zero parts are omitted.
pub fn render_gauss(z: &GaussRational) -> String {
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => render_ratio(&z.re),
        (true, false) => format!("{}i", render_ratio(&z.im)),
        (false, false) => {
            let sign = if z.im.is_negative() { "-" } else { "+" };
            format!("{}{}{}i", render_ratio(&z.re), sign, render_ratio(&z.im.abs()))
        }
    }
}

fn render_float(re: f64, im: f64) -> String {
    if im == 0.0 {
        format!("{re}")
    } else if re == 0.0 {
        format!("{im}i")
    } else {
        let sign = if im < 0.0 { "-" } else { "+" };
        format!("{re}{sign}{}i", im.abs())
    }
}

/// Parses a real number written as an integer, a fraction `p/q` or a decimal
/// (`0.25`, `1e-3`). Decimals are converted to the exact rational they denote.
pub fn parse_ratio(src: &str) -> Result<BigRational> {
    let s = src.trim();
    if s.is_empty() {
        return Err(Error::parse(0, "empty number"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n = parse_decimal(num.trim())?;
        let d = parse_decimal(den.trim())?;
        if d.is_zero() {
            return Err(Error::parse(num.len(), "zero denominator"));
        }
        return Ok(n / d);
    }
    parse_decimal(s)
}

fn parse_decimal(s: &str) -> Result<BigRational> {
    let bad = || Error::parse(0, format!("malformed number `{s}`"));
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all: String = format!("{int_part}{frac_part}");
    let mut value = BigRational::from_integer(all.parse::<BigInt>().map_err(|_| bad())?);
    let scale = exponent - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    let power = num_traits::pow(ten, scale.unsigned_abs() as usize);
    if scale >= 0 {
        value *= power;
    } else {
        value /= power;
    }
    Ok(if negative { -value } else { value })
}

/// Parses `a/b+c/di`, `-i`, `2i`, `0.5-0.25i`, ...
pub fn parse_gauss(src: &str) -> Result<GaussRational> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::parse(0, "empty scalar"));
    }
    // Split into signed terms at `+`/`-` that do not start the string and do
    // not follow an exponent marker.
    let bytes = s.as_bytes();
    let mut cuts = vec![0];
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E' | b'/') {
            cuts.push(i);
        }
    }
    cuts.push(bytes.len());
    let mut z = GaussRational::zero();
    for w in cuts.windows(2) {
        let term = &s[w[0]..w[1]];
        let wrap = |e: Error| match e {
            Error::Parse { pos, msg } => Error::Parse { pos: pos + w[0], msg },
            other => other,
        };
        if let Some(coef) = term.strip_suffix('i') {
            let coef = match coef {
                "" | "+" => BigRational::one(),
                "-" => -BigRational::one(),
                c => parse_ratio(c).map_err(wrap)?,
            };
            z.im += coef;
        } else {
            z.re += parse_ratio(term).map_err(wrap)?;
        }
    }
    Ok(z)
}

/// Parses a scalar literal into the working field. Decimal literals are read
/// exactly first, so the float value is the rounded image of the exact one.
pub fn parse_scalar<S: Scalar>(src: &str) -> Result<S> {
    parse_gauss(src).map(|z| S::from_gauss(&z))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn gauss(re: BigRational, im: BigRational) -> GaussRational {
    Complex::new(re, im)
}

pub fn gauss_int(n: i64) -> GaussRational {
    GaussRational::from_i64(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_gaussian_literals() {
        assert_eq!(parse_gauss("1/2+3/4i").unwrap(), gauss(ratio(1, 2), ratio(3, 4)));
        assert_eq!(parse_gauss("-i").unwrap(), gauss(ratio(0, 1), ratio(-1, 1)));
        assert_eq!(parse_gauss("2i").unwrap(), gauss(ratio(0, 1), ratio(2, 1)));
        assert_eq!(parse_gauss("-1").unwrap(), gauss_int(-1));
        assert_eq!(parse_gauss("0.25-1.5i").unwrap(), gauss(ratio(1, 4), ratio(-3, 2)));
        assert_eq!(parse_gauss("1e-2").unwrap(), gauss(ratio(1, 100), ratio(0, 1)));
        assert_eq!(parse_gauss("-1/3-2/5i").unwrap(), gauss(ratio(-1, 3), ratio(-2, 5)));
    }

    #[test]
    fn rejects_malformed_literals() {
        assert!(parse_gauss("").is_err());
        assert!(parse_gauss("1/0").is_err());
        assert!(parse_gauss("abc").is_err());
        assert!(parse_gauss("1..2").is_err());
    }

    #[test]
    fn render_round_trips() {
        for s in ["0", "7", "-1/2", "3/4i", "1/2+3/4i", "-1-2i", "i"] {
            let z = parse_gauss(s).unwrap();
            assert_eq!(parse_gauss(&render_gauss(&z)).unwrap(), z, "{s}");
        }
        assert_eq!(render_gauss(&parse_gauss("1/2-3/4i").unwrap()), "1/2-3/4i");
    }

    #[test]
    fn float_backend_renders_decimals() {
        let z = Complex::<f64>::from_gauss(&parse_gauss("1/4-1/2i").unwrap());
        assert_eq!(z.render(), "0.25-0.5i");
        assert_eq!(Complex::<f64>::from_i64(3).render(), "3");
    }

    #[test]
    fn modulus_is_exact_only_on_axes() {
        let real = parse_gauss("-3/2").unwrap();
        assert_eq!(real.modulus().unwrap(), parse_gauss("3/2").unwrap());
        assert_eq!(parse_gauss("-2i").unwrap().modulus().unwrap(), gauss_int(2));
        assert!(parse_gauss("1+i").unwrap().modulus().is_none());
    }

    #[test]
    fn huge_ratios_convert_to_float() {
        let big = BigInt::from(3) << 5000usize;
        let q = BigRational::new(big.clone() * BigInt::from(2), big);
        assert_eq!(ratio_to_f64(&q), 2.0);
    }
}
