use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use super::{delta, delta_bruteforce};
use crate::algebra::Word;
use crate::error::{Error, Result};
use crate::path::DiscretePath;
use crate::scalar::{Backend, Scalar};
use crate::theta::ThetaPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Dp,
    Brute,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Dp => "dp",
            Method::Brute => "brute",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dp" => Ok(Method::Dp),
            "brute" | "bruteforce" => Ok(Method::Brute),
            other => Err(Error::parse(0, format!("unknown method `{other}`"))),
        }
    }
}

/// One evaluation with its provenance. `value[i]` is the coefficient of θ^i.
#[derive(Clone, Debug, Serialize)]
pub struct EvalReport {
    pub value: Vec<String>,
    pub n: i64,
    pub path: String,
    pub word: String,
    pub backend: Backend,
    pub method: Method,
    pub elapsed_ms: f64,
}

pub fn evaluate<S: Scalar>(path: &DiscretePath, w: &Word, method: Method) -> Result<(ThetaPoly<S>, EvalReport)> {
    let start = Instant::now();
    let value = match method {
        Method::Dp => delta::<S>(path, w)?,
        Method::Brute => delta_bruteforce::<S>(path, w)?,
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let report = EvalReport {
        value: value.render(),
        n: path.n(),
        path: path.to_string(),
        word: w.to_string(),
        backend: S::BACKEND,
        method,
        elapsed_ms,
    };
    Ok((value, report))
}
