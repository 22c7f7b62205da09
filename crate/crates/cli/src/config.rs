use std::str::FromStr;

use dii_core::algebra::{Alphabet, Label, Word};
use dii_core::eval::DEFAULT_CHAIN_GUARD;
use dii_core::identity::MAX_PROVISION;
use dii_core::{Backend, Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// Everything a run depends on; echoed in JSON output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub alphabet: String,
    pub backend: Backend,
    pub n_list: Vec<i64>,
    pub seed: Option<u64>,
    pub format: Format,
    pub max_chains: u64,
    pub max_provision: usize,
}

impl RunConfig {
    pub fn new(alphabet: &Alphabet, backend: Backend, n_list: Vec<i64>, format: Format) -> Self {
        RunConfig {
            alphabet: alphabet.labels().iter().map(|a| a.to_string()).collect::<Vec<_>>().join(","),
            backend,
            n_list,
            seed: None,
            format,
            max_chains: DEFAULT_CHAIN_GUARD,
            max_provision: MAX_PROVISION,
        }
    }
}

/// `a,b,c`, or a doubling run `a..b` / `a,...,b`.
pub fn parse_n_list(src: &str) -> Result<Vec<i64>> {
    let src = src.trim();
    let run = src.split_once("..").map(|(a, b)| (a.trim_end_matches(','), b.trim_start_matches('.').trim_start_matches(',')));
    let out: Vec<i64> = if let Some((a, b)) = run {
        let (lo, hi) = (parse_n(a)?, parse_n(b)?);
        let mut v = Vec::new();
        let mut n = lo;
        while n <= hi {
            v.push(n);
            n *= 2;
        }
        if v.last() != Some(&hi) {
            return Err(Error::parse(0, format!("{hi} is not {lo} times a power of two")));
        }
        v
    } else {
        src.split(',').map(parse_n).collect::<Result<_>>()?
    };
    if out.is_empty() || out.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::parse(0, format!("N list `{src}` must be nonempty and increasing")));
    }
    Ok(out)
}

fn parse_n(s: &str) -> Result<i64> {
    let s = s.trim();
    let n = match s.split_once('^') {
        Some(("2", e)) => e.parse::<u32>().ok().and_then(|e| 1i64.checked_shl(e)),
        _ => s.parse::<i64>().ok(),
    };
    match n {
        Some(n) if n >= 1 => Ok(n),
        _ => Err(Error::parse(0, format!("bad N `{s}`"))),
    }
}

pub fn parse_list<T: FromStr>(src: &str, what: &str) -> Result<Vec<T>> {
    src.split(',')
        .map(|s| s.trim().parse::<T>().map_err(|_| Error::parse(0, format!("bad {what} `{s}`"))))
        .collect()
}

/// The alphabet extended by every label the words use.
pub fn alphabet_with(base: &str, words: &[&Word]) -> Result<Alphabet> {
    let mut labels: Vec<Label> = Alphabet::parse(base)?.labels().to_vec();
    for w in words {
        labels.extend(w.letters().iter().cloned());
    }
    Ok(Alphabet::new(labels))
}
