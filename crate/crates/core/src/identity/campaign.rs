//! Randomized identity campaigns with reproducible per-trial streams.

use std::fmt;
use std::str::FromStr;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::relations::{check_composition, check_cyclic, check_reversal, check_transport};
use super::report::{IdentityReport, Status};
use super::shuffle_asym::check_shuffle_asymptotic;
use crate::algebra::{Alphabet, Label, Word};
use crate::error::{Error, Result};
use crate::path::{DiscretePath, PathSpec};
use crate::scalar::{Backend, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityKind {
    Composition,
    Reversal,
    Shuffle,
    Transport,
    Cyclic,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 5] = [
        IdentityKind::Composition,
        IdentityKind::Reversal,
        IdentityKind::Shuffle,
        IdentityKind::Transport,
        IdentityKind::Cyclic,
    ];
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdentityKind::Composition => "composition",
            IdentityKind::Reversal => "reversal",
            IdentityKind::Shuffle => "shuffle",
            IdentityKind::Transport => "transport",
            IdentityKind::Cyclic => "cyclic",
        })
    }
}

impl FromStr for IdentityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::parse(0, format!("unknown identity `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub kind: IdentityKind,
    pub trials: usize,
    pub seed: u64,
    pub n_list: Vec<i64>,
    pub alphabet: Alphabet,
    /// Longest word drawn (transport draws `w` one shorter, so `w e_z` fits).
    pub max_len: usize,
}

impl CampaignConfig {
    pub fn new(kind: IdentityKind, alphabet: Alphabet) -> Self {
        let n_list = match kind {
            IdentityKind::Shuffle => (10..=14).map(|j| 1 << j).collect(),
            _ => vec![6, 8, 12],
        };
        CampaignConfig { kind, trials: 50, seed: 0, n_list, alphabet, max_len: 4 }
    }
}

/// Path shapes drawn by the campaigns; those invalid for the alphabet or N
/// are dropped.
pub const SHAPES: &[&str] = &[
    "pos:0..1",
    "neg:1..0",
    "beta",
    "pos:0..1;triv:(1,-)",
    "pos:0..1;sing:1,0,N/2,+;pos:1..2",
    "pos:1/2..1;sing:1,0,N,-;neg:1..0",
    "neg:0..-1",
    "pos:-1..0;sing:0,0,N,+;neg:0..-1",
    "sing:1,1,3,+",
    "sing:0,2,5,-",
];

fn shapes(alphabet: &Alphabet, n: i64) -> Vec<DiscretePath> {
    SHAPES.iter().filter_map(|s| PathSpec::new(*s, alphabet.clone()).build(n).ok()).collect()
}

/// Positive straight pieces `(x, y)` with `x, y ∈ D` and nothing of D between.
fn straight_pieces(alphabet: &Alphabet) -> Vec<PathSpec> {
    let reals: Vec<_> = alphabet.labels().iter().filter_map(|a| a.as_real().cloned()).collect();
    let mut out = Vec::new();
    for w in reals.windows(2) {
        out.push(PathSpec::new(format!("pos:{}..{}", w[0], w[1]), alphabet.clone()));
    }
    out
}

fn random_word(rng: &mut ChaCha8Rng, alphabet: &Alphabet, lo: usize, hi: usize) -> Word {
    let len = rng.random_range(lo..=hi);
    Word::new((0..len).map(|_| alphabet.labels().choose(rng).expect("nonempty alphabet").clone()).collect())
}

fn stream(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Runs `cfg.trials` random instances; results come back in trial order.
pub fn run_campaign<S: Scalar>(cfg: &CampaignConfig) -> Result<Vec<IdentityReport>> {
    if cfg.alphabet.is_empty() {
        return Err(Error::Precondition("empty alphabet".into()));
    }
    let per_trial: Vec<Result<Vec<IdentityReport>>> =
        (0..cfg.trials).into_par_iter().map(|t| run_trial::<S>(cfg, t)).collect();
    let mut out = Vec::new();
    for r in per_trial {
        out.extend(r?);
    }
    Ok(out)
}

fn guarded(r: Result<IdentityReport>, name: &str, path: String, words: Vec<String>, n: i64, backend: Backend) -> Result<IdentityReport> {
    match r {
        Err(Error::GuardExceeded(msg)) => Ok(IdentityReport::skipped(name, path, words, n, backend, msg)),
        other => other,
    }
}

fn run_trial<S: Scalar>(cfg: &CampaignConfig, trial: usize) -> Result<Vec<IdentityReport>> {
    let mut rng = stream(cfg.seed, trial);
    let d = &cfg.alphabet;
    let mut out = Vec::new();
    let name = cfg.kind.to_string();
    if cfg.kind == IdentityKind::Shuffle {
        let spec = PathSpec::new("pos:0..1", d.clone());
        let half = (cfg.max_len / 2).max(1);
        let w = random_word(&mut rng, d, 1, half);
        let w2 = random_word(&mut rng, d, 1, half);
        let words = vec![w.to_string(), w2.to_string()];
        let n = *cfg.n_list.last().unwrap_or(&0);
        let report = match check_shuffle_asymptotic(&spec, &w, &w2, &cfg.n_list) {
            Ok(r) => {
                let last = r.rows.last().expect("two or more rows");
                let mut rep = IdentityReport::skipped(&name, spec.to_string(), words, n, Backend::Float, String::new());
                rep.lhs = last.product.clone();
                rep.rhs = last.shuffle.clone();
                rep.residual = last.residual;
                rep.status = if r.passed { Status::Pass } else { Status::Fail };
                rep
            }
            Err(Error::NotShuffleable(why)) => {
                IdentityReport::skipped(&name, spec.to_string(), words, n, Backend::Float, format!("not shuffleable: {why}"))
            }
            Err(e) => return Err(e),
        };
        out.push(report.with_trial(cfg.seed, trial));
        return Ok(out);
    }
    for &n in &cfg.n_list {
        let report = match cfg.kind {
            IdentityKind::Composition | IdentityKind::Reversal => {
                let all = shapes(d, n);
                let multi: Vec<&DiscretePath> = all.iter().filter(|p| p.pieces().len() > 1).collect();
                let w = random_word(&mut rng, d, 1, cfg.max_len);
                if cfg.kind == IdentityKind::Reversal {
                    let Some(p) = all.choose(&mut rng) else { continue };
                    guarded(check_reversal::<S>(p, &w), &name, p.to_string(), vec![w.to_string()], n, S::BACKEND)?
                } else {
                    let Some(p) = multi.choose(&mut rng) else { continue };
                    let cut = rng.random_range(1..p.pieces().len());
                    let (a, b) = (p.subpath(0..cut), p.subpath(cut..p.pieces().len()));
                    guarded(check_composition::<S>(&a, &b, &w), &name, p.to_string(), vec![w.to_string()], n, S::BACKEND)?
                }
            }
            IdentityKind::Transport | IdentityKind::Cyclic => {
                let pieces = straight_pieces(d);
                let Some(spec) = pieces.choose(&mut rng) else {
                    return Err(Error::Precondition(format!("{d} has no two real labels")));
                };
                let p = spec.build(n)?;
                if cfg.kind == IdentityKind::Transport {
                    let w = random_word(&mut rng, d, 1, cfg.max_len.saturating_sub(1).max(1));
                    let z: Label = d.labels().choose(&mut rng).expect("nonempty").clone();
                    let words = vec![w.to_string(), format!("e[{z}]")];
                    match check_transport::<S>(&p, &w, &z) {
                        Ok([a, b]) => {
                            out.push(a.with_trial(cfg.seed, trial));
                            b
                        }
                        Err(e) => guarded(Err(e), &name, p.to_string(), words, n, S::BACKEND)?,
                    }
                } else {
                    let w = random_word(&mut rng, d, 2, cfg.max_len.max(2));
                    guarded(check_cyclic::<S>(&p, &w), &name, p.to_string(), vec![w.to_string()], n, S::BACKEND)?
                }
            }
            IdentityKind::Shuffle => unreachable!(),
        };
        out.push(report.with_trial(cfg.seed, trial));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Exact;

    #[test]
    fn kinds_round_trip() {
        for k in IdentityKind::ALL {
            assert_eq!(k.to_string().parse::<IdentityKind>().unwrap(), k);
        }
        assert!("bogus".parse::<IdentityKind>().is_err());
    }

    #[test]
    fn shapes_depend_on_alphabet() {
        assert_eq!(shapes(&Alphabet::ints(&[0, 1, -1]), 6).len(), SHAPES.len());
        // 3/2 lies inside (1, 2)
        assert_eq!(shapes(&Alphabet::parse("0,1,3/2").unwrap(), 6).len(), SHAPES.len() - 1);
        // sing:0,2,5,- needs N ≥ 5
        assert_eq!(shapes(&Alphabet::ints(&[0, 1]), 4).len(), SHAPES.len() - 1);
        assert_eq!(straight_pieces(&Alphabet::ints(&[-1, 0, 1])).len(), 2);
    }

    #[test]
    fn small_campaigns_pass_and_repeat() {
        for kind in [IdentityKind::Composition, IdentityKind::Reversal, IdentityKind::Transport, IdentityKind::Cyclic] {
            let mut cfg = CampaignConfig::new(kind, Alphabet::ints(&[0, 1, -1]));
            cfg.trials = 6;
            cfg.seed = 11;
            cfg.n_list = vec![6];
            let a = run_campaign::<Exact>(&cfg).unwrap();
            assert!(a.iter().all(|r| r.passed()), "{kind}: {a:?}");
            let b = run_campaign::<Exact>(&cfg).unwrap();
            let words = |v: &[IdentityReport]| v.iter().map(|r| r.words.clone()).collect::<Vec<_>>();
            assert_eq!(words(&a), words(&b));
        }
    }
}
