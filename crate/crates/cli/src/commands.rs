use std::sync::Arc;
use std::time::Instant;

use dii_core::algebra::{Alphabet, Index, Label, Word};
use dii_core::eval::{delta, delta_bruteforce_guarded, EvalReport, Method};
use dii_core::identity::{run_campaign, CampaignConfig, IdentityKind, IdentityReport, Status};
use dii_core::limits::{
    self, li_reference, li_shuffle, ConvergenceTable, LimitComparison, LIMIT_TOL,
};
use dii_core::path::{parse_path, Grid, PathSpec};
use dii_core::{Backend, Error, Exact, Float, Result, Scalar};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{alphabet_with, parse_list, Format, RunConfig};

/// Rendered output and whether every check it reports passed.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn envelope(command: &str, cfg: &RunConfig, result: impl Serialize) -> String {
    let v = json!({ "schema": 1, "command": command, "config": cfg, "result": result });
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn unsupported(cfg: &RunConfig, command: &str) -> Error {
    Error::Precondition(format!("{command} has no {:?} output", cfg.format).to_lowercase())
}

pub struct EvalArgs {
    pub path: String,
    pub word: String,
    pub n: i64,
    pub method: Method,
}

fn eval_with<S: Scalar>(args: &EvalArgs, cfg: &RunConfig) -> Result<EvalReport> {
    let w = Word::parse(&args.word)?;
    let alphabet = alphabet_with(&cfg.alphabet, &[&w])?;
    let path = parse_path(&args.path, Arc::new(Grid::new(args.n, alphabet)?))?;
    let start = Instant::now();
    let value = match args.method {
        Method::Dp => delta::<S>(&path, &w)?,
        Method::Brute => delta_bruteforce_guarded::<S>(&path, &w, cfg.max_chains)?,
    };
    Ok(EvalReport {
        value: value.render(),
        n: path.n(),
        path: path.to_string(),
        word: w.to_string(),
        backend: S::BACKEND,
        method: args.method,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

pub fn eval(args: &EvalArgs, cfg: &RunConfig) -> Result<Outcome> {
    let report = match cfg.backend {
        Backend::Exact => eval_with::<Exact>(args, cfg)?,
        Backend::Float => eval_with::<Float>(args, cfg)?,
    };
    let text = match cfg.format {
        Format::Json => envelope("eval", cfg, &report),
        Format::Csv => {
            let mut s = String::from("power,value\n");
            for (i, v) in report.value.iter().enumerate() {
                s.push_str(&format!("{i},{v}\n"));
            }
            s
        }
        Format::Pretty => {
            let mut s = format!("Δ_N={} along {} of {}\n", report.n, report.path, report.word);
            if report.value.is_empty() {
                s.push_str("  0\n");
            }
            for (i, v) in report.value.iter().enumerate() {
                s.push_str(&format!("  θ^{i}: {v}\n"));
            }
            s.push_str(&format!("  [{} / {}, {:.3} ms]\n", report.backend, report.method, report.elapsed_ms));
            s
        }
    };
    Ok(Outcome { text, ok: true })
}

pub struct CheckArgs {
    pub identity: IdentityKind,
    pub trials: usize,
    pub max_len: usize,
}

#[derive(Serialize)]
struct Summary {
    identity: IdentityKind,
    pass: usize,
    fail: usize,
    skipped: usize,
}

pub const CHECK_CSV_HEADER: &str = "identity,path,words,n,seed,trial,backend,status,residual,reason";

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn check_csv(reports: &[IdentityReport]) -> String {
    let mut s = format!("{CHECK_CSV_HEADER}\n");
    for r in reports {
        let (status, reason) = match &r.status {
            Status::Pass => ("pass", ""),
            Status::Fail => ("fail", ""),
            Status::Skipped(why) => ("skipped", why.as_str()),
        };
        let opt = |v: Option<String>| v.unwrap_or_default();
        s.push_str(
            &[
                csv_field(&r.identity),
                csv_field(&r.path),
                csv_field(&r.words.join(" ")),
                r.n.to_string(),
                opt(r.seed.map(|x| x.to_string())),
                opt(r.trial.map(|x| x.to_string())),
                r.backend.to_string(),
                status.to_string(),
                format!("{:e}", r.residual),
                csv_field(reason),
            ]
            .join(","),
        );
        s.push('\n');
    }
    s
}

pub fn check(args: &CheckArgs, cfg: &RunConfig) -> Result<Outcome> {
    let mut camp = CampaignConfig::new(args.identity, Alphabet::parse(&cfg.alphabet)?);
    camp.trials = args.trials;
    camp.seed = cfg.seed.unwrap_or(0);
    camp.max_len = args.max_len;
    if !cfg.n_list.is_empty() {
        camp.n_list = cfg.n_list.clone();
    }
    let reports = match cfg.backend {
        Backend::Exact => run_campaign::<Exact>(&camp)?,
        Backend::Float => run_campaign::<Float>(&camp)?,
    };
    let summary = Summary {
        identity: args.identity,
        pass: reports.iter().filter(|r| r.passed()).count(),
        fail: reports.iter().filter(|r| r.failed()).count(),
        skipped: reports.iter().filter(|r| matches!(r.status, Status::Skipped(_))).count(),
    };
    let ok = summary.fail == 0;
    let mut cfg = cfg.clone();
    cfg.n_list = camp.n_list.clone();
    cfg.seed = Some(camp.seed);
    let text = match cfg.format {
        Format::Json => envelope("check", &cfg, json!({ "summary": summary, "reports": reports })),
        Format::Csv => check_csv(&reports),
        Format::Pretty => {
            let mut s = format!(
                "{}: {} passed, {} failed, {} skipped (seed {}, N ∈ {:?})\n",
                args.identity, summary.pass, summary.fail, summary.skipped, camp.seed, camp.n_list
            );
            for r in &reports {
                match &r.status {
                    Status::Fail => s.push_str(&format!(
                        "  FAIL trial {:?} N={} {} {}: lhs {:?} rhs {:?}\n",
                        r.trial,
                        r.n,
                        r.path,
                        r.words.join(" "),
                        r.lhs,
                        r.rhs
                    )),
                    Status::Skipped(why) => s.push_str(&format!("  skip trial {:?} N={}: {why}\n", r.trial, r.n)),
                    Status::Pass => {}
                }
            }
            s
        }
    };
    Ok(Outcome { text, ok })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum LimitKind {
    #[value(name = "zeta-star")]
    ZetaStar,
    #[value(name = "li")]
    Li,
    #[value(name = "L")]
    L,
    #[value(name = "symmetric")]
    Symmetric,
    #[value(name = "zeta-S")]
    ZetaS,
}

pub struct LimitArgs {
    pub kind: LimitKind,
    pub k: String,
    pub z: Option<String>,
    pub alpha: u32,
}

fn table_text(command: &str, cfg: &RunConfig, table: &ConvergenceTable, extra: Value) -> Result<String> {
    Ok(match cfg.format {
        Format::Json => envelope(command, cfg, json!({ "input": extra, "table": table })),
        Format::Csv => table.to_csv(),
        Format::Pretty => {
            let mut s = format!("reference {:.12} {:+.12}i\n", table.reference[0], table.reference[1]);
            for r in &table.rows {
                s.push_str(&format!("  N={:<8} {:+.12} {:+.12}i  err {:.3e}  N·err/log N {:.4}\n", r.n, r.re, r.im, r.error, r.normalized));
            }
            match table.exponent {
                Some(p) => s.push_str(&format!("decay exponent {p:.3}\n")),
                None => s.push_str("decay exponent n/a\n"),
            }
            s
        }
    })
}

fn fmt_c(z: [f64; 2]) -> String {
    if z[1] == 0.0 {
        format!("{:.12}", z[0])
    } else {
        format!("{:.12} {:+.12}i", z[0], z[1])
    }
}

fn comparison_text(cfg: &RunConfig, c: &LimitComparison) -> Result<String> {
    Ok(match cfg.format {
        Format::Json => envelope("limit", cfg, c),
        Format::Csv => return Err(unsupported(cfg, "limit --kind symmetric")),
        Format::Pretty => format!(
            "{} [{}]\n  lhs {}\n  rhs {}\n  residual {:.3e} (tolerance {:.1e}) {}\n",
            c.name,
            c.args,
            fmt_c(c.lhs),
            fmt_c(c.rhs),
            c.residual,
            c.tolerance,
            if c.passed { "ok" } else { "MISMATCH" }
        ),
    })
}

pub fn limit(args: &LimitArgs, cfg: &RunConfig) -> Result<Outcome> {
    let ks: Vec<u32> = parse_list(&args.k, "depth")?;
    let zs: Option<Vec<Label>> = args.z.as_deref().map(|z| parse_list(z, "point")).transpose()?;
    let ones = |n: usize| vec![Label::int(1); n];
    let n_list = &cfg.n_list;
    match args.kind {
        LimitKind::ZetaStar => {
            let r = limits::zeta_star(&ks, n_list)?;
            let reference = match ks.last() {
                Some(&k) if k >= 2 && ks.len() == 1 => Some(limits::zeta(k)?),
                Some(&k) if k >= 2 => Some(limits::li(&vec![Complex64::new(1.0, 0.0); ks.len()], &ks)?),
                _ => None,
            };
            let text = match cfg.format {
                Format::Json => envelope("limit", cfg, json!({ "kind": "zeta-star", "k": ks, "reg": r, "reference": reference })),
                Format::Csv => return Err(unsupported(cfg, "limit --kind zeta-star")),
                Format::Pretty => {
                    let mut s = format!("ζ*({}) = {}\n", args.k, fmt_c(r.value[0]));
                    s.push_str(&format!("  fit residual {:.3e}, log degree {}\n", r.fits[0].residual, r.fits[0].degree));
                    if let Some(v) = reference {
                        s.push_str(&format!("  series {} (tail {:.1e})\n", fmt_c(v.value), v.tail));
                    }
                    s
                }
            };
            Ok(Outcome { text, ok: true })
        }
        LimitKind::Li => {
            let iota = Index::new(ks.clone(), zs.unwrap_or_else(|| ones(ks.len())))?;
            let table = li_shuffle(&iota, n_list)?;
            let text = table_text("limit", cfg, &table, json!({ "kind": "li", "index": iota.to_string() }))?;
            Ok(Outcome { text, ok: true })
        }
        LimitKind::L => {
            let zs = zs.unwrap_or_else(|| ones(ks.len()));
            let r = limits::l_shuffle(&ks, &zs, n_list)?;
            let text = match cfg.format {
                Format::Json => envelope("limit", cfg, json!({ "kind": "L", "k": ks, "z": zs.iter().map(|z| z.to_string()).collect::<Vec<_>>(), "reg": r })),
                Format::Csv => return Err(unsupported(cfg, "limit --kind L")),
                Format::Pretty => format!(
                    "L^sh(k=({}); z=({})) = {}\n  fit residual {:.3e}, log degree {}\n",
                    args.k,
                    args.z.as_deref().unwrap_or("1"),
                    fmt_c(r.value[0]),
                    r.fits[0].residual,
                    r.fits[0].degree
                ),
            };
            Ok(Outcome { text, ok: true })
        }
        LimitKind::Symmetric => {
            let zs = zs.unwrap_or_else(|| ones(ks.len() + 1));
            let alphabet = Alphabet::parse(&cfg.alphabet)?;
            let c = limits::symmetric_mpl_check(args.alpha, &ks, &zs, &alphabet, n_list)?;
            Ok(Outcome { text: comparison_text(cfg, &c)?, ok: c.passed })
        }
        LimitKind::ZetaS => {
            let r = limits::zeta_s_star(&ks, n_list)?;
            let c = LimitComparison::new(
                "zeta-S",
                format!("k=({})", args.k),
                Complex64::new(r.beta_route[0], r.beta_route[1]),
                Complex64::new(r.combinatorial[0], r.combinatorial[1]),
                LIMIT_TOL,
            );
            let text = match cfg.format {
                Format::Json => envelope("limit", cfg, json!({ "kind": "zeta-S", "report": r, "comparison": c })),
                Format::Csv => return Err(unsupported(cfg, "limit --kind zeta-S")),
                Format::Pretty => format!(
                    "{}  β route vs combinatorial; (−1)^r-signed residual {:.3e}\n",
                    comparison_text(cfg, &c)?.trim_end(),
                    r.signed_residual
                ),
            };
            Ok(Outcome { text, ok: c.passed })
        }
    }
}

pub struct ConvergeArgs {
    pub path: String,
    pub word: String,
    pub reference: Option<String>,
}

/// Reads `W(ι) = e_{z_1} e_0^{k_1−1} ⋯` back into `ι`.
fn index_of_word(w: &Word) -> Option<Index> {
    let zero = Label::int(0);
    let mut ks = Vec::new();
    let mut zs = Vec::new();
    for a in w.letters() {
        if *a == zero {
            *ks.last_mut()? += 1;
        } else {
            zs.push(a.clone());
            ks.push(1u32);
        }
    }
    Index::new(ks, zs).ok()
}

pub fn converge(args: &ConvergeArgs, cfg: &RunConfig) -> Result<Outcome> {
    let w = Word::parse(&args.word)?;
    let alphabet = alphabet_with(&cfg.alphabet, &[&w])?;
    let reference = match &args.reference {
        Some(src) => {
            let v: Vec<f64> = parse_list(src, "reference")?;
            match v[..] {
                [re] => Complex64::new(re, 0.0),
                [re, im] => Complex64::new(re, im),
                _ => return Err(Error::parse(0, "reference is `re` or `re,im`")),
            }
        }
        None => {
            let straight = matches!(args.path.trim(), "pos:0..1" | "dch");
            match index_of_word(&w).filter(|i| straight && i.is_admissible()) {
                Some(iota) => li_reference(&iota)?.value(),
                None => {
                    return Err(Error::Precondition(
                        "no series reference for this path and word; pass --reference".into(),
                    ))
                }
            }
        }
    };
    let spec = PathSpec::new(args.path.clone(), alphabet);
    let samples: Vec<(i64, Complex64)> = cfg
        .n_list
        .par_iter()
        .map(|&n| Ok((n, delta::<Float>(&spec.build(n)?, &w)?.coeff(0))))
        .collect::<Result<_>>()?;
    let table = ConvergenceTable::new(&samples, reference)?;
    let text = table_text("converge", cfg, &table, json!({ "path": args.path, "word": w.to_string() }))?;
    Ok(Outcome { text, ok: true })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indices_from_words() {
        let i = index_of_word(&Word::parse("e[1]e[0]e[-1]").unwrap()).unwrap();
        assert_eq!(i.depths(), &[2, 1]);
        assert!(index_of_word(&Word::parse("e[0]e[1]").unwrap()).is_none());
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("ab"), "ab");
    }
}
