mod commands;
mod config;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dii_core::algebra::Alphabet;
use dii_core::eval::Method;
use dii_core::identity::IdentityKind;
use dii_core::limits::default_n_list;
use dii_core::{Backend, Error};

use commands::{CheckArgs, ConvergeArgs, EvalArgs, LimitArgs, LimitKind, Outcome};
use config::{parse_n_list, Format, RunConfig};

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  1  an identity or limit comparison failed
  2  parse or usage error
  3  invariant or precondition violated (invalid piece, label outside D, inadmissible index, closure, ...)
  4  model mismatch in a Reg* fit
  5  guard exceeded (brute-force chain count, provision size)

CSV columns:
  check:    identity,path,words,n,seed,trial,backend,status,residual,reason
  converge: N,re,im,abs_error,normalized_error   (normalized = N·error/log N)
  eval:     power,value";

#[derive(Parser)]
#[command(name = "dii", version, about = "Discrete iterated integrals: evaluation, identity campaigns and regularized limits", after_help = EXIT_CODES)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "DII_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Alphabet D, comma separated; labels used by the word are added.
    #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
    alphabet: String,

    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Shorthand for `--format json`.
    #[arg(long, conflicts_with = "format")]
    json: bool,
}

impl Common {
    fn format(&self, default: Format) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format.unwrap_or(default)
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate Δ_{N,γ}(w).
    Eval {
        /// Path in the piece DSL, e.g. `pos:0..1`, `beta`, `pos:0..1;sing:1,0,N,+;neg:1..0`.
        #[arg(long)]
        path: String,
        /// Word such as `e[1]e[0]^2`.
        #[arg(long)]
        word: String,
        #[arg(long = "N")]
        n: i64,
        #[arg(long, default_value = "exact")]
        backend: Backend,
        #[arg(long, default_value = "dp")]
        method: Method,
        /// Chain budget for `--method brute`.
        #[arg(long)]
        max_chains: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Run a randomized identity campaign.
    Check {
        #[arg(long)]
        identity: IdentityKind,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Grid sizes: `6,8,12` or a doubling run `1024..16384`.
        #[arg(long = "N-list")]
        n_list: Option<String>,
        /// Longest random word.
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value = "exact")]
        backend: Backend,
        #[command(flatten)]
        common: Common,
    },
    /// Regularized limits: ζ*, Li^sh, L^sh, the symmetric MPL theorem, ζ_S*.
    Limit {
        #[arg(long, value_enum)]
        kind: LimitKind,
        /// Depths k_1,…,k_r.
        #[arg(long)]
        k: String,
        /// Points z_i (r of them; r + 1 for `symmetric`). Defaults to all 1.
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        #[arg(long, default_value_t = 1)]
        alpha: u32,
        #[arg(long = "N-list")]
        n_list: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Tabulate Δ_N(w) against a reference value as N grows.
    Converge {
        #[arg(long)]
        path: String,
        #[arg(long)]
        word: String,
        #[arg(long = "N-list")]
        n_list: Option<String>,
        /// Reference `re` or `re,im`; defaults to the series value of W(ι) on pos:0..1.
        #[arg(long, allow_hyphen_values = true)]
        reference: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::ModelMismatch(_) => 4,
        Error::GuardExceeded(_) => 5,
        _ => 3,
    }
}

fn n_list(src: &Option<String>, default: Vec<i64>) -> Result<Vec<i64>, Error> {
    src.as_deref().map_or(Ok(default), parse_n_list)
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Eval { path, word, n, backend, method, max_chains, common } => {
            let mut cfg = RunConfig::new(&Alphabet::parse(&common.alphabet)?, backend, vec![n], common.format(Format::Pretty));
            if let Some(m) = max_chains {
                cfg.max_chains = m;
            }
            commands::eval(&EvalArgs { path, word, n, method }, &cfg)
        }
        Command::Check { identity, trials, seed, n_list: src, max_len, backend, common } => {
            let mut cfg = RunConfig::new(
                &Alphabet::parse(&common.alphabet)?,
                backend,
                n_list(&src, Vec::new())?,
                common.format(Format::Pretty),
            );
            cfg.seed = Some(seed);
            commands::check(&CheckArgs { identity, trials, max_len }, &cfg)
        }
        Command::Limit { kind, k, z, alpha, n_list: src, common } => {
            let cfg = RunConfig::new(
                &Alphabet::parse(&common.alphabet)?,
                Backend::Float,
                n_list(&src, default_n_list())?,
                common.format(Format::Pretty),
            );
            commands::limit(&LimitArgs { kind, k, z, alpha }, &cfg)
        }
        Command::Converge { path, word, n_list: src, reference, common } => {
            let cfg = RunConfig::new(
                &Alphabet::parse(&common.alphabet)?,
                Backend::Float,
                n_list(&src, default_n_list())?,
                common.format(Format::Csv),
            );
            commands::converge(&ConvergeArgs { path, word, reference }, &cfg)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("dii: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("dii: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
