//! Discrete forms and the evaluator for Δ_{N,γ}.

mod brute;
mod dp;
mod forms;
mod report;
mod singular;

pub use brute::{chain_count, delta_bruteforce, delta_bruteforce_guarded, delta_multi_bruteforce, DEFAULT_CHAIN_GUARD};
pub use dp::{delta, delta_lin, delta_multi, delta_multi_abs, delta_piecewise};
pub use forms::{omega, omega_pair, FormValue};
pub use report::{evaluate, EvalReport, Method};
pub use singular::delta_singular_closed;
