//! Regularized limits.

mod mpl;
mod reg;
mod series;
mod table;

pub use mpl::{
    beta_theta_log_degree, i_beta_theta, i_dch, l_shuffle, li_reference, li_shuffle, straight_log_degree,
    symmetric_mpl_check, zeta_log_degree, zeta_s_star, zeta_star, LimitComparison, ZetaSReport, LIMIT_TOL,
};
pub use reg::{
    default_n_list, default_tail, exact_n_list, fit, reg_star_limit, reg_star_limit_with, RegFit, RegLimit,
    EULER_GAMMA, FIT_TOL,
};
pub use series::{li, li_terms, nested_harmonic, zeta, SeriesValue, LI_TERMS};
pub use table::{decay_exponent, ConvergenceRow, ConvergenceTable, CSV_HEADER};
