//! Finite-N identity checks: shuffleability, asymptotic shuffle, Hoffman–Ohno
//! sums, transport relations, the cyclic sum, composition and reversal.

mod campaign;
mod hoffman_ohno;
mod relations;
mod report;
mod shuffle_asym;
mod shuffleable;

pub use campaign::{run_campaign, CampaignConfig, IdentityKind, SHAPES};
pub use hoffman_ohno::{delta_o, delta_o_prime, straight_ends, MAX_PROVISION};
pub use relations::{check_composition, check_cyclic, check_reversal, check_transport, cyclic_sides};
pub use report::{IdentityReport, Status, FLOAT_TOL};
pub use shuffle_asym::{check_shuffle_asymptotic, residual, ShuffleAsymptotic, ShuffleRow, SLACK};
pub use shuffleable::{is_shuffleable, shuffle_violation};
