//! Discrete paths on the grid 1/N·Z avoiding D.

mod discrete;
mod dsl;
mod eliminate;
mod grid;
mod piece;
mod provision;
mod spec;

pub use discrete::DiscretePath;
pub use dsl::parse_path;
pub use eliminate::relocate;
pub use grid::{Endpoint, Grid};
pub use piece::{Piece, Sign};
pub use provision::{PieceSymbols, ProvisionIndex, Symbol};
pub use spec::PathSpec;
