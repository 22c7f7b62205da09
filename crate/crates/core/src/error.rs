use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid piece: {0}")]
    InvalidPiece(String),

    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),

    #[error("label {0} is not in the alphabet")]
    LabelNotInAlphabet(String),

    #[error("word {0} is not in H^1")]
    NotInH1(String),

    #[error("inadmissible index: {0}")]
    Inadmissible(String),

    #[error("guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("model mismatch: {0}")]
    ModelMismatch(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("pair is not shuffleable: {0}")]
    NotShuffleable(String),

    #[error("closure violated: u = {u}, z = {z}")]
    ClosureViolation { u: String, z: String },
}

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
