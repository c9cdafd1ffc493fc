use thiserror::Error;

use crate::domain::Label;

/// Errors raised by the library outside of text parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truth domain needs between 2 and {max} values, got {got}")]
    InvalidDomain { got: usize, max: usize },
    #[error("label {label} is outside 1..={n}")]
    LabelOutOfRange { label: usize, n: Label },
    #[error("unknown connective `{0}`")]
    UnknownConnective(String),
    #[error("connective `{name}` takes {expected} argument(s), got {got}")]
    ArityMismatch {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("connective `{0}` is declared twice")]
    DuplicateConnective(String),
    #[error("`{0}` is reserved for the modal operators")]
    ReservedName(String),
    #[error("truth table of `{name}` has {got} entries, expected {expected}")]
    IncompleteTable {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("connective `{name}` is defined over {got} values but the signature has {expected}")]
    DomainMismatch {
        name: String,
        expected: Label,
        got: Label,
    },
    #[error("world {world} does not exist (model has {count})")]
    UnknownWorld { world: usize, count: usize },
    #[error("a Kripke model needs at least one world")]
    EmptyModel,
    #[error("formula `{0}` contains a modal operator")]
    ModalFormula(String),
    #[error("formula set is not closed under subformulas: `{0}` is missing")]
    NotSubformulaClosed(String),
    #[error("model is not in the {0} frame class")]
    OutsideFrameClass(&'static str),
    #[error("enumeration ceiling of {ceiling} exceeded (needed {needed})")]
    CeilingExceeded { ceiling: u64, needed: u128 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
