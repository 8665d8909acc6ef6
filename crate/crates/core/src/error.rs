use thiserror::Error;

use crate::element_set::ElementSet;


#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("circuit list contains the empty set")]
    EmptyCircuit,
    #[error("circuit {0:?} is not inside the ground set")]
    ElementOutOfRange(ElementSet),
    #[error("circuits are not an antichain: {smaller:?} is contained in {larger:?}")]
    NotAntichain {
        smaller: ElementSet,
        larger: ElementSet,
    },
    #[error("circuit elimination fails for {first:?}, {second:?} at element {element}")]
    EliminationFailure {
        first: ElementSet,
        second: ElementSet,
        element: usize,
    },
    #[error("{0:?} is not a basis")]
    NotABasis(ElementSet),
    #[error("element {0} already lies in the basis")]
    ElementInBasis(usize),
    #[error("{0:?} is not a circuit of the matroid")]
    NotACircuit(ElementSet),
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("signed circuit {signed} does not have underlying set {expected:?}")]
    UnderlyingMismatch {
        signed: String,
        expected: ElementSet,
    },
    #[error("signed elimination fails for {first}, {second} at element {element}")]
    SignedEliminationFailure {
        first: String,
        second: String,
        element: usize,
    },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("matroid is not orientable")]
    NotOrientable,
    #[error("matroid is not connected")]
    NotConnected,
    #[error("basis-sign propagation is inconsistent at {0:?}")]
    InconsistentPropagation(ElementSet),
    #[error("degenerate configuration: vanishing minor on {0:?}")]
    DegenerateConfiguration(ElementSet),
    #[error("oriented matroid is not of corank two")]
    NotCorankTwo,
    #[error("construction failed verification: {0}")]
    ConstructionCheckFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
