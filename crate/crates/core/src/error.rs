use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Coxeter datum: {0}")]
    InvalidDatum(String),
    #[error("group of order {order} exceeds the element cap {cap}")]
    CapExceeded { order: u64, cap: usize },
    #[error("word {0:?} is not a reduced expression for the element")]
    NotReduced(Vec<usize>),
    #[error("generator index {0} out of range")]
    BadGenerator(usize),
    #[error("more than {cap} reduced words")]
    TooManyWords { cap: usize },
    #[error("no exact representation available for this group")]
    UnsupportedRing,
    #[error("element is not in the Bruhat ideal")]
    NotInIdeal,
    #[error("no meeting point found")]
    SearchExhausted,
    #[error("arrangement has {k} hyperplanes, more than the supported {max}")]
    TooManyHyperplanes { k: usize, max: usize },
    #[error("position set {0:?} is not an NBC set")]
    NotNbc(Vec<usize>),
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("{0}")]
    Parse(String),
    #[error("operation requires a type A system of rank {0}")]
    NotTypeA(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
