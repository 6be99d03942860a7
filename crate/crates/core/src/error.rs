use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("hom multiplicity {value} exceeds 1 for roots at positions {a} and {b}")]
    MultiplicityViolation { a: usize, b: usize, value: u32 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("no generic reverse data found after {attempts} attempts")]
    GenericityFailure { attempts: usize },
    #[error("image of r-map leaves the dual ext space: {0}")]
    ContainmentViolation(String),
    #[error("negative dimension {0} from the form identity")]
    NegativeDimension(i64),
    #[error("assumption violated: {0}")]
    AssumptionViolated(String),
    #[error("invalid minor index: {0}")]
    InvalidIndex(String),
}

pub type Result<T> = std::result::Result<T, Error>;
