use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator {0} is not an involution")]
    InvalidGenerator(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid rank {0}")]
    InvalidRank(usize),
    #[error("involution set is not a 3-transposition set: {left} * {right} has order {order}")]
    NotThreeTransposition {
        left: String,
        right: String,
        order: usize,
    },
    #[error("group enumeration exceeded the budget of {budget} elements")]
    BudgetExceeded { budget: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parameter alpha = {0} does not split the adjoint action into three eigenspaces")]
    DegenerateParameter(String),
    #[error("k*alpha + 4 = 0, the conformal vector is undefined")]
    SingularParameter,
    #[error("system has {0} connected components; an indecomposable system is required")]
    Decomposable(usize),
    #[error("shape mismatch: expected {expected}, got {found}")]
    ShapeError { expected: usize, found: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("invalid series index n = {0}")]
    InvalidSeries(i64),
    #[error("invalid label (n, r, s) = ({n}, {r}, {s})")]
    InvalidLabel { n: i64, r: i64, s: i64 },
    #[error("labels from different series: n = {0} and n = {1}")]
    SeriesMismatch(u32, u32),
    #[error("fusion product depends on the label representative: {0}")]
    FusionAsymmetry(String),
    #[error("invalid size {0}")]
    InvalidSize(usize),
    #[error("invalid rational {0:?}")]
    InvalidRational(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal consistency check failed: {0}")]
    InternalInconsistency(String),
}
