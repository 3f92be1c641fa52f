use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("samples are not consistent with a polynomial of degree at most {bound}")]
    InconsistentSamples { bound: usize },
    #[error("need at least {needed} distinct samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("invalid sample: {0}")]
    InvalidSample(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("cohomology classes live in different rings: {0} vs {1}")]
    ParamMismatch(String, String),
    #[error("real dimension 2({n}+{k}) is not divisible by 4")]
    DimensionOdd { n: u32, k: u32 },
    #[error("weight mismatch: expected {expected}, got {got}")]
    WeightMismatch { expected: u32, got: u32 },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("n = {n} and k = {k} have different parity")]
    ParityMismatch { n: u32, k: u32 },
    #[error("series order {got} too small, need at least {needed}")]
    InsufficientOrder { needed: usize, got: usize },
    #[error("Pontryagin numbers still depend on c; supply a value for c")]
    SymbolicC,
    #[error("Thom matrix in weight {m} at c = {c} is singular")]
    SingularThomMatrix { m: u32, c: i64 },
    #[error("coefficient of {monomial} vanished while eliminating K3 at c = {c}")]
    PivotZero { monomial: String, c: i64 },
    #[error("products K3 x X of weight {weight} are not determined by K3-free relations at c = {c}")]
    K3Undetermined { weight: u32, c: i64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
