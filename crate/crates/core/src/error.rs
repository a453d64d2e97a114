use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no generators given")]
    EmptyInput,
    #[error("generator {0} is not positive")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}, a numerical semigroup needs gcd 1")]
    GcdNotOne(i64),
    #[error("input exceeds desk scale: {0}")]
    TooLarge(String),
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(i64),
    #[error("m = {m} is below the conductor {conductor}")]
    BelowConductor { m: i64, conductor: i64 },
    #[error("mbar = {mbar} must be at least 2c - 1 = {min}")]
    MbarTooSmall { mbar: i64, min: i64 },
    #[error("the semigroup is not symmetric")]
    NotSymmetric,
    #[error("the semigroup does not have embedding dimension two")]
    NotDim2,
    #[error("empty target set")]
    EmptySet,
    #[error("the base of the triangle with upper vertex {0} is the whole ground")]
    BaseIsWholeGround(i64),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("search budget exceeded after {explored} nodes; best bound {best_bound} is uncertified")]
    BudgetExceeded { best_bound: usize, witness: Vec<i64>, explored: u64 },
    #[error("field size q = {0} must be at least 2")]
    BadField(i64),
    #[error("{0}")]
    OutOfRange(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("bad strip: {0}")]
    BadStrip(String),
}
