use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("field size {size} exceeds the budget of {budget} elements")]
    FieldBudget { size: u64, budget: u64 },
    #[error("{0} is not the order of a subfield")]
    NotSubfield(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd(q, n) must be 1, got q = {q}, n = {n}")]
    NotCoprime { q: u64, n: usize },
    #[error("F_q[Q_{n}] with q = {q}: isomorphic to F_q[D_{}], no generator-level map", 2 * n)]
    DelegateToDihedral { q: u64, n: usize },
    #[error("the row space is not a left ideal")]
    NotAnIdeal,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("wrong mode: {0}")]
    WrongMode(String),
    #[error("generator matrix is rank deficient")]
    RankDeficient,
    #[error("not self-orthogonal: {0}")]
    NotSelfOrthogonal(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
}
