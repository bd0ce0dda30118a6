use thiserror::Error;

/// Errors produced by the library.
///
/// Precondition violations carry the condition that was violated, so the CLI
/// can name it in its exit message.
#[derive(Debug, Error)]
pub enum Error {
    #[error("elements belong to different rings ({0} vs {1})")]
    SpecMismatch(String, String),
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("gcd(n, p) = 1 required, got n = {n}, p = {p}")]
    LengthNotCoprime { n: u64, p: u64 },
    #[error("residue polynomials are not coprime")]
    NotCoprime,
    #[error("exponent {got} out of range 0..={max}")]
    ExponentOutOfRange { got: u32, max: u32 },
    #[error("the zero code has no minimum weight or BCH bound")]
    ZeroCode,
    #[error("enumeration budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
