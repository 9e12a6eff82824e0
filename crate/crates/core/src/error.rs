use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("valuation of zero is undefined")]
    ZeroValuation,

    #[error("extended gcd of (0, 0) is undefined")]
    GcdOfZeros,

    #[error("factorization of {n} incomplete: composite cofactor {cofactor} remains")]
    IncompleteFactorization { n: BigInt, cofactor: BigInt },

    #[error("cannot certify primality of {0}: above the deterministic Miller-Rabin range")]
    UncertifiedPrime(BigInt),

    #[error("x^9 - {0} is reducible")]
    Reducible(BigInt),

    #[error("{0} is not prime")]
    NotPrime(BigInt),

    #[error("wrong case: {0}")]
    WrongCase(String),

    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,

    #[error("polynomial is not p-regular at p = {0}")]
    NotRegular(BigInt),

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("module generators are rank deficient")]
    RankDeficient,

    #[error("module does not contain Z[theta]")]
    MissingPowerBasis,

    #[error("duplicate prime {0} in glue input")]
    DuplicatePrime(BigInt),

    #[error("malformed basis: {0}")]
    MalformedBasis(String),

    #[error("computation paths disagree: {0}")]
    Disagreement(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
