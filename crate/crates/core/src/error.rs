use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("k must be nonzero")]
    ZeroK,
    #[error("{0} is divisible by a sixth power")]
    NotSixthPowerFree(BigInt),
    #[error("divisor enumeration needs a nonzero target")]
    ZeroDivisorTarget,
    #[error("{0} is not an odd prime")]
    NotOddPrime(BigInt),
    #[error("bad reduction at p = {0}")]
    BadReduction(u64),
    #[error("point ({x}, {y}) is not on y^2 = x^3 + {c}")]
    OffCurve { c: BigInt, x: String, y: String },
    #[error("curve constant must be nonzero")]
    SingularCurve,
    #[error("solution has y1*y2 = 0")]
    DegenerateSolution,
    #[error("(m, n) = ({m}, {n}) does not represent {d2}")]
    NotANormRepresentation { m: BigInt, n: BigInt, d2: BigInt },
    #[error("facts: parse error at line {line}: {msg}")]
    FactsParse { line: usize, msg: String },
    #[error("facts: validation failed for curve {c}: {msg}")]
    FactsInvalid { c: BigInt, msg: String },
    #[error("expected table: parse error at line {line}: {msg}")]
    TableParse { line: usize, msg: String },
    #[error("no rank fact available for {0}")]
    MissingFact(String),
    #[error("certificate step inconclusive: {0}")]
    Inconclusive(String),
    #[error("family parameter must be even and at least 2, got {0}")]
    BadFamilyParameter(i64),
    #[error("family point X = {x} gives a non-square Y^2; formula discrepancy")]
    FamilyNonSquare { x: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
