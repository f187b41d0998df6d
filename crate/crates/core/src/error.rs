use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("field {p}^{k} is outside the supported range (order <= 1024, k >= 1)")]
    FieldTooLarge { p: u32, k: u32 },
    #[error("coefficient list does not describe an element of this field")]
    BadCoefficients,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MismatchedFields,
    #[error("operation not applicable to the given operand")]
    BadOperand,
    #[error("field is not a quadratic extension")]
    NotQuadratic,
    #[error("characteristic 2 is not supported by the Jordan product")]
    CharacteristicTwo,
    #[error("the zero vector has no color or projective point")]
    ZeroVector,
    #[error("vector is not white")]
    NotWhite,
    #[error("matrix entries do not lie in a common two-dimensional subalgebra")]
    NotInSubalgebra,
    #[error("operator is singular")]
    Singular,
    #[error("generator parameter violates its constraint: {0}")]
    BadGenerator(String),
    #[error("budget exhausted: {0}")]
    Budget(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
