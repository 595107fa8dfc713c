//! Crate-wide error type.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug)]
pub enum Error {
    /// The requested modulus is not a prime number.
    NotPrime(u64),
    /// A degree-2 field modulus with a root in the base field.
    ReducibleModulus(String),
    /// Extension degrees other than 1 or 2 are not supported.
    UnsupportedDegree(u32),
    DivisionByZero,
    /// `l` does not divide the multiplicative group order.
    OrderNotDividing { l: u64, group_order: u64 },
    /// Operands belong to different fields.
    FieldMismatch,
    /// gcd of two zero polynomials.
    BothZero,
    /// Constacyclic shift constant must be nonzero.
    ZeroEta,
    /// The generator polynomial does not divide x^n - eta.
    NotADivisor,
    LengthMismatch { expected: usize, got: usize },
    /// q^k exceeds the enumeration guard.
    SearchSpaceTooLarge { q: u64, k: usize },
    TOutOfRange { t: u64, max: u64 },
    RangeViolation(String),
    ProfileInvalid(String),
    /// Certified search ran out of budget; any certificate is only a bound.
    BudgetExceeded { checked: u64, budget: u64 },
    WitnessNotMinimal(String),
    /// Classification requires an exact certificate, not a bound.
    InexactCertificate,
    /// A family-spec parameter violates the theorem hypotheses.
    HypothesisViolated(String),
    /// Two independent engines returned different values; always fatal.
    EngineDisagreement(String),
    /// Distance queries need at least one nonzero codeword.
    EmptyCode,
    TooManyErrors { t: usize, n: usize },
    Parse(String),
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ReducibleModulus(m) => write!(f, "modulus {m} is reducible over the base field"),
            Error::UnsupportedDegree(m) => write!(f, "extension degree {m} not supported (need 1 or 2)"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::OrderNotDividing { l, group_order } => {
                write!(f, "{l} does not divide the group order {group_order}")
            }
            Error::FieldMismatch => write!(f, "operands belong to different fields"),
            Error::BothZero => write!(f, "gcd(0, 0) is undefined"),
            Error::ZeroEta => write!(f, "shift constant eta must be nonzero"),
            Error::NotADivisor => write!(f, "generator does not divide x^n - eta"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {expected}, got {got}")
            }
            Error::SearchSpaceTooLarge { q, k } => {
                let bits = (*k as f64) * (*q as f64).log2();
                write!(f, "search space {q}^{k} (~2^{bits:.1}) exceeds the 2^36 guard; pass force to override")
            }
            Error::TOutOfRange { t, max } => write!(f, "t = {t} out of range 0..={max}"),
            Error::RangeViolation(msg) => write!(f, "{msg}"),
            Error::ProfileInvalid(msg) => write!(f, "invalid repeated-root profile: {msg}"),
            Error::BudgetExceeded { checked, budget } => {
                write!(f, "search budget exceeded ({checked} supports checked, budget {budget})")
            }
            Error::WitnessNotMinimal(msg) => write!(f, "witness not minimal: {msg}"),
            Error::InexactCertificate => write!(f, "certificate is a bound, not an exact value"),
            Error::HypothesisViolated(msg) => write!(f, "hypothesis violated: {msg}"),
            Error::EngineDisagreement(msg) => write!(f, "engine disagreement: {msg}"),
            Error::EmptyCode => write!(f, "code has no nonzero codeword"),
            Error::TooManyErrors { t, n } => write!(f, "cannot inject {t} pair errors into {n} positions"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}
