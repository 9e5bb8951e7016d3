use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    /// A scalar mentions `t{found}` but the ambient field only has `expected` generators.
    FieldMismatch {
        expected: usize,
        found: usize,
    },
    /// Polynomials or presentations over different numbers of generators.
    GeneratorMismatch {
        expected: usize,
        found: usize,
    },
    InvalidAutomorphism(&'static str),
    /// The operation needs homogeneous relations.
    Inhomogeneous,
    /// Degree `needed` is beyond what the truncated basis certifies.
    DegreeBudget {
        needed: usize,
        available: usize,
    },
    NotIdempotent,
    ZeroElement,
    InvalidPrime(u64),
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::FieldMismatch { expected, found } => write!(
                f,
                "coefficient uses t{found} but the field has {expected} transcendental generator(s)"
            ),
            Error::GeneratorMismatch { expected, found } => {
                write!(f, "expected {expected} generator(s), found {found}")
            }
            Error::InvalidAutomorphism(why) => write!(f, "invalid automorphism: {why}"),
            Error::Inhomogeneous => write!(f, "relations are not homogeneous"),
            Error::DegreeBudget { needed, available } => write!(
                f,
                "unverified: degree {needed} exceeds the completed degree {available}"
            ),
            Error::NotIdempotent => write!(f, "element is not idempotent"),
            Error::ZeroElement => write!(f, "the zero element is rejected"),
            Error::InvalidPrime(p) => write!(f, "{p} is not an odd prime"),
            Error::InvalidArgument(why) => write!(f, "invalid argument: {why}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
