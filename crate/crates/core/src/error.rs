//! Error type shared by all modules, with the process exit code each variant
//! maps to in the command-line tool.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed group description or a value outside a family's constraints.
    Parse(String),
    /// Requested group order exceeds the configured cap.
    CapExceeded { order: u64, cap: u64 },
    /// Unknown family name in a verification request.
    UnsupportedFamily(String),
    /// A closed-form family was instantiated at a non-prime.
    InvalidPrime(u64),
    /// A (family, prime) combination whose closed form is not defined.
    UnsupportedFamilyPrime { family: &'static str, prime: u64 },
    /// A carrier set handed to classification is not closed.
    NotASubgroup,
    /// An internal consistency check failed; indicates a bug, not bad input.
    Internal(String),
    /// Output refused because the requested rendering is too large.
    TooLarge { pairs: u64, limit: u64 },
}

impl Error {
    /// Process exit code for the CLI: 1 internal inconsistency, 2 parse,
    /// 3 cap exceeded, 5 size refusal. (Exit 4 is reserved for verification
    /// mismatches, which are reported as data rather than as errors.)
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_)
            | Error::UnsupportedFamily(_)
            | Error::InvalidPrime(_)
            | Error::UnsupportedFamilyPrime { .. } => 2,
            Error::CapExceeded { .. } => 3,
            Error::NotASubgroup | Error::Internal(_) => 1,
            Error::TooLarge { .. } => 5,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::CapExceeded { order, cap } => {
                write!(f, "group order {order} exceeds the cap {cap}")
            }
            Error::UnsupportedFamily(name) => write!(f, "unsupported family: {name}"),
            Error::InvalidPrime(p) => write!(f, "{p} is not a prime"),
            Error::UnsupportedFamilyPrime { family, prime } => {
                write!(f, "family {family} is not defined at p = {prime}")
            }
            Error::NotASubgroup => write!(f, "carrier set is not a subgroup"),
            Error::Internal(msg) => write!(f, "internal inconsistency: {msg}"),
            Error::TooLarge { pairs, limit } => {
                write!(
                    f,
                    "refusing to render {pairs} pair vertices (limit {limit})"
                )
            }
        }
    }
}

impl std::error::Error for Error {}
