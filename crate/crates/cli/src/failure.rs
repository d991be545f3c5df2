use std::fmt;

use scott_brauer::Error;

/// Error categories with their exit codes.
#[derive(Debug)]
pub enum Failure {
    Parse(String),
    Precondition(String),
    Resource(String),
    /// A reproduced example disagrees with its recorded expectation.
    Mismatch(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Parse(m) => write!(f, "parse error: {}", m),
            Failure::Precondition(m) => write!(f, "precondition violated: {}", m),
            Failure::Resource(m) => write!(f, "resource cap hit: {}", m),
            Failure::Mismatch(m) => write!(f, "fixture mismatch: {}", m),
        }
    }
}

impl std::error::Error for Failure {}

pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;

pub fn exit_code(err: &anyhow::Error) -> i32 {
    for cause in err.chain() {
        if let Some(f) = cause.downcast_ref::<Failure>() {
            return match f {
                Failure::Parse(_) => EXIT_PARSE,
                Failure::Precondition(_) => EXIT_PRECONDITION,
                Failure::Resource(_) => EXIT_RESOURCE,
                Failure::Mismatch(_) => EXIT_MISMATCH,
            };
        }
        if let Some(e) = cause.downcast_ref::<Error>() {
            return match e {
                Error::NotBijective { .. } | Error::DegreeMismatch { .. } => EXIT_PARSE,
                Error::ResourceCap { .. } => EXIT_RESOURCE,
                Error::Invariant(_) => EXIT_INTERNAL,
                _ => EXIT_PRECONDITION,
            };
        }
        if cause.is::<serde_json::Error>() || cause.is::<std::io::Error>() {
            return EXIT_PARSE;
        }
    }
    EXIT_INTERNAL
}
