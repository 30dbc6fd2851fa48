use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{func}: argument {value} outside the domain ({expected})")]
    Domain {
        func: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("{what}: index {requested} exceeds the available bound {available}")]
    OutOfRange {
        what: &'static str,
        requested: f64,
        available: f64,
    },

    #[error("{func}: no convergence after {iterations} iterations")]
    NonConvergence { func: &'static str, iterations: usize },

    #[error("{what}: needs about {requested} bytes, budget is {budget}")]
    Resource {
        what: &'static str,
        requested: u128,
        budget: u128,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("no zeros")]
    NoZeros,

    #[error("{what}: {message}")]
    Invalid { what: &'static str, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn out_of_range(what: &'static str, requested: f64, available: f64) -> Self {
        Error::OutOfRange {
            what,
            requested,
            available,
        }
    }

    pub(crate) fn invalid(what: &'static str, message: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            message: message.into(),
        }
    }
}
