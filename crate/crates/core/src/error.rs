use std::fmt;

use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which bound a measured quantity overshot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundKind {
    CentralSize,
    PathWidth,
    Adhesion,
    ApexSize,
    LeafResidual,
    DecompositionWidth,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundKind::CentralSize => "central-size",
            BoundKind::PathWidth => "path-width",
            BoundKind::Adhesion => "adhesion",
            BoundKind::ApexSize => "apex-size",
            BoundKind::LeafResidual => "leaf-residual",
            BoundKind::DecompositionWidth => "decomposition-width",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("{kind} bound exceeded: measured {measured}, limit {limit}{}", fmt_provenance(.provenance))]
    BoundExceeded {
        kind: BoundKind,
        measured: Rational,
        limit: Rational,
        /// Innermost step first.
        provenance: Vec<String>,
    },

    #[error("input too large for exhaustive search: {what} = {size} exceeds {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

fn fmt_provenance(chain: &[String]) -> String {
    if chain.is_empty() {
        String::new()
    } else {
        format!(" (in {})", chain.join(" <- "))
    }
}

impl Error {
    pub fn bound(kind: BoundKind, measured: impl Into<Rational>, limit: Rational) -> Self {
        Error::BoundExceeded {
            kind,
            measured: measured.into(),
            limit,
            provenance: Vec::new(),
        }
    }

    /// Appends a step name to the provenance chain of a bound violation.
    pub fn within(self, step: impl Into<String>) -> Self {
        match self {
            Error::BoundExceeded {
                kind,
                measured,
                limit,
                mut provenance,
            } => {
                provenance.push(step.into());
                Error::BoundExceeded {
                    kind,
                    measured,
                    limit,
                    provenance,
                }
            }
            other => other,
        }
    }
}

pub(crate) trait ResultExt<T> {
    fn within(self, step: &str) -> Result<T>;
}

impl<T> ResultExt<T> for Result<T> {
    fn within(self, step: &str) -> Result<T> {
        self.map_err(|e| e.within(step))
    }
}

pub(crate) fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::TooLarge { what, size, limit })
    } else {
        Ok(())
    }
}
