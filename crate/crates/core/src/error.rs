use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("enumeration needs {needed} candidates, budget is {cap}")]
    BudgetExceeded { needed: u128, cap: u64 },

    #[error("no Hamming-distance-1 ordering exists for the {size} given words")]
    NoGrayOrder { size: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {message}")]
    Io {
        kind: std::io::ErrorKind,
        message: String,
    },
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io {
            kind: e.kind(),
            message: e.to_string(),
        }
    }
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

/// Upper bound on the number of candidates a single enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(1 << 26);

    pub fn new(cap: u64) -> Result<Self> {
        if cap == 0 {
            return Err(Error::invalid("budget must be at least 1"));
        }
        Ok(Budget(cap))
    }

    pub fn unlimited() -> Self {
        Budget(u64::MAX)
    }

    pub fn cap(self) -> u64 {
        self.0
    }

    pub fn check(self, needed: u128) -> Result<()> {
        if needed > self.0 as u128 {
            Err(Error::BudgetExceeded {
                needed,
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// Outcome of a verifier: either the property holds, or a witness refutes it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Refuted(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Refuted(w) => Some(w),
        }
    }

    pub fn into_witness(self) -> Option<W> {
        match self {
            Verdict::Holds => None,
            Verdict::Refuted(w) => Some(w),
        }
    }
}
