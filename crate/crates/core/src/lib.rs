//! Bifix-free words, bibifix-free square matrices, and non-expandable
//! cross-bibifix-free matrix codes over a `q`-ary alphabet `{0, .., q-1}`.
//!
//! The crate is organised bottom-up:
//!
//! * [`words`]: bifix detection on words, `|BF_n^q|` counting, the
//!   cross-bifix-free word sets `S_{n,q}^(k)` and word-level non-expandability.
//! * [`matrices`]: biprefixes, bisuffixes, bibifix-freeness and the pairwise
//!   cross-bibifix relation on square matrices.
//! * [`generation`]: exhaustive generation of all bibifix-free `n x n`
//!   matrices by row/column insertion, plus a brute-force filter.
//! * [`codes`]: the matrix code built by fixing a cross-bifix-free diagonal,
//!   its verifiers, and the rectangular `n x m` variant.
//! * [`graycode`]: reflected `q`-ary Gray codes, the off-diagonal
//!   linearisation and a Hamming-distance-1 listing of the matrix code.
//! * [`jsonl`]: line-oriented serialization shared by the CLI.
//! * [`cli`]: the `bibifix` command-line front end.

pub mod cli;
pub mod codes;
mod error;
pub mod generation;
pub mod graycode;
pub mod jsonl;
pub mod matrices;
pub mod words;

pub use codes::{MatrixCode, RectMatrix};
pub use error::{Budget, Error, Result, Verdict};
pub use generation::{MatrixSet, Method};
pub use graycode::GrayCheck;
pub use matrices::{SquareMatrix, SubmatrixView, MAX_DIM};
pub use words::{Word, WordCode};

/// Largest supported alphabet; symbols serialize as single decimal digits.
pub const MAX_Q: u8 = 10;

pub(crate) fn check_q(q: u8) -> Result<()> {
    if (2..=MAX_Q).contains(&q) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "alphabet size {q} outside 2..={MAX_Q}"
        )))
    }
}

/// `base^exp`, saturating at `u128::MAX`.
pub(crate) fn pow_sat(base: u64, exp: u64) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}
