//! Square matrices, biprefixes/bisuffixes and the bibifix relations.

use std::fmt;

use crate::words::Word;
use crate::{check_q, Error, Result};

/// Largest supported matrix dimension.
pub const MAX_DIM: usize = 8;

/// An `n x n` matrix over `{0, .., q-1}`, stored row-major inline.
///
/// Cells beyond `n * n` are always zero, so the derived equality, hashing
/// and ordering agree with the row-major serialization.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareMatrix {
    cells: [u8; MAX_DIM * MAX_DIM],
    n: u8,
    q: u8,
}

impl SquareMatrix {
    /// Builds a matrix from `n * n` row-major cells.
    pub fn from_cells(n: usize, q: u8, cells: &[u8]) -> Result<Self> {
        check_q(q)?;
        if n == 0 || n > MAX_DIM {
            return Err(Error::invalid(format!(
                "dimension {n} outside 1..={MAX_DIM}"
            )));
        }
        if cells.len() != n * n {
            return Err(Error::invalid(format!(
                "{} cells given for a {n}x{n} matrix",
                cells.len()
            )));
        }
        if let Some(&c) = cells.iter().find(|&&c| c >= q) {
            return Err(Error::invalid(format!("entry {c} not below q={q}")));
        }
        let mut m = SquareMatrix::zero(n, q);
        m.cells[..n * n].copy_from_slice(cells);
        Ok(m)
    }

    pub fn from_rows<R: AsRef<[u8]>>(q: u8, rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::invalid(format!(
                    "row of length {} in a matrix with {n} rows",
                    row.len()
                )));
            }
            cells.extend_from_slice(row);
        }
        SquareMatrix::from_cells(n, q, &cells)
    }

    /// Parses the compact form, rows of digits joined by `/` (`"10/00"`).
    pub fn parse(s: &str, q: u8) -> Result<Self> {
        let rows = parse_digit_rows(s.split('/'))?;
        SquareMatrix::from_rows(q, &rows)
    }

    /// Parses a list of row strings (the structured form).
    pub fn parse_rows<S: AsRef<str>>(rows: &[S], q: u8) -> Result<Self> {
        let rows = parse_digit_rows(rows.iter().map(|r| r.as_ref()))?;
        SquareMatrix::from_rows(q, &rows)
    }

    pub(crate) fn zero(n: usize, q: u8) -> Self {
        debug_assert!(n <= MAX_DIM);
        SquareMatrix {
            cells: [0; MAX_DIM * MAX_DIM],
            n: n as u8,
            q,
        }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells[..self.n() * self.n()]
    }

    /// Entry at 0-based `(row, col)`.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.cells[row * self.n() + col]
    }

    #[inline]
    pub(crate) fn set(&mut self, row: usize, col: usize, v: u8) {
        let n = self.n();
        self.cells[row * n + col] = v;
    }

    pub fn row_strings(&self) -> Vec<String> {
        let n = self.n();
        (0..n)
            .map(|i| (0..n).map(|j| char::from(b'0' + self.get(i, j))).collect())
            .collect()
    }

    pub fn hamming(&self, other: &SquareMatrix) -> Option<usize> {
        (self.n == other.n).then(|| {
            self.cells()
                .iter()
                .zip(other.cells())
                .filter(|(a, b)| a != b)
                .count()
        })
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.row_strings().join("/"))
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SquareMatrix({self}, q={})", self.q)
    }
}

pub(crate) fn parse_digit_rows<'a>(rows: impl Iterator<Item = &'a str>) -> Result<Vec<Vec<u8>>> {
    rows.map(|row| {
        if row.is_empty() {
            return Err(Error::Parse("empty row".into()));
        }
        row.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(format!("'{c}' is not a digit")))
            })
            .collect()
    })
    .collect()
}

/// An `r x r` block copied out of a larger matrix, with its 1-based
/// source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubmatrixView {
    pub row: usize,
    pub col: usize,
    pub size: usize,
    cells: Vec<u8>,
}

impl SubmatrixView {
    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.cells.chunks(self.size).map(<[u8]>::to_vec).collect()
    }

    /// The same `r x r` content, regardless of where it came from.
    pub fn same_content(&self, other: &SubmatrixView) -> bool {
        self.size == other.size && self.cells == other.cells
    }
}

fn view(t: &SquareMatrix, r: usize, origin: usize) -> SubmatrixView {
    let mut cells = Vec::with_capacity(r * r);
    for i in 0..r {
        for j in 0..r {
            cells.push(t.get(origin + i, origin + j));
        }
    }
    SubmatrixView {
        row: origin + 1,
        col: origin + 1,
        size: r,
        cells,
    }
}

fn check_r(t: &SquareMatrix, r: usize) -> Result<()> {
    if r == 0 || r > t.n() {
        Err(Error::invalid(format!(
            "block size {r} outside 1..={}",
            t.n()
        )))
    } else {
        Ok(())
    }
}

/// The top-left `r x r` block.
pub fn biprefix(t: &SquareMatrix, r: usize) -> Result<SubmatrixView> {
    check_r(t, r)?;
    Ok(view(t, r, 0))
}

/// The bottom-right `r x r` block.
pub fn bisuffix(t: &SquareMatrix, r: usize) -> Result<SubmatrixView> {
    check_r(t, r)?;
    Ok(view(t, r, t.n() - r))
}

/// Matrices whose top-left and bottom-right square corners can be compared.
///
/// Implemented by [`SquareMatrix`] and by the rectangular `n x m` matrices
/// of the codes module, where the bisuffix sits in the last `r` columns.
pub trait Bicorner {
    /// Number of rows; corner sizes range over `1..rows`.
    fn rows(&self) -> usize;

    /// Top-left `r x r` entry at 0-based `(i, j)`.
    fn prefix_at(&self, r: usize, i: usize, j: usize) -> u8;

    /// Bottom-right `r x r` entry at 0-based `(i, j)`.
    fn suffix_at(&self, r: usize, i: usize, j: usize) -> u8;

    fn prefix_key(&self, r: usize) -> Vec<u8> {
        let mut key = Vec::with_capacity(r * r);
        for i in 0..r {
            for j in 0..r {
                key.push(self.prefix_at(r, i, j));
            }
        }
        key
    }

    fn suffix_key(&self, r: usize) -> Vec<u8> {
        let mut key = Vec::with_capacity(r * r);
        for i in 0..r {
            for j in 0..r {
                key.push(self.suffix_at(r, i, j));
            }
        }
        key
    }
}

impl Bicorner for SquareMatrix {
    fn rows(&self) -> usize {
        self.n()
    }

    #[inline]
    fn prefix_at(&self, _r: usize, i: usize, j: usize) -> u8 {
        self.get(i, j)
    }

    #[inline]
    fn suffix_at(&self, r: usize, i: usize, j: usize) -> u8 {
        let o = self.n() - r;
        self.get(o + i, o + j)
    }
}

/// Top-left `r x r` of `a` equals bottom-right `r x r` of `b`.
#[inline]
pub(crate) fn corner_match<A: Bicorner + ?Sized, B: Bicorner + ?Sized>(
    a: &A,
    b: &B,
    r: usize,
) -> bool {
    (0..r).all(|i| (0..r).all(|j| a.prefix_at(r, i, j) == b.suffix_at(r, i, j)))
}

/// Any corner collision between `a` and `b`, in either direction, for
/// `r` in `1..rows`.
pub(crate) fn cross_collision<T: Bicorner + ?Sized>(a: &T, b: &T) -> bool {
    (1..a.rows()).any(|r| corner_match(a, b, r) || corner_match(b, a, r))
}

/// Bibifix-freeness, comparing corners only up to `n/2 x n/2`.
pub fn is_bibifix_free(t: &SquareMatrix) -> bool {
    (1..=t.n() / 2).all(|r| !corner_match(t, t, r))
}

/// Every `r` in `1..n` whose biprefix equals its bisuffix.
pub fn bibifix_dims(t: &SquareMatrix) -> Vec<usize> {
    (1..t.n()).filter(|&r| corner_match(t, t, r)).collect()
}

/// Whether no biprefix of either matrix equals the same-size bisuffix of
/// the other. Applies to arbitrary matrices, bibifix-free or not.
pub fn is_cross_bibifix_free_pair(t: &SquareMatrix, other: &SquareMatrix) -> Result<bool> {
    if t.n() != other.n() || t.q() != other.q() {
        return Err(Error::invalid("matrices differ in dimension or alphabet"));
    }
    if t == other {
        return Err(Error::invalid(format!(
            "cross-bibifix-freeness needs distinct matrices, got {t} twice"
        )));
    }
    Ok(!cross_collision(t, other))
}

pub fn main_diagonal(t: &SquareMatrix) -> Word {
    Word::from_raw((0..t.n()).map(|i| t.get(i, i)).collect(), t.q())
}
