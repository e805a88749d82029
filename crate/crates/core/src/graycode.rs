//! Hamming-distance-1 listings.
//!
//! The off-diagonal cells of an `n x n` matrix are read into a word of
//! length `n^2 - n` (lower triangle column by column, then the upper
//! triangle column by column). The code listing holds the diagonal fixed
//! within a block while the off-diagonal word walks the reflected `q`-ary
//! Gray code, alternating direction per block, so that consecutive blocks
//! meet on the same off-diagonal word and only the diagonal moves.

use std::collections::HashSet;
use std::hash::Hash;

use crate::codes::{build_cbbf, MatrixCode};
use crate::matrices::{main_diagonal, SquareMatrix, MAX_DIM};
use crate::words::{Word, WordCode};
use crate::{check_q, pow_sat, Budget, Error, Result};

/// The reflected `q`-ary Gray code on words of length `n`, generated one
/// rank at a time.
#[derive(Debug, Clone)]
pub struct ReflectedGray {
    n: usize,
    q: u8,
    next: u128,
    end: u128,
}

impl ReflectedGray {
    pub fn len_total(&self) -> u128 {
        pow_sat(self.q as u64, self.n as u64)
    }
}

/// Lists all `q^n` words so that neighbours differ in one position.
pub fn reflected_gray(n: usize, q: u8, budget: Budget) -> Result<ReflectedGray> {
    check_q(q)?;
    let total = pow_sat(q as u64, n as u64);
    budget.check(total)?;
    Ok(ReflectedGray {
        n,
        q,
        next: 0,
        end: total,
    })
}

/// The word at position `rank` of the reflected Gray list.
///
/// Digit `i` is the base-`q` digit of `rank`, complemented (`q-1-d`) when
/// an odd number of the already emitted symbols are odd.
pub(crate) fn gray_word_at(rank: u128, n: usize, q: u8) -> Vec<u8> {
    let qq = q as u128;
    let mut digits = vec![0u8; n];
    let mut r = rank;
    for d in digits.iter_mut().rev() {
        *d = (r % qq) as u8;
        r /= qq;
    }
    let mut reversed = false;
    for d in digits.iter_mut() {
        if reversed {
            *d = q - 1 - *d;
        }
        if *d % 2 == 1 {
            reversed = !reversed;
        }
    }
    digits
}

impl Iterator for ReflectedGray {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.next >= self.end {
            return None;
        }
        let w = gray_word_at(self.next, self.n, self.q);
        self.next += 1;
        Some(Word::from_raw(w, self.q))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.end - self.next).unwrap_or(usize::MAX);
        (left, Some(left))
    }
}

impl DoubleEndedIterator for ReflectedGray {
    fn next_back(&mut self) -> Option<Word> {
        if self.next >= self.end {
            return None;
        }
        self.end -= 1;
        Some(Word::from_raw(
            gray_word_at(self.end, self.n, self.q),
            self.q,
        ))
    }
}

/// 1-based position of off-diagonal cell `(i, j)` (1-based) in the
/// linearised word.
pub fn f_index(i: usize, j: usize, n: usize) -> Result<usize> {
    if i == j {
        return Err(Error::invalid(format!("({i},{j}) is a diagonal cell")));
    }
    if i < 1 || j < 1 || i > n || j > n {
        return Err(Error::invalid(format!(
            "({i},{j}) outside a {n}x{n} matrix"
        )));
    }
    Ok(if i > j {
        n * (j - 1) - j * (j - 1) / 2 + (i - j)
    } else {
        n * (n - 1) / 2 + j * (j - 1) / 2 + i + 1 - j
    })
}

/// Matrix with `diagonal` on the main diagonal and `w[f(i,j)]` at `(i,j)`.
pub fn offdiag_decode(w: &Word, diagonal: &Word) -> Result<SquareMatrix> {
    let n = diagonal.len();
    if n == 0 || n > MAX_DIM {
        return Err(Error::invalid(format!(
            "diagonal length {n} outside 1..={MAX_DIM}"
        )));
    }
    if w.len() != n * n - n {
        return Err(Error::invalid(format!(
            "off-diagonal word has length {}, expected {}",
            w.len(),
            n * n - n
        )));
    }
    if w.q() != diagonal.q() {
        return Err(Error::invalid("word and diagonal use different alphabets"));
    }
    let mut m = SquareMatrix::zero(n, w.q());
    fill_matrix(&mut m, w.symbols(), diagonal.symbols());
    Ok(m)
}

fn fill_matrix(m: &mut SquareMatrix, off: &[u8], diagonal: &[u8]) {
    let n = diagonal.len();
    let mut pos = 0;
    for j in 0..n {
        for i in j + 1..n {
            m.set(i, j, off[pos]);
            pos += 1;
        }
    }
    for j in 0..n {
        for i in 0..j {
            m.set(i, j, off[pos]);
            pos += 1;
        }
    }
    for (i, &d) in diagonal.iter().enumerate() {
        m.set(i, i, d);
    }
}

/// The off-diagonal entries read in linearisation order.
pub fn offdiag_encode(t: &SquareMatrix) -> Word {
    let n = t.n();
    let mut w = Vec::with_capacity(n * n - n);
    for j in 0..n {
        for i in j + 1..n {
            w.push(t.get(i, j));
        }
    }
    for j in 0..n {
        for i in 0..j {
            w.push(t.get(i, j));
        }
    }
    Word::from_raw(w, t.q())
}

/// Orders `code` so that consecutive words are at Hamming distance 1.
///
/// Depth-first search for a Hamiltonian path in the distance-1 graph,
/// trying start words in lexicographic order and neighbours in
/// lexicographic order; the first complete path is returned. The search
/// visits at most `budget` nodes.
pub fn diagonal_gray(code: &WordCode, budget: Budget) -> Result<Vec<Word>> {
    let words = code.words();
    if words.is_empty() {
        return Err(Error::invalid("cannot order an empty word set"));
    }
    let size = words.len();
    let adj: Vec<Vec<usize>> = (0..size)
        .map(|a| {
            (0..size)
                .filter(|&b| words[a].hamming(&words[b]) == Some(1))
                .collect()
        })
        .collect();

    if !connected(&adj) {
        return Err(Error::NoGrayOrder { size });
    }

    let mut visited_nodes: u64 = 0;
    for start in 0..size {
        let mut path = vec![start];
        let mut used = vec![false; size];
        used[start] = true;
        if extend(&adj, &mut path, &mut used, &mut visited_nodes, budget.cap())? {
            return Ok(path.into_iter().map(|i| words[i].clone()).collect());
        }
    }
    Err(Error::NoGrayOrder { size })
}

fn connected(adj: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn extend(
    adj: &[Vec<usize>],
    path: &mut Vec<usize>,
    used: &mut [bool],
    visited: &mut u64,
    cap: u64,
) -> Result<bool> {
    if path.len() == adj.len() {
        return Ok(true);
    }
    *visited += 1;
    if *visited > cap {
        return Err(Error::BudgetExceeded {
            needed: *visited as u128,
            cap,
        });
    }
    let last = *path.last().expect("path is never empty");
    for &next in &adj[last] {
        if used[next] {
            continue;
        }
        used[next] = true;
        path.push(next);
        if extend(adj, path, used, visited, cap)? {
            return Ok(true);
        }
        path.pop();
        used[next] = false;
    }
    Ok(false)
}

/// Hamming-distance-1 listing of a matrix code, one block per diagonal word.
#[derive(Debug, Clone)]
pub struct CodeGray {
    n: usize,
    q: u8,
    diagonals: Vec<Word>,
    block_len: u128,
    block: usize,
    rank: u128,
}

impl CodeGray {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    /// The diagonal words in listing order.
    pub fn diagonal_order(&self) -> &[Word] {
        &self.diagonals
    }

    pub fn expected_len(&self) -> u128 {
        self.block_len.saturating_mul(self.diagonals.len() as u128)
    }
}

impl Iterator for CodeGray {
    type Item = SquareMatrix;

    fn next(&mut self) -> Option<SquareMatrix> {
        if self.block >= self.diagonals.len() {
            return None;
        }
        let rank = if self.block.is_multiple_of(2) {
            self.rank
        } else {
            self.block_len - 1 - self.rank
        };
        let off = gray_word_at(rank, self.n * self.n - self.n, self.q);
        let mut m = SquareMatrix::zero(self.n, self.q);
        fill_matrix(&mut m, &off, self.diagonals[self.block].symbols());

        self.rank += 1;
        if self.rank == self.block_len {
            self.rank = 0;
            self.block += 1;
        }
        Some(m)
    }
}

/// Gray listing of `CBBF_n^q`.
pub fn build_cbbf_gray(n: usize, q: u8, budget: Budget) -> Result<CodeGray> {
    code_gray(&build_cbbf(n, q, budget)?, budget)
}

/// Gray listing of any [`MatrixCode`].
pub fn code_gray(code: &MatrixCode, budget: Budget) -> Result<CodeGray> {
    budget.check(code.len())?;
    let n = code.n();
    Ok(CodeGray {
        n,
        q: code.q(),
        diagonals: diagonal_gray(code.diagonal_code(), budget)?,
        block_len: pow_sat(code.q() as u64, (n * n - n) as u64),
        block: 0,
        rank: 0,
    })
}

/// Items that can be compared by Hamming distance.
pub trait Hamming {
    fn distance(&self, other: &Self) -> Option<usize>;
}

impl Hamming for Word {
    fn distance(&self, other: &Self) -> Option<usize> {
        self.hamming(other)
    }
}

impl Hamming for SquareMatrix {
    fn distance(&self, other: &Self) -> Option<usize> {
        self.hamming(other)
    }
}

/// Result of [`verify_gray`]: how many items were scanned and the first
/// 0-based index whose item repeats an earlier one or is not at distance 1
/// from its predecessor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrayCheck {
    pub items: u64,
    pub offending: Option<u64>,
}

impl GrayCheck {
    pub fn ok(&self) -> bool {
        self.offending.is_none()
    }
}

/// Scans a listing once. Adjacency needs only the previous item;
/// distinctness keeps a set of everything seen.
pub fn verify_gray<T, I>(listing: I) -> GrayCheck
where
    T: Hamming + Hash + Eq + Clone,
    I: IntoIterator<Item = T>,
{
    let mut seen: HashSet<T> = HashSet::new();
    let mut prev: Option<T> = None;
    let mut items = 0u64;
    for (idx, item) in listing.into_iter().enumerate() {
        let idx = idx as u64;
        items += 1;
        if let Some(p) = &prev {
            if p.distance(&item) != Some(1) {
                return GrayCheck {
                    items,
                    offending: Some(idx),
                };
            }
        }
        if !seen.insert(item.clone()) {
            return GrayCheck {
                items,
                offending: Some(idx),
            };
        }
        prev = Some(item);
    }
    GrayCheck {
        items,
        offending: None,
    }
}

/// The diagonal of every item, handy for asserting block seams.
pub fn diagonals_of<'a>(items: impl IntoIterator<Item = &'a SquareMatrix>) -> Vec<Word> {
    items.into_iter().map(main_diagonal).collect()
}
