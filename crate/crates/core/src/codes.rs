//! Cross-bibifix-free matrix codes built from a cross-bifix-free diagonal
//! word set, their verifiers, and the rectangular `n x m` variant.
//!
//! Every member of a [`MatrixCode`] carries a word of the diagonal code on
//! its main diagonal; all other cells are free. Verification does not rely
//! on that structure: [`verify_cross_set`] indexes corner blocks directly,
//! and [`verify_nonexpandable`] scans all of `BBF_n^q`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::generation::{brute_bbf, fill_free, MatrixSet};
use crate::matrices::{cross_collision, Bicorner, SquareMatrix, MAX_DIM};
use crate::words::{best_s, build_s, Word, WordCode};
use crate::{check_q, pow_sat, Budget, Error, Result, Verdict};

/// The set of all `n x n` matrices whose main diagonal lies in a fixed word
/// code, every off-diagonal cell ranging over the alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixCode {
    n: usize,
    q: u8,
    k: Option<usize>,
    diagonal_code: WordCode,
}

impl MatrixCode {
    /// Wraps an arbitrary diagonal code. `k` records which `S_{n,q}^(k)` it
    /// came from, if any.
    pub fn from_diagonal(diagonal_code: WordCode, k: Option<usize>) -> Result<Self> {
        let n = diagonal_code.n();
        if n == 0 || n > MAX_DIM {
            return Err(Error::invalid(format!(
                "dimension {n} outside 1..={MAX_DIM}"
            )));
        }
        Ok(MatrixCode {
            n,
            q: diagonal_code.q(),
            k,
            diagonal_code,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn k(&self) -> Option<usize> {
        self.k
    }

    pub fn diagonal_code(&self) -> &WordCode {
        &self.diagonal_code
    }

    /// `q^(n^2 - n) * |diagonal code|`, saturating.
    pub fn len(&self) -> u128 {
        pow_sat(self.q as u64, (self.n * self.n - self.n) as u64)
            .saturating_mul(self.diagonal_code.len() as u128)
    }

    pub fn is_empty(&self) -> bool {
        self.diagonal_code.is_empty()
    }

    pub fn contains(&self, m: &SquareMatrix) -> bool {
        m.n() == self.n
            && m.q() == self.q
            && self
                .diagonal_code
                .contains(&crate::matrices::main_diagonal(m))
    }

    /// Streams the members block by block: diagonal words in lexicographic
    /// order, off-diagonal cells in row-major lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = SquareMatrix> + '_ {
        let n = self.n;
        let off: Vec<usize> = (0..n * n).filter(|c| c / n != c % n).collect();
        self.diagonal_code.iter().flat_map(move |d| {
            let mut template = SquareMatrix::zero(n, self.q);
            for (i, &s) in d.symbols().iter().enumerate() {
                template.set(i, i, s);
            }
            fill_free(template, off.clone())
        })
    }

    /// All members in canonical order.
    pub fn members(&self, budget: Budget) -> Result<MatrixSet> {
        budget.check(self.len())?;
        MatrixSet::new(self.n, self.q, self.iter())
    }
}

/// The diagonal code used for `CBBF_n^q`: `S_n^q` with the best `k`, except
/// that `n = 4, q = 2` is pinned to `{1000}`.
pub fn default_diagonal(n: usize, q: u8, budget: Budget) -> Result<(usize, WordCode)> {
    check_q(q)?;
    if n < 3 {
        return Err(Error::invalid(format!("CBBF needs n >= 3, got {n}")));
    }
    if n > MAX_DIM {
        return Err(Error::invalid(format!("dimension {n} above {MAX_DIM}")));
    }
    if (n, q) == (4, 2) {
        let code = build_s(4, 2, 1, budget)?;
        debug_assert_eq!(code.words(), &[Word::parse("1000", 2)?]);
        return Ok((1, code));
    }
    best_s(n, q, budget)
}

/// `CBBF_n^q`.
pub fn build_cbbf(n: usize, q: u8, budget: Budget) -> Result<MatrixCode> {
    let (k, diagonal) = default_diagonal(n, q, budget)?;
    let code = MatrixCode::from_diagonal(diagonal, Some(k))?;
    budget.check(code.len())?;
    Ok(code)
}

/// The code over `S_{n,q}^(k)` for an explicit `k`.
pub fn build_cbbf_with_k(n: usize, q: u8, k: usize, budget: Budget) -> Result<MatrixCode> {
    if n > MAX_DIM {
        return Err(Error::invalid(format!("dimension {n} above {MAX_DIM}")));
    }
    let code = MatrixCode::from_diagonal(build_s(n, q, k, budget)?, Some(k))?;
    budget.check(code.len())?;
    Ok(code)
}

/// Checks every ordered pair of distinct members for a biprefix of one
/// equal to the same-size bisuffix of the other. The witness `(a, b)` has
/// a biprefix of `a` equal to a bisuffix of `b`.
pub fn verify_cross_set<T: Bicorner + Clone>(members: &[T]) -> Verdict<(T, T)> {
    let Some(first) = members.first() else {
        return Verdict::Holds;
    };
    for r in 1..first.rows() {
        let mut prefixes: HashMap<Vec<u8>, Vec<usize>> = HashMap::new();
        for (i, m) in members.iter().enumerate() {
            let holders = prefixes.entry(m.prefix_key(r)).or_default();
            if holders.len() < 2 {
                holders.push(i);
            }
        }
        for (j, m) in members.iter().enumerate() {
            if let Some(holders) = prefixes.get(&m.suffix_key(r)) {
                if let Some(&i) = holders.iter().find(|&&i| i != j) {
                    return Verdict::Refuted((members[i].clone(), m.clone()));
                }
            }
        }
    }
    Verdict::Holds
}

/// Whether no bibifix-free matrix outside the code can be added while
/// keeping it cross-bibifix-free. On failure returns the first expanding
/// matrix in canonical order.
pub fn verify_nonexpandable(code: &MatrixCode, budget: Budget) -> Result<Verdict<SquareMatrix>> {
    let members: Vec<SquareMatrix> = {
        budget.check(code.len())?;
        code.iter().collect()
    };
    expanding_witness(&members, |m| code.contains(m), code.n(), code.q(), budget)
}

/// [`verify_nonexpandable`] for an arbitrary set of `n x n` matrices.
pub fn verify_nonexpandable_set(set: &MatrixSet, budget: Budget) -> Result<Verdict<SquareMatrix>> {
    expanding_witness(set.members(), |m| set.contains(m), set.n(), set.q(), budget)
}

/// Every matrix of `BBF_n^q` outside `set` that could join it, in
/// canonical order. Empty exactly when the set is non-expandable.
pub fn expanding_witnesses(set: &MatrixSet, budget: Budget) -> Result<Vec<SquareMatrix>> {
    let (expands, candidates) =
        expansion_test(set.members(), |m| set.contains(m), set.n(), set.q(), budget)?;
    Ok(candidates
        .members()
        .par_iter()
        .filter(|m| expands(m))
        .copied()
        .collect())
}

/// Corner-block index of `members`, plus `BBF_n^q` to scan.
#[allow(clippy::type_complexity)]
fn expansion_test<'a>(
    members: &[SquareMatrix],
    is_member: impl Fn(&SquareMatrix) -> bool + Sync + 'a,
    n: usize,
    q: u8,
    budget: Budget,
) -> Result<(impl Fn(&SquareMatrix) -> bool + Sync + 'a, MatrixSet)> {
    if let Verdict::Refuted((a, b)) = verify_cross_set(members) {
        return Err(Error::invalid(format!(
            "set is not cross-bibifix-free: biprefix of {a} is a bisuffix of {b}"
        )));
    }
    let mut prefixes: Vec<HashSet<Vec<u8>>> = vec![HashSet::new(); n];
    let mut suffixes: Vec<HashSet<Vec<u8>>> = vec![HashSet::new(); n];
    for m in members {
        for r in 1..n {
            prefixes[r].insert(m.prefix_key(r));
            suffixes[r].insert(m.suffix_key(r));
        }
    }
    let candidates = brute_bbf(n, q, budget)?;
    let expands = move |m: &SquareMatrix| {
        !is_member(m)
            && (1..n).all(|r| {
                !prefixes[r].contains(&m.suffix_key(r)) && !suffixes[r].contains(&m.prefix_key(r))
            })
    };
    Ok((expands, candidates))
}

fn expanding_witness(
    members: &[SquareMatrix],
    is_member: impl Fn(&SquareMatrix) -> bool + Sync,
    n: usize,
    q: u8,
    budget: Budget,
) -> Result<Verdict<SquareMatrix>> {
    let (expands, candidates) = expansion_test(members, is_member, n, q, budget)?;
    let witness = candidates.members().par_iter().find_first(|m| expands(m));
    Ok(match witness {
        Some(m) => Verdict::Refuted(*m),
        None => Verdict::Holds,
    })
}

/// An `n x m` matrix (`n < m`) for the rectangular code.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectMatrix {
    cells: Vec<u8>,
    n: usize,
    m: usize,
    q: u8,
}

impl RectMatrix {
    pub fn from_cells(n: usize, m: usize, q: u8, cells: Vec<u8>) -> Result<Self> {
        check_q(q)?;
        if n == 0 || n >= m {
            return Err(Error::invalid(format!("need 1 <= n < m, got {n}x{m}")));
        }
        if cells.len() != n * m {
            return Err(Error::invalid(format!(
                "{} cells given for a {n}x{m} matrix",
                cells.len()
            )));
        }
        if let Some(&c) = cells.iter().find(|&&c| c >= q) {
            return Err(Error::invalid(format!("entry {c} not below q={q}")));
        }
        Ok(RectMatrix { cells, n, m, q })
    }

    pub fn parse(s: &str, q: u8) -> Result<Self> {
        let rows = crate::matrices::parse_digit_rows(s.split('/'))?;
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::invalid("ragged rows"));
        }
        RectMatrix::from_cells(n, m, q, rows.concat())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.cells[row * self.m + col]
    }

    pub fn row_strings(&self) -> Vec<String> {
        self.cells
            .chunks(self.m)
            .map(|row| row.iter().map(|&c| char::from(b'0' + c)).collect())
            .collect()
    }
}

impl fmt::Display for RectMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.row_strings().join("/"))
    }
}

impl fmt::Debug for RectMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RectMatrix({self}, q={})", self.q)
    }
}

impl Bicorner for RectMatrix {
    fn rows(&self) -> usize {
        self.n
    }

    #[inline]
    fn prefix_at(&self, _r: usize, i: usize, j: usize) -> u8 {
        self.get(i, j)
    }

    #[inline]
    fn suffix_at(&self, r: usize, i: usize, j: usize) -> u8 {
        self.get(self.n - r + i, self.m - r + j)
    }
}

/// Rectangular cross-bibifix-freeness: for every `r` in `1..n`, the
/// top-left `r x r` block of each matrix differs from the bottom-right
/// `r x r` block of the other.
pub fn is_cross_bibifix_free_rect_pair(c: &RectMatrix, other: &RectMatrix) -> Result<bool> {
    if (c.n, c.m, c.q) != (other.n, other.m, other.q) {
        return Err(Error::invalid("matrices differ in shape or alphabet"));
    }
    if c == other {
        return Err(Error::invalid(format!(
            "cross-bibifix-freeness needs distinct matrices, got {c} twice"
        )));
    }
    Ok(!cross_collision(c, other))
}

/// `CBBF_{n,m}^q`: every `n x m` matrix carrying a word of the diagonal code
/// on the diagonal of its left `n x n` block and a word (chosen
/// independently) on the diagonal of its right `n x n` block. Returned in
/// canonical order.
pub fn build_cbbf_rect(n: usize, m: usize, q: u8, budget: Budget) -> Result<Vec<RectMatrix>> {
    if n < 3 || n >= m {
        return Err(Error::invalid(format!("need 3 <= n < m, got {n}x{m}")));
    }
    let (_, diagonal) = default_diagonal(n, q, budget)?;

    let left: Vec<usize> = (0..n).map(|k| k * m + k).collect();
    let right: Vec<usize> = (0..n).map(|k| k * m + (m - n + k)).collect();
    if left.iter().any(|c| right.contains(c)) {
        return Err(Error::invalid(format!(
            "diagonals of the {n}x{m} blocks share a cell"
        )));
    }
    let free: Vec<usize> = (0..n * m)
        .filter(|c| !left.contains(c) && !right.contains(c))
        .collect();

    let per_pair = pow_sat(q as u64, free.len() as u64);
    let pairs = (diagonal.len() as u128).pow(2);
    budget.check(per_pair.saturating_mul(pairs))?;

    let mut out = Vec::with_capacity((per_pair * pairs) as usize);
    for wi in diagonal.iter() {
        for wj in diagonal.iter() {
            let mut template = vec![0u8; n * m];
            for k in 0..n {
                template[left[k]] = wi.symbols()[k];
                template[right[k]] = wj.symbols()[k];
            }
            for mut idx in 0..per_pair as u64 {
                let mut cells = template.clone();
                for &c in free.iter().rev() {
                    cells[c] = (idx % q as u64) as u8;
                    idx /= q as u64;
                }
                out.push(RectMatrix { cells, n, m, q });
            }
        }
    }
    out.par_sort_unstable();
    Ok(out)
}
