//! Exhaustive generation of bibifix-free square matrices.
//!
//! `BBF_{n+1}` is obtained from `BBF_n` by inserting a free row and column
//! in the middle of every member (the ψ operator). When `n` is odd the only
//! non-bibifix-free results are those whose two `(n+1)/2` diagonal blocks
//! coincide with a bibifix-free matrix (the φ operator's image), so those
//! are removed as a set. [`brute_bbf`] is the independent filter over all
//! `q^(n^2)` matrices.

use std::collections::HashSet;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::matrices::{corner_match, SquareMatrix, MAX_DIM};
use crate::{check_q, pow_sat, Budget, Error, Result};

/// Distinct matrices of one dimension and alphabet, in canonical
/// (lexicographic row-major) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSet {
    n: usize,
    q: u8,
    members: Vec<SquareMatrix>,
}

impl MatrixSet {
    /// Sorts and deduplicates `members`; all must be `n x n` over `q`.
    pub fn new(n: usize, q: u8, members: impl IntoIterator<Item = SquareMatrix>) -> Result<Self> {
        let mut members: Vec<SquareMatrix> = members.into_iter().collect();
        if let Some(m) = members.iter().find(|m| m.n() != n || m.q() != q) {
            return Err(Error::invalid(format!(
                "matrix {m} is not {n}x{n} over q={q}"
            )));
        }
        members.par_sort_unstable();
        members.dedup();
        Ok(MatrixSet { n, q, members })
    }

    fn from_sorted(n: usize, q: u8, members: Vec<SquareMatrix>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        MatrixSet { n, q, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[SquareMatrix] {
        &self.members
    }

    pub fn contains(&self, m: &SquareMatrix) -> bool {
        self.members.binary_search(m).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SquareMatrix> {
        self.members.iter()
    }

    pub fn into_vec(self) -> Vec<SquareMatrix> {
        self.members
    }
}

impl<'a> IntoIterator for &'a MatrixSet {
    type Item = &'a SquareMatrix;
    type IntoIter = std::slice::Iter<'a, SquareMatrix>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// How [`generate_bbf_with`] produces `BBF_n^q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Row/column insertion with the odd-step set difference.
    #[default]
    Recursive,
    /// Filter every `q^(n^2)` matrix with the full-depth check.
    Brute,
}

/// Every filling of the `free` cell indices of `template`, in lexicographic
/// order of the resulting matrices (free cells are row-major sorted).
pub(crate) fn fill_free(
    template: SquareMatrix,
    free: Vec<usize>,
) -> impl Iterator<Item = SquareMatrix> + Clone {
    let q = template.q() as u64;
    let n = template.n();
    let total = pow_sat(q, free.len() as u64) as u64;
    (0..total).map(move |mut idx| {
        let mut m = template;
        for &cell in free.iter().rev() {
            m.set(cell / n, cell % n, (idx % q) as u8);
            idx /= q;
        }
        m
    })
}

fn phi_image(m: &SquareMatrix) -> impl Iterator<Item = SquareMatrix> + Clone {
    let n = m.n();
    let big = 2 * n;
    let mut template = SquareMatrix::zero(big, m.q());
    let mut free = Vec::with_capacity(2 * n * n);
    for i in 0..big {
        for j in 0..big {
            match (i < n, j < n) {
                (true, true) => template.set(i, j, m.get(i, j)),
                (false, false) => template.set(i, j, m.get(i - n, j - n)),
                _ => free.push(i * big + j),
            }
        }
    }
    fill_free(template, free)
}

fn psi_image(m: &SquareMatrix) -> impl Iterator<Item = SquareMatrix> + Clone {
    let n = m.n();
    let mid = n / 2;
    let big = n + 1;
    let mut template = SquareMatrix::zero(big, m.q());
    let mut free = Vec::with_capacity(2 * n + 1);
    for i in 0..big {
        for j in 0..big {
            if i == mid || j == mid {
                free.push(i * big + j);
            } else {
                let src_i = if i > mid { i - 1 } else { i };
                let src_j = if j > mid { j - 1 } else { j };
                template.set(i, j, m.get(src_i, src_j));
            }
        }
    }
    fill_free(template, free)
}

/// All `2n x 2n` matrices with both diagonal `n x n` blocks equal to `m`
/// and the `2n^2` remaining cells free.
pub fn apply_phi(m: &SquareMatrix, budget: Budget) -> Result<MatrixSet> {
    let n = m.n();
    if 2 * n > MAX_DIM {
        return Err(Error::invalid(format!(
            "φ of a {n}x{n} matrix exceeds dimension {MAX_DIM}"
        )));
    }
    budget.check(pow_sat(m.q() as u64, 2 * (n * n) as u64))?;
    Ok(MatrixSet::from_sorted(2 * n, m.q(), phi_image(m).collect()))
}

/// All `(n+1) x (n+1)` matrices obtained by inserting a free row and column
/// at 0-based index `n/2`, the four corner blocks inherited from `m`.
///
/// For `n = 1` the inherited top-left block is empty, so `m` lands in the
/// bottom-right cell.
pub fn apply_psi(m: &SquareMatrix, budget: Budget) -> Result<MatrixSet> {
    let n = m.n();
    if n + 1 > MAX_DIM {
        return Err(Error::invalid(format!(
            "ψ of a {n}x{n} matrix exceeds dimension {MAX_DIM}"
        )));
    }
    budget.check(pow_sat(m.q() as u64, (2 * n + 1) as u64))?;
    Ok(MatrixSet::from_sorted(n + 1, m.q(), psi_image(m).collect()))
}

fn validate_dims(n: usize, q: u8) -> Result<()> {
    check_q(q)?;
    if n == 0 || n > MAX_DIM {
        return Err(Error::invalid(format!(
            "dimension {n} outside 1..={MAX_DIM}"
        )));
    }
    Ok(())
}

/// `BBF_n^q` by the recursive construction.
pub fn generate_bbf(n: usize, q: u8, budget: Budget) -> Result<MatrixSet> {
    generate_bbf_with(n, q, Method::Recursive, budget)
}

pub fn generate_bbf_with(n: usize, q: u8, method: Method, budget: Budget) -> Result<MatrixSet> {
    validate_dims(n, q)?;
    match method {
        Method::Brute => brute_bbf(n, q, budget),
        Method::Recursive => {
            let mut levels: Vec<MatrixSet> = Vec::with_capacity(n + 1);
            levels.push(MatrixSet::from_sorted(0, q, Vec::new()));
            levels.push(base_level(q));
            for size in 2..=n {
                let next = grow(&levels, size, q, budget)?;
                levels.push(next);
            }
            Ok(levels.swap_remove(n))
        }
    }
}

fn base_level(q: u8) -> MatrixSet {
    let members = (0..q)
        .map(|a| SquareMatrix::from_cells(1, q, &[a]).expect("valid 1x1"))
        .collect();
    MatrixSet::from_sorted(1, q, members)
}

/// Builds `BBF_size` from `levels[size - 1]` (and `levels[size / 2]` when
/// `size - 1` is odd).
fn grow(levels: &[MatrixSet], size: usize, q: u8, budget: Budget) -> Result<MatrixSet> {
    let prev = &levels[size - 1];
    budget.check((prev.len() as u128).saturating_mul(pow_sat(q as u64, 2 * (size as u64) - 1)))?;

    let excluded: HashSet<SquareMatrix> = if (size - 1) % 2 == 1 {
        let half = &levels[size / 2];
        budget.check(
            (half.len() as u128).saturating_mul(pow_sat(q as u64, (size * size / 2) as u64)),
        )?;
        half.members.par_iter().flat_map_iter(phi_image).collect()
    } else {
        HashSet::new()
    };

    let mut members: Vec<SquareMatrix> = prev
        .members
        .par_iter()
        .flat_map_iter(psi_image)
        .filter(|m| !excluded.contains(m))
        .collect();
    members.par_sort_unstable();
    members.dedup();
    Ok(MatrixSet::from_sorted(size, q, members))
}

/// `|BBF_n^q|` from the parity recurrence.
pub fn count_bbf(n: usize, q: u8) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::invalid("n must be at least 1"));
    }
    if q < 2 {
        return Err(Error::invalid("q must be at least 2"));
    }
    let qb = BigUint::from(q);
    let mut table: Vec<BigUint> = vec![BigUint::default(), qb.clone()];
    for m in 2..=n {
        let grown = qb.pow((2 * m - 1) as u32) * &table[m - 1];
        let next = if m % 2 == 1 {
            grown
        } else {
            grown - qb.pow((m * m / 2) as u32) * &table[m / 2]
        };
        table.push(next);
    }
    Ok(table.swap_remove(n))
}

/// `BBF_n^q` by filtering every matrix with the full-depth bibifix check.
pub fn brute_bbf(n: usize, q: u8, budget: Budget) -> Result<MatrixSet> {
    validate_dims(n, q)?;
    let cells = n * n;
    let total = pow_sat(q as u64, cells as u64);
    budget.check(total)?;
    let template = SquareMatrix::zero(n, q);
    let members: Vec<SquareMatrix> = (0..total as u64)
        .into_par_iter()
        .map(|mut idx| {
            let mut m = template;
            for c in (0..cells).rev() {
                m.set(c / n, c % n, (idx % q as u64) as u8);
                idx /= q as u64;
            }
            m
        })
        .filter(|m| (1..n).all(|r| !corner_match(m, m, r)))
        .collect();
    Ok(MatrixSet::from_sorted(n, q, members))
}
