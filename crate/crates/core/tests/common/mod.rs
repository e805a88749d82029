//! Brute-force oracles shared by the integration tests. These deliberately
//! avoid the library's fast paths: they go through the public block
//! accessors or restate definitions directly.

#![allow(dead_code)]

use bibifix::matrices::{biprefix, bisuffix};
use bibifix::{SquareMatrix, Word};

/// All `q^len` digit vectors in lexicographic order.
pub fn all_digit_vectors(len: usize, q: u8) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * q as usize);
        for prefix in &out {
            for d in 0..q {
                let mut v = prefix.clone();
                v.push(d);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

pub fn all_matrices(n: usize, q: u8) -> Vec<SquareMatrix> {
    all_digit_vectors(n * n, q)
        .into_iter()
        .map(|cells| SquareMatrix::from_cells(n, q, &cells).unwrap())
        .collect()
}

/// Bifix-free by the definition: no proper prefix equals the suffix.
pub fn word_bifix_free(s: &[u8]) -> bool {
    let n = s.len();
    !(1..n).any(|i| (0..i).all(|t| s[t] == s[n - i + t]))
}

pub fn brute_bf_count(n: usize, q: u8) -> usize {
    all_digit_vectors(n, q)
        .iter()
        .filter(|w| word_bifix_free(w))
        .count()
}

/// `S_{n,q}^(k)` by filtering all words against the defining conditions.
pub fn brute_s(n: usize, q: u8, k: usize) -> Vec<String> {
    all_digit_vectors(n, q)
        .into_iter()
        .filter(|s| {
            s[..k].iter().all(|&c| c == 1)
                && s[k] != 1
                && s[n - 1] != 1
                && !s[k + 1..n - 1]
                    .windows(k)
                    .any(|w| w.iter().all(|&c| c == 1))
        })
        .map(|s| s.iter().map(|d| d.to_string()).collect())
        .collect()
}

/// Matrix has a biprefix equal to its bisuffix for some `r` in `1..n`,
/// compared through materialized views.
pub fn matrix_has_bibifix(m: &SquareMatrix) -> bool {
    (1..m.n()).any(|r| biprefix(m, r).unwrap().cells() == bisuffix(m, r).unwrap().cells())
}

/// Pairwise cross check through materialized views.
pub fn views_collide(a: &SquareMatrix, b: &SquareMatrix) -> bool {
    (1..a.n()).any(|r| {
        biprefix(a, r).unwrap().cells() == bisuffix(b, r).unwrap().cells()
            || biprefix(b, r).unwrap().cells() == bisuffix(a, r).unwrap().cells()
    })
}

/// O(N^2) cross-bibifix-freeness of a whole set.
pub fn pairwise_cross_free(members: &[SquareMatrix]) -> bool {
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            if views_collide(a, b) {
                return false;
            }
        }
    }
    true
}

/// The reflected Gray list by its recursive definition: concatenate
/// `i . G_{n-1}` for `i = 0..q`, reversing the sublist when `i` is odd.
pub fn recursive_gray(n: usize, q: u8) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let inner = recursive_gray(n - 1, q);
    let mut out = Vec::with_capacity(inner.len() * q as usize);
    for i in 0..q {
        let block: Box<dyn Iterator<Item = &Vec<u8>>> = if i % 2 == 0 {
            Box::new(inner.iter())
        } else {
            Box::new(inner.iter().rev())
        };
        for w in block {
            let mut v = vec![i];
            v.extend_from_slice(w);
            out.push(v);
        }
    }
    out
}

pub fn word(s: &str, q: u8) -> Word {
    Word::parse(s, q).unwrap()
}

pub fn matrix(s: &str, q: u8) -> SquareMatrix {
    SquareMatrix::parse(s, q).unwrap()
}

/// A 4x4 binary matrix that expands the `1100`-diagonal code.
pub fn expanding_m() -> SquareMatrix {
    matrix("1000/0000/0011/0010", 2)
}
