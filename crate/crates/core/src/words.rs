//! Words over `{0, .., q-1}`, bifix detection and cross-bifix-free word sets.

use std::fmt;

use num_bigint::BigUint;

use crate::{check_q, pow_sat, Budget, Error, Result, Verdict};

/// A finite word over the alphabet `{0, .., q-1}`.
///
/// Ordering is lexicographic on the symbols, which is the canonical order
/// used for every set-valued output.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<u8>,
    q: u8,
}

impl Word {
    pub fn new(symbols: Vec<u8>, q: u8) -> Result<Self> {
        check_q(q)?;
        if let Some(&s) = symbols.iter().find(|&&s| s >= q) {
            return Err(Error::invalid(format!("symbol {s} not below q={q}")));
        }
        Ok(Word { symbols, q })
    }

    /// Parses a digit string such as `"1000"`.
    pub fn parse(s: &str, q: u8) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(format!("'{c}' is not a digit in \"{s}\"")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(symbols, q)
    }

    pub(crate) fn from_raw(symbols: Vec<u8>, q: u8) -> Self {
        debug_assert!(symbols.iter().all(|&s| s < q));
        Word { symbols, q }
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of positions where the two words differ; `None` when the
    /// lengths disagree.
    pub fn hamming(&self, other: &Word) -> Option<usize> {
        (self.len() == other.len()).then(|| {
            self.symbols
                .iter()
                .zip(&other.symbols)
                .filter(|(a, b)| a != b)
                .count()
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

fn non_empty(w: &Word) -> Result<()> {
    if w.is_empty() {
        Err(Error::invalid("empty word"))
    } else {
        Ok(())
    }
}

/// Bifix-freeness, comparing only prefixes and suffixes of length up to `n/2`.
pub fn is_bifix_free(w: &Word) -> Result<bool> {
    non_empty(w)?;
    Ok(half_depth_bifix_free(w.symbols()))
}

pub(crate) fn half_depth_bifix_free(s: &[u8]) -> bool {
    let n = s.len();
    (1..=n / 2).all(|i| s[..i] != s[n - i..])
}

/// Every proper length `i` in `1..n` whose prefix equals the suffix.
pub fn bifix_lengths(w: &Word) -> Result<Vec<usize>> {
    non_empty(w)?;
    let s = w.symbols();
    let n = s.len();
    Ok((1..n).filter(|&i| s[..i] == s[n - i..]).collect())
}

/// `|BF_n^q|` from the parity recurrence.
pub fn count_bf(n: usize, q: u8) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::invalid("n must be at least 1"));
    }
    if q < 2 {
        return Err(Error::invalid("q must be at least 2"));
    }
    let q = BigUint::from(q);
    // table[m] = |BF_m^q|, index 0 unused
    let mut table: Vec<BigUint> = vec![BigUint::default(), q.clone()];
    for m in 2..=n {
        let next = if m % 2 == 1 {
            &q * &table[m - 1]
        } else {
            &q * &table[m - 1] - &table[m / 2]
        };
        table.push(next);
    }
    Ok(table.swap_remove(n))
}

/// Iterates all `q^n` words of length `n` in lexicographic order.
pub(crate) fn all_words(n: usize, q: u8) -> impl Iterator<Item = Vec<u8>> {
    let total = pow_sat(q as u64, n as u64);
    (0..total).map(move |mut idx| {
        let mut digits = vec![0u8; n];
        for d in digits.iter_mut().rev() {
            *d = (idx % q as u128) as u8;
            idx /= q as u128;
        }
        digits
    })
}

/// The bifix-free words of length `n`, found by filtering all `q^n` words
/// with the full-depth check.
pub fn enumerate_bf(n: usize, q: u8, budget: Budget) -> Result<WordCode> {
    check_q(q)?;
    if n < 1 {
        return Err(Error::invalid("n must be at least 1"));
    }
    budget.check(pow_sat(q as u64, n as u64))?;
    let words = all_words(n, q)
        .filter(|s| (1..n).all(|i| s[..i] != s[n - i..]))
        .map(|s| Word::from_raw(s, q));
    WordCode::new(n, q, words)
}

fn cross_overlap(a: &[u8], b: &[u8]) -> bool {
    let n = a.len();
    (1..n).any(|i| a[..i] == b[n - i..] || b[..i] == a[n - i..])
}

/// Whether two distinct words of equal length have no prefix of one equal
/// to the suffix of the other, in either direction.
pub fn is_cross_bifix_free_pair(w: &Word, other: &Word) -> Result<bool> {
    non_empty(w)?;
    if w.len() != other.len() || w.q() != other.q() {
        return Err(Error::invalid("words differ in length or alphabet"));
    }
    if w == other {
        return Err(Error::invalid(format!(
            "cross-bifix-freeness needs distinct words, got {w} twice"
        )));
    }
    Ok(!cross_overlap(w.symbols(), other.symbols()))
}

/// A set of distinct words sharing length `n` and alphabet size `q`, held
/// in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordCode {
    n: usize,
    q: u8,
    words: Vec<Word>,
}

impl WordCode {
    pub fn new(n: usize, q: u8, words: impl IntoIterator<Item = Word>) -> Result<Self> {
        check_q(q)?;
        let mut words: Vec<Word> = words.into_iter().collect();
        for w in &words {
            if w.len() != n || w.q() != q {
                return Err(Error::invalid(format!(
                    "word {w} does not have length {n} over q={q}"
                )));
            }
        }
        words.sort();
        if let Some(pair) = words.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::invalid(format!("duplicate word {}", pair[0])));
        }
        Ok(WordCode { n, q, words })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.words.iter()
    }

    /// Checks every distinct pair; on failure returns the first offending
    /// pair in lexicographic order.
    pub fn cross_bifix_free(&self) -> Verdict<(Word, Word)> {
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                if cross_overlap(a.symbols(), b.symbols()) {
                    return Verdict::Refuted((a.clone(), b.clone()));
                }
            }
        }
        Verdict::Holds
    }
}

impl<'a> IntoIterator for &'a WordCode {
    type Item = &'a Word;
    type IntoIter = std::slice::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

fn has_run_of_ones(s: &[u8], k: usize) -> bool {
    let mut run = 0;
    for &c in s {
        run = if c == 1 { run + 1 } else { 0 };
        if run >= k {
            return true;
        }
    }
    false
}

/// The cross-bifix-free set `S_{n,q}^(k)`: words `1^k a x b` with `a != 1`,
/// `b != 1`, and `x` (length `n-k-2`) free of `k` consecutive ones.
pub fn build_s(n: usize, q: u8, k: usize, budget: Budget) -> Result<WordCode> {
    check_q(q)?;
    if n < 3 {
        return Err(Error::invalid(format!("S needs n >= 3, got {n}")));
    }
    if k < 1 || k > n - 2 {
        return Err(Error::invalid(format!("k={k} outside 1..={}", n - 2)));
    }
    let middle_len = n - k - 2;
    let non_one = || (0..q).filter(|&c| c != 1);
    budget.check(pow_sat(q as u64, middle_len as u64).saturating_mul(((q - 1) as u128).pow(2)))?;

    let middles: Vec<Vec<u8>> = all_words(middle_len, q)
        .filter(|m| !has_run_of_ones(m, k))
        .collect();
    let mut words = Vec::new();
    for a in non_one() {
        for middle in &middles {
            for b in non_one() {
                let mut s = vec![1u8; k];
                s.push(a);
                s.extend_from_slice(middle);
                s.push(b);
                words.push(Word::from_raw(s, q));
            }
        }
    }
    WordCode::new(n, q, words)
}

/// The `k` in `1..=n-2` maximizing `|S_{n,q}^(k)|`; ties go to the smallest.
pub fn select_k(n: usize, q: u8, budget: Budget) -> Result<usize> {
    best_s(n, q, budget).map(|(k, _)| k)
}

/// `S_n^q` together with the `k` that produced it.
pub fn best_s(n: usize, q: u8, budget: Budget) -> Result<(usize, WordCode)> {
    if n < 3 {
        return Err(Error::invalid(format!("S needs n >= 3, got {n}")));
    }
    let mut best: Option<(usize, WordCode)> = None;
    for k in 1..=n - 2 {
        let code = build_s(n, q, k, budget)?;
        if best.as_ref().is_none_or(|(_, b)| code.len() > b.len()) {
            best = Some((k, code));
        }
    }
    Ok(best.expect("n >= 3 gives at least one k"))
}

/// Whether no bifix-free word outside `code` can join it while keeping the
/// set cross-bifix-free. On failure the first such word is returned.
pub fn is_nonexpandable_word_set(code: &WordCode, budget: Budget) -> Result<Verdict<Word>> {
    if let Verdict::Refuted((a, b)) = code.cross_bifix_free() {
        return Err(Error::invalid(format!(
            "{a} and {b} share a cross-bifix; set is not cross-bifix-free"
        )));
    }
    let universe = enumerate_bf(code.n(), code.q(), budget)?;
    let witness = universe.iter().find(|w| {
        !code.contains(w)
            && code
                .iter()
                .all(|m| !cross_overlap(w.symbols(), m.symbols()))
    });
    Ok(match witness {
        Some(w) => Verdict::Refuted(w.clone()),
        None => Verdict::Holds,
    })
}
