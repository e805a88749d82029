//! C ABI over the `bibifix` library.
//!
//! Conventions:
//!
//! * Every function returns a [`BbfStatus`]; results go through out-pointers.
//! * Words are `len` symbols, matrices are `n * n` cells in row-major order,
//!   each symbol in `0..q`.
//! * A `budget` of 0 selects the library default.
//! * Sets, codes and Gray iterators are opaque handles released with their
//!   `*_free` function. Passing NULL to a `*_free` function is a no-op.
//! * On any non-OK, non-FALSE status, [`bbf_last_error`] describes the failure
//!   for the calling thread.

use std::cell::RefCell;
use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::slice;

use bibifix::codes::{build_cbbf, verify_cross_set, verify_nonexpandable};
use bibifix::generation::{count_bbf, generate_bbf_with};
use bibifix::graycode::{code_gray, f_index, offdiag_decode, CodeGray};
use bibifix::matrices::{is_bibifix_free, is_cross_bibifix_free_pair};
use bibifix::words::{count_bf, is_bifix_free};
use bibifix::{Budget, Error, MatrixCode, MatrixSet, Method, SquareMatrix, Word, WordCode};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BbfStatus {
    Ok = 0,
    /// The checked property does not hold; not an error.
    False = 1,
    InvalidInput = 2,
    BudgetExceeded = 3,
    NoGrayOrder = 4,
    NullPointer = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BbfMethod {
    Recursive = 0,
    Brute = 1,
}

/// Opaque set of bibifix-free matrices.
pub struct BbfMatrixSet(MatrixSet);

/// Opaque cross-bibifix-free matrix code.
pub struct BbfCode(MatrixCode);

/// Opaque Gray-order iterator over a code.
pub struct BbfGray(CodeGray);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

enum Failure {
    Lib(Error),
    Null(&'static str),
    Small(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<BbfStatus, Failure>;

fn guard(f: impl FnOnce() -> Outcome) -> BbfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            match e {
                Error::BudgetExceeded { .. } => BbfStatus::BudgetExceeded,
                Error::NoGrayOrder { .. } => BbfStatus::NoGrayOrder,
                _ => BbfStatus::InvalidInput,
            }
        }
        Ok(Err(Failure::Null(what))) => {
            set_error(format!("{what} is NULL"));
            BbfStatus::NullPointer
        }
        Ok(Err(Failure::Small(needed))) => {
            set_error(format!("buffer too small, {needed} bytes needed"));
            BbfStatus::BufferTooSmall
        }
        Err(_) => {
            set_error("internal panic".into());
            BbfStatus::Panic
        }
    }
}

fn budget(cap: u64) -> Budget {
    Budget::new(cap).unwrap_or(Budget::DEFAULT)
}

fn verdict(holds: bool) -> BbfStatus {
    if holds {
        BbfStatus::Ok
    } else {
        BbfStatus::False
    }
}

unsafe fn input<'a>(ptr: *const u8, len: usize, what: &'static str) -> Result<&'a [u8], Failure> {
    if ptr.is_null() {
        return Err(Failure::Null(what));
    }
    Ok(slice::from_raw_parts(ptr, len))
}

unsafe fn output<'a, T>(ptr: *mut T, what: &'static str) -> Result<&'a mut T, Failure> {
    ptr.as_mut().ok_or(Failure::Null(what))
}

unsafe fn handle<'a, T>(ptr: *const T, what: &'static str) -> Result<&'a T, Failure> {
    ptr.as_ref().ok_or(Failure::Null(what))
}

unsafe fn matrix(cells: *const u8, n: usize, q: u8) -> Result<SquareMatrix, Failure> {
    let cells = input(cells, n.saturating_mul(n), "cells")?;
    Ok(SquareMatrix::from_cells(n, q, cells)?)
}

unsafe fn write_cells(m: &SquareMatrix, out: *mut u8) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null("cells_out"));
    }
    let cells = m.cells();
    std::ptr::copy_nonoverlapping(cells.as_ptr(), out, cells.len());
    Ok(())
}

unsafe fn write_string(s: &str, buf: *mut c_char, cap: usize) -> Result<(), Failure> {
    if buf.is_null() {
        return Err(Failure::Null("buf"));
    }
    if s.len() + 1 > cap {
        return Err(Failure::Small(s.len() + 1));
    }
    std::ptr::copy_nonoverlapping(s.as_ptr().cast::<c_char>(), buf, s.len());
    *buf.add(s.len()) = 0;
    Ok(())
}

/// Copies the calling thread's last error message (NUL-terminated, truncated
/// to fit) into `buf` and returns the full message length in bytes.
///
/// # Safety
/// `buf` must be NULL or point to `cap` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn bbf_last_error(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && cap > 0 {
            let len = msg.len().min(cap - 1);
            std::ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buf, len);
            *buf.add(len) = 0;
        }
        msg.len()
    })
}

/// `Ok` when the word is bifix-free, `False` when it has a bifix.
///
/// # Safety
/// `symbols` must point to `len` readable bytes.
#[no_mangle]
pub unsafe extern "C" fn bbf_is_bifix_free(symbols: *const u8, len: usize, q: u8) -> BbfStatus {
    guard(|| {
        let w = Word::new(input(symbols, len, "symbols")?.to_vec(), q)?;
        Ok(verdict(is_bifix_free(&w)?))
    })
}

/// `Ok` when the `n x n` matrix is bibifix-free, `False` otherwise.
///
/// # Safety
/// `cells` must point to `n * n` readable bytes.
#[no_mangle]
pub unsafe extern "C" fn bbf_is_bibifix_free(cells: *const u8, n: usize, q: u8) -> BbfStatus {
    guard(|| Ok(verdict(is_bibifix_free(&matrix(cells, n, q)?))))
}

/// `Ok` when two distinct `n x n` matrices are cross-bibifix-free.
///
/// # Safety
/// `a` and `b` must each point to `n * n` readable bytes.
#[no_mangle]
pub unsafe extern "C" fn bbf_is_cross_bibifix_free_pair(
    a: *const u8,
    b: *const u8,
    n: usize,
    q: u8,
) -> BbfStatus {
    guard(|| {
        let (a, b) = (matrix(a, n, q)?, matrix(b, n, q)?);
        Ok(verdict(is_cross_bibifix_free_pair(&a, &b)?))
    })
}

/// Writes `|BF_n^q|` as a NUL-terminated decimal string.
///
/// # Safety
/// `buf` must point to `cap` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn bbf_count_bf(n: usize, q: u8, buf: *mut c_char, cap: usize) -> BbfStatus {
    guard(|| {
        write_string(&count_bf(n, q)?.to_string(), buf, cap)?;
        Ok(BbfStatus::Ok)
    })
}

/// Writes `|BBF_n^q|` as a NUL-terminated decimal string.
///
/// # Safety
/// `buf` must point to `cap` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn bbf_count_bbf(n: usize, q: u8, buf: *mut c_char, cap: usize) -> BbfStatus {
    guard(|| {
        write_string(&count_bbf(n, q)?.to_string(), buf, cap)?;
        Ok(BbfStatus::Ok)
    })
}

/// Generates every bibifix-free `n x n` matrix in canonical order.
///
/// # Safety
/// `out` must be a valid pointer; the handle it receives must be released
/// with [`bbf_set_free`].
#[no_mangle]
pub unsafe extern "C" fn bbf_generate(
    n: usize,
    q: u8,
    method: BbfMethod,
    budget_cap: u64,
    out: *mut *mut BbfMatrixSet,
) -> BbfStatus {
    guard(|| {
        let out = output(out, "out")?;
        let method = match method {
            BbfMethod::Recursive => Method::Recursive,
            BbfMethod::Brute => Method::Brute,
        };
        let set = generate_bbf_with(n, q, method, budget(budget_cap))?;
        *out = Box::into_raw(Box::new(BbfMatrixSet(set)));
        Ok(BbfStatus::Ok)
    })
}

/// Number of matrices in the set.
///
/// # Safety
/// `set` must be a live handle and `len` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bbf_set_len(set: *const BbfMatrixSet, len: *mut usize) -> BbfStatus {
    guard(|| {
        *output(len, "len")? = handle(set, "set")?.0.len();
        Ok(BbfStatus::Ok)
    })
}

/// Copies member `index` into `cells_out` (`n * n` bytes).
///
/// # Safety
/// `set` must be a live handle and `cells_out` must have room for `n * n`
/// bytes.
#[no_mangle]
pub unsafe extern "C" fn bbf_set_get(
    set: *const BbfMatrixSet,
    index: usize,
    cells_out: *mut u8,
) -> BbfStatus {
    guard(|| {
        let set = &handle(set, "set")?.0;
        let m = set.members().get(index).ok_or_else(|| {
            Error::InvalidInput(format!("index {index} out of range {}", set.len()))
        })?;
        write_cells(m, cells_out)?;
        Ok(BbfStatus::Ok)
    })
}

/// # Safety
/// `set` must be NULL or a handle from [`bbf_generate`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bbf_set_free(set: *mut BbfMatrixSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Builds the default cross-bibifix-free code `CBBF_n^q`.
///
/// # Safety
/// `out` must be a valid pointer; release the handle with [`bbf_code_free`].
#[no_mangle]
pub unsafe extern "C" fn bbf_code_build(
    n: usize,
    q: u8,
    budget_cap: u64,
    out: *mut *mut BbfCode,
) -> BbfStatus {
    guard(|| {
        let out = output(out, "out")?;
        let code = build_cbbf(n, q, budget(budget_cap))?;
        *out = Box::into_raw(Box::new(BbfCode(code)));
        Ok(BbfStatus::Ok)
    })
}

/// Builds a code from `count` caller-chosen diagonal words of length `n`,
/// laid out back to back in `words`. The words only need to be distinct;
/// use the verifiers to check the resulting code.
///
/// # Safety
/// `words` must point to `count * n` readable bytes and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bbf_code_with_diagonal(
    n: usize,
    q: u8,
    words: *const u8,
    count: usize,
    out: *mut *mut BbfCode,
) -> BbfStatus {
    guard(|| {
        let out = output(out, "out")?;
        if n == 0 {
            return Err(Error::InvalidInput("word length 0".into()).into());
        }
        let raw = input(words, n.saturating_mul(count), "words")?;
        let words = raw
            .chunks(n)
            .map(|w| Word::new(w.to_vec(), q))
            .collect::<bibifix::Result<Vec<_>>>()?;
        let code = MatrixCode::from_diagonal(WordCode::new(n, q, words)?, None)?;
        *out = Box::into_raw(Box::new(BbfCode(code)));
        Ok(BbfStatus::Ok)
    })
}

/// Code size; `InvalidInput` if it does not fit in 64 bits.
///
/// # Safety
/// `code` must be a live handle and `len` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bbf_code_len(code: *const BbfCode, len: *mut u64) -> BbfStatus {
    guard(|| {
        let size = handle(code, "code")?.0.len();
        *output(len, "len")? = u64::try_from(size)
            .map_err(|_| Error::InvalidInput(format!("code size {size} exceeds 64 bits")))?;
        Ok(BbfStatus::Ok)
    })
}

/// `Ok` when the matrix is a member of the code.
///
/// # Safety
/// `code` must be a live handle and `cells` must point to `n * n` bytes,
/// where `n` is the code's dimension.
#[no_mangle]
pub unsafe extern "C" fn bbf_code_contains(code: *const BbfCode, cells: *const u8) -> BbfStatus {
    guard(|| {
        let code = &handle(code, "code")?.0;
        let m = matrix(cells, code.n(), code.q())?;
        Ok(verdict(code.contains(&m)))
    })
}

/// Materializes the code and checks pairwise cross-bibifix-freeness.
///
/// # Safety
/// `code` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bbf_code_verify_cross(code: *const BbfCode, budget_cap: u64) -> BbfStatus {
    guard(|| {
        let members = handle(code, "code")?.0.members(budget(budget_cap))?;
        Ok(verdict(verify_cross_set(members.members()).holds()))
    })
}

/// `Ok` when no bibifix-free matrix outside the code can be added to it.
/// On `False`, an expanding matrix is written to `witness_out` if it is not
/// NULL.
///
/// # Safety
/// `code` must be a live handle; `witness_out` must be NULL or have room for
/// `n * n` bytes.
#[no_mangle]
pub unsafe extern "C" fn bbf_code_verify_nonexpandable(
    code: *const BbfCode,
    budget_cap: u64,
    witness_out: *mut u8,
) -> BbfStatus {
    guard(|| {
        let v = verify_nonexpandable(&handle(code, "code")?.0, budget(budget_cap))?;
        match v.witness() {
            None => Ok(BbfStatus::Ok),
            Some(w) => {
                if !witness_out.is_null() {
                    write_cells(w, witness_out)?;
                }
                Ok(BbfStatus::False)
            }
        }
    })
}

/// # Safety
/// `code` must be NULL or a code handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bbf_code_free(code: *mut BbfCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Starts a Hamming-distance-1 listing of the code. The iterator does not
/// borrow the code handle.
///
/// # Safety
/// `code` must be a live handle and `out` a valid pointer; release the
/// iterator with [`bbf_gray_free`].
#[no_mangle]
pub unsafe extern "C" fn bbf_gray_new(
    code: *const BbfCode,
    budget_cap: u64,
    out: *mut *mut BbfGray,
) -> BbfStatus {
    guard(|| {
        let out = output(out, "out")?;
        let gray = code_gray(&handle(code, "code")?.0, budget(budget_cap))?;
        *out = Box::into_raw(Box::new(BbfGray(gray)));
        Ok(BbfStatus::Ok)
    })
}

/// Writes the next matrix to `cells_out` and returns `Ok`, or returns
/// `False` once the listing is exhausted.
///
/// # Safety
/// `gray` must be a live iterator and `cells_out` must have room for
/// `n * n` bytes.
#[no_mangle]
pub unsafe extern "C" fn bbf_gray_next(gray: *mut BbfGray, cells_out: *mut u8) -> BbfStatus {
    guard(|| {
        let gray = output(gray, "gray")?;
        match gray.0.next() {
            Some(m) => {
                write_cells(&m, cells_out)?;
                Ok(BbfStatus::Ok)
            }
            None => Ok(BbfStatus::False),
        }
    })
}

/// # Safety
/// `gray` must be NULL or an iterator handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bbf_gray_free(gray: *mut BbfGray) {
    if !gray.is_null() {
        drop(Box::from_raw(gray));
    }
}

/// 1-based position of off-diagonal cell `(i, j)` (1-based) in the
/// linearised off-diagonal word of an `n x n` matrix.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bbf_f_index(i: usize, j: usize, n: usize, out: *mut usize) -> BbfStatus {
    guard(|| {
        *output(out, "out")? = f_index(i, j, n)?;
        Ok(BbfStatus::Ok)
    })
}

/// Rebuilds an `n x n` matrix from its `n * n - n` off-diagonal symbols and
/// its `n` diagonal symbols.
///
/// # Safety
/// `offdiag` must point to `n * n - n` bytes, `diagonal` to `n` bytes and
/// `cells_out` to `n * n` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn bbf_offdiag_decode(
    offdiag: *const u8,
    diagonal: *const u8,
    n: usize,
    q: u8,
    cells_out: *mut u8,
) -> BbfStatus {
    guard(|| {
        let off_len = n.saturating_mul(n).saturating_sub(n);
        let w = Word::new(input(offdiag, off_len, "offdiag")?.to_vec(), q)?;
        let d = Word::new(input(diagonal, n, "diagonal")?.to_vec(), q)?;
        write_cells(&offdiag_decode(&w, &d)?, cells_out)?;
        Ok(BbfStatus::Ok)
    })
}
