use std::ffi::{c_char, CStr};
use std::ptr;

use bibifix_ffi::*;

fn cells(s: &str) -> Vec<u8> {
    s.bytes()
        .filter(u8::is_ascii_digit)
        .map(|b| b - b'0')
        .collect()
}

fn last_error() -> String {
    let mut buf = [0 as c_char; 256];
    unsafe { bbf_last_error(buf.as_mut_ptr(), buf.len()) };
    unsafe { CStr::from_ptr(buf.as_ptr()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn predicates() {
    unsafe {
        let w = cells("100");
        assert_eq!(bbf_is_bifix_free(w.as_ptr(), 3, 2), BbfStatus::Ok);
        let w = cells("1010");
        assert_eq!(bbf_is_bifix_free(w.as_ptr(), 4, 2), BbfStatus::False);
        let m = cells("10/00");
        assert_eq!(bbf_is_bibifix_free(m.as_ptr(), 2, 2), BbfStatus::Ok);
        let a = cells("100/000/000");
        let b = cells("100/000/001");
        assert_eq!(
            bbf_is_cross_bibifix_free_pair(a.as_ptr(), b.as_ptr(), 3, 2),
            BbfStatus::False
        );
        assert_eq!(
            bbf_is_bibifix_free(ptr::null(), 2, 2),
            BbfStatus::NullPointer
        );
        assert!(last_error().contains("NULL"));
        let bad = cells("12");
        assert_eq!(
            bbf_is_bifix_free(bad.as_ptr(), 2, 2),
            BbfStatus::InvalidInput
        );
        assert!(!last_error().is_empty());
    }
}

#[test]
fn counts_as_decimal_strings() {
    let mut buf = [0 as c_char; 64];
    unsafe {
        assert_eq!(
            bbf_count_bf(9, 2, buf.as_mut_ptr(), buf.len()),
            BbfStatus::Ok
        );
        assert_eq!(CStr::from_ptr(buf.as_ptr()).to_str().unwrap(), "148");
        assert_eq!(
            bbf_count_bbf(4, 2, buf.as_mut_ptr(), buf.len()),
            BbfStatus::Ok
        );
        assert_eq!(CStr::from_ptr(buf.as_ptr()).to_str().unwrap(), "30720");
        assert_eq!(
            bbf_count_bbf(8, 10, buf.as_mut_ptr(), 4),
            BbfStatus::BufferTooSmall
        );
    }
}

#[test]
fn generated_set_handle() {
    unsafe {
        let mut set = ptr::null_mut();
        assert_eq!(
            bbf_generate(3, 2, BbfMethod::Recursive, 0, &mut set),
            BbfStatus::Ok
        );
        let mut len = 0;
        assert_eq!(bbf_set_len(set, &mut len), BbfStatus::Ok);
        assert_eq!(len, 256);
        let mut m = [0u8; 9];
        for i in 0..len {
            assert_eq!(bbf_set_get(set, i, m.as_mut_ptr()), BbfStatus::Ok);
            assert_eq!(bbf_is_bibifix_free(m.as_ptr(), 3, 2), BbfStatus::Ok);
        }
        assert_eq!(
            bbf_set_get(set, len, m.as_mut_ptr()),
            BbfStatus::InvalidInput
        );
        bbf_set_free(set);
        bbf_set_free(ptr::null_mut());

        let mut set = ptr::null_mut();
        assert_eq!(
            bbf_generate(4, 2, BbfMethod::Brute, 1000, &mut set),
            BbfStatus::BudgetExceeded
        );
        assert!(set.is_null());
    }
}

#[test]
fn code_handle_and_verifiers() {
    unsafe {
        let mut code = ptr::null_mut();
        assert_eq!(bbf_code_build(3, 3, 0, &mut code), BbfStatus::Ok);
        let mut len = 0u64;
        assert_eq!(bbf_code_len(code, &mut len), BbfStatus::Ok);
        assert_eq!(len, 2916);
        assert_eq!(bbf_code_verify_cross(code, 0), BbfStatus::Ok);
        assert_eq!(
            bbf_code_verify_nonexpandable(code, 0, ptr::null_mut()),
            BbfStatus::Ok
        );
        let member = cells("122/201/220");
        assert_eq!(bbf_code_contains(code, member.as_ptr()), BbfStatus::Ok);
        bbf_code_free(code);

        let diag = cells("1100");
        let mut alt = ptr::null_mut();
        assert_eq!(
            bbf_code_with_diagonal(4, 2, diag.as_ptr(), 1, &mut alt),
            BbfStatus::Ok
        );
        let mut witness = [0u8; 16];
        assert_eq!(
            bbf_code_verify_nonexpandable(alt, 0, witness.as_mut_ptr()),
            BbfStatus::False
        );
        assert_eq!(bbf_is_bibifix_free(witness.as_ptr(), 4, 2), BbfStatus::Ok);
        assert_eq!(bbf_code_contains(alt, witness.as_ptr()), BbfStatus::False);
        bbf_code_free(alt);

        let clash: Vec<u8> = cells("1000").into_iter().chain(cells("1010")).collect();
        let mut bad = ptr::null_mut();
        assert_eq!(
            bbf_code_with_diagonal(4, 2, clash.as_ptr(), 2, &mut bad),
            BbfStatus::Ok
        );
        assert_eq!(bbf_code_verify_cross(bad, 0), BbfStatus::False);
        bbf_code_free(bad);

        let twice: Vec<u8> = cells("10001000");
        let mut dup = ptr::null_mut();
        assert_eq!(
            bbf_code_with_diagonal(4, 2, twice.as_ptr(), 2, &mut dup),
            BbfStatus::InvalidInput
        );
        assert!(dup.is_null());
    }
}

#[test]
fn gray_iterator() {
    unsafe {
        let mut code = ptr::null_mut();
        assert_eq!(bbf_code_build(3, 3, 0, &mut code), BbfStatus::Ok);
        let mut gray = ptr::null_mut();
        assert_eq!(bbf_gray_new(code, 0, &mut gray), BbfStatus::Ok);
        bbf_code_free(code);

        let mut prev = [0u8; 9];
        let mut cur = [0u8; 9];
        assert_eq!(bbf_gray_next(gray, prev.as_mut_ptr()), BbfStatus::Ok);
        assert_eq!(prev.to_vec(), cells("100/000/000"));
        let mut count = 1;
        while bbf_gray_next(gray, cur.as_mut_ptr()) == BbfStatus::Ok {
            assert_eq!(prev.iter().zip(&cur).filter(|(a, b)| a != b).count(), 1);
            prev = cur;
            count += 1;
        }
        assert_eq!(count, 2916);
        assert_eq!(prev.to_vec(), cells("100/020/000"));
        assert_eq!(bbf_gray_next(gray, cur.as_mut_ptr()), BbfStatus::False);
        bbf_gray_free(gray);
    }
}

#[test]
fn linearization() {
    unsafe {
        let mut f = 0;
        assert_eq!(bbf_f_index(4, 3, 4, &mut f), BbfStatus::Ok);
        assert_eq!(f, 6);
        assert_eq!(bbf_f_index(2, 2, 4, &mut f), BbfStatus::InvalidInput);
        let off = cells("121201100020");
        let diag = [0u8; 4];
        let mut m = [0u8; 16];
        assert_eq!(
            bbf_offdiag_decode(off.as_ptr(), diag.as_ptr(), 4, 3, m.as_mut_ptr()),
            BbfStatus::Ok
        );
        assert_eq!(m.to_vec(), cells("0100/1002/2200/1010"));
    }
}

#[test]
fn header_declares_every_export() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/bibifix.h")).unwrap();
    let source = include_str!("../src/lib.rs");
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.trim().strip_prefix("pub unsafe extern \"C\" fn "))
        .map(|l| l.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 20);
    for name in exports {
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
}
