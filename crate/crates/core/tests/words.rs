mod common;

use bibifix::words::{
    best_s, bifix_lengths, build_s, count_bf, enumerate_bf, is_bifix_free,
    is_cross_bifix_free_pair, is_nonexpandable_word_set, select_k,
};
use bibifix::{Budget, Word, WordCode};
use common::{all_digit_vectors, brute_bf_count, brute_s, word, word_bifix_free};
use num_bigint::BigUint;
use proptest::prelude::*;

#[test]
fn half_depth_matches_full_depth_exhaustively() {
    for (max_len, q) in [(12, 2u8), (8, 3)] {
        for len in 1..=max_len {
            for s in all_digit_vectors(len, q) {
                let w = Word::new(s.clone(), q).unwrap();
                let half = is_bifix_free(&w).unwrap();
                assert_eq!(half, bifix_lengths(&w).unwrap().is_empty(), "{w}");
                assert_eq!(half, word_bifix_free(&s), "{w}");
            }
        }
    }
}

#[test]
fn recurrence_matches_enumeration() {
    for (max_len, q) in [(12, 2u8), (8, 3)] {
        for n in 1..=max_len {
            let enumerated = enumerate_bf(n, q, Budget::DEFAULT).unwrap().len();
            assert_eq!(enumerated, brute_bf_count(n, q), "n={n} q={q}");
            assert_eq!(
                count_bf(n, q).unwrap(),
                BigUint::from(enumerated),
                "n={n} q={q}"
            );
        }
    }
}

#[test]
fn s_sets_are_cross_bifix_free_subsets_of_bf() {
    let b = Budget::DEFAULT;
    for q in 2..=4u8 {
        for n in 3..=8 {
            if (q as u64).pow(n as u32) > 70_000 {
                continue;
            }
            let bf = enumerate_bf(n, q, b).unwrap();
            for k in 1..=n - 2 {
                let s = build_s(n, q, k, b).unwrap();
                let listed: Vec<String> = s.iter().map(Word::to_string).collect();
                assert_eq!(listed, brute_s(n, q, k), "n={n} q={q} k={k}");
                assert!(s.iter().all(|w| bf.contains(w)), "n={n} q={q} k={k}");
                assert!(s.cross_bifix_free().holds(), "n={n} q={q} k={k}");
                for (i, a) in s.iter().enumerate() {
                    for c in &s.words()[i + 1..] {
                        assert!(is_cross_bifix_free_pair(a, c).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn select_k_is_smallest_argmax() {
    let b = Budget::DEFAULT;
    for (n, q) in [(8, 2u8), (7, 2), (6, 3), (5, 4)] {
        let sizes: Vec<usize> = (1..=n - 2).map(|k| brute_s(n, q, k).len()).collect();
        let max = *sizes.iter().max().unwrap();
        let expected = sizes.iter().position(|&s| s == max).unwrap() + 1;
        assert_eq!(
            select_k(n, q, b).unwrap(),
            expected,
            "n={n} q={q} sizes={sizes:?}"
        );
        assert_eq!(best_s(n, q, b).unwrap().1.len(), max);
    }
}

#[test]
fn s_sets_are_nonexpandable_at_desk_scale() {
    let b = Budget::DEFAULT;
    for (n, q) in [
        (3, 2u8),
        (3, 3),
        (4, 2),
        (5, 2),
        (6, 2),
        (7, 2),
        (8, 2),
        (4, 3),
        (5, 3),
    ] {
        let (k, s) = best_s(n, q, b).unwrap();
        assert!(
            is_nonexpandable_word_set(&s, b).unwrap().holds(),
            "S_{n}^{q} (k={k}) expandable"
        );
    }
}

#[test]
fn expanding_witness_really_expands() {
    let b = Budget::DEFAULT;
    let partial = WordCode::new(5, 2, [word("11000", 2)]).unwrap();
    let w = is_nonexpandable_word_set(&partial, b)
        .unwrap()
        .into_witness()
        .unwrap();
    assert!(!partial.contains(&w));
    assert!(is_bifix_free(&w).unwrap());
    assert!(is_cross_bifix_free_pair(&w, &word("11000", 2)).unwrap());
}

proptest! {
    #[test]
    fn cross_pair_is_symmetric(a in proptest::collection::vec(0u8..3, 1..10), seed in any::<u64>()) {
        let mut b = a.clone();
        let idx = (seed as usize) % b.len();
        b[idx] = (b[idx] + 1 + (seed as u8 % 2)) % 3;
        let (wa, wb) = (Word::new(a, 3).unwrap(), Word::new(b, 3).unwrap());
        prop_assert_eq!(
            is_cross_bifix_free_pair(&wa, &wb).unwrap(),
            is_cross_bifix_free_pair(&wb, &wa).unwrap()
        );
    }

    #[test]
    fn bifix_lengths_agree_with_definition(s in proptest::collection::vec(0u8..2, 1..40)) {
        let w = Word::new(s.clone(), 2).unwrap();
        let lens = bifix_lengths(&w).unwrap();
        let n = s.len();
        let expected: Vec<usize> = (1..n).filter(|&i| s[..i] == s[n - i..]).collect();
        prop_assert_eq!(&lens, &expected);
        prop_assert_eq!(is_bifix_free(&w).unwrap(), lens.is_empty());
    }
}
