mod common;

use std::collections::HashSet;

use bibifix::codes::build_cbbf;
use bibifix::graycode::{
    build_cbbf_gray, code_gray, diagonal_gray, f_index, offdiag_decode, offdiag_encode,
    reflected_gray, verify_gray,
};
use bibifix::matrices::main_diagonal;
use bibifix::words::build_s;
use bibifix::{Budget, Error, MatrixCode, SquareMatrix, Word, WordCode};
use common::{matrix, recursive_gray, word};
use proptest::prelude::*;

fn b() -> Budget {
    Budget::DEFAULT
}

#[test]
fn reflected_list_equals_recursive_definition() {
    for (n, q) in [
        (1usize, 2u8),
        (3, 2),
        (5, 2),
        (2, 3),
        (4, 3),
        (3, 4),
        (2, 5),
        (3, 7),
    ] {
        let ours: Vec<Vec<u8>> = reflected_gray(n, q, b())
            .unwrap()
            .map(|w| w.symbols().to_vec())
            .collect();
        assert_eq!(ours, recursive_gray(n, q), "n={n} q={q}");
        let back: Vec<Vec<u8>> = reflected_gray(n, q, b())
            .unwrap()
            .rev()
            .map(|w| w.symbols().to_vec())
            .collect();
        let mut fwd = ours.clone();
        fwd.reverse();
        assert_eq!(back, fwd);
    }
}

#[test]
fn reflected_list_respects_budget() {
    assert!(matches!(
        reflected_gray(30, 2, Budget::new(1000).unwrap()),
        Err(Error::BudgetExceeded { .. })
    ));
}

#[test]
fn f_index_is_a_bijection() {
    for n in 2..=8 {
        let mut seen = HashSet::new();
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    assert!(f_index(i, j, n).is_err());
                    continue;
                }
                let f = f_index(i, j, n).unwrap();
                assert!((1..=n * n - n).contains(&f));
                assert!(seen.insert(f));
                // lower triangle first, column by column
                assert_eq!(f <= n * (n - 1) / 2, i > j);
            }
        }
    }
}

#[test]
fn f_index_matches_the_four_by_four_figure() {
    let figure = [[0, 7, 8, 10], [1, 0, 9, 11], [2, 4, 0, 12], [3, 5, 6, 0]];
    for i in 1..=4 {
        for j in 1..=4 {
            if i != j {
                assert_eq!(f_index(i, j, 4).unwrap(), figure[i - 1][j - 1], "({i},{j})");
            }
        }
    }
}

#[test]
fn decode_example() {
    let m = offdiag_decode(&word("121201100020", 3), &word("0000", 3)).unwrap();
    assert_eq!(m, matrix("0100/1002/2200/1010", 3));
}

proptest! {
    #[test]
    fn encode_decode_round_trip(n in 2usize..=8, q in 2u8..=10, seed in proptest::collection::vec(any::<u8>(), 64)) {
        let cells: Vec<u8> = seed[..n * n].iter().map(|c| c % q).collect();
        let t = SquareMatrix::from_cells(n, q, &cells).unwrap();
        let w = offdiag_encode(&t);
        prop_assert_eq!(w.len(), n * n - n);
        prop_assert_eq!(offdiag_decode(&w, &main_diagonal(&t)).unwrap(), t);
    }
}

#[test]
fn diagonal_gray_of_ternary_s3() {
    let s = build_s(3, 3, 1, b()).unwrap();
    let order: Vec<String> = diagonal_gray(&s, b())
        .unwrap()
        .iter()
        .map(Word::to_string)
        .collect();
    assert_eq!(order, ["100", "102", "122", "120"]);
}

#[test]
fn diagonal_gray_is_a_hamiltonian_path() {
    for (n, q) in [(5usize, 3u8), (6, 3), (4, 4), (5, 4)] {
        let s = build_s(n, q, 1, b()).unwrap();
        let order = diagonal_gray(&s, b()).unwrap();
        let set: HashSet<&Word> = order.iter().collect();
        assert_eq!(set.len(), s.len());
        assert!(order.windows(2).all(|p| p[0].hamming(&p[1]) == Some(1)));
    }
}

#[test]
fn disconnected_diagonal_set_has_no_gray_order() {
    let code = WordCode::new(4, 2, [word("1000", 2), word("1110", 2)]).unwrap();
    assert!(matches!(
        diagonal_gray(&code, b()),
        Err(Error::NoGrayOrder { .. })
    ));
}

#[test]
fn code_gray_is_a_permutation_with_unit_steps() {
    for (n, q) in [(3usize, 2u8), (3, 3), (4, 2)] {
        let code = build_cbbf(n, q, b()).unwrap();
        let listing: Vec<SquareMatrix> = build_cbbf_gray(n, q, b()).unwrap().collect();
        assert_eq!(listing.len() as u128, code.len());
        let check = verify_gray(listing.iter().copied());
        assert!(check.ok(), "n={n} q={q}: {check:?}");
        let mut sorted = listing.clone();
        sorted.sort();
        assert_eq!(sorted.as_slice(), code.members(b()).unwrap().members());
    }
}

#[test]
fn seams_change_only_the_diagonal() {
    let gray = build_cbbf_gray(3, 3, b()).unwrap();
    let order = gray.diagonal_order().to_vec();
    let listing: Vec<SquareMatrix> = gray.collect();
    let block = 3usize.pow(6);
    for k in 1..order.len() {
        let (before, after) = (&listing[k * block - 1], &listing[k * block]);
        assert_eq!(offdiag_encode(before), offdiag_encode(after));
        assert_eq!(main_diagonal(before), order[k - 1]);
        assert_eq!(main_diagonal(after), order[k]);
    }
}

#[test]
fn displayed_listing_landmarks() {
    let listing: Vec<SquareMatrix> = build_cbbf_gray(3, 3, b()).unwrap().collect();
    let block = 729;
    let expect = [
        (0, "100/000/000"),
        (1, "100/001/000"),
        (block - 2, "122/201/220"),
        (block - 1, "122/202/220"),
        (block, "122/202/222"),
        (block + 1, "122/201/222"),
        (2 * block - 2, "100/001/002"),
        (2 * block - 1, "100/000/002"),
        (2 * block, "100/020/002"),
        (2 * block + 1, "100/021/002"),
        (3 * block - 2, "122/221/222"),
        (3 * block - 1, "122/222/222"),
        (3 * block, "122/222/220"),
        (3 * block + 1, "122/221/220"),
        (4 * block - 2, "100/021/000"),
        (4 * block - 1, "100/020/000"),
    ];
    for (pos, m) in expect {
        assert_eq!(listing[pos], matrix(m, 3), "position {pos}");
    }
}

#[test]
fn verify_gray_flags_repeats_and_jumps() {
    let a = matrix("10/00", 2);
    let c = matrix("11/00", 2);
    let far = matrix("11/11", 2);
    assert!(verify_gray([a, c]).ok());
    assert_eq!(verify_gray([a, c, a]).offending, Some(2));
    assert_eq!(verify_gray([a, far]).offending, Some(1));
}

#[test]
fn custom_code_gray_uses_its_diagonal() {
    let diag = WordCode::new(4, 2, [word("1100", 2)]).unwrap();
    let code = MatrixCode::from_diagonal(diag, None).unwrap();
    let listing: Vec<SquareMatrix> = code_gray(&code, b()).unwrap().collect();
    assert_eq!(listing.len(), 4096);
    assert!(listing
        .iter()
        .all(|m| main_diagonal(m).to_string() == "1100"));
    assert!(verify_gray(listing).ok());
}
