//! Stabilizer dimensions of the explicit configurations across dimensions
//! eight to fourteen, with the named simple parts as lower bounds.
//!
//! The exact dimensions are pinned from an independent fraction-exact kernel
//! computation; the floors are the dimensions of the groups each stabilizer
//! is known to contain (Spin(7) -> 21, SL(6) -> 35, Sp(6) -> 21,
//! SL(3)xSL(3) -> 16, SL(4) -> 15, SL(2)xSp(4) -> 13, G2xG2 -> 28, G2 -> 14).

use spinor_core::lie::{act, is_closed_under_bracket, stabilizer_algebra};
use spinor_core::spinor::{basis_pure, IndexSet, Spinor};

fn word_sum(d: usize, words: &[&[usize]]) -> Spinor {
    let mut psi = Spinor::zero(d);
    for w in words {
        let p = basis_pure(IndexSet::from_indices(w), d).unwrap();
        psi = psi.add(&p).unwrap();
    }
    psi
}

struct Case {
    name: &'static str,
    d: usize,
    words: &'static [&'static [usize]],
    exact_dim: usize,
    floor: usize,
}

const CASES: &[Case] = &[
    Case {
        name: "8D k=2 (Spin(7))",
        d: 4,
        words: &[&[], &[1, 2, 3, 4]],
        exact_dim: 21,
        floor: 21,
    },
    Case {
        name: "10D k=2 e=1 (Spin(7))",
        d: 5,
        words: &[&[], &[1, 2, 3, 4]],
        exact_dim: 29,
        floor: 21,
    },
    Case {
        name: "12D k=2 e=2 (Spin(7)xSL(2))",
        d: 6,
        words: &[&[], &[1, 2, 3, 4]],
        exact_dim: 41,
        floor: 24,
    },
    Case {
        name: "12D k=2 e=0 (SL(6))",
        d: 6,
        words: &[&[], &[1, 2, 3, 4, 5, 6]],
        exact_dim: 35,
        floor: 35,
    },
    Case {
        name: "12D k=3 (Sp(6))",
        d: 6,
        words: &[&[], &[1, 2, 3, 4], &[3, 4, 5, 6]],
        exact_dim: 35,
        floor: 21,
    },
    Case {
        name: "12D k=4 square (orbit of k=2 e=0)",
        d: 6,
        words: &[&[], &[1, 2, 3, 4], &[3, 4, 5, 6], &[1, 2, 5, 6]],
        exact_dim: 35,
        floor: 35,
    },
    Case {
        name: "14D k=2 e=3 case b (Spin(7)xSL(3))",
        d: 7,
        words: &[&[], &[1, 2, 3, 4]],
        exact_dim: 56,
        floor: 29,
    },
    Case {
        name: "14D k=2 e=1 case d (SL(6))",
        d: 7,
        words: &[&[], &[1, 2, 3, 4, 5, 6]],
        exact_dim: 47,
        floor: 35,
    },
    Case {
        name: "14D k=3 (3,3,3) case c (Sp(6))",
        d: 7,
        words: &[&[], &[1, 2, 3, 4], &[3, 4, 5, 6]],
        exact_dim: 48,
        floor: 21,
    },
    Case {
        name: "14D k=3 (3,3,1) case f (SL(3)xSL(3))",
        d: 7,
        words: &[&[], &[1, 2, 3, 4], &[1, 2, 3, 5, 6, 7]],
        exact_dim: 37,
        floor: 16,
    },
    Case {
        name: "14D k=4 all-3 case e (SL(4))",
        d: 7,
        words: &[&[], &[1, 2, 3, 4], &[1, 3, 6, 7], &[2, 3, 5, 6]],
        exact_dim: 41,
        floor: 15,
    },
    Case {
        name: "14D k=4 one-1 case g (SL(2)xSp(4))",
        d: 7,
        words: &[&[], &[1, 2, 3, 7], &[3, 4, 5, 7], &[1, 2, 3, 4, 5, 6]],
        exact_dim: 32,
        floor: 13,
    },
    Case {
        name: "14D k=4 two-1 case i (G2xG2)",
        d: 7,
        words: &[&[], &[1, 2, 3, 4], &[4, 5, 6, 7], &[1, 2, 3, 5, 6, 7]],
        exact_dim: 28,
        floor: 28,
    },
    Case {
        name: "14D k=5 case h (G2)",
        d: 7,
        words: &[&[], &[1, 2, 4, 7], &[1, 3, 4, 6], &[2, 3, 4, 5], &[1, 2, 3, 5, 6, 7]],
        exact_dim: 28,
        floor: 14,
    },
];

#[test]
fn stabilizer_dimensions_and_floors() {
    for case in CASES {
        let psi = word_sum(case.d, case.words);
        let (dim, basis) = stabilizer_algebra(&psi).unwrap();
        assert_eq!(dim, case.exact_dim, "{}", case.name);
        assert!(
            dim >= case.floor,
            "{}: dim {} below floor {}",
            case.name,
            dim,
            case.floor
        );
        for x in &basis {
            assert!(act(x, &psi).unwrap().is_zero(), "{}", case.name);
        }
    }
}

#[test]
fn stabilizers_close_under_bracket() {
    // closure of the full stabilizer, checked on the structurally richest cases
    for case in CASES.iter().filter(|c| c.d <= 6) {
        let psi = word_sum(case.d, case.words);
        let (_, basis) = stabilizer_algebra(&psi).unwrap();
        assert!(is_closed_under_bracket(&basis), "{}", case.name);
    }
}

#[test]
fn generic_14d_stabilizer_is_reductive_size() {
    // the two-1 case: closed, and its derived algebra already spans it
    let psi = word_sum(7, &[&[], &[1, 2, 3, 4], &[4, 5, 6, 7], &[1, 2, 3, 5, 6, 7]]);
    let (dim, basis) = stabilizer_algebra(&psi).unwrap();
    assert_eq!(dim, 28);
    assert!(is_closed_under_bracket(&basis));
    assert_eq!(
        spinor_core::lie::derived_subalgebra_dim(&basis).unwrap(),
        28
    );
}

#[test]
fn twelve_d_square_reduces_to_impurity_two() {
    // the square's stabilizer dimension equals the k=2 e=0 one
    let square = word_sum(6, &[&[], &[1, 2, 3, 4], &[3, 4, 5, 6], &[1, 2, 5, 6]]);
    let pair = word_sum(6, &[&[], &[1, 2, 3, 4, 5, 6]]);
    let (dim_square, _) = stabilizer_algebra(&square).unwrap();
    let (dim_pair, _) = stabilizer_algebra(&pair).unwrap();
    assert_eq!(dim_square, dim_pair);
    assert_eq!(dim_square, 35);
}
