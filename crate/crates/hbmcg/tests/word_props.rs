//! Property tests for free-group word arithmetic.

use hbmcg::word::{Gen, Word};
use proptest::prelude::*;

fn letter() -> impl Strategy<Value = (Gen, i8)> {
    let gen = prop_oneof![
        (1u32..=4).prop_map(Gen::A),
        Just(Gen::D12),
        Just(Gen::S1),
        (1u32..=3).prop_map(Gen::T),
        (1u32..=3).prop_map(Gen::X),
    ];
    (gen, prop_oneof![Just(1i8), Just(-1i8)])
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(letter(), 0..12).prop_map(Word::from_letters)
}

proptest! {
    #[test]
    fn multiplication_is_associative(u in word(), v in word(), w in word()) {
        prop_assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
    }

    #[test]
    fn inverse_cancels(u in word()) {
        prop_assert!(u.mul(&u.inv()).is_identity());
        prop_assert!(u.inv().mul(&u).is_identity());
        prop_assert_eq!(u.inv().inv(), u);
    }

    #[test]
    fn inverse_reverses_products(u in word(), v in word()) {
        prop_assert_eq!(u.mul(&v).inv(), v.inv().mul(&u.inv()));
    }

    #[test]
    fn conjugation_is_multiplicative(u in word(), v in word(), w in word()) {
        // w.conj(x) = w x w^-1, so conjugating by w is a homomorphism.
        prop_assert_eq!(w.conj(&u.mul(&v)), w.conj(&u).mul(&w.conj(&v)));
    }

    #[test]
    fn powers_add(u in word(), m in -4i64..=4, n in -4i64..=4) {
        prop_assert_eq!(u.pow(m).mul(&u.pow(n)), u.pow(m + n));
    }

    #[test]
    fn exponent_sum_is_a_homomorphism(u in word(), v in word()) {
        for g in [Gen::A(1), Gen::D12, Gen::T(2)] {
            prop_assert_eq!(
                u.mul(&v).exponent_sum(g),
                u.exponent_sum(g) + v.exponent_sum(g)
            );
        }
    }

    #[test]
    fn words_stay_freely_reduced(u in word(), v in word()) {
        let product = u.mul(&v);
        let letters = product.letters();
        for pair in letters.windows(2) {
            let cancels = pair[0].0 == pair[1].0 && pair[0].1 == -pair[1].1;
            prop_assert!(!cancels, "adjacent letters cancel in {}", product);
        }
    }
}

#[test]
fn commutator_vanishes_on_equal_words() {
    let u = Word::gen(Gen::A(1)).mul(&Word::gen_inv(Gen::T(1)));
    assert!(u.commutator(&u).is_identity());
}

#[test]
fn display_and_parse_round_trip_generators() {
    for g in [Gen::A(3), Gen::D12, Gen::S1, Gen::T(2), Gen::R(-1, 4), Gen::X(7)] {
        let printed = g.to_string();
        let parsed: Gen = printed.parse().unwrap();
        assert_eq!(parsed, g);
    }
}
