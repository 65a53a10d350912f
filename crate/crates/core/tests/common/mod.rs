#![allow(dead_code)]

use cjp_core::oracle::{free_normalize, free_normalize_with, FreeLetter, FreeWord, Schedule};
use cjp_core::weyl::mono_mul;
use cjp_core::{BraidWord, KeyedMonomial, LaurentPolynomial, Letter, Sign};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn p(s: &str) -> LaurentPolynomial {
    s.parse().unwrap()
}

pub fn b(s: &str) -> BraidWord {
    s.parse().unwrap()
}

pub fn poly() -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((-6i64..=6, -5i64..=5), 0..7).prop_map(LaurentPolynomial::from_terms)
}

pub fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Positive), Just(Sign::Negative)]
}

pub fn letter() -> impl Strategy<Value = Letter> {
    prop_oneof![Just(Letter::A), Just(Letter::B), Just(Letter::C)]
}

/// Signs for 1..=4 crossings together with a word of at most `max_len`
/// letters over them.
pub fn signed_word(max_len: usize) -> impl Strategy<Value = (Vec<Sign>, FreeWord)> {
    prop::collection::vec(sign(), 1..=4).prop_flat_map(move |signs| {
        let k = signs.len();
        let letters = prop::collection::vec((letter(), 0..k), 0..=max_len);
        (Just(signs), letters, -3i64..=3).prop_map(|(signs, letters, shift)| {
            let letters = letters
                .into_iter()
                .map(|(l, c)| FreeLetter::new(l, c))
                .collect();
            (
                signs,
                FreeWord::new(letters, LaurentPolynomial::monomial(1, shift)),
            )
        })
    })
}

/// Signs plus three words over the same crossings.
pub fn three_words() -> impl Strategy<Value = (Vec<Sign>, [FreeWord; 3])> {
    prop::collection::vec(sign(), 1..=4).prop_flat_map(|signs| {
        let k = signs.len();
        let word = move || {
            prop::collection::vec((letter(), 0..k), 0..=5).prop_map(|ls| {
                FreeWord::new(
                    ls.into_iter().map(|(l, c)| FreeLetter::new(l, c)).collect(),
                    LaurentPolynomial::one(),
                )
            })
        };
        (Just(signs), [word(), word(), word()])
    })
}

pub fn braid_word() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![-4i64..=-1, 1i64..=4], 0..10)
}

pub fn ring_axioms(
    a: &LaurentPolynomial,
    b: &LaurentPolynomial,
    c: &LaurentPolynomial,
) -> Result<(), TestCaseError> {
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(&(a + b) + c, a + &(b + c));
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    prop_assert_eq!(a + &LaurentPolynomial::zero(), a.clone());
    prop_assert_eq!(a * &LaurentPolynomial::one(), a.clone());
    prop_assert!((a + &(-a)).is_zero());
    prop_assert_eq!(a - b, a + &(-b));
    for (_, coeff) in (a * b).terms() {
        prop_assert!(*coeff != 0.into());
    }
    Ok(())
}

/// Folds the letters of `w` as singleton monomials with the engine product.
pub fn engine_fold(w: &FreeWord, signs: &[Sign]) -> KeyedMonomial {
    let k = signs.len();
    let start = KeyedMonomial::new(cjp_core::ExponentKey::empty(k), w.coeff.clone());
    w.letters.iter().fold(start, |acc, l| {
        mono_mul(&acc, &KeyedMonomial::letter(k, l.crossing, l.kind), signs).unwrap()
    })
}

pub fn normalize_agrees(signs: &[Sign], w: &FreeWord) -> Result<(), TestCaseError> {
    prop_assert_eq!(free_normalize(w, signs), engine_fold(w, signs));
    Ok(())
}

pub fn normalize_confluent(signs: &[Sign], w: &FreeWord) -> Result<(), TestCaseError> {
    prop_assert_eq!(
        free_normalize_with(w, signs, Schedule::LeftmostFirst),
        free_normalize_with(w, signs, Schedule::RightmostFirst)
    );
    Ok(())
}

pub fn mono_mul_associative(signs: &[Sign], words: &[FreeWord; 3]) -> Result<(), TestCaseError> {
    let [x, y, z] = words.each_ref().map(|w| free_normalize(w, signs));
    let left = mono_mul(&mono_mul(&x, &y, signs).unwrap(), &z, signs).unwrap();
    let right = mono_mul(&x, &mono_mul(&y, &z, signs).unwrap(), signs).unwrap();
    prop_assert_eq!(&left, &right);
    let mut joined = words[0].letters.clone();
    joined.extend_from_slice(&words[1].letters);
    joined.extend_from_slice(&words[2].letters);
    let concat = FreeWord::new(joined, LaurentPolynomial::one());
    prop_assert_eq!(&left, &free_normalize(&concat, signs));
    Ok(())
}
