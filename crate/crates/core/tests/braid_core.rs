use std::collections::HashMap;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use simple_braids::oracle::{all_words, all_words_up_to, artin_classes, brute_initial_set, random_word};
use simple_braids::{
    enumerate_divisors, garside_element, initial_set, is_square_free, left_divides, multiply, permutation_to_divisor,
    right_divides, word_to_permutation, BraidError, BraidWord, NormalForm, Permutation,
};

fn word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        prop::collection::vec(1..n, 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

fn pair(max_strands: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_strands).prop_flat_map(move |n| {
        let side = || prop::collection::vec(1..n, 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap());
        (side(), side())
    })
}

#[test]
fn parse_forms() {
    let w = BraidWord::parse("x1 x2 x1", None).unwrap();
    assert_eq!((w.strands(), w.letters()), (3, &[1, 2, 1][..]));
    let w = BraidWord::parse("3.2.1.3.2.1", None).unwrap();
    assert_eq!((w.strands(), w.letters()), (4, &[3, 2, 1, 3, 2, 1][..]));
    let w = BraidWord::parse("x1^2 x2", None).unwrap();
    assert_eq!((w.strands(), w.letters()), (3, &[1, 1, 2][..]));
    assert_eq!(BraidWord::parse("x1", Some(5)).unwrap().strands(), 5);
    assert_eq!(w.to_string(), "x1 x1 x2");
}

#[test]
fn parse_errors() {
    assert!(matches!(BraidWord::parse("x0", None), Err(BraidError::Syntax { .. })));
    assert!(matches!(BraidWord::parse("x1^0", None), Err(BraidError::Syntax { .. })));
    assert!(matches!(BraidWord::parse("x1 y", None), Err(BraidError::Syntax { position: 3, .. })));
    assert!(matches!(BraidWord::parse("x3", Some(3)), Err(BraidError::IndexOutOfRange { .. })));
}

#[test]
fn nf_agrees_with_rewrite_closure() {
    for n in 2..=4 {
        for len in 0..=5 {
            let words = all_words(n, len);
            let classes = artin_classes(&words);
            let mut by_nf: HashMap<NormalForm, usize> = HashMap::new();
            for (w, c) in words.iter().zip(&classes) {
                let prev = *by_nf.entry(NormalForm::of_word(w)).or_insert(*c);
                assert_eq!(prev, *c, "{w}");
            }
            let distinct: std::collections::HashSet<_> = classes.iter().collect();
            assert_eq!(distinct.len(), by_nf.len(), "n={n} len={len}");
        }
    }
}

#[test]
fn divisors_are_a_section_of_pi() {
    for n in 1..=5 {
        let divs = enumerate_divisors(n).unwrap();
        let fact: usize = (1..=n).product();
        assert_eq!(divs.len(), fact);
        for d in divs {
            let p = word_to_permutation(&d.to_word());
            assert_eq!(NormalForm::of_word(&permutation_to_divisor(&p)), d);
        }
    }
}

#[test]
fn square_free_iff_divides_delta() {
    for n in 2..=4 {
        let delta = garside_element(n);
        for w in all_words_up_to(n, 6) {
            let sf = is_square_free(&w);
            assert_eq!(sf, left_divides(&w, &delta).unwrap(), "{w}");
            assert_eq!(sf, right_divides(&w, &delta).unwrap(), "{w}");
        }
    }
}

#[test]
fn initial_sets_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 0..1000 {
        let n = 2 + k % 5;
        let w = random_word(&mut rng, n, k % 13);
        assert_eq!(initial_set(&w), brute_initial_set(&w), "{w}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn nf_is_a_homomorphism((u, v) in pair(6, 10)) {
        let uv = u.concat(&v).unwrap();
        let nf = NormalForm::of_word(&uv);
        prop_assert_eq!(&multiply(&u, &v).unwrap(), &nf);
        prop_assert_eq!(nf.degree(), u.len() + v.len());
        prop_assert_eq!(NormalForm::of_word(&nf.to_word()), nf.clone());
        prop_assert_eq!(nf.to_word().len(), uv.len());
        let pu = word_to_permutation(&u);
        prop_assert_eq!(word_to_permutation(&uv), pu.then(&word_to_permutation(&v)));
        prop_assert_eq!(nf.permutation(), word_to_permutation(&uv));
    }

    #[test]
    fn flip_conjugates_by_delta(w in word(6, 10)) {
        prop_assert_eq!(w.flip().flip(), w.clone());
        let delta = garside_element(w.strands());
        let left = NormalForm::of_word(&delta.concat(&w).unwrap());
        let right = NormalForm::of_word(&w.flip().concat(&delta).unwrap());
        prop_assert_eq!(left, right);
    }

    #[test]
    fn reverse_is_an_anti_automorphism((u, v) in pair(5, 8)) {
        let uv = u.concat(&v).unwrap();
        let rev = v.reverse().concat(&u.reverse()).unwrap();
        prop_assert_eq!(NormalForm::of_word(&uv.reverse()), NormalForm::of_word(&rev));
        // equal braids have equal reverses
        let same = NormalForm::of_word(&uv).to_word();
        prop_assert_eq!(NormalForm::of_word(&same.reverse()), NormalForm::of_word(&uv.reverse()));
    }

    #[test]
    fn quotients_invert_products((u, v) in pair(5, 8)) {
        let uv = u.concat(&v).unwrap();
        prop_assert!(left_divides(&u, &uv).unwrap());
        prop_assert!(right_divides(&v, &uv).unwrap());
        let q = simple_braids::left_quotient(&uv, &u).unwrap().unwrap();
        prop_assert_eq!(q, NormalForm::of_word(&v));
        let q = simple_braids::right_quotient(&uv, &v).unwrap().unwrap();
        prop_assert_eq!(q, NormalForm::of_word(&u));
    }

    #[test]
    fn permutation_inverse(images in Just((1..=6usize).collect::<Vec<_>>()).prop_shuffle()) {
        let p = Permutation::from_images(&images).unwrap();
        prop_assert!(p.then(&p.inverse()).is_identity());
        prop_assert_eq!(word_to_permutation(&permutation_to_divisor(&p)), p.clone());
        prop_assert_eq!(permutation_to_divisor(&p).len(), p.length());
    }
}
