//! Positive braid monoid arithmetic.

pub mod divisor;
pub mod factor;
pub mod lcm;
pub mod normal_form;
pub mod perm;
pub mod word;

pub use divisor::{
    divisor_canonical_form, enumerate_divisors, enumerate_divisors_bounded, garside_element, permutation_to_divisor,
    shifted_garside_element, word_to_permutation, Block,
};
pub use factor::VerySimpleFactor;
pub use lcm::{brute_force_left_lcm, left_lcm_formula, LcmSearch};
pub use normal_form::{
    initial_set, is_square_free, left_divides, left_quotient, multiply, normal_form, right_divides, right_quotient,
    NormalForm,
};
pub use perm::Permutation;
pub use word::BraidWord;
