//! Closures of positive braids and their D polynomial.

pub mod closure;
pub mod dpoly;
pub mod laurent;

pub use closure::{
    closure_components, crossing_counts, destabilize_once, is_split_diagram, linking_matrix, split_support,
    ClosureComponents, SyllableWord,
};
pub use dpoly::{d_polynomial, d_two_strand, is_geometrically_simple, mu_power, DEvaluator};
pub use laurent::{rational, LaurentPolynomial};
