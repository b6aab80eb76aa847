//! Literally simple braids: cycles, conjugacy types and Markov reduction.

pub mod conjugacy_type;
pub mod cycles;
pub mod markov;

pub use conjugacy_type::{canonical_conjugacy_word, conjugacy_type, ConjugacyType};
pub use cycles::{
    cycle_decomposition, cycle_initial_set, cycles_to_braid, is_literally_simple, satisfies_block_criterion, Cycle,
    CycleDecomposition,
};
pub use markov::{apply_move, markov_reduce, replay_moves, MarkovMove, MoveKind};
