//! Symmetric-group combinatorics: lengths, descent sets, parabolic length
//! functions, the chessboard subgroup and its characters, and the
//! descent-sum functional-equation engine.

mod perm;
mod stream;
mod theorem1;

pub use perm::{conjugate_subset_by_w0, weighted_length, Permutation, Side, StatWeights};
pub use stream::{
    chessboard_order, chessboard_stream, parabolic_subgroup, symmetric_group, ChessboardIter,
    SymmetricGroupIter,
};
pub use theorem1::{
    descent_accumulate, m_set, merge_buckets, theorem1_ig, verify_lemma2, verify_theorem1,
    CharacterKind, MSetReport, SubgroupChoice,
};
