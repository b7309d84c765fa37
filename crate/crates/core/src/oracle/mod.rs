//! Ground truth by exhaustive enumeration: explicit formed spaces over small
//! finite fields, subspace streams, non-degeneracy per the defining
//! conditions, and exact flag counting.

mod enumerate;
mod field;
pub mod linalg;
mod space;

pub use enumerate::{
    a3_counterexample_table, count_flags, count_typed_subspaces, extensions, quadratic_type,
    subspace_count, subspaces, FormedObject,
};
pub use field::SmallField;
pub use space::{standard_flag_of_forms, standard_space, FlagOfForms, FormKind, GramSpace};
