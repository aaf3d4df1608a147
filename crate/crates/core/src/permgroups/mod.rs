//! Permutation groups generated by classes of involutions.

mod parse;
mod permutation;
mod roots;
mod system;

pub use parse::{parse_group_definition, GroupDefinition};
pub use permutation::Permutation;
pub use roots::{build_weyl_a, RootSystemA, WeylA};
pub use system::{
    close_under_conjugation, Regularity, ThreeTranspositionReport, TranspositionSystem,
    DEFAULT_GROUP_BUDGET,
};
