//! Finite groups given by multiplication tables, together with the
//! conjugacy, Frobenius-twist and abelian-lattice data used downstream.

mod abelian;
mod classes;
mod error;
mod frobenius;
mod group;
mod lattice;
mod qz;
mod spec;
mod weight;

pub use abelian::{abelianization, invariant_factors, twisted_fixed_count, AbelianGroup, Abelianization};
pub use classes::{conjugacy_classes, ConjugacyTable};
pub use error::GroupError;
pub use frobenius::{class_points, frobenius_structure, FrobeniusStructure};
pub use group::FiniteGroup;
pub use lattice::{abelian_group_table, all_subgroups, moebius_abelian, subgroup_interval, IntervalEntry};
pub use qz::Qz;
pub use spec::{builtin_group, load_group, GroupSpec};
pub use weight::WeightFunction;
