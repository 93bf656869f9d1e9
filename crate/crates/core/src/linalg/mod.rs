//! Exact integer linear algebra: Smith normal form over Z, Howell forms over
//! Z/N, and subgroup/homomorphism computations in finite abelian groups.

mod congruence;
mod int_matrix;
mod subgroup;
pub(crate) mod zn;

pub use congruence::{solve_congruence_system, CongruenceSolution};
pub use int_matrix::{smith_normal_form, IntMatrix, SmithForm};
pub use subgroup::{
    present_subgroup, row_orders, subgroup_canonical_form, subgroup_elements, subgroup_membership,
    subgroup_order, subgroup_reduce, GroupMap, MixedRadix, Moduli, Presentation, PreimageSolver,
};

/// Dense matrix of small integers used for actions and homomorphisms
/// (row-vector convention).
pub type Mat = Vec<Vec<i64>>;
