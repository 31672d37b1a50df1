//! Finite-group substrate: subgroups and double cosets, G-sets and spans,
//! character-level Mackey decomposition, Mackey/Green functor data with an
//! axiom validator, Burnside multiplication with a table-of-marks oracle,
//! the Dress construction, and a small-scale box product.

mod boxprod;
mod charfn;
mod group;
mod gset;
mod mackey;
mod qmat;
mod span;

pub use boxprod::{box_product, burnside_mackey};
pub use charfn::{
    induced_character, mackey_identity_check, perm_character, restricted_character,
};
pub use group::{double_cosets, FiniteGroup, GroupError, SubgroupLattice, MAX_GROUP_ORDER};
pub use gset::{burnside_mul, decompose_via_marks, table_of_marks, GSet, OrbitTypeMultiset};
pub use mackey::{
    dress_construct, fixed_point_mackey, mackey_axioms_validate, AlgebraData, MackeyData,
    ValidationReport,
};
pub use qmat::QMat;
pub use span::{iso_spans, span_compose, Span};
