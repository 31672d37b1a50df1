//! The class-function ring of the symmetric groupoid under the Cauchy and
//! Hadamard products, bridged to truncated symmetric functions in the
//! power-sum basis via the characteristic map.

mod classfn;
mod partition;
mod symfunc;

pub use classfn::{
    cauchy_product, cauchy_product_subset_oracle, hadamard_product, ClassFunction, SpeciesError,
};
pub use partition::{partitions_of, z_lambda, Partition};
pub use symfunc::{
    char_map, plethysm, render_symfunc, species_counts, sym_mul, SymFunc, DEFAULT_TRUNCATION,
};
