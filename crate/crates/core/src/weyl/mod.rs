//! Simply-laced root systems, their Weyl groups and Coxeter elements.
//!
//! Vectors are written in simple-root coordinates; the Cartan matrix is the
//! Gram matrix of the invariant form.

mod conjugacy;
mod definiteness;
mod exponents;
mod group;
mod roots;

use thiserror::Error;

pub use conjugacy::{is_coxeter_element, CoxeterOracle};
pub use definiteness::{definiteness, Definiteness};
pub use exponents::{exponents_and_coxeter_number, weyl_group_order, ExponentData};
pub(crate) use group::reflection_unchecked;
pub use group::{
    coxeter_element, coxeter_length, element_order, enumerate_group, generated_subgroup,
    reflection, reflection_length, simple_reflection, trace, GroupElement,
};
pub use roots::{height, is_positive, positive_representative, Letter, RootSystem, RootSystemType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("invalid root system type {0}")]
    InvalidType(String),
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("order exceeds cap {cap}")]
    CapExceeded { cap: u64 },
    #[error("group has more than {limit} elements")]
    LimitExceeded { limit: usize },
    #[error("conjugacy undecided within budget {budget}")]
    Undecided { budget: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
}

pub fn build_root_system(t: RootSystemType) -> RootSystem {
    RootSystem::build(t)
}
