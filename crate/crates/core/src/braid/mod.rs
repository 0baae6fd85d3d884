//! Vanishing-cycle lattices, the braid group action on distinguished bases and
//! on reflection factorizations of the Coxeter element, and the verification
//! harnesses built on them.

mod dynkin;
mod hurwitz;
mod lattice;
mod verify;

use thiserror::Error;

use crate::weyl::WeylError;

pub use dynkin::{canonical_dynkin_search, dynkin_diagram, is_dynkin_of};
pub use hurwitz::{
    enumerate_coxeter_factorizations, hurwitz_move, hurwitz_move_inverse, hurwitz_orbit, is_in_s,
    Factorization, SMembership,
};
pub use lattice::{
    braid_move_tuple, braid_move_tuple_inverse, picard_lefschetz, transvection_matrix,
    CycleLattice, DistinguishedTuple,
};
pub use verify::{
    verify_deligne_transitivity, verify_monodromy_trace, verify_trace_criterion, TraceMode,
    VerificationReport,
};

/// Largest rank for which Coxeter factorizations are enumerated exhaustively.
pub const EXHAUSTIVE_MAX_RANK: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("cycle has self-intersection {0}, expected -2")]
    NotMinusTwo(i64),
    #[error("intersection form must be symmetric with -2 on the diagonal")]
    BadForm,
    #[error("cycles do not form a basis of the lattice")]
    NotABasis,
    #[error("move index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("orbit exceeds limit {limit}")]
    LimitExceeded { limit: usize },
    #[error("rank {rank} too large for exhaustive mode (at most {max})")]
    RankTooLarge { rank: usize, max: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}
