//! Finite fuzzy and soft topological spaces.
//!
//! Every check here scans a finite family of opens exhaustively, so
//! verdicts are exact for the family as given. Failing checks report the
//! first witness found in family order.

mod fuzzy;
mod soft;

pub use fuzzy::{
    is_fuzzy_continuous, EventuallyConstantSequence, FuzzyAxiomViolation, FuzzyTopology,
    SeparationClass, EXHAUSTIVE_SUBCOVER_LIMIT,
};
pub use soft::{
    is_pu_continuous, soft_image, soft_preimage, PointParameterMaps, SoftAxiomViolation,
    SoftTopology,
};

/// Membership degrees closer than this are treated as equal when looking
/// a fuzzy set up in a family.
pub const MEMBERSHIP_TOLERANCE: f64 = 1e-9;

/// Outcome of a verification: either the property holds or a witness of
/// its failure is returned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}
