//! Uncertainty-set algebra and decision support over finite universes.
//!
//! * [`intervals`]: grey numbers as closed intervals, with sums, scalar
//!   products and weighted means.
//! * [`fuzzy_sets`]: fuzzy sets, α-cuts and the extension principle.
//! * [`graded_sets`]: intuitionistic fuzzy and neutrosophic grades.
//! * [`soft_sets`]: parametrized families of subsets and their algebra.
//! * [`decision`]: grade-interval assessment and soft-set choice values.
//! * [`topology`]: axiom checks and derived notions for finite fuzzy and
//!   soft topologies.

pub mod decision;
pub mod error;
pub mod fuzzy_sets;
pub mod graded_sets;
pub mod intervals;
pub mod soft_sets;
pub mod topology;
pub mod universe;

pub use decision::{
    assess_mean, hybrid_choice_values, maji_choice_values, rank, weighted_choice_values,
    Assessment, Cell, ChoiceValues, DecisionTable, GradeDistribution, GradeScale,
};
pub use error::{Error, Result};
pub use fuzzy_sets::{extend_image, extend_preimage, CrispSubset, FuzzySet};
pub use graded_sets::{InformationKind, IntuitionisticFuzzySet, NeutrosophicSet};
pub use intervals::{Interval, WeightedIntervalBag};
pub use soft_sets::{SoftMatrix, SoftSet};
pub use topology::{
    EventuallyConstantSequence, FuzzyTopology, PointParameterMaps, SeparationClass, SoftTopology,
    Verdict,
};
pub use universe::{ElementMap, Universe};
