//! Intuitionistic fuzzy sets and single-valued neutrosophic sets.

use crate::error::{Error, Result};
use crate::fuzzy_sets::{CrispSubset, FuzzySet};
use crate::universe::Universe;

/// Slack allowed when a component sum is compared against 1.
pub const SUM_TOLERANCE: f64 = 1e-9;

fn in_unit(v: f64) -> bool {
    (0.0..=1.0).contains(&v)
}

/// Membership `m` and non-membership `n` per element, with `m + n <= 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct IntuitionisticFuzzySet {
    universe: Universe,
    grades: Vec<(f64, f64)>,
}

impl IntuitionisticFuzzySet {
    pub fn new(universe: Universe, grades: Vec<(f64, f64)>) -> Result<Self> {
        if grades.len() != universe.len() {
            return Err(Error::MembershipCount {
                expected: universe.len(),
                actual: grades.len(),
            });
        }
        for (i, &(m, n)) in grades.iter().enumerate() {
            let bad = |detail: String| Error::InvalidGrades {
                element: universe.label(i).to_string(),
                detail,
            };
            if !in_unit(m) || !in_unit(n) {
                return Err(bad(format!("({m}, {n}) has a component outside [0, 1]")));
            }
            if m + n > 1.0 + SUM_TOLERANCE {
                return Err(bad(format!("m + n = {} exceeds 1", m + n)));
            }
        }
        Ok(IntuitionisticFuzzySet { universe, grades })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn grades(&self) -> &[(f64, f64)] {
        &self.grades
    }

    pub fn grade(&self, label: &str) -> Result<(f64, f64)> {
        Ok(self.grades[self.universe.position(label)?])
    }

    /// `h(x) = 1 - m(x) - n(x)`, the undecided share.
    pub fn hesitation(&self, label: &str) -> Result<f64> {
        let (m, n) = self.grade(label)?;
        Ok(hesitation_of(m, n))
    }
}

fn hesitation_of(m: f64, n: f64) -> f64 {
    // rounding can push the residue a hair below zero
    (1.0 - m - n).max(0.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InformationKind {
    /// component sum below 1
    Incomplete,
    /// component sum equal to 1
    Complete,
    /// component sum above 1: contradictory evidence is tolerated
    Paraconsistent,
}

/// Truth, indeterminacy and falsity degrees per element, each in `[0, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct NeutrosophicSet {
    universe: Universe,
    grades: Vec<(f64, f64, f64)>,
}

impl NeutrosophicSet {
    pub fn new(universe: Universe, grades: Vec<(f64, f64, f64)>) -> Result<Self> {
        if grades.len() != universe.len() {
            return Err(Error::MembershipCount {
                expected: universe.len(),
                actual: grades.len(),
            });
        }
        for (i, &(t, ind, f)) in grades.iter().enumerate() {
            if !in_unit(t) || !in_unit(ind) || !in_unit(f) {
                return Err(Error::InvalidGrades {
                    element: universe.label(i).to_string(),
                    detail: format!("({t}, {ind}, {f}) has a component outside [0, 1]"),
                });
            }
        }
        Ok(NeutrosophicSet { universe, grades })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn grades(&self) -> &[(f64, f64, f64)] {
        &self.grades
    }

    pub fn grade(&self, label: &str) -> Result<(f64, f64, f64)> {
        Ok(self.grades[self.universe.position(label)?])
    }

    fn sum_at(&self, index: usize) -> f64 {
        let (t, i, f) = self.grades[index];
        t + i + f
    }

    pub fn classify_information(&self, label: &str) -> Result<InformationKind> {
        let i = self.universe.position(label)?;
        Ok(classify_sum(self.sum_at(i)))
    }

    /// True when every element has component sum below 1. Sums within
    /// [`SUM_TOLERANCE`] of 1 count as complete, hence not picture fuzzy.
    pub fn is_picture(&self) -> bool {
        (0..self.grades.len()).all(|i| classify_sum(self.sum_at(i)) == InformationKind::Incomplete)
    }

    /// `1 - T - I - F` for an element whose components sum below 1.
    pub fn refusal_degree(&self, label: &str) -> Result<f64> {
        let i = self.universe.position(label)?;
        let sum = self.sum_at(i);
        if classify_sum(sum) != InformationKind::Incomplete {
            return Err(Error::NotPictureFuzzy {
                element: label.to_string(),
                sum,
            });
        }
        Ok(1.0 - sum)
    }
}

fn classify_sum(sum: f64) -> InformationKind {
    if (sum - 1.0).abs() <= SUM_TOLERANCE {
        InformationKind::Complete
    } else if sum < 1.0 {
        InformationKind::Incomplete
    } else {
        InformationKind::Paraconsistent
    }
}

/// A fuzzy set as an IFS with non-membership `1 - m`.
pub fn embed_fuzzy_to_ifs(f: &FuzzySet) -> IntuitionisticFuzzySet {
    IntuitionisticFuzzySet {
        universe: f.universe().clone(),
        grades: f.memberships().iter().map(|&m| (m, 1.0 - m)).collect(),
    }
}

/// An IFS as a neutrosophic set whose indeterminacy is the hesitation.
pub fn embed_ifs_to_ns(a: &IntuitionisticFuzzySet) -> NeutrosophicSet {
    NeutrosophicSet {
        universe: a.universe.clone(),
        grades: a
            .grades
            .iter()
            .map(|&(m, n)| (m, hesitation_of(m, n), n))
            .collect(),
    }
}

pub fn embed_crisp_to_ns(c: &CrispSubset) -> NeutrosophicSet {
    NeutrosophicSet {
        universe: c.universe().clone(),
        grades: c
            .mask()
            .iter()
            .map(|&member| {
                if member {
                    (1.0, 0.0, 0.0)
                } else {
                    (0.0, 0.0, 1.0)
                }
            })
            .collect(),
    }
}
