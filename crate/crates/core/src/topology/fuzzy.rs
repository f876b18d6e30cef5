use std::fmt;

use super::{Verdict, MEMBERSHIP_TOLERANCE};
use crate::error::{Error, Result};
use crate::fuzzy_sets::{extend_preimage, FuzzySet};
use crate::universe::{ElementMap, Universe};

/// Families up to this size get an exhaustive minimum subcover search.
pub const EXHAUSTIVE_SUBCOVER_LIMIT: usize = 20;

/// Why a family of fuzzy sets fails to be a fuzzy topology.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FuzzyAxiomViolation {
    MissingEmpty,
    MissingUniversal,
    /// union of the opens at these positions is not in the family
    UnionNotOpen(usize, usize),
    /// intersection of the opens at these positions is not in the family
    IntersectionNotOpen(usize, usize),
}

impl fmt::Display for FuzzyAxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FuzzyAxiomViolation::MissingEmpty => f.write_str("empty set absent"),
            FuzzyAxiomViolation::MissingUniversal => f.write_str("universal set absent"),
            FuzzyAxiomViolation::UnionNotOpen(i, j) => {
                write!(f, "union of opens #{i} and #{j} not in family")
            }
            FuzzyAxiomViolation::IntersectionNotOpen(i, j) => {
                write!(f, "intersection of opens #{i} and #{j} not in family")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SeparationClass {
    None,
    T1,
    T2,
}

/// A finite family of fuzzy sets over one universe, tested against the
/// fuzzy topology axioms on demand.
#[derive(Clone, Debug, PartialEq)]
pub struct FuzzyTopology {
    universe: Universe,
    opens: Vec<FuzzySet>,
}

impl FuzzyTopology {
    pub fn new(universe: Universe, opens: Vec<FuzzySet>) -> Result<Self> {
        for (i, open) in opens.iter().enumerate() {
            if open.universe() != &universe {
                return Err(Error::UniverseMismatch);
            }
            if opens[..i]
                .iter()
                .any(|o| o.approx_eq(open, MEMBERSHIP_TOLERANCE))
            {
                return Err(Error::DuplicateOpen(i));
            }
        }
        Ok(FuzzyTopology { universe, opens })
    }

    /// `{F∅, F_U}`.
    pub fn discrete(universe: Universe) -> Self {
        let opens = vec![
            FuzzySet::empty(universe.clone()),
            FuzzySet::universal(universe.clone()),
        ];
        FuzzyTopology { universe, opens }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn opens(&self) -> &[FuzzySet] {
        &self.opens
    }

    pub fn position(&self, set: &FuzzySet) -> Option<usize> {
        self.opens
            .iter()
            .position(|o| o.approx_eq(set, MEMBERSHIP_TOLERANCE))
    }

    pub fn contains(&self, set: &FuzzySet) -> bool {
        self.position(set).is_some()
    }

    /// Checks the empty and universal sets are present and the family is
    /// closed under pairwise max and min. On a finite family, pairwise union
    /// closure already gives closure under the union of any subfamily.
    pub fn check_axioms(&self) -> Verdict<FuzzyAxiomViolation> {
        if !self.contains(&FuzzySet::empty(self.universe.clone())) {
            return Verdict::Fails(FuzzyAxiomViolation::MissingEmpty);
        }
        if !self.contains(&FuzzySet::universal(self.universe.clone())) {
            return Verdict::Fails(FuzzyAxiomViolation::MissingUniversal);
        }
        for (i, a) in self.opens.iter().enumerate() {
            for (j, b) in self.opens.iter().enumerate().skip(i + 1) {
                if !self.contains(&a.union(b).expect("shared universe")) {
                    return Verdict::Fails(FuzzyAxiomViolation::UnionNotOpen(i, j));
                }
                if !self.contains(&a.intersection(b).expect("shared universe")) {
                    return Verdict::Fails(FuzzyAxiomViolation::IntersectionNotOpen(i, j));
                }
            }
        }
        Verdict::Holds
    }

    pub fn is_fuzzy_topology(&self) -> bool {
        self.check_axioms().holds()
    }

    fn same_universe(&self, set: &FuzzySet) -> Result<()> {
        if set.universe() == &self.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// `b` is a neighborhood of `a` when some open `O` has `a ⊆ O` and
    /// `O` strictly below `b` at every element.
    pub fn is_neighborhood(&self, a: &FuzzySet, b: &FuzzySet) -> Result<bool> {
        self.same_universe(a)?;
        self.same_universe(b)?;
        Ok(self.opens.iter().any(|o| {
            a.is_subset(o).expect("shared universe")
                && o.is_proper_subset(b).expect("shared universe")
        }))
    }

    /// A neighborhood `B` of `a` with `candidate ⊂ B` failing, if one exists.
    ///
    /// The neighborhoods of `a` are the sets lying strictly above some open
    /// `O ⊇ a` (which forces `O < 1` everywhere). `candidate` sits strictly
    /// below all of them exactly when `candidate ⊆ O` for each such `O`, so
    /// only the finitely many opens need to be scanned; for a violating `O`
    /// the witness takes midpoints between `O` and `candidate` (or 1).
    pub fn escaping_neighborhood(
        &self,
        candidate: &FuzzySet,
        a: &FuzzySet,
    ) -> Result<Option<FuzzySet>> {
        self.same_universe(candidate)?;
        self.same_universe(a)?;
        for o in &self.opens {
            let admits_neighborhoods = o.memberships().iter().all(|&m| m < 1.0);
            if !admits_neighborhoods || !a.is_subset(o)? || candidate.is_subset(o)? {
                continue;
            }
            let membership = o
                .memberships()
                .iter()
                .zip(candidate.memberships())
                .map(|(&lo, &c)| {
                    if c > lo {
                        (lo + c) / 2.0
                    } else {
                        (lo + 1.0) / 2.0
                    }
                })
                .collect();
            return Ok(Some(FuzzySet::new(self.universe.clone(), membership)?));
        }
        Ok(None)
    }

    /// Smallest `m` (1-based) such that every term from `m` on lies
    /// strictly inside each neighborhood of `a`, or `None` if the sequence
    /// does not converge to `a`.
    pub fn limit_index(
        &self,
        seq: &EventuallyConstantSequence,
        a: &FuzzySet,
    ) -> Result<Option<usize>> {
        self.same_universe(seq.tail())?;
        if self.escaping_neighborhood(seq.tail(), a)?.is_some() {
            return Ok(None);
        }
        let mut m = 1;
        for (k, term) in seq.prefix().iter().enumerate() {
            if self.escaping_neighborhood(term, a)?.is_some() {
                m = k + 2;
            }
        }
        Ok(Some(m))
    }

    pub fn is_limit(&self, seq: &EventuallyConstantSequence, a: &FuzzySet) -> Result<bool> {
        Ok(self.limit_index(seq, a)?.is_some())
    }

    fn check_members(&self, family: &[FuzzySet]) -> Result<()> {
        for (i, set) in family.iter().enumerate() {
            self.same_universe(set)?;
            if !self.contains(set) {
                return Err(Error::NotAnOpen(i));
            }
        }
        Ok(())
    }

    /// True when every member is open and the pointwise max reaches 1 everywhere.
    pub fn is_open_cover(&self, family: &[FuzzySet]) -> Result<bool> {
        self.check_members(family)?;
        Ok(covers(family.iter()))
    }

    /// Positions in `family` of a smallest subfamily that still covers, or
    /// `None` when `family` is not a cover. Exhaustive up to
    /// [`EXHAUSTIVE_SUBCOVER_LIMIT`] members, greedy beyond that.
    pub fn find_finite_subcover(&self, family: &[FuzzySet]) -> Result<Option<Vec<usize>>> {
        if !self.is_open_cover(family)? {
            return Ok(None);
        }
        if family.len() <= EXHAUSTIVE_SUBCOVER_LIMIT {
            for size in 1..=family.len() {
                let mut combo: Vec<usize> = (0..size).collect();
                loop {
                    if covers(combo.iter().map(|&i| &family[i])) {
                        return Ok(Some(combo));
                    }
                    if !next_combination(&mut combo, family.len()) {
                        break;
                    }
                }
            }
            unreachable!("the whole family covers");
        }
        Ok(Some(greedy_cover(family)))
    }

    fn separated_one_way(&self, inside: usize, outside: usize) -> bool {
        self.opens
            .iter()
            .any(|o| o.degree(inside) > 0.0 && o.degree(outside) == 0.0)
    }

    fn check_separation_domain(&self) -> Result<()> {
        if self.universe.len() < 2 {
            Err(Error::SingletonUniverse)
        } else {
            Ok(())
        }
    }

    /// Every two distinct points each lie in an open missing the other.
    /// A point lies in a fuzzy set when its degree is positive.
    pub fn is_t1(&self) -> Result<bool> {
        self.check_separation_domain()?;
        let n = self.universe.len();
        Ok((0..n).all(|u| (0..n).all(|v| u == v || self.separated_one_way(u, v))))
    }

    /// Every two distinct points lie in opens whose intersection is empty.
    pub fn is_t2(&self) -> Result<bool> {
        self.check_separation_domain()?;
        let n = self.universe.len();
        let disjoint = |a: &FuzzySet, b: &FuzzySet| {
            a.memberships()
                .iter()
                .zip(b.memberships())
                .all(|(&x, &y)| x.min(y) == 0.0)
        };
        let separated = |u: usize, v: usize| {
            self.opens.iter().filter(|o| o.degree(u) > 0.0).any(|o1| {
                self.opens
                    .iter()
                    .filter(|o| o.degree(v) > 0.0)
                    .any(|o2| disjoint(o1, o2))
            })
        };
        Ok((0..n).all(|u| (u + 1..n).all(|v| separated(u, v))))
    }

    pub fn separation_class(&self) -> Result<SeparationClass> {
        Ok(if self.is_t2()? {
            SeparationClass::T2
        } else if self.is_t1()? {
            SeparationClass::T1
        } else {
            SeparationClass::None
        })
    }
}

fn covers<'a>(mut family: impl Iterator<Item = &'a FuzzySet>) -> bool {
    let Some(first) = family.next() else {
        return false;
    };
    let mut top = first.memberships().to_vec();
    for set in family {
        for (t, &m) in top.iter_mut().zip(set.memberships()) {
            *t = t.max(m);
        }
    }
    top.iter().all(|&m| m >= 1.0 - MEMBERSHIP_TOLERANCE)
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn greedy_cover(family: &[FuzzySet]) -> Vec<usize> {
    let full = |set: &FuzzySet, x: usize| set.degree(x) >= 1.0 - MEMBERSHIP_TOLERANCE;
    let n = family[0].universe().len();
    let mut uncovered: Vec<usize> = (0..n).collect();
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let (best, _) = family
            .iter()
            .enumerate()
            .map(|(i, s)| (i, uncovered.iter().filter(|&&x| full(s, x)).count()))
            .max_by_key(|&(i, gain)| (gain, std::cmp::Reverse(i)))
            .expect("family is non-empty");
        uncovered.retain(|&x| !full(&family[best], x));
        chosen.push(best);
    }
    chosen.sort_unstable();
    chosen
}

/// Preimage of every open of `sy` under `f` must be open in `tx`; fails
/// with the position of the first open of `sy` whose preimage is not.
pub fn is_fuzzy_continuous(
    tx: &FuzzyTopology,
    sy: &FuzzyTopology,
    f: &ElementMap,
) -> Result<Verdict<usize>> {
    if f.domain() != tx.universe() || f.codomain() != sy.universe() {
        return Err(Error::UniverseMismatch);
    }
    for (i, b) in sy.opens().iter().enumerate() {
        if !tx.contains(&extend_preimage(f, b)?) {
            return Ok(Verdict::Fails(i));
        }
    }
    Ok(Verdict::Holds)
}

/// A sequence given by finitely many leading terms followed by a constant tail.
#[derive(Clone, Debug, PartialEq)]
pub struct EventuallyConstantSequence {
    prefix: Vec<FuzzySet>,
    tail: FuzzySet,
}

impl EventuallyConstantSequence {
    pub fn new(prefix: Vec<FuzzySet>, tail: FuzzySet) -> Result<Self> {
        if prefix.iter().any(|p| p.universe() != tail.universe()) {
            return Err(Error::UniverseMismatch);
        }
        Ok(EventuallyConstantSequence { prefix, tail })
    }

    pub fn constant(value: FuzzySet) -> Self {
        EventuallyConstantSequence {
            prefix: Vec::new(),
            tail: value,
        }
    }

    pub fn prefix(&self) -> &[FuzzySet] {
        &self.prefix
    }

    pub fn tail(&self) -> &FuzzySet {
        &self.tail
    }

    /// Term `n`, counting from 1.
    pub fn term(&self, n: usize) -> &FuzzySet {
        assert!(n >= 1, "sequence terms are numbered from 1");
        self.prefix.get(n - 1).unwrap_or(&self.tail)
    }
}
