//! Fuzzy sets over finite universes.
//!
//! A [`FuzzySet`] assigns every element of its [`Universe`] a membership
//! degree in `[0, 1]`. Binary operations require both operands to share a
//! universe and fail with [`Error::UniverseMismatch`] otherwise.

use std::fmt;

use crate::error::{Error, Result};
use crate::universe::{ElementMap, Universe};

#[derive(Clone, Debug, PartialEq)]
pub struct FuzzySet {
    universe: Universe,
    membership: Vec<f64>,
}

fn check_degree(universe: &Universe, index: usize, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::MembershipOutOfRange {
            element: universe.label(index).to_string(),
            value,
        })
    }
}

impl FuzzySet {
    /// Membership degrees given in universe order.
    pub fn new(universe: Universe, membership: Vec<f64>) -> Result<Self> {
        if membership.len() != universe.len() {
            return Err(Error::MembershipCount {
                expected: universe.len(),
                actual: membership.len(),
            });
        }
        for (i, &m) in membership.iter().enumerate() {
            check_degree(&universe, i, m)?;
        }
        Ok(FuzzySet {
            universe,
            membership,
        })
    }

    /// Membership degrees given as `(label, degree)` pairs; every element of
    /// the universe must be listed exactly once.
    pub fn from_pairs<I, S>(universe: Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, f64)>,
        S: AsRef<str>,
    {
        let mut membership = vec![None; universe.len()];
        for (label, m) in pairs {
            let i = universe.position(label.as_ref())?;
            check_degree(&universe, i, m)?;
            if membership[i].replace(m).is_some() {
                return Err(Error::DuplicateElement(label.as_ref().to_string()));
            }
        }
        let membership = membership
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| Error::MapNotTotal(universe.label(i).to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(FuzzySet {
            universe,
            membership,
        })
    }

    pub fn universal(universe: Universe) -> Self {
        Self::constant(universe, 1.0).expect("1 is a valid degree")
    }

    pub fn empty(universe: Universe) -> Self {
        Self::constant(universe, 0.0).expect("0 is a valid degree")
    }

    pub fn constant(universe: Universe, value: f64) -> Result<Self> {
        let membership = vec![value; universe.len()];
        Self::new(universe, membership)
    }

    /// Crisp subset viewed as a fuzzy set with degrees 1 and 0.
    pub fn from_crisp(crisp: &CrispSubset) -> Self {
        let membership = crisp
            .mask()
            .iter()
            .map(|&b| if b { 1.0 } else { 0.0 })
            .collect();
        FuzzySet {
            universe: crisp.universe().clone(),
            membership,
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn memberships(&self) -> &[f64] {
        &self.membership
    }

    pub fn degree(&self, index: usize) -> f64 {
        self.membership[index]
    }

    pub fn membership(&self, label: &str) -> Result<f64> {
        Ok(self.membership[self.universe.position(label)?])
    }

    fn same_universe(&self, other: &FuzzySet) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    fn zip_with(&self, other: &FuzzySet, op: impl Fn(f64, f64) -> f64) -> Result<FuzzySet> {
        self.same_universe(other)?;
        let membership = self
            .membership
            .iter()
            .zip(&other.membership)
            .map(|(&a, &b)| op(a, b))
            .collect();
        Ok(FuzzySet {
            universe: self.universe.clone(),
            membership,
        })
    }

    /// `self ⊆ other` iff every degree of `self` is at most the matching degree of `other`.
    pub fn is_subset(&self, other: &FuzzySet) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self
            .membership
            .iter()
            .zip(&other.membership)
            .all(|(a, b)| a <= b))
    }

    /// Strict inequality at every element, not merely `⊆` and `≠`.
    pub fn is_proper_subset(&self, other: &FuzzySet) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self
            .membership
            .iter()
            .zip(&other.membership)
            .all(|(a, b)| a < b))
    }

    pub fn union(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.zip_with(other, f64::max)
    }

    pub fn intersection(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.zip_with(other, f64::min)
    }

    pub fn complement(&self) -> FuzzySet {
        FuzzySet {
            universe: self.universe.clone(),
            membership: self.membership.iter().map(|m| 1.0 - m).collect(),
        }
    }

    /// `{x : m(x) >= alpha}`.
    pub fn alpha_cut(&self, alpha: f64) -> Result<CrispSubset> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        Ok(CrispSubset {
            universe: self.universe.clone(),
            members: self.membership.iter().map(|&m| m >= alpha).collect(),
        })
    }

    /// Distinct membership values in ascending order.
    pub fn levels(&self) -> Vec<f64> {
        let mut levels = self.membership.clone();
        levels.sort_by(f64::total_cmp);
        levels.dedup();
        levels
    }

    pub fn is_empty_set(&self) -> bool {
        self.membership.iter().all(|&m| m == 0.0)
    }

    pub fn is_universal(&self) -> bool {
        self.membership.iter().all(|&m| m == 1.0)
    }

    /// Same universe and every degree within `tol`.
    pub fn approx_eq(&self, other: &FuzzySet, tol: f64) -> bool {
        self.universe == other.universe
            && self
                .membership
                .iter()
                .zip(&other.membership)
                .all(|(a, b)| (a - b).abs() <= tol)
    }
}

impl fmt::Display for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (label, m)) in self.universe.iter().zip(&self.membership).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{label}:{m}")?;
        }
        f.write_str("}")
    }
}

/// An ordinary subset of a finite universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrispSubset {
    universe: Universe,
    members: Vec<bool>,
}

impl CrispSubset {
    pub fn new<I, S>(universe: Universe, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut mask = vec![false; universe.len()];
        for label in members {
            mask[universe.position(label.as_ref())?] = true;
        }
        Ok(CrispSubset {
            universe,
            members: mask,
        })
    }

    pub fn from_mask(universe: Universe, members: Vec<bool>) -> Result<Self> {
        if members.len() != universe.len() {
            return Err(Error::MembershipCount {
                expected: universe.len(),
                actual: members.len(),
            });
        }
        Ok(CrispSubset { universe, members })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn mask(&self) -> &[bool] {
        &self.members
    }

    pub fn contains(&self, label: &str) -> bool {
        self.universe
            .index_of(label)
            .is_some_and(|i| self.members[i])
    }

    pub fn labels(&self) -> Vec<&str> {
        self.universe
            .iter()
            .zip(&self.members)
            .filter_map(|(l, &m)| m.then_some(l))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.contains(&true)
    }

    pub fn is_subset(&self, other: &CrispSubset) -> Result<bool> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        Ok(self
            .members
            .iter()
            .zip(&other.members)
            .all(|(&a, &b)| !a || b))
    }
}

/// Image of `a` under the extension of `map`: each target takes the largest
/// degree found in its preimage, or 0 when nothing maps onto it.
pub fn extend_image(map: &ElementMap, a: &FuzzySet) -> Result<FuzzySet> {
    if a.universe() != map.domain() {
        return Err(Error::UniverseMismatch);
    }
    let membership = (0..map.codomain().len())
        .map(|y| map.fiber(y).map(|x| a.degree(x)).fold(0.0, f64::max))
        .collect();
    Ok(FuzzySet {
        universe: map.codomain().clone(),
        membership,
    })
}

/// Inverse image of `b`: `m(x) = m_b(map(x))`.
pub fn extend_preimage(map: &ElementMap, b: &FuzzySet) -> Result<FuzzySet> {
    if b.universe() != map.codomain() {
        return Err(Error::UniverseMismatch);
    }
    let membership = (0..map.domain().len())
        .map(|x| b.degree(map.apply(x)))
        .collect();
    Ok(FuzzySet {
        universe: map.domain().clone(),
        membership,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn u(labels: &[&str]) -> Universe {
        Universe::new(labels.iter().copied()).unwrap()
    }

    fn fs(universe: &Universe, m: &[f64]) -> FuzzySet {
        FuzzySet::new(universe.clone(), m.to_vec()).unwrap()
    }

    #[test]
    fn universal_and_empty() {
        let xy = u(&["x", "y"]);
        assert_eq!(FuzzySet::universal(xy.clone()).memberships(), &[1.0, 1.0]);
        assert_eq!(FuzzySet::empty(xy.clone()).memberships(), &[0.0, 0.0]);
        assert_eq!(
            FuzzySet::universal(xy.clone()).complement(),
            FuzzySet::empty(xy)
        );
    }

    #[test]
    fn construction_validates_degrees() {
        let xy = u(&["x", "y"]);
        assert!(matches!(
            FuzzySet::new(xy.clone(), vec![0.2, 1.2]),
            Err(Error::MembershipOutOfRange { .. })
        ));
        assert!(matches!(
            FuzzySet::new(xy.clone(), vec![0.2]),
            Err(Error::MembershipCount { .. })
        ));
        assert_eq!(
            FuzzySet::from_pairs(xy.clone(), [("x", 0.1)]),
            Err(Error::MapNotTotal("y".into()))
        );
        assert_eq!(
            FuzzySet::from_pairs(xy, [("x", 0.1), ("z", 0.3)]),
            Err(Error::UnknownElement("z".into()))
        );
    }

    #[test]
    fn subset_relations() {
        let xy = u(&["x", "y"]);
        let k = fs(&xy, &[0.3, 0.5]);
        let l = fs(&xy, &[0.4, 0.9]);
        assert!(FuzzySet::empty(xy.clone()).is_subset(&k).unwrap());
        assert!(k.is_subset(&k).unwrap());
        assert!(!k.is_proper_subset(&k).unwrap());
        assert!(k.is_proper_subset(&l).unwrap());
        // equal at one point: subset but not proper in the strict-everywhere sense
        let m = fs(&xy, &[0.3, 0.9]);
        assert!(k.is_subset(&m).unwrap() && !k.is_proper_subset(&m).unwrap());
        let other = fs(&u(&["x", "z"]), &[0.0, 0.0]);
        assert_eq!(k.is_subset(&other), Err(Error::UniverseMismatch));
    }

    #[test]
    fn union_intersection_complement() {
        let xy = u(&["x", "y"]);
        let k = fs(&xy, &[0.3, 0.8]);
        let l = fs(&xy, &[0.7, 0.2]);
        assert_eq!(k.union(&l).unwrap(), fs(&xy, &[0.7, 0.8]));
        assert_eq!(k.intersection(&l).unwrap(), fs(&xy, &[0.3, 0.2]));
        assert_eq!(k.intersection(&FuzzySet::universal(xy.clone())).unwrap(), k);
        assert_eq!(k.union(&FuzzySet::empty(xy.clone())).unwrap(), k);
        let x = u(&["x"]);
        assert!(fs(&x, &[0.4])
            .complement()
            .approx_eq(&fs(&x, &[0.6]), 1e-12));
    }

    #[test]
    fn excluded_middle_fails() {
        let x = u(&["x"]);
        let k = fs(&x, &[0.5]);
        let both = k.union(&k.complement()).unwrap();
        assert_eq!(both.degree(0), 0.5);
        assert_ne!(both, FuzzySet::universal(x));
    }

    #[test]
    fn alpha_cuts() {
        let pqr = u(&["p", "q", "r"]);
        let f = fs(&pqr, &[0.2, 0.5, 0.9]);
        assert_eq!(f.alpha_cut(0.5).unwrap().labels(), vec!["q", "r"]);
        assert_eq!(f.alpha_cut(0.0).unwrap().len(), 3);
        assert_eq!(f.alpha_cut(1.5), Err(Error::AlphaOutOfRange(1.5)));
        assert_eq!(f.alpha_cut(-0.1), Err(Error::AlphaOutOfRange(-0.1)));
    }

    #[test]
    fn extension_principle() {
        let x = u(&["1", "2", "3"]);
        let y = u(&["a", "b"]);
        let f =
            ElementMap::new(x.clone(), y.clone(), [("1", "a"), ("2", "a"), ("3", "b")]).unwrap();
        let a = fs(&x, &[0.2, 0.9, 0.4]);
        assert_eq!(extend_image(&f, &a).unwrap(), fs(&y, &[0.9, 0.4]));
        let b = fs(&y, &[0.5, 0.1]);
        assert_eq!(extend_preimage(&f, &b).unwrap(), fs(&x, &[0.5, 0.5, 0.1]));
        assert_eq!(
            extend_preimage(&f, &FuzzySet::universal(y.clone())).unwrap(),
            FuzzySet::universal(x.clone())
        );

        let id = ElementMap::identity(x.clone());
        assert_eq!(extend_image(&id, &a).unwrap(), a);

        // c has an empty preimage
        let yc = u(&["a", "b", "c"]);
        let g =
            ElementMap::new(x.clone(), yc.clone(), [("1", "a"), ("2", "a"), ("3", "b")]).unwrap();
        assert_eq!(extend_image(&g, &a).unwrap().degree(2), 0.0);
        assert_eq!(extend_image(&g, &b), Err(Error::UniverseMismatch));
    }

    fn universe_and_pair() -> impl Strategy<Value = (FuzzySet, FuzzySet)> {
        (1usize..6).prop_flat_map(|n| {
            let universe = Universe::new((0..n).map(|i| format!("u{i}"))).unwrap();
            let degrees = prop::collection::vec(0.0..=1.0f64, n);
            (degrees.clone(), degrees).prop_map(move |(a, b)| {
                (
                    FuzzySet::new(universe.clone(), a).unwrap(),
                    FuzzySet::new(universe.clone(), b).unwrap(),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn lattice_laws((k, l) in universe_and_pair()) {
            prop_assert_eq!(k.union(&l).unwrap(), l.union(&k).unwrap());
            prop_assert_eq!(k.intersection(&l).unwrap(), l.intersection(&k).unwrap());
            prop_assert_eq!(k.union(&k).unwrap(), k.clone());
            prop_assert_eq!(k.intersection(&k).unwrap(), k.clone());
            prop_assert!(k.is_subset(&k.union(&l).unwrap()).unwrap());
            prop_assert!(k.intersection(&l).unwrap().is_subset(&k).unwrap());
            prop_assert_eq!(
                k.union(&l).unwrap().complement(),
                k.complement().intersection(&l.complement()).unwrap()
            );
            prop_assert_eq!(
                k.intersection(&l).unwrap().complement(),
                k.complement().union(&l.complement()).unwrap()
            );
        }

        #[test]
        fn alpha_cuts_nest_and_recover_membership((f, _) in universe_and_pair(), a in 0.0..=1.0f64, b in 0.0..=1.0f64) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            prop_assert!(f.alpha_cut(hi).unwrap().is_subset(&f.alpha_cut(lo).unwrap()).unwrap());
            let mut levels = f.levels();
            levels.push(0.0);
            for (i, &m) in f.memberships().iter().enumerate() {
                let recovered = levels
                    .iter()
                    .copied()
                    .filter(|&alpha| f.alpha_cut(alpha).unwrap().mask()[i])
                    .fold(0.0, f64::max);
                prop_assert_eq!(recovered, m);
            }
        }

        #[test]
        fn preimage_respects_union_and_image_round_trip_dominates(
            (b1, b2) in universe_and_pair(),
            n in 1usize..6,
            seed in prop::collection::vec(0usize..100, 6),
            degrees in prop::collection::vec(0.0..=1.0f64, 6),
        ) {
            let y = b1.universe().clone();
            let x = Universe::new((0..n).map(|i| format!("x{i}"))).unwrap();
            let pairs: Vec<(String, String)> = (0..n)
                .map(|i| (format!("x{i}"), y.label(seed[i] % y.len()).to_string()))
                .collect();
            let f = ElementMap::new(x.clone(), y, pairs).unwrap();
            let lhs = extend_preimage(&f, &b1.union(&b2).unwrap()).unwrap();
            let rhs = extend_preimage(&f, &b1).unwrap().union(&extend_preimage(&f, &b2).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);

            let a = FuzzySet::new(x, degrees[..n].to_vec()).unwrap();
            let back = extend_preimage(&f, &extend_image(&f, &a).unwrap()).unwrap();
            prop_assert!(a.is_subset(&back).unwrap());
        }
    }
}
