//! Soft sets: a family of crisp subsets of a universe indexed by parameters.
//!
//! A [`SoftSet`] `(f, A)` lives over a universe `U` and a parameter universe
//! `E`; its support `A ⊆ E` is the set of parameters it actually assigns a
//! value set to. Equality is support-sensitive: `(f, A)` and the same map
//! padded with empty value sets over a larger support are different values
//! until both are passed through [`SoftSet::canonicalize`].

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fuzzy_sets::{CrispSubset, FuzzySet};
use crate::universe::Universe;

/// Largest universe accepted by [`SoftSet::enumerate_soft_subsets`].
pub const MAX_ENUMERATION_UNIVERSE: usize = 12;
/// Largest number of soft subsets [`SoftSet::enumerate_soft_subsets`] will materialize.
pub const MAX_ENUMERATION_COUNT: u128 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoftSet {
    universe: Universe,
    parameters: Universe,
    // keyed by parameter index, so iteration follows the parameter order
    approximation: BTreeMap<usize, Vec<bool>>,
}

impl SoftSet {
    /// Builds `(f, A)` from `(parameter, value set)` pairs; the support is
    /// the set of listed parameters.
    pub fn new<I, P, V, S>(universe: Universe, parameters: Universe, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (P, V)>,
        P: AsRef<str>,
        V: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut approximation = BTreeMap::new();
        for (param, values) in entries {
            let param = param.as_ref();
            let e = parameters
                .index_of(param)
                .ok_or_else(|| Error::UnknownParameter(param.to_string()))?;
            let mut mask = vec![false; universe.len()];
            for v in values {
                mask[universe.position(v.as_ref())?] = true;
            }
            if approximation.insert(e, mask).is_some() {
                return Err(Error::DuplicateParameter(param.to_string()));
            }
        }
        Ok(SoftSet {
            universe,
            parameters,
            approximation,
        })
    }

    fn support_indices<S: AsRef<str>>(parameters: &Universe, support: &[S]) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(support.len());
        for s in support {
            let s = s.as_ref();
            let e = parameters
                .index_of(s)
                .ok_or_else(|| Error::UnknownParameter(s.to_string()))?;
            if out.contains(&e) {
                return Err(Error::DuplicateParameter(s.to_string()));
            }
            out.push(e);
        }
        Ok(out)
    }

    fn filled<S: AsRef<str>>(
        universe: Universe,
        parameters: Universe,
        support: &[S],
        value: bool,
    ) -> Result<Self> {
        let approximation = Self::support_indices(&parameters, support)?
            .into_iter()
            .map(|e| (e, vec![value; universe.len()]))
            .collect();
        Ok(SoftSet {
            universe,
            parameters,
            approximation,
        })
    }

    /// Every parameter of `support` maps to the whole universe.
    pub fn absolute<S: AsRef<str>>(
        universe: Universe,
        parameters: Universe,
        support: &[S],
    ) -> Result<Self> {
        Self::filled(universe, parameters, support, true)
    }

    /// Every parameter of `support` maps to the empty set.
    pub fn null<S: AsRef<str>>(
        universe: Universe,
        parameters: Universe,
        support: &[S],
    ) -> Result<Self> {
        Self::filled(universe, parameters, support, false)
    }

    /// Absolute soft set over the whole parameter universe.
    pub fn absolute_over_all(universe: Universe, parameters: Universe) -> Self {
        let support: Vec<String> = parameters.labels().to_vec();
        Self::absolute(universe, parameters, &support)
            .expect("labels come from the parameter universe")
    }

    /// Null soft set over the whole parameter universe.
    pub fn null_over_all(universe: Universe, parameters: Universe) -> Self {
        let support: Vec<String> = parameters.labels().to_vec();
        Self::null(universe, parameters, &support).expect("labels come from the parameter universe")
    }

    pub(crate) fn from_parts(
        universe: Universe,
        parameters: Universe,
        approximation: BTreeMap<usize, Vec<bool>>,
    ) -> Self {
        SoftSet {
            universe,
            parameters,
            approximation,
        }
    }

    pub(crate) fn approximation(&self) -> &BTreeMap<usize, Vec<bool>> {
        &self.approximation
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn parameters(&self) -> &Universe {
        &self.parameters
    }

    /// Support labels in parameter order.
    pub fn support(&self) -> Vec<&str> {
        self.approximation
            .keys()
            .map(|&e| self.parameters.label(e))
            .collect()
    }

    pub fn in_support(&self, param: &str) -> bool {
        self.parameters
            .index_of(param)
            .is_some_and(|e| self.approximation.contains_key(&e))
    }

    /// Value set at `param`, or `None` when `param` is outside the support.
    pub fn value_set(&self, param: &str) -> Option<CrispSubset> {
        let e = self.parameters.index_of(param)?;
        let mask = self.approximation.get(&e)?;
        Some(
            CrispSubset::from_mask(self.universe.clone(), mask.clone())
                .expect("mask sized to universe"),
        )
    }

    /// `(parameter, member labels)` pairs in parameter order.
    pub fn entries(&self) -> Vec<(&str, Vec<&str>)> {
        self.approximation
            .iter()
            .map(|(&e, mask)| (self.parameters.label(e), self.members(mask)))
            .collect()
    }

    fn members<'a>(&'a self, mask: &[bool]) -> Vec<&'a str> {
        self.universe
            .iter()
            .zip(mask)
            .filter_map(|(l, &m)| m.then_some(l))
            .collect()
    }

    fn compatible(&self, other: &SoftSet) -> Result<()> {
        if self.universe == other.universe && self.parameters == other.parameters {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// `(f, A) ⊆ (g, B)` iff `A ⊆ B` and `f(e) ⊆ g(e)` on `A`.
    pub fn is_soft_subset(&self, other: &SoftSet) -> Result<bool> {
        self.compatible(other)?;
        Ok(self.approximation.iter().all(|(e, f)| {
            other
                .approximation
                .get(e)
                .is_some_and(|g| f.iter().zip(g).all(|(&a, &b)| !a || b))
        }))
    }

    /// Soft subset whose support is a strict subset of the other's.
    pub fn is_proper_soft_subset(&self, other: &SoftSet) -> Result<bool> {
        Ok(self.is_soft_subset(other)? && self.approximation.len() < other.approximation.len())
    }

    /// Support `A ∪ B`; value sets are copied where only one side is
    /// defined and united where both are.
    pub fn union(&self, other: &SoftSet) -> Result<SoftSet> {
        self.compatible(other)?;
        let mut approximation = self.approximation.clone();
        for (&e, g) in &other.approximation {
            approximation
                .entry(e)
                .and_modify(|f| f.iter_mut().zip(g).for_each(|(a, &b)| *a |= b))
                .or_insert_with(|| g.clone());
        }
        Ok(SoftSet {
            approximation,
            ..self.clone()
        })
    }

    /// Support `A ∩ B` with pointwise intersection.
    pub fn intersect(&self, other: &SoftSet) -> Result<SoftSet> {
        self.compatible(other)?;
        let approximation = self
            .approximation
            .iter()
            .filter_map(|(&e, f)| {
                other
                    .approximation
                    .get(&e)
                    .map(|g| (e, f.iter().zip(g).map(|(&a, &b)| a && b).collect()))
            })
            .collect();
        Ok(SoftSet {
            approximation,
            ..self.clone()
        })
    }

    /// Complement within the universe at every support parameter; the
    /// support itself is unchanged.
    pub fn complement(&self) -> SoftSet {
        let approximation = self
            .approximation
            .iter()
            .map(|(&e, f)| (e, f.iter().map(|&b| !b).collect()))
            .collect();
        SoftSet {
            approximation,
            ..self.clone()
        }
    }

    /// Extends the support to every parameter, assigning `∅` where the
    /// soft set was undefined.
    pub fn canonicalize(&self) -> SoftSet {
        let mut approximation = self.approximation.clone();
        for e in 0..self.parameters.len() {
            approximation
                .entry(e)
                .or_insert_with(|| vec![false; self.universe.len()]);
        }
        SoftSet {
            approximation,
            ..self.clone()
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.approximation.len() == self.parameters.len()
    }

    /// Binary matrix with one row per universe element and one column per
    /// support parameter.
    pub fn to_matrix(&self) -> SoftMatrix {
        let columns: Vec<&Vec<bool>> = self.approximation.values().collect();
        let bits = (0..self.universe.len())
            .map(|i| columns.iter().map(|col| u8::from(col[i])).collect())
            .collect();
        SoftMatrix {
            row_labels: self.universe.labels().to_vec(),
            column_labels: self.support().into_iter().map(String::from).collect(),
            bits,
        }
    }

    /// Parses a tabular soft set. Columns name the support; `parameters`
    /// is the enclosing parameter universe.
    pub fn from_matrix(matrix: &SoftMatrix, parameters: &Universe) -> Result<SoftSet> {
        let universe = Universe::new(matrix.row_labels.iter().cloned())?;
        let support = Self::support_indices(parameters, &matrix.column_labels)?;
        let mut approximation = BTreeMap::new();
        for (j, &e) in support.iter().enumerate() {
            let column = matrix.bits.iter().map(|row| row[j] == 1).collect();
            approximation.insert(e, column);
        }
        Ok(SoftSet {
            universe,
            parameters: parameters.clone(),
            approximation,
        })
    }

    /// Number of soft subsets [`SoftSet::enumerate_soft_subsets`] yields:
    /// `1 + Σ_{∅≠B⊆A} Π_{e∈B} (2^|f(e)| − 1)`.
    pub fn soft_subset_count(&self) -> u128 {
        // Σ over non-empty B of Π equals Π (1 + c_e) − 1
        self.approximation.values().fold(1u128, |acc, f| {
            let size = f.iter().filter(|&&b| b).count() as u32;
            let choices = 2u128.saturating_pow(size).saturating_sub(1);
            acc.saturating_mul(choices.saturating_add(1))
        })
    }

    /// All soft subsets `(g, B)` with a non-empty support `B ⊆ A` and
    /// non-empty value sets `g(e) ⊆ f(e)`, followed by the null soft set
    /// over `A`.
    ///
    /// Supports are visited in binary-counting order over the support of
    /// `self`; within a support, value sets vary fastest at the last
    /// parameter, each running through its non-empty subsets in
    /// binary-counting order over the universe.
    pub fn enumerate_soft_subsets(&self) -> Result<Vec<SoftSet>> {
        if self.universe.len() > MAX_ENUMERATION_UNIVERSE {
            return Err(Error::CapacityExceeded(format!(
                "universe has {} elements, limit is {MAX_ENUMERATION_UNIVERSE}",
                self.universe.len()
            )));
        }
        let count = self.soft_subset_count();
        if count > MAX_ENUMERATION_COUNT {
            return Err(Error::CapacityExceeded(format!(
                "{count} soft subsets, limit is {MAX_ENUMERATION_COUNT}"
            )));
        }

        let support: Vec<(usize, Vec<Vec<bool>>)> = self
            .approximation
            .iter()
            .map(|(&e, f)| (e, nonempty_subsets(f)))
            .collect();

        let mut out = Vec::with_capacity(count as usize);
        for selection in 1u64..(1u64 << support.len()) {
            let chosen: Vec<&(usize, Vec<Vec<bool>>)> = support
                .iter()
                .enumerate()
                .filter(|&(k, _)| selection >> k & 1 == 1)
                .map(|(_, s)| s)
                .collect();
            if chosen.iter().any(|(_, options)| options.is_empty()) {
                continue;
            }
            let mut odometer = vec![0usize; chosen.len()];
            loop {
                let approximation = chosen
                    .iter()
                    .zip(&odometer)
                    .map(|((e, options), &k)| (*e, options[k].clone()))
                    .collect();
                out.push(SoftSet::from_parts(
                    self.universe.clone(),
                    self.parameters.clone(),
                    approximation,
                ));
                if !advance(&mut odometer, |pos| chosen[pos].1.len()) {
                    break;
                }
            }
        }
        out.push(SoftSet {
            approximation: self
                .approximation
                .keys()
                .map(|&e| (e, vec![false; self.universe.len()]))
                .collect(),
            ..self.clone()
        });
        Ok(out)
    }

    /// Samples the α-cut soft set of `f` at `alphas`; each α becomes a
    /// parameter labelled by its decimal form.
    pub fn from_fuzzy(f: &FuzzySet, alphas: &[f64]) -> Result<SoftSet> {
        if alphas.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let cuts = alphas
            .iter()
            .map(|&a| f.alpha_cut(a))
            .collect::<Result<Vec<_>>>()?;
        let parameters = Universe::new(alphas.iter().map(|a| alpha_label(*a)))?;
        let approximation = cuts
            .into_iter()
            .enumerate()
            .map(|(e, cut)| (e, cut.mask().to_vec()))
            .collect();
        Ok(SoftSet {
            universe: f.universe().clone(),
            parameters,
            approximation,
        })
    }
}

/// `0` followed by the distinct non-zero membership values of `f`, ascending.
pub fn default_alpha_grid(f: &FuzzySet) -> Vec<f64> {
    let mut grid = vec![0.0];
    grid.extend(f.levels().into_iter().filter(|&m| m > 0.0));
    grid
}

pub fn alpha_label(alpha: f64) -> String {
    format!("{alpha}")
}

fn nonempty_subsets(of: &[bool]) -> Vec<Vec<bool>> {
    let positions: Vec<usize> = of
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect();
    (1u32..(1u32 << positions.len()))
        .map(|bits| {
            let mut mask = vec![false; of.len()];
            for (k, &i) in positions.iter().enumerate() {
                if bits >> k & 1 == 1 {
                    mask[i] = true;
                }
            }
            mask
        })
        .collect()
}

// Mixed-radix increment, last digit fastest; false once every digit wrapped.
fn advance(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for pos in (0..digits.len()).rev() {
        digits[pos] += 1;
        if digits[pos] < radix(pos) {
            return true;
        }
        digits[pos] = 0;
    }
    false
}

impl fmt::Display for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (param, members)) in self.entries().into_iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            if members.is_empty() {
                write!(f, "({param}, ∅)")?;
            } else {
                write!(f, "({param}, {{{}}})", members.join(", "))?;
            }
        }
        f.write_str("}")
    }
}

/// Tabular form of a soft set: rows are universe elements, columns are
/// support parameters, cells are 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoftMatrix {
    row_labels: Vec<String>,
    column_labels: Vec<String>,
    bits: Vec<Vec<u8>>,
}

impl SoftMatrix {
    pub fn new(
        row_labels: Vec<String>,
        column_labels: Vec<String>,
        bits: Vec<Vec<u8>>,
    ) -> Result<Self> {
        if bits.len() != row_labels.len() {
            return Err(Error::MalformedMatrix(format!(
                "{} rows of bits for {} row labels",
                bits.len(),
                row_labels.len()
            )));
        }
        for (i, row) in bits.iter().enumerate() {
            if row.len() != column_labels.len() {
                return Err(Error::MalformedMatrix(format!(
                    "row `{}` has {} cells, expected {}",
                    row_labels[i],
                    row.len(),
                    column_labels.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&b| b > 1) {
                return Err(Error::MalformedMatrix(format!(
                    "row `{}` has cell value {bad}; cells must be 0 or 1",
                    row_labels[i]
                )));
            }
        }
        Ok(SoftMatrix {
            row_labels,
            column_labels,
            bits,
        })
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn column_labels(&self) -> &[String] {
        &self.column_labels
    }

    pub fn bits(&self) -> &[Vec<u8>] {
        &self.bits
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn houses() -> (Universe, Universe) {
        (
            Universe::new(["H1", "H2", "H3"]).unwrap(),
            Universe::new(["e1", "e2", "e3"]).unwrap(),
        )
    }

    fn soft(entries: &[(&str, &[&str])]) -> SoftSet {
        let (u, e) = houses();
        SoftSet::new(u, e, entries.iter().map(|(p, v)| (*p, v.iter().copied()))).unwrap()
    }

    fn example_s() -> SoftSet {
        soft(&[("e1", &["H1", "H2"]), ("e2", &["H2", "H3"])])
    }

    #[test]
    fn construction_errors() {
        let (u, e) = houses();
        assert_eq!(
            SoftSet::new(u.clone(), e.clone(), [("e9", vec!["H1"])]),
            Err(Error::UnknownParameter("e9".into()))
        );
        assert_eq!(
            SoftSet::new(u.clone(), e.clone(), [("e1", vec!["H1"]), ("e1", vec![])]),
            Err(Error::DuplicateParameter("e1".into()))
        );
        assert_eq!(
            SoftSet::new(u.clone(), e.clone(), [("e1", vec!["H7"])]),
            Err(Error::UnknownElement("H7".into()))
        );
        assert_eq!(
            SoftSet::absolute(u, e, &["e1", "e4"]),
            Err(Error::UnknownParameter("e4".into()))
        );
    }

    #[test]
    fn absolute_and_null() {
        let (u, e) = houses();
        let abs = SoftSet::absolute(u.clone(), e.clone(), &["e1", "e2"]).unwrap();
        assert_eq!(
            abs,
            soft(&[("e1", &["H1", "H2", "H3"]), ("e2", &["H1", "H2", "H3"])])
        );
        let null = SoftSet::null(u, e, &["e1", "e2"]).unwrap();
        assert_eq!(null.to_string(), "{(e1, ∅), (e2, ∅)}");
        assert_eq!(abs.complement(), null);
        assert_eq!(null.complement(), abs);
    }

    #[test]
    fn soft_subsets_against_example_set() {
        let s = example_s();
        assert!(soft(&[("e1", &["H1"])]).is_soft_subset(&s).unwrap());
        assert!(!soft(&[("e1", &["H3"])]).is_soft_subset(&s).unwrap());
        let (u, e) = houses();
        assert!(SoftSet::null(u, e, &["e1", "e2"])
            .unwrap()
            .is_soft_subset(&s)
            .unwrap());
        assert!(soft(&[("e1", &["H1"])]).is_proper_soft_subset(&s).unwrap());
        assert!(!s.is_proper_soft_subset(&s).unwrap());
        // support outside of A
        assert!(!soft(&[("e3", &[])]).is_soft_subset(&s).unwrap());
    }

    #[test]
    fn union_intersection_complement_of_example() {
        let s2 = soft(&[("e1", &["H2"])]);
        let s5 = soft(&[("e2", &["H3"])]);
        assert_eq!(
            s2.union(&s5).unwrap(),
            soft(&[("e1", &["H2"]), ("e2", &["H3"])])
        );
        let s11 = soft(&[("e1", &["H1", "H2"]), ("e2", &["H2"])]);
        assert_eq!(example_s().intersect(&s11).unwrap(), s11);
        assert_eq!(
            example_s().complement(),
            soft(&[("e1", &["H3"]), ("e2", &["H1"])])
        );
        let (u, e) = houses();
        let null = SoftSet::null(u, e, &["e1", "e2"]).unwrap();
        assert_eq!(example_s().union(&null).unwrap(), example_s());
        assert_eq!(s2.intersect(&s5).unwrap().support().len(), 0);
    }

    #[test]
    fn mismatched_universes_rejected() {
        let other = SoftSet::new(
            Universe::new(["H1", "H2"]).unwrap(),
            Universe::new(["e1", "e2", "e3"]).unwrap(),
            [("e1", ["H1"])],
        )
        .unwrap();
        assert_eq!(example_s().union(&other), Err(Error::UniverseMismatch));
        assert_eq!(
            example_s().is_soft_subset(&other),
            Err(Error::UniverseMismatch)
        );
    }

    #[test]
    fn canonical_form() {
        let (u, e) = houses();
        let null = SoftSet::null(u.clone(), e.clone(), &["e1", "e2"]).unwrap();
        let canon = null.canonicalize();
        assert_eq!(canon, SoftSet::null_over_all(u, e));
        assert_eq!(canon.canonicalize(), canon);
        let s = example_s().canonicalize();
        assert_eq!(s.value_set("e1").unwrap().labels(), vec!["H1", "H2"]);
        assert!(s.value_set("e3").unwrap().is_empty());
        assert_ne!(s, example_s());
    }

    #[test]
    fn car_matrix() {
        let u = Universe::new(["C1", "C2", "C3"]).unwrap();
        let e = Universe::new(["e1", "e2", "e3"]).unwrap();
        let cars = SoftSet::new(
            u,
            e.clone(),
            [
                ("e1", vec!["C1", "C2"]),
                ("e2", vec!["C2", "C3"]),
                ("e3", vec!["C3"]),
            ],
        )
        .unwrap();
        let m = cars.to_matrix();
        assert_eq!(m.bits(), &[vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, 1]]);
        assert_eq!(SoftSet::from_matrix(&m, &e).unwrap(), cars);
    }

    #[test]
    fn null_matrix_is_zero() {
        let (u, e) = houses();
        let m = SoftSet::null(u, e, &["e1", "e3"]).unwrap().to_matrix();
        assert!(m.bits().iter().flatten().all(|&b| b == 0));
        assert_eq!(m.column_labels(), &["e1".to_string(), "e3".to_string()]);
    }

    #[test]
    fn malformed_matrix_rejected() {
        let rows = vec!["a".to_string()];
        let cols = vec!["e1".to_string(), "e2".to_string()];
        assert!(SoftMatrix::new(rows.clone(), cols.clone(), vec![vec![1]]).is_err());
        assert!(SoftMatrix::new(rows.clone(), cols.clone(), vec![vec![1, 2]]).is_err());
        assert!(SoftMatrix::new(rows, cols, vec![]).is_err());
    }

    #[test]
    fn enumeration_of_example() {
        let subsets = example_s().enumerate_soft_subsets().unwrap();
        assert_eq!(subsets.len(), 16);
        assert_eq!(example_s().soft_subset_count(), 16);
        assert_eq!(subsets[0], soft(&[("e1", &["H1"])]));
        assert_eq!(subsets.last().unwrap().to_string(), "{(e1, ∅), (e2, ∅)}");
        assert!(subsets.contains(&example_s()));
    }

    #[test]
    fn enumeration_of_singleton() {
        let s = soft(&[("e2", &["H3"])]);
        let subsets = s.enumerate_soft_subsets().unwrap();
        assert_eq!(subsets, vec![s.clone(), soft(&[("e2", &[])])]);
    }

    #[test]
    fn enumeration_guard() {
        let u = Universe::new((0..13).map(|i| format!("x{i}"))).unwrap();
        let e = Universe::new(["e"]).unwrap();
        let big = SoftSet::absolute(u, e, &["e"]).unwrap();
        assert!(matches!(
            big.enumerate_soft_subsets(),
            Err(Error::CapacityExceeded(_))
        ));

        let u = Universe::new((0..12).map(|i| format!("x{i}"))).unwrap();
        let e = Universe::new(["a", "b", "c"]).unwrap();
        let wide = SoftSet::absolute(u, e, &["a", "b", "c"]).unwrap();
        assert!(matches!(
            wide.enumerate_soft_subsets(),
            Err(Error::CapacityExceeded(_))
        ));
    }

    #[test]
    fn alpha_cut_soft_set() {
        let pqr = Universe::new(["p", "q", "r"]).unwrap();
        let f = FuzzySet::new(pqr, vec![0.2, 0.5, 0.9]).unwrap();
        let grid = default_alpha_grid(&f);
        assert_eq!(grid, vec![0.0, 0.2, 0.5, 0.9]);
        let s = SoftSet::from_fuzzy(&f, &grid).unwrap();
        let values: Vec<Vec<&str>> = s.entries().into_iter().map(|(_, v)| v).collect();
        assert_eq!(
            values,
            vec![
                vec!["p", "q", "r"],
                vec!["p", "q", "r"],
                vec!["q", "r"],
                vec!["r"]
            ]
        );
        assert_eq!(s.support(), vec!["0", "0.2", "0.5", "0.9"]);
        assert_eq!(
            SoftSet::from_fuzzy(&f, &[0.3, 1.2]),
            Err(Error::AlphaOutOfRange(1.2))
        );
    }
}
