//! Assessment with linguistic grades and soft-set decision making.
//!
//! Grades map to score intervals on a 0-100 scale. The assessment method
//! averages the intervals of a grade distribution; the decision methods
//! score each alternative of a [`DecisionTable`] and [`rank`] orders them.

use std::fmt;

use crate::error::{Error, Result};
use crate::intervals::{Interval, WeightedIntervalBag};

/// Grade intervals are divided by this before entering choice values.
pub const SCORE_SCALE: f64 = 100.0;
/// Values closer than this are tied.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// Linguistic grades with their score intervals, best grade first.
#[derive(Clone, Debug, PartialEq)]
pub struct GradeScale {
    grades: Vec<(String, Interval)>,
}

impl GradeScale {
    /// Intervals must lie in `[0, 100]`, be pairwise disjoint and be listed
    /// by descending lower endpoint.
    pub fn new(grades: Vec<(String, Interval)>) -> Result<Self> {
        if grades.is_empty() {
            return Err(Error::InvalidScale("no grades".into()));
        }
        for (i, (label, interval)) in grades.iter().enumerate() {
            if interval.lower() < 0.0 || interval.upper() > SCORE_SCALE {
                return Err(Error::InvalidScale(format!(
                    "grade {label} = {interval} leaves the 0-100 scale"
                )));
            }
            if grades[..i].iter().any(|(l, _)| l == label) {
                return Err(Error::InvalidScale(format!("grade {label} listed twice")));
            }
            if let Some((prev_label, prev)) = i.checked_sub(1).map(|j| &grades[j]) {
                if interval.upper() >= prev.lower() {
                    return Err(Error::InvalidScale(format!(
                        "grade {label} = {interval} must lie strictly below {prev_label} = {prev}"
                    )));
                }
            }
        }
        Ok(GradeScale { grades })
    }

    /// A = [85, 100], B = [75, 84], C = [60, 74], D = [50, 59], F = [0, 49].
    pub fn standard() -> Self {
        let g = |label: &str, lo: f64, hi: f64| (label.to_string(), Interval::new(lo, hi).unwrap());
        GradeScale::new(vec![
            g("A", 85.0, 100.0),
            g("B", 75.0, 84.0),
            g("C", 60.0, 74.0),
            g("D", 50.0, 59.0),
            g("F", 0.0, 49.0),
        ])
        .expect("standard scale is well formed")
    }

    pub fn grades(&self) -> &[(String, Interval)] {
        &self.grades
    }

    pub fn interval(&self, label: &str) -> Result<Interval> {
        self.grades
            .iter()
            .find(|(l, _)| l == label)
            .map(|&(_, i)| i)
            .ok_or_else(|| Error::UnknownGrade(label.to_string()))
    }

    /// Grade interval divided by [`SCORE_SCALE`].
    pub fn normalized(&self, label: &str) -> Result<Interval> {
        self.interval(label)?.scale(1.0 / SCORE_SCALE)
    }

    /// Grade whose interval contains `value`. In a gap between intervals
    /// the nearest grade wins, and the better grade on an exact tie.
    pub fn classify(&self, value: f64) -> Result<&str> {
        if !(0.0..=SCORE_SCALE).contains(&value) {
            return Err(Error::ScoreOutOfRange(value));
        }
        let mut best: Option<(&str, f64)> = None;
        for (label, interval) in &self.grades {
            let d = interval.distance_to(value);
            if best.is_none_or(|(_, bd)| d < bd) {
                best = Some((label, d));
            }
        }
        Ok(best.expect("scale is non-empty").0)
    }
}

impl Default for GradeScale {
    fn default() -> Self {
        GradeScale::standard()
    }
}

pub fn classify(value: f64, scale: &GradeScale) -> Result<&str> {
    scale.classify(value)
}

/// How many individuals received each grade.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradeDistribution {
    counts: Vec<(String, u64)>,
}

impl GradeDistribution {
    pub fn new(counts: Vec<(String, u64)>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::EmptyBag);
        }
        if let Some((label, _)) = counts.iter().find(|(_, n)| *n == 0) {
            return Err(Error::ZeroGradeCount(label.clone()));
        }
        Ok(GradeDistribution { counts })
    }

    pub fn counts(&self) -> &[(String, u64)] {
        &self.counts
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Assessment {
    pub mean: Interval,
    pub value: f64,
    pub grade: String,
}

/// Mean interval of the distribution, its midpoint, and the grade of that midpoint.
pub fn assess_mean(dist: &GradeDistribution, scale: &GradeScale) -> Result<Assessment> {
    let entries = dist
        .counts
        .iter()
        .map(|(label, n)| Ok((scale.interval(label)?, *n)))
        .collect::<Result<Vec<_>>>()?;
    let mean = WeightedIntervalBag::new(entries)?.mean();
    let value = mean.representative_value();
    let grade = scale.classify(value)?.to_string();
    Ok(Assessment { mean, value, grade })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Binary(bool),
    Grade(String),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Binary(b) => write!(f, "{}", u8::from(*b)),
            Cell::Grade(g) => f.write_str(g),
        }
    }
}

/// Alternatives by parameters, each cell a 0/1 or a grade label, with
/// optional per-parameter weights.
#[derive(Clone, Debug, PartialEq)]
pub struct DecisionTable {
    alternatives: Vec<String>,
    parameters: Vec<String>,
    cells: Vec<Vec<Cell>>,
    weights: Option<Vec<f64>>,
}

fn check_distinct(kind: &str, labels: &[String]) -> Result<()> {
    if labels.is_empty() {
        return Err(Error::InvalidTable(format!("no {kind}s")));
    }
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(Error::InvalidTable(format!("{kind} `{l}` listed twice")));
        }
    }
    Ok(())
}

impl DecisionTable {
    pub fn new(
        alternatives: Vec<String>,
        parameters: Vec<String>,
        cells: Vec<Vec<Cell>>,
        weights: Option<Vec<f64>>,
    ) -> Result<Self> {
        check_distinct("alternative", &alternatives)?;
        check_distinct("parameter", &parameters)?;
        if cells.len() != alternatives.len() {
            return Err(Error::InvalidTable(format!(
                "{} rows for {} alternatives",
                cells.len(),
                alternatives.len()
            )));
        }
        for (alt, row) in alternatives.iter().zip(&cells) {
            if row.len() != parameters.len() {
                return Err(Error::InvalidTable(format!(
                    "row `{alt}` has {} cells, expected {}",
                    row.len(),
                    parameters.len()
                )));
            }
        }
        if let Some(w) = &weights {
            if w.len() != parameters.len() {
                let missing = parameters.get(w.len()).cloned().unwrap_or_default();
                return Err(Error::MissingWeight(missing));
            }
            for (parameter, &weight) in parameters.iter().zip(w) {
                if !(weight > 0.0 && weight <= 1.0) {
                    return Err(Error::InvalidWeight {
                        parameter: parameter.clone(),
                        weight,
                    });
                }
            }
        }
        Ok(DecisionTable {
            alternatives,
            parameters,
            cells,
            weights,
        })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn cells(&self) -> &[Vec<Cell>] {
        &self.cells
    }

    pub fn row(&self, alternative: &str) -> Option<&[Cell]> {
        let i = self.alternatives.iter().position(|a| a == alternative)?;
        Some(&self.cells[i])
    }

    pub fn weights(&self) -> Option<&[f64]> {
        self.weights.as_deref()
    }

    pub fn with_weights(&self, weights: Option<Vec<f64>>) -> Result<Self> {
        DecisionTable::new(
            self.alternatives.clone(),
            self.parameters.clone(),
            self.cells.clone(),
            weights,
        )
    }

    pub fn is_binary(&self) -> bool {
        self.cells
            .iter()
            .flatten()
            .all(|c| matches!(c, Cell::Binary(_)))
    }

    /// Checks every grade cell resolves in `scale`.
    pub fn validate_grades(&self, scale: &GradeScale) -> Result<()> {
        for cell in self.cells.iter().flatten() {
            if let Cell::Grade(g) = cell {
                scale.interval(g)?;
            }
        }
        Ok(())
    }
}

/// Choice value per alternative, in table order.
#[derive(Clone, Debug, PartialEq)]
pub struct ChoiceValues(Vec<(String, f64)>);

impl ChoiceValues {
    pub fn new(values: Vec<(String, f64)>) -> Self {
        ChoiceValues(values)
    }

    pub fn get(&self, alternative: &str) -> Option<f64> {
        self.0
            .iter()
            .find(|(a, _)| a == alternative)
            .map(|&(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.0.iter().map(|(a, v)| (a.as_str(), *v))
    }

    pub fn values(&self) -> Vec<f64> {
        self.0.iter().map(|&(_, v)| v).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// One alternative's score split into its crisp part and the interval
/// whose midpoint is added to it.
#[derive(Clone, Debug, PartialEq)]
pub struct ChoiceBreakdown {
    pub alternative: String,
    pub binary: f64,
    pub grades: Option<Interval>,
}

impl ChoiceBreakdown {
    pub fn value(&self) -> f64 {
        self.binary + self.grades.map_or(0.0, |i| i.representative_value())
    }
}

fn collect(rows: Vec<ChoiceBreakdown>) -> ChoiceValues {
    ChoiceValues(
        rows.into_iter()
            .map(|r| (r.alternative.clone(), r.value()))
            .collect(),
    )
}

/// Row sums of an all-binary table.
pub fn maji_choice_values(t: &DecisionTable) -> Result<ChoiceValues> {
    let mut out = Vec::with_capacity(t.alternatives.len());
    for (alt, row) in t.alternatives.iter().zip(&t.cells) {
        let mut sum = 0.0;
        for (param, cell) in t.parameters.iter().zip(row) {
            match cell {
                Cell::Binary(b) => sum += f64::from(u8::from(*b)),
                Cell::Grade(_) => {
                    return Err(Error::GradeCell {
                        alternative: alt.clone(),
                        parameter: param.clone(),
                    })
                }
            }
        }
        out.push((alt.clone(), sum));
    }
    Ok(ChoiceValues(out))
}

fn breakdown(
    t: &DecisionTable,
    scale: &GradeScale,
    weights: Option<&[f64]>,
) -> Result<Vec<ChoiceBreakdown>> {
    let weight = |j: usize| weights.map_or(1.0, |w| w[j]);
    t.alternatives
        .iter()
        .zip(&t.cells)
        .map(|(alt, row)| {
            let mut binary = 0.0;
            let mut grades: Option<Interval> = None;
            for (j, cell) in row.iter().enumerate() {
                match cell {
                    Cell::Binary(true) => binary += weight(j),
                    Cell::Binary(false) => {}
                    Cell::Grade(g) => {
                        let term = scale.normalized(g)?.scale(weight(j))?;
                        grades = Some(grades.map_or(term, |acc| acc + term));
                    }
                }
            }
            Ok(ChoiceBreakdown {
                alternative: alt.clone(),
                binary,
                grades,
            })
        })
        .collect()
}

/// Per-row crisp and interval parts of the hybrid choice value.
pub fn hybrid_breakdown(t: &DecisionTable, scale: &GradeScale) -> Result<Vec<ChoiceBreakdown>> {
    breakdown(t, scale, None)
}

/// Per-row crisp and interval parts of the weighted choice value.
pub fn weighted_breakdown(t: &DecisionTable, scale: &GradeScale) -> Result<Vec<ChoiceBreakdown>> {
    let weights = t
        .weights()
        .ok_or_else(|| Error::MissingWeight(t.parameters[0].clone()))?;
    breakdown(t, scale, Some(weights))
}

/// Sum of binary cells plus the midpoint of the summed, normalized grade
/// intervals. Weights on the table, if any, are ignored.
pub fn hybrid_choice_values(t: &DecisionTable, scale: &GradeScale) -> Result<ChoiceValues> {
    hybrid_breakdown(t, scale).map(collect)
}

/// Column weight for every binary 1, plus the midpoint of the sum of
/// weight-scaled normalized grade intervals.
pub fn weighted_choice_values(t: &DecisionTable, scale: &GradeScale) -> Result<ChoiceValues> {
    weighted_breakdown(t, scale).map(collect)
}

/// Alternatives grouped by value, best group first. Values within
/// [`TIE_TOLERANCE`] of a group's leading value join that group; inside
/// a group the input order is kept.
pub fn rank(values: &ChoiceValues) -> Vec<Vec<String>> {
    let mut order: Vec<usize> = (0..values.0.len()).collect();
    order.sort_by(|&a, &b| values.0[b].1.total_cmp(&values.0[a].1));

    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in order {
        match groups.last_mut() {
            Some(group) if (values.0[group[0]].1 - values.0[i].1).abs() <= TIE_TOLERANCE => {
                group.push(i)
            }
            _ => groups.push(vec![i]),
        }
    }
    groups
        .into_iter()
        .map(|mut g| {
            g.sort_unstable();
            g.into_iter().map(|i| values.0[i].0.clone()).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-9;

    fn labels(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn cell(s: &str) -> Cell {
        match s {
            "0" => Cell::Binary(false),
            "1" => Cell::Binary(true),
            g => Cell::Grade(g.to_string()),
        }
    }

    fn table(rows: &[[&str; 4]], weights: Option<Vec<f64>>) -> DecisionTable {
        let alts: Vec<String> = (1..=rows.len()).map(|i| format!("H{i}")).collect();
        DecisionTable::new(
            alts,
            labels(&["e1", "e2", "e3", "e4"]),
            rows.iter()
                .map(|r| r.iter().map(|c| cell(c)).collect())
                .collect(),
            weights,
        )
        .unwrap()
    }

    const TABLE_2: [[&str; 4]; 6] = [
        ["1", "0", "0", "0"],
        ["1", "1", "0", "0"],
        ["0", "1", "1", "0"],
        ["0", "0", "0", "1"],
        ["0", "1", "1", "0"],
        ["1", "1", "0", "0"],
    ];

    const TABLE_3: [[&str; 4]; 6] = [
        ["A", "0", "0", "C"],
        ["A", "1", "0", "F"],
        ["C", "1", "1", "C"],
        ["D", "0", "0", "A"],
        ["D", "1", "1", "C"],
        ["A", "1", "0", "D"],
    ];

    fn assert_values(values: &ChoiceValues, expected: &[f64]) {
        for (got, want) in values.values().iter().zip(expected) {
            assert!((got - want).abs() <= TOL, "{got} vs {want}");
        }
        assert_eq!(values.len(), expected.len());
    }

    #[test]
    fn scale_validation() {
        let iv = |a, b| Interval::new(a, b).unwrap();
        assert!(GradeScale::new(vec![
            ("A".into(), iv(50.0, 100.0)),
            ("B".into(), iv(40.0, 60.0))
        ])
        .is_err());
        assert!(GradeScale::new(vec![
            ("B".into(), iv(0.0, 10.0)),
            ("A".into(), iv(20.0, 30.0))
        ])
        .is_err());
        assert!(GradeScale::new(vec![("A".into(), iv(90.0, 120.0))]).is_err());
        assert!(GradeScale::new(vec![]).is_err());
        // alternative scale with a different split
        assert!(GradeScale::new(vec![
            ("A".into(), iv(80.0, 100.0)),
            ("B".into(), iv(70.0, 79.0)),
            ("C".into(), iv(60.0, 69.0)),
            ("D".into(), iv(50.0, 59.0)),
            ("F".into(), iv(0.0, 49.0)),
        ])
        .is_ok());
    }

    #[test]
    fn classification() {
        let s = GradeScale::standard();
        assert_eq!(s.classify(69.075).unwrap(), "C");
        assert_eq!(s.classify(100.0).unwrap(), "A");
        assert_eq!(s.classify(0.0).unwrap(), "F");
        assert_eq!(s.classify(84.5).unwrap(), "A");
        assert_eq!(s.classify(84.2).unwrap(), "B");
        assert_eq!(s.classify(49.5).unwrap(), "D");
        assert_eq!(s.classify(100.5), Err(Error::ScoreOutOfRange(100.5)));
        assert_eq!(s.classify(-1.0), Err(Error::ScoreOutOfRange(-1.0)));
    }

    #[test]
    fn assessment() {
        let s = GradeScale::standard();
        let dist = GradeDistribution::new(
            [("A", 3), ("B", 7), ("C", 5), ("D", 3), ("F", 2)]
                .iter()
                .map(|&(l, n)| (l.to_string(), n))
                .collect(),
        )
        .unwrap();
        let a = assess_mean(&dist, &s).unwrap();
        assert!(a.mean.approx_eq(&Interval::new(61.5, 76.65).unwrap(), TOL));
        assert!((a.value - 69.075).abs() <= TOL);
        assert_eq!(a.grade, "C");

        let only_a = GradeDistribution::new(vec![("A".into(), 4)]).unwrap();
        let a = assess_mean(&only_a, &s).unwrap();
        assert!(a.mean.approx_eq(&Interval::new(85.0, 100.0).unwrap(), TOL));
        assert_eq!((a.value, a.grade.as_str()), (92.5, "A"));

        let split = GradeDistribution::new(vec![("A".into(), 1), ("F".into(), 1)]).unwrap();
        let a = assess_mean(&split, &s).unwrap();
        assert!(a.mean.approx_eq(&Interval::new(42.5, 74.5).unwrap(), TOL));
        assert!((a.value - 58.5).abs() <= TOL);
        assert_eq!(a.grade, "D");

        let unknown = GradeDistribution::new(vec![("A".into(), 3), ("Q".into(), 1)]).unwrap();
        assert_eq!(
            assess_mean(&unknown, &s),
            Err(Error::UnknownGrade("Q".into()))
        );
        assert!(GradeDistribution::new(vec![("A".into(), 0)]).is_err());
    }

    #[test]
    fn maji_on_binary_table() {
        let t = table(&TABLE_2, None);
        let v = maji_choice_values(&t).unwrap();
        assert_values(&v, &[1.0, 2.0, 2.0, 1.0, 2.0, 2.0]);
        assert_eq!(rank(&v)[0], labels(&["H2", "H3", "H5", "H6"]));
        assert_eq!(rank(&v)[1], labels(&["H1", "H4"]));
        assert!(matches!(
            maji_choice_values(&table(&TABLE_3, None)),
            Err(Error::GradeCell { .. })
        ));
    }

    #[test]
    fn hybrid_on_graded_table() {
        let t = table(&TABLE_3, None);
        let v = hybrid_choice_values(&t, &GradeScale::standard()).unwrap();
        assert_values(&v, &[1.595, 2.17, 3.34, 1.47, 3.215, 2.47]);
        assert_eq!(rank(&v)[0], labels(&["H3"]));

        let binary = table(&TABLE_2, None);
        assert_eq!(
            hybrid_choice_values(&binary, &GradeScale::standard()).unwrap(),
            maji_choice_values(&binary).unwrap()
        );

        let single =
            DecisionTable::new(labels(&["x"]), labels(&["e"]), vec![vec![cell("A")]], None)
                .unwrap();
        assert_values(
            &hybrid_choice_values(&single, &GradeScale::standard()).unwrap(),
            &[0.925],
        );

        let bad = DecisionTable::new(labels(&["x"]), labels(&["e"]), vec![vec![cell("Z")]], None)
            .unwrap();
        assert_eq!(
            hybrid_choice_values(&bad, &GradeScale::standard()),
            Err(Error::UnknownGrade("Z".into()))
        );
    }

    #[test]
    fn weighted_on_graded_table() {
        let t = table(&TABLE_3, Some(vec![0.9, 0.7, 0.6, 0.5]));
        let v = weighted_choice_values(&t, &GradeScale::standard()).unwrap();
        assert_values(&v, &[1.1675, 1.655, 2.238, 0.953, 2.1255, 1.805]);
        assert_eq!(rank(&v)[0], labels(&["H3"]));

        let rows = weighted_breakdown(&t, &GradeScale::standard()).unwrap();
        assert!(rows[0]
            .grades
            .unwrap()
            .approx_eq(&Interval::new(1.065, 1.27).unwrap(), TOL));

        let unit = table(&TABLE_3, Some(vec![1.0; 4]));
        let w = weighted_choice_values(&unit, &GradeScale::standard()).unwrap();
        assert_values(
            &w,
            &hybrid_choice_values(&unit, &GradeScale::standard())
                .unwrap()
                .values(),
        );

        assert!(matches!(
            weighted_choice_values(&table(&TABLE_3, None), &GradeScale::standard()),
            Err(Error::MissingWeight(_))
        ));
    }

    #[test]
    fn table_validation() {
        let cells = vec![vec![cell("1"), cell("0")]];
        assert!(DecisionTable::new(
            labels(&["x"]),
            labels(&["a", "b"]),
            cells.clone(),
            Some(vec![0.5])
        )
        .is_err());
        assert!(matches!(
            DecisionTable::new(
                labels(&["x"]),
                labels(&["a", "b"]),
                cells.clone(),
                Some(vec![0.5, 1.5])
            ),
            Err(Error::InvalidWeight { .. })
        ));
        assert!(DecisionTable::new(labels(&["x"]), labels(&["a"]), cells.clone(), None).is_err());
        assert!(DecisionTable::new(labels(&["x", "x"]), labels(&["a", "b"]), cells, None).is_err());
    }

    #[test]
    fn rank_reports_ties_in_input_order() {
        let v = ChoiceValues::new(vec![
            ("a".into(), 1.0),
            ("b".into(), 3.0),
            ("c".into(), 1.0 + 1e-12),
            ("d".into(), 3.0),
        ]);
        assert_eq!(rank(&v), vec![labels(&["b", "d"]), labels(&["a", "c"])]);
        let zero = table(&[["0", "0", "0", "0"]], None);
        assert_values(&maji_choice_values(&zero).unwrap(), &[0.0]);
    }
}
