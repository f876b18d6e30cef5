//! Input builders shared by the benchmarks.

use fuzzysoft_core::{Cell, DecisionTable, FuzzySet, FuzzyTopology, SoftSet, Universe};

pub fn universe(prefix: &str, n: usize) -> Universe {
    Universe::new((0..n).map(|i| format!("{prefix}{i}"))).expect("labels are distinct")
}

/// Soft set over `n` points and `k` parameters; parameter `j` holds every
/// point whose index is not divisible by `j + 2`.
pub fn dense_soft_set(n: usize, k: usize) -> SoftSet {
    let u = universe("x", n);
    let e = universe("e", k);
    let entries: Vec<(String, Vec<String>)> = (0..k)
        .map(|j| {
            let members = (0..n)
                .filter(|i| i % (j + 2) != 0)
                .map(|i| format!("x{i}"))
                .collect();
            (format!("e{j}"), members)
        })
        .collect();
    SoftSet::new(u, e, entries).expect("labels come from the universes")
}

/// All crisp subsets of an `n`-point universe as a fuzzy family.
pub fn crisp_power_topology(n: usize) -> FuzzyTopology {
    let u = universe("u", n);
    let opens = (0u32..1 << n)
        .map(|bits| {
            let m = (0..n).map(|i| f64::from(bits >> i & 1)).collect();
            FuzzySet::new(u.clone(), m).expect("degrees are 0 or 1")
        })
        .collect();
    FuzzyTopology::new(u, opens).expect("subsets are distinct")
}

/// Graded decision table with `rows` alternatives and `cols` parameters.
pub fn graded_table(rows: usize, cols: usize) -> DecisionTable {
    let grades = ["A", "B", "C", "D", "F"];
    let cells = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| match (i + j) % 7 {
                    0 => Cell::Binary(false),
                    1 => Cell::Binary(true),
                    k => Cell::Grade(grades[k % grades.len()].to_string()),
                })
                .collect()
        })
        .collect();
    let parameters: Vec<String> = (0..cols).map(|j| format!("e{j}")).collect();
    let weights = (0..cols).map(|j| 1.0 / (j as f64 + 1.0)).collect();
    DecisionTable::new(
        (0..rows).map(|i| format!("H{i}")).collect(),
        parameters,
        cells,
        Some(weights),
    )
    .expect("table is rectangular")
}
