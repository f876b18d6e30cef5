use std::collections::BTreeMap;
use std::fmt;

use super::Verdict;
use crate::error::{Error, Result};
use crate::soft_sets::SoftSet;
use crate::universe::{ElementMap, Universe};

/// Why a family of soft sets fails to be a soft topology. Positions refer
/// to the family as given.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SoftAxiomViolation {
    MissingNull,
    MissingAbsolute,
    UnionNotOpen(usize, usize),
    IntersectionNotOpen(usize, usize),
}

impl fmt::Display for SoftAxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SoftAxiomViolation::MissingNull => f.write_str("null soft set absent"),
            SoftAxiomViolation::MissingAbsolute => f.write_str("absolute soft set absent"),
            SoftAxiomViolation::UnionNotOpen(i, j) => {
                write!(f, "union of opens #{i} and #{j} not in family")
            }
            SoftAxiomViolation::IntersectionNotOpen(i, j) => {
                write!(f, "intersection of opens #{i} and #{j} not in family")
            }
        }
    }
}

/// A finite family of soft sets over `(U, E)`.
///
/// Members are compared after extension to the full parameter universe,
/// so a null soft set on any support matches `E∅`.
#[derive(Clone, Debug, PartialEq)]
pub struct SoftTopology {
    universe: Universe,
    parameters: Universe,
    opens: Vec<SoftSet>,
    canonical: Vec<SoftSet>,
}

impl SoftTopology {
    pub fn new(universe: Universe, parameters: Universe, opens: Vec<SoftSet>) -> Result<Self> {
        let mut canonical: Vec<SoftSet> = Vec::with_capacity(opens.len());
        for (i, open) in opens.iter().enumerate() {
            if open.universe() != &universe || open.parameters() != &parameters {
                return Err(Error::UniverseMismatch);
            }
            let c = open.canonicalize();
            if canonical.contains(&c) {
                return Err(Error::DuplicateOpen(i));
            }
            canonical.push(c);
        }
        Ok(SoftTopology {
            universe,
            parameters,
            opens,
            canonical,
        })
    }

    /// `{E∅, E_U}`.
    pub fn discrete(universe: Universe, parameters: Universe) -> Self {
        let opens = vec![
            SoftSet::null_over_all(universe.clone(), parameters.clone()),
            SoftSet::absolute_over_all(universe.clone(), parameters.clone()),
        ];
        SoftTopology::new(universe, parameters, opens).expect("null and absolute differ")
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn parameters(&self) -> &Universe {
        &self.parameters
    }

    pub fn opens(&self) -> &[SoftSet] {
        &self.opens
    }

    /// Position of the open equal to `set` after canonicalization.
    pub fn position(&self, set: &SoftSet) -> Option<usize> {
        let c = set.canonicalize();
        self.canonical.iter().position(|o| *o == c)
    }

    pub fn contains(&self, set: &SoftSet) -> bool {
        self.position(set).is_some()
    }

    pub fn check_axioms(&self) -> Verdict<SoftAxiomViolation> {
        if !self.contains(&SoftSet::null_over_all(
            self.universe.clone(),
            self.parameters.clone(),
        )) {
            return Verdict::Fails(SoftAxiomViolation::MissingNull);
        }
        if !self.contains(&SoftSet::absolute_over_all(
            self.universe.clone(),
            self.parameters.clone(),
        )) {
            return Verdict::Fails(SoftAxiomViolation::MissingAbsolute);
        }
        for (i, a) in self.canonical.iter().enumerate() {
            for (j, b) in self.canonical.iter().enumerate().skip(i + 1) {
                if !self.contains(&a.union(b).expect("shared universes")) {
                    return Verdict::Fails(SoftAxiomViolation::UnionNotOpen(i, j));
                }
                if !self.contains(&a.intersect(b).expect("shared universes")) {
                    return Verdict::Fails(SoftAxiomViolation::IntersectionNotOpen(i, j));
                }
            }
        }
        Verdict::Holds
    }

    pub fn is_soft_topology(&self) -> bool {
        self.check_axioms().holds()
    }
}

/// A map on points `u: U → V` paired with a map on parameters `p: A → B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointParameterMaps {
    pub points: ElementMap,
    pub parameters: ElementMap,
}

impl PointParameterMaps {
    pub fn new(points: ElementMap, parameters: ElementMap) -> Self {
        PointParameterMaps { points, parameters }
    }

    pub fn identity(universe: Universe, parameters: Universe) -> Self {
        PointParameterMaps {
            points: ElementMap::identity(universe),
            parameters: ElementMap::identity(parameters),
        }
    }
}

/// Image of `(F, A)`: support `p(A)`, and at each `y` the union of
/// `u(F(x))` over the parameters `x ∈ A` with `p(x) = y`.
pub fn soft_image(maps: &PointParameterMaps, f: &SoftSet) -> Result<SoftSet> {
    if f.universe() != maps.points.domain() || f.parameters() != maps.parameters.domain() {
        return Err(Error::UniverseMismatch);
    }
    let target_len = maps.points.codomain().len();
    let mut approximation: BTreeMap<usize, Vec<bool>> = BTreeMap::new();
    for (&x, value) in f.approximation() {
        let slot = approximation
            .entry(maps.parameters.apply(x))
            .or_insert_with(|| vec![false; target_len]);
        for (point, _) in value.iter().enumerate().filter(|(_, &m)| m) {
            slot[maps.points.apply(point)] = true;
        }
    }
    Ok(SoftSet::from_parts(
        maps.points.codomain().clone(),
        maps.parameters.codomain().clone(),
        approximation,
    ))
}

/// Inverse image of `(G, B)`: support `p⁻¹(B)`, value `u⁻¹(G(p(x)))`.
pub fn soft_preimage(maps: &PointParameterMaps, g: &SoftSet) -> Result<SoftSet> {
    if g.universe() != maps.points.codomain() || g.parameters() != maps.parameters.codomain() {
        return Err(Error::UniverseMismatch);
    }
    let domain_len = maps.points.domain().len();
    let approximation = (0..maps.parameters.domain().len())
        .filter_map(|x| {
            let value = g.approximation().get(&maps.parameters.apply(x))?;
            let pulled = (0..domain_len)
                .map(|i| value[maps.points.apply(i)])
                .collect();
            Some((x, pulled))
        })
        .collect();
    Ok(SoftSet::from_parts(
        maps.points.domain().clone(),
        maps.parameters.domain().clone(),
        approximation,
    ))
}

/// Preimage of every open of `sv` must be (canonically) open in `tu`;
/// fails with the position of the first open of `sv` whose preimage is not.
pub fn is_pu_continuous(
    tu: &SoftTopology,
    sv: &SoftTopology,
    maps: &PointParameterMaps,
) -> Result<Verdict<usize>> {
    if tu.universe() != maps.points.domain()
        || tu.parameters() != maps.parameters.domain()
        || sv.universe() != maps.points.codomain()
        || sv.parameters() != maps.parameters.codomain()
    {
        return Err(Error::UniverseMismatch);
    }
    for (i, open) in sv.opens().iter().enumerate() {
        if !tu.contains(&soft_preimage(maps, open)?) {
            return Ok(Verdict::Fails(i));
        }
    }
    Ok(Verdict::Holds)
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

    fn example_family() -> Vec<SoftSet> {
        let (u, e) = houses();
        vec![
            SoftSet::absolute_over_all(u, e.clone()),
            // null on the sub-support {e1, e2}; matches E∅ only canonically
            soft(&[("e1", &[]), ("e2", &[])]),
            soft(&[("e1", &["H1", "H2"]), ("e2", &["H2", "H3"])]),
            soft(&[("e1", &["H2"])]),
            soft(&[("e1", &["H1", "H2"])]),
            soft(&[("e1", &["H1", "H2"]), ("e2", &["H2"])]),
        ]
    }

    #[test]
    fn example_family_is_a_soft_topology() {
        let (u, e) = houses();
        let t = SoftTopology::new(u.clone(), e.clone(), example_family()).unwrap();
        assert_eq!(t.check_axioms(), Verdict::Holds);
        assert!(SoftTopology::discrete(u, e).is_soft_topology());
    }

    #[test]
    fn missing_union_is_reported() {
        let (u, e) = houses();
        let family = vec![
            SoftSet::absolute_over_all(u.clone(), e.clone()),
            SoftSet::null_over_all(u.clone(), e.clone()),
            soft(&[("e1", &["H2"])]),
            soft(&[("e2", &["H3"])]),
        ];
        let t = SoftTopology::new(u.clone(), e.clone(), family).unwrap();
        assert_eq!(
            t.check_axioms(),
            Verdict::Fails(SoftAxiomViolation::UnionNotOpen(2, 3))
        );

        let t = SoftTopology::new(
            u.clone(),
            e.clone(),
            vec![SoftSet::null_over_all(u.clone(), e.clone())],
        )
        .unwrap();
        assert_eq!(
            t.check_axioms(),
            Verdict::Fails(SoftAxiomViolation::MissingAbsolute)
        );
        let t = SoftTopology::new(u.clone(), e.clone(), vec![SoftSet::absolute_over_all(u, e)])
            .unwrap();
        assert_eq!(
            t.check_axioms(),
            Verdict::Fails(SoftAxiomViolation::MissingNull)
        );
    }

    #[test]
    fn canonical_duplicates_rejected() {
        let (u, e) = houses();
        let family = vec![
            SoftSet::null_over_all(u.clone(), e.clone()),
            soft(&[("e2", &[])]),
        ];
        assert_eq!(
            SoftTopology::new(u, e, family),
            Err(Error::DuplicateOpen(1))
        );
    }

    #[test]
    fn image_and_preimage() {
        let (u, e) = houses();
        let id = PointParameterMaps::identity(u.clone(), e.clone());
        let s = soft(&[("e1", &["H1"]), ("e2", &["H2"])]);
        assert_eq!(soft_image(&id, &s).unwrap(), s);
        assert_eq!(soft_preimage(&id, &s).unwrap(), s);

        let d = Universe::new(["d", "x"]).unwrap();
        let p = ElementMap::new(
            e.clone(),
            d.clone(),
            [("e1", "d"), ("e2", "d"), ("e3", "x")],
        )
        .unwrap();
        let maps = PointParameterMaps::new(ElementMap::identity(u.clone()), p);
        let img = soft_image(&maps, &s).unwrap();
        assert_eq!(img.support(), vec!["d"]);
        assert_eq!(img.value_set("d").unwrap().labels(), vec!["H1", "H2"]);

        let g = SoftSet::new(u.clone(), d, [("d", ["H2"])]).unwrap();
        let pre = soft_preimage(&maps, &g).unwrap();
        assert_eq!(pre, soft(&[("e1", &["H2"]), ("e2", &["H2"])]));
        assert_eq!(soft_preimage(&maps, &s), Err(Error::UniverseMismatch));
    }

    #[test]
    fn pu_continuity() {
        let (u, e) = houses();
        let tu = SoftTopology::new(u.clone(), e.clone(), example_family()).unwrap();
        let id = PointParameterMaps::identity(u.clone(), e.clone());
        let coarser =
            SoftTopology::new(u.clone(), e.clone(), example_family()[..3].to_vec()).unwrap();
        assert!(is_pu_continuous(&tu, &coarser, &id).unwrap().holds());
        assert!(
            is_pu_continuous(&tu, &SoftTopology::discrete(u.clone(), e.clone()), &id)
                .unwrap()
                .holds()
        );

        let v = Universe::new(["a", "b"]).unwrap();
        let b = Universe::new(["p"]).unwrap();
        let maps = PointParameterMaps::new(
            ElementMap::new(
                u.clone(),
                v.clone(),
                [("H1", "a"), ("H2", "a"), ("H3", "b")],
            )
            .unwrap(),
            ElementMap::new(
                e.clone(),
                b.clone(),
                [("e1", "p"), ("e2", "p"), ("e3", "p")],
            )
            .unwrap(),
        );
        let sv = SoftTopology::discrete(v.clone(), b.clone());
        assert!(is_pu_continuous(&tu, &sv, &maps).unwrap().holds());

        // preimage of {(p, {a})} is {H1, H2} at every parameter, which tu lacks
        let sv = SoftTopology::new(
            v.clone(),
            b.clone(),
            vec![
                SoftSet::null_over_all(v.clone(), b.clone()),
                SoftSet::absolute_over_all(v.clone(), b.clone()),
                SoftSet::new(v.clone(), b.clone(), [("p", ["a"])]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(
            is_pu_continuous(&tu, &sv, &maps).unwrap(),
            Verdict::Fails(2)
        );
        assert_eq!(
            is_pu_continuous(&sv, &tu, &maps),
            Err(Error::UniverseMismatch)
        );
    }
}
