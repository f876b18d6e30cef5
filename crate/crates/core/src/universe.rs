//! Finite, ordered label sets and total maps between them.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A non-empty finite set of distinct labels with a fixed iteration order.
///
/// Cloning is cheap; the label storage is shared.
#[derive(Clone)]
pub struct Universe(Arc<[String]>);

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::DuplicateElement(label.clone()));
            }
        }
        Ok(Universe(labels.into()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.0
    }

    pub fn label(&self, index: usize) -> &str {
        &self.0[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.iter().position(|l| l == label)
    }

    /// Like [`Universe::index_of`] but reports unknown labels as an error.
    pub fn position(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index_of(label).is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// A total function between two universes, stored as an index table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementMap {
    domain: Universe,
    codomain: Universe,
    image: Vec<usize>,
}

impl ElementMap {
    /// Builds a map from `(from, to)` label pairs. Every domain element must
    /// appear exactly once and every target must lie in the codomain.
    pub fn new<I, A, B>(domain: Universe, codomain: Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut image = vec![None; domain.len()];
        for (from, to) in pairs {
            let (from, to) = (from.as_ref(), to.as_ref());
            let i = domain.position(from)?;
            let j = codomain
                .index_of(to)
                .ok_or_else(|| Error::MapOutsideCodomain {
                    from: from.to_string(),
                    to: to.to_string(),
                })?;
            if image[i].replace(j).is_some() {
                return Err(Error::DuplicateElement(from.to_string()));
            }
        }
        let image = image
            .into_iter()
            .enumerate()
            .map(|(i, j)| j.ok_or_else(|| Error::MapNotTotal(domain.label(i).to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(ElementMap {
            domain,
            codomain,
            image,
        })
    }

    pub fn identity(universe: Universe) -> Self {
        let image = (0..universe.len()).collect();
        ElementMap {
            domain: universe.clone(),
            codomain: universe,
            image,
        }
    }

    pub fn domain(&self) -> &Universe {
        &self.domain
    }

    pub fn codomain(&self) -> &Universe {
        &self.codomain
    }

    /// Image of the domain element at `index`, as a codomain index.
    pub fn apply(&self, index: usize) -> usize {
        self.image[index]
    }

    pub fn apply_label(&self, label: &str) -> Result<&str> {
        let i = self.domain.position(label)?;
        Ok(self.codomain.label(self.image[i]))
    }

    /// Domain indices that map onto the codomain element `target`.
    pub fn fiber(&self, target: usize) -> impl Iterator<Item = usize> + '_ {
        self.image
            .iter()
            .enumerate()
            .filter(move |&(_, &j)| j == target)
            .map(|(i, _)| i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_duplicate_labels() {
        assert_eq!(
            Universe::new(Vec::<String>::new()),
            Err(Error::EmptyUniverse)
        );
        assert_eq!(
            Universe::new(["a", "b", "a"]),
            Err(Error::DuplicateElement("a".into()))
        );
    }

    #[test]
    fn map_must_be_total_and_land_in_codomain() {
        let x = Universe::new(["1", "2"]).unwrap();
        let y = Universe::new(["a"]).unwrap();
        assert_eq!(
            ElementMap::new(x.clone(), y.clone(), [("1", "a")]),
            Err(Error::MapNotTotal("2".into()))
        );
        assert!(matches!(
            ElementMap::new(x.clone(), y.clone(), [("1", "a"), ("2", "b")]),
            Err(Error::MapOutsideCodomain { .. })
        ));
        let f = ElementMap::new(x, y, [("1", "a"), ("2", "a")]).unwrap();
        assert_eq!(f.fiber(0).collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(f.apply_label("2").unwrap(), "a");
    }
}
