//! Built-in parabolic data.

use serde::{Deserialize, Serialize};

use crate::dynkin::{diagram_of, gamma_from_label, validate_datum, GammaLabel};
use crate::error::{Error, Result};
use crate::relroot::{project, RelativeRootSystem};
use crate::rootsys::{build_root_system, Series};

/// A datum `(series, rank, Γ, J)`; `j = None` means all nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub series: Series,
    pub rank: usize,
    pub gamma: GammaLabel,
    pub j: Option<Vec<usize>>,
}

impl CatalogEntry {
    pub fn new(name: impl Into<String>, series: Series, rank: usize, gamma: GammaLabel, j: Option<Vec<usize>>) -> Self {
        CatalogEntry { name: name.into(), series, rank, gamma, j }
    }

    /// Builds the ambient system, validates the datum and projects.
    pub fn resolve(&self) -> Result<RelativeRootSystem> {
        let sys = build_root_system(self.series, self.rank)?;
        let diagram = diagram_of(&sys)?;
        let gamma = gamma_from_label(&diagram, &sys, self.gamma)?;
        let all: Vec<usize> = (0..self.rank).collect();
        let j = self.j.as_deref().unwrap_or(&all);
        if let Some(&bad) = j.iter().find(|&&a| a >= self.rank) {
            return Err(Error::InvalidArgument(format!("node {} out of range for rank {}", bad + 1, self.rank)));
        }
        let datum = validate_datum(&diagram, j, &gamma)?;
        project(&sys, &datum)
    }

    /// `"A 4 --gamma flip --J all"`, with 1-based nodes.
    pub fn spec_string(&self) -> String {
        let j = match &self.j {
            None => "all".to_string(),
            Some(j) => j.iter().map(|a| (a + 1).to_string()).collect::<Vec<_>>().join(","),
        };
        format!("{:?} {} --gamma {} --J {}", self.series, self.rank, self.gamma, j)
    }
}

/// All built-in entries, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    use GammaLabel::{Flip, Trivial, Triality};
    use Series::*;
    vec![
        CatalogEntry::new("A1", A, 1, Trivial, None),
        CatalogEntry::new("A2", A, 2, Trivial, None),
        CatalogEntry::new("A3", A, 3, Trivial, None),
        CatalogEntry::new("B2", B, 2, Trivial, None),
        CatalogEntry::new("C2", C, 2, Trivial, None),
        CatalogEntry::new("B3", B, 3, Trivial, None),
        CatalogEntry::new("C3", C, 3, Trivial, None),
        CatalogEntry::new("G2", G, 2, Trivial, None),
        CatalogEntry::new("D4", D, 4, Trivial, None),
        CatalogEntry::new("F4", F, 4, Trivial, None),
        CatalogEntry::new("B2-J1", B, 2, Trivial, Some(vec![0])),
        CatalogEntry::new("A3-flip-J13", A, 3, Flip, Some(vec![0, 2])),
        CatalogEntry::new("BC-from-A2", A, 2, Flip, None),
        CatalogEntry::new("C-from-A3", A, 3, Flip, None),
        CatalogEntry::new("BC-from-A4", A, 4, Flip, None),
        CatalogEntry::new("C-from-A5", A, 5, Flip, None),
        CatalogEntry::new("BC-from-A6", A, 6, Flip, None),
        CatalogEntry::new("B-from-D4", D, 4, Flip, None),
        CatalogEntry::new("G-from-D4", D, 4, Triality, None),
        CatalogEntry::new("F-from-E6", E, 6, Flip, None),
    ]
}

/// Looks an entry up by name, case-insensitively.
pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name.eq_ignore_ascii_case(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_resolves() {
        for e in catalog() {
            let rel = e.resolve().unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert!(rel.ambient().len() <= 72, "{}", e.name);
        }
    }

    #[test]
    fn labels() {
        let label = |n: &str| catalog_entry(n).unwrap().resolve().unwrap().type_label();
        assert_eq!(label("BC-from-A2"), "BC1");
        assert_eq!(label("BC-from-A4"), "BC2");
        assert_eq!(label("BC-from-A6"), "BC3");
        assert_eq!(label("F-from-E6"), "F4");
        assert_eq!(label("G-from-D4"), "G2");
        assert_eq!(label("B-from-D4"), "B3");
    }

    #[test]
    fn bad_nodes_are_rejected() {
        let e = CatalogEntry::new("x", Series::A, 2, GammaLabel::Trivial, Some(vec![5]));
        assert!(matches!(e.resolve(), Err(Error::InvalidArgument(_))));
        let e = CatalogEntry::new("x", Series::A, 3, GammaLabel::Flip, Some(vec![0]));
        assert!(matches!(e.resolve(), Err(Error::DatumInvalid { .. })));
    }
}
