//! Dynkin diagrams, their automorphisms, and parabolic data `(J, Γ)`.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, Series};

/// A bond between two nodes. For multiplicity above one the arrow points
/// from the long root to the short root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bond {
    pub a: usize,
    pub b: usize,
    pub multiplicity: i64,
    pub arrow: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinDiagram {
    label: String,
    cartan: Vec<Vec<i64>>,
    bonds: Vec<Bond>,
}

/// The Dynkin diagram of a reduced root system, read off the Cartan
/// integers of its simple roots.
pub fn diagram_of(sys: &RootSystem) -> Result<DynkinDiagram> {
    if let Some(t) = sys.types().iter().find(|t| t.series == Series::BC) {
        return Err(Error::UnsupportedType { series: "BC".into(), rank: t.rank });
    }
    let c = sys.cartan().to_vec();
    let g = sys.gram();
    let n = c.len();
    let mut bonds = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if c[a][b] == 0 {
                continue;
            }
            let multiplicity = c[a][b] * c[b][a];
            let arrow = match g[a][a].cmp(&g[b][b]) {
                std::cmp::Ordering::Greater => Some((a, b)),
                std::cmp::Ordering::Less => Some((b, a)),
                std::cmp::Ordering::Equal => None,
            };
            bonds.push(Bond { a, b, multiplicity, arrow });
        }
    }
    Ok(DynkinDiagram { label: sys.label(), cartan: c, bonds })
}

impl DynkinDiagram {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn node_count(&self) -> usize {
        self.cartan.len()
    }

    pub fn bonds(&self) -> &[Bond] {
        &self.bonds
    }

    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.node_count();
        perm.len() == n
            && (0..n).all(|i| (0..n).all(|j| self.cartan[perm[i]][perm[j]] == self.cartan[i][j]))
    }
}

/// A permutation of diagram nodes: node `i` is sent to `self.0[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Automorphism(pub Vec<usize>);

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Automorphism((0..n).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism(other.0.iter().map(|&j| self.0[j]).collect())
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Automorphism(inv)
    }

    /// Linear extension to simple-root coordinates.
    pub fn apply(&self, r: &Root) -> Root {
        let mut c = vec![0; r.dim()];
        for (i, &x) in r.coords().iter().enumerate() {
            c[self.0[i]] = x;
        }
        Root::new(c)
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|j| (j + 1).to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// A group of diagram automorphisms, listed in sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramAutomorphismGroup {
    elements: Vec<Automorphism>,
}

impl DiagramAutomorphismGroup {
    pub fn trivial(n: usize) -> Self {
        DiagramAutomorphismGroup { elements: vec![Automorphism::identity(n)] }
    }

    /// Checks that `elements` are automorphisms of `diagram` forming a group.
    pub fn new(diagram: &DynkinDiagram, elements: Vec<Automorphism>) -> Result<Self> {
        let n = diagram.node_count();
        if let Some(s) = elements.iter().find(|s| !diagram.is_automorphism(&s.0)) {
            return Err(Error::NotAGroup(format!("{s} is not a diagram automorphism")));
        }
        let set: HashSet<&Automorphism> = elements.iter().collect();
        if !set.contains(&Automorphism::identity(n)) {
            return Err(Error::NotAGroup("identity missing".into()));
        }
        for a in &elements {
            if !set.contains(&a.inverse()) {
                return Err(Error::NotAGroup(format!("inverse of {a} missing")));
            }
            for b in &elements {
                let ab = a.compose(b);
                if !set.contains(&ab) {
                    return Err(Error::NotAGroup(format!("{a}∘{b} = {ab} missing")));
                }
            }
        }
        let mut elements: Vec<Automorphism> = set.into_iter().cloned().collect();
        elements.sort();
        Ok(DiagramAutomorphismGroup { elements })
    }

    /// The group generated by `generators`.
    pub fn generated_by(diagram: &DynkinDiagram, generators: &[Automorphism]) -> Result<Self> {
        let n = diagram.node_count();
        let mut elements = vec![Automorphism::identity(n)];
        let mut seen: HashSet<Automorphism> = elements.iter().cloned().collect();
        let mut i = 0;
        while i < elements.len() {
            for g in generators {
                let h = g.compose(&elements[i]);
                if seen.insert(h.clone()) {
                    elements.push(h);
                }
            }
            i += 1;
        }
        Self::new(diagram, elements)
    }

    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Orbits on `nodes`, each sorted, ordered by smallest node.
    pub fn orbits(&self, nodes: &[usize]) -> Vec<Vec<usize>> {
        let mut done: HashSet<usize> = HashSet::new();
        let mut sorted = nodes.to_vec();
        sorted.sort_unstable();
        let mut out = Vec::new();
        for &v in &sorted {
            if done.contains(&v) {
                continue;
            }
            let mut orbit: Vec<usize> = self.elements.iter().map(|s| s.0[v]).collect();
            orbit.sort_unstable();
            orbit.dedup();
            done.extend(orbit.iter().copied());
            out.push(orbit);
        }
        out
    }
}

/// The full automorphism group, by exhaustive search over node
/// permutations that preserve every Cartan integer.
pub fn automorphism_group(diagram: &DynkinDiagram) -> DiagramAutomorphismGroup {
    let n = diagram.node_count();
    let mut found = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(diagram, 0, &mut perm, &mut used, &mut found);
    found.sort();
    DiagramAutomorphismGroup { elements: found }
}

fn extend(
    d: &DynkinDiagram,
    i: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Vec<Automorphism>,
) {
    let n = d.node_count();
    if i == n {
        found.push(Automorphism(perm.clone()));
        return;
    }
    for t in 0..n {
        if used[t] || d.cartan[t][t] != d.cartan[i][i] {
            continue;
        }
        // Partial check against already placed nodes.
        if (0..i).any(|j| d.cartan[perm[j]][t] != d.cartan[j][i] || d.cartan[t][perm[j]] != d.cartan[i][j]) {
            continue;
        }
        perm[i] = t;
        used[t] = true;
        extend(d, i + 1, perm, used, found);
        used[t] = false;
    }
    perm[i] = usize::MAX;
}

/// A Γ-invariant subset `J` of the simple roots together with `Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicDatum {
    j: Vec<usize>,
    gamma: DiagramAutomorphismGroup,
}

impl ParabolicDatum {
    /// Nodes of `J`, sorted, 0-based.
    pub fn j(&self) -> &[usize] {
        &self.j
    }

    pub fn gamma(&self) -> &DiagramAutomorphismGroup {
        &self.gamma
    }
}

/// Validates `(J, Γ)` on `diagram`.
///
/// Violations are reported as `(element index, α, σ(α))` triples.
pub fn validate_datum(
    diagram: &DynkinDiagram,
    j: &[usize],
    gamma: &DiagramAutomorphismGroup,
) -> Result<ParabolicDatum> {
    let n = diagram.node_count();
    if let Some(&bad) = j.iter().find(|&&a| a >= n) {
        return Err(Error::InvalidArgument(format!("node {} is not in the diagram", bad + 1)));
    }
    // Revalidate Γ against this diagram.
    let gamma = DiagramAutomorphismGroup::new(diagram, gamma.elements.clone())?;
    let mut jset: Vec<usize> = j.to_vec();
    jset.sort_unstable();
    jset.dedup();
    let mut violations = Vec::new();
    for (k, s) in gamma.elements.iter().enumerate() {
        for &a in &jset {
            if jset.binary_search(&s.0[a]).is_err() {
                violations.push((k, a, s.0[a]));
            }
        }
    }
    if !violations.is_empty() {
        return Err(Error::DatumInvalid { violations });
    }
    Ok(ParabolicDatum { j: jset, gamma })
}

/// Named choices of Γ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GammaLabel {
    Trivial,
    /// The order-two symmetry of A_n (n ≥ 2), D_n or E_6.
    Flip,
    /// The order-three rotation of the outer nodes of D_4.
    Triality,
}

impl std::str::FromStr for GammaLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "trivial" | "id" => Ok(GammaLabel::Trivial),
            "flip" => Ok(GammaLabel::Flip),
            "triality" => Ok(GammaLabel::Triality),
            _ => Err(Error::InvalidArgument(format!("unknown Γ label {s:?}"))),
        }
    }
}

impl fmt::Display for GammaLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GammaLabel::Trivial => "trivial",
            GammaLabel::Flip => "flip",
            GammaLabel::Triality => "triality",
        })
    }
}

/// Resolves a label to a subgroup of `Aut(diagram)`.
pub fn gamma_from_label(diagram: &DynkinDiagram, sys: &RootSystem, label: GammaLabel) -> Result<DiagramAutomorphismGroup> {
    let n = diagram.node_count();
    let unsupported = || Error::InvalidArgument(format!("Γ = {label} is not defined on {}", diagram.label()));
    let [t] = sys.types() else {
        return match label {
            GammaLabel::Trivial => Ok(DiagramAutomorphismGroup::trivial(n)),
            _ => Err(unsupported()),
        };
    };
    let generator: Vec<usize> = match (label, t.series, t.rank) {
        (GammaLabel::Trivial, _, _) => return Ok(DiagramAutomorphismGroup::trivial(n)),
        (GammaLabel::Flip, Series::A, r) if r >= 2 => (0..r).rev().collect(),
        (GammaLabel::Flip, Series::D, r) => {
            let mut p: Vec<usize> = (0..r).collect();
            p.swap(r - 2, r - 1);
            p
        }
        (GammaLabel::Flip, Series::E, 6) => vec![5, 1, 4, 3, 2, 0],
        (GammaLabel::Triality, Series::D, 4) => vec![2, 1, 3, 0],
        _ => return Err(unsupported()),
    };
    DiagramAutomorphismGroup::generated_by(diagram, &[Automorphism(generator)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn diag(s: Series, n: usize) -> (RootSystem, DynkinDiagram) {
        let sys = build_root_system(s, n).unwrap();
        let d = diagram_of(&sys).unwrap();
        (sys, d)
    }

    #[test]
    fn bonds() {
        let (_, a3) = diag(Series::A, 3);
        assert_eq!(a3.bonds().len(), 2);
        assert!(a3.bonds().iter().all(|b| b.multiplicity == 1 && b.arrow.is_none()));

        let (_, b2) = diag(Series::B, 2);
        assert_eq!(b2.bonds(), &[Bond { a: 0, b: 1, multiplicity: 2, arrow: Some((0, 1)) }]);

        let (_, f4) = diag(Series::F, 4);
        let m: Vec<i64> = f4.bonds().iter().map(|b| b.multiplicity).collect();
        assert_eq!(m, vec![1, 2, 1]);
        assert_eq!(f4.bonds()[1].arrow, Some((1, 2)));
    }

    #[test]
    fn bc_has_no_diagram() {
        let bc = build_root_system(Series::BC, 2).unwrap();
        assert!(matches!(diagram_of(&bc), Err(Error::UnsupportedType { .. })));
    }

    #[test]
    fn automorphism_orders() {
        assert_eq!(automorphism_group(&diag(Series::A, 1).1).order(), 1);
        assert_eq!(automorphism_group(&diag(Series::A, 3).1).order(), 2);
        assert_eq!(automorphism_group(&diag(Series::D, 4).1).order(), 6);
    }

    #[test]
    fn datum_validation() {
        let (sys, a3) = diag(Series::A, 3);
        let flip = gamma_from_label(&a3, &sys, GammaLabel::Flip).unwrap();
        assert!(validate_datum(&a3, &[0, 2], &flip).is_ok());
        let err = validate_datum(&a3, &[0], &flip).unwrap_err();
        assert_eq!(err, Error::DatumInvalid { violations: vec![(1, 0, 2)] });

        let (_, a2) = diag(Series::A, 2);
        assert!(validate_datum(&a2, &[0], &DiagramAutomorphismGroup::trivial(2)).is_ok());
    }

    #[test]
    fn non_group_is_rejected() {
        let (_, d4) = diag(Series::D, 4);
        let rot = Automorphism(vec![2, 1, 3, 0]);
        let err = DiagramAutomorphismGroup::new(&d4, vec![Automorphism::identity(4), rot]).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
    }

    #[test]
    fn triality_orbits() {
        let (sys, d4) = diag(Series::D, 4);
        let g = gamma_from_label(&d4, &sys, GammaLabel::Triality).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.orbits(&[0, 1, 2, 3]), vec![vec![0, 2, 3], vec![1]]);
    }
}
