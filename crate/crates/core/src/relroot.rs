//! The projection `π_{J,Γ}` and relative root systems.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynkin::{diagram_of, validate_datum, ParabolicDatum};
use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, CartanType, Root, RootSystem, Series, UnionFind};

/// Relative roots live in the orbit basis, so they share the integer
/// vector representation of absolute roots.
pub type RelativeRoot = Root;

/// The quotient map `ℤΦ → ℤ^k`, one coordinate per Γ-orbit on `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    rank: usize,
    orbits: Vec<Vec<usize>>,
    kernel_basis: Vec<Root>,
}

impl Projection {
    fn new(rank: usize, datum: &ParabolicDatum) -> Self {
        let orbits = datum.gamma().orbits(datum.j());
        let unit = |i: usize| {
            let mut c = vec![0; rank];
            c[i] = 1;
            c
        };
        let mut kernel: Vec<Root> = (0..rank)
            .filter(|i| !datum.j().contains(i))
            .map(|i| Root::new(unit(i)))
            .collect();
        let mut seen: HashSet<Root> = kernel.iter().cloned().collect();
        for &a in datum.j() {
            for s in datum.gamma().elements() {
                let b = s.0[a];
                if b != a {
                    let mut c = unit(a);
                    c[b] -= 1;
                    let d = Root::new(c);
                    if !seen.contains(&d.neg()) && seen.insert(d.clone()) {
                        kernel.push(d);
                    }
                }
            }
        }
        Projection { rank, orbits, kernel_basis: kernel }
    }

    /// Rank of the source lattice.
    pub fn source_rank(&self) -> usize {
        self.rank
    }

    /// Rank of the target lattice (number of Γ-orbits on `J`).
    pub fn target_rank(&self) -> usize {
        self.orbits.len()
    }

    /// Γ-orbits on `J`, ordered by smallest node; orbit `o` is coordinate `o`.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// Generators of the kernel: the roots of `D∖J` and the differences
    /// `α − σ(α)`.
    pub fn kernel_basis(&self) -> &[Root] {
        &self.kernel_basis
    }

    /// The `k × n` integer matrix of the map.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.orbits
            .iter()
            .map(|o| (0..self.rank).map(|i| i64::from(o.contains(&i))).collect())
            .collect()
    }

    pub fn apply(&self, r: &Root) -> Root {
        Root::new(self.orbits.iter().map(|o| o.iter().map(|&i| r.coords()[i]).sum()).collect())
    }
}

/// Isomorphism type of an irreducible component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComponentType {
    pub cartan: CartanType,
    /// Second Bourbaki label of the same class (`C2` for `B2`).
    pub alias: Option<CartanType>,
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.alias {
            Some(a) => write!(f, "{}={}", self.cartan, a),
            None => write!(f, "{}", self.cartan),
        }
    }
}

/// An irreducible component: the orbit coordinates it spans and its roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub coordinates: Vec<usize>,
    pub roots: Vec<usize>,
    /// `None` when the component is not isomorphic to a Bourbaki root
    /// system; this happens for data `(J, Γ)` that are not Tits indices.
    pub kind: Option<ComponentType>,
    /// Whether the preimage of this component in `Φ_{D,Γ}` meets a
    /// component of type G2.
    pub meets_g2: bool,
}

impl Component {
    pub fn rank(&self) -> usize {
        self.coordinates.len()
    }
}

/// `(α) = {iα ∈ Φ_P | i ≥ 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultipleClass {
    pub base: usize,
    /// `(i, index of iα)`, increasing in `i`.
    pub members: Vec<(i64, usize)>,
}

/// `Φ_P = π_{J,Γ}(Φ) ∖ {0}` with fibers and components.
#[derive(Clone, Debug)]
pub struct RelativeRootSystem {
    ambient: RootSystem,
    datum: ParabolicDatum,
    projection: Projection,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    image: Vec<Option<usize>>,
    fibers: Vec<Vec<usize>>,
    zero_fiber: Vec<usize>,
    simple: Vec<usize>,
    components: Vec<Component>,
    component_of_coord: Vec<usize>,
}

/// Computes `π_{J,Γ}` and the relative system it induces on `Φ`.
pub fn project(sys: &RootSystem, datum: &ParabolicDatum) -> Result<RelativeRootSystem> {
    let diagram = diagram_of(sys)?;
    // Re-check the datum against this particular diagram.
    let datum = validate_datum(&diagram, datum.j(), datum.gamma())?;
    let all: Vec<usize> = (0..sys.rank()).collect();
    let g2_coords: Vec<usize> = if datum.j().len() == sys.rank() {
        Vec::new()
    } else {
        let folded = validate_datum(&diagram, &all, datum.gamma())?;
        let psi = build(sys, &folded, &[])?;
        psi.components
            .iter()
            .filter(|c| c.kind.is_some_and(|t| t.cartan.series == Series::G))
            .flat_map(|c| c.coordinates.iter().map(|&o| psi.projection.orbits[o][0]))
            .collect()
    };
    build(sys, &datum, &g2_coords)
}

/// `g2_nodes` lists nodes of `D` lying in G2 components of `Φ_{D,Γ}`; when
/// `J = D` they are read off this system directly.
fn build(sys: &RootSystem, datum: &ParabolicDatum, g2_nodes: &[usize]) -> Result<RelativeRootSystem> {
    let projection = Projection::new(sys.rank(), datum);
    let images: Vec<Root> = sys.roots().iter().map(|r| projection.apply(r)).collect();
    let mut roots: Vec<Root> = images.iter().filter(|r| !r.is_zero()).cloned().collect();
    roots.sort();
    roots.dedup();
    let index: HashMap<Root, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();

    let mut fibers = vec![Vec::new(); roots.len()];
    let mut zero_fiber = Vec::new();
    let image: Vec<Option<usize>> = images
        .iter()
        .enumerate()
        .map(|(d, r)| {
            let at = index.get(r).copied();
            match at {
                Some(a) => fibers[a].push(d),
                None => zero_fiber.push(d),
            }
            at
        })
        .collect();

    let k = projection.target_rank();
    let simple: Vec<usize> = (0..k)
        .map(|o| {
            let mut c = vec![0; k];
            c[o] = 1;
            index[&Root::new(c)]
        })
        .collect();

    // The unit vectors form a basis of roots, so the fundamental circuit of
    // a root is its support; components are the connected pieces.
    let mut uf = UnionFind::new(k);
    for r in &roots {
        let support: Vec<usize> = (0..k).filter(|&o| r.coords()[o] != 0).collect();
        for w in support.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let groups = uf.groups();
    let mut component_of_coord = vec![0; k];
    for (c, g) in groups.iter().enumerate() {
        for &o in g {
            component_of_coord[o] = c;
        }
    }
    let mut members = vec![Vec::new(); groups.len()];
    for (i, r) in roots.iter().enumerate() {
        let o = r.coords().iter().position(|&x| x != 0).expect("relative roots are nonzero");
        members[component_of_coord[o]].push(i);
    }
    let self_folded = datum.j().len() == sys.rank();
    let mut components = Vec::with_capacity(groups.len());
    for (coordinates, roots_in) in groups.into_iter().zip(members) {
        let local: Vec<Root> = roots_in
            .iter()
            .map(|&i| Root::new(coordinates.iter().map(|&o| roots[i].coords()[o]).collect()))
            .collect();
        let kind = classify(&local, coordinates.len())?;
        let meets_g2 = if self_folded {
            kind.is_some_and(|t| t.cartan.series == Series::G)
        } else {
            coordinates.iter().any(|&o| projection.orbits[o].iter().any(|n| g2_nodes.contains(n)))
        };
        components.push(Component { coordinates, roots: roots_in, kind, meets_g2 });
    }

    Ok(RelativeRootSystem {
        ambient: sys.clone(),
        datum: datum.clone(),
        projection,
        roots,
        index,
        image,
        fibers,
        zero_fiber,
        simple,
        components,
        component_of_coord,
    })
}

const CLASSIFY_ORDER: [Series; 8] = [
    Series::A,
    Series::B,
    Series::C,
    Series::D,
    Series::E,
    Series::F,
    Series::G,
    Series::BC,
];

/// Matches an irreducible configuration, given in the coordinates of a
/// basis of roots with every root a nonnegative or nonpositive combination,
/// against the irreducible types of the same rank. Any isomorphism carries
/// this basis to a base of the target, and bases are conjugate, so it
/// suffices to try permutations of the standard simple roots.
fn classify(local: &[Root], rank: usize) -> Result<Option<ComponentType>> {
    let ours: HashSet<&[i64]> = local.iter().map(Root::coords).collect();
    let mut found: Vec<CartanType> = Vec::new();
    for series in CLASSIFY_ORDER {
        if !series.admits(rank) || series.root_count(rank) != local.len() {
            continue;
        }
        let t = CartanType::new(series, rank)?;
        let target = build_root_system(series, rank)?;
        let matches = permutations(rank).into_iter().any(|p| {
            target.roots().iter().all(|r| {
                let mapped: Vec<i64> = (0..rank).map(|i| r.coords()[p[i]]).collect();
                ours.contains(mapped.as_slice())
            })
        });
        if matches {
            found.push(t);
        }
    }
    // D3 = A3 and B2 = C2 are the only coincidences in the table.
    match found.as_slice() {
        [] => Ok(None),
        [t] => Ok(Some(ComponentType { cartan: *t, alias: None })),
        [t, a, ..] => Ok(Some(ComponentType { cartan: *t, alias: (a.series != Series::D).then_some(*a) })),
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

impl RelativeRootSystem {
    pub fn ambient(&self) -> &RootSystem {
        &self.ambient
    }

    pub fn datum(&self) -> &ParabolicDatum {
        &self.datum
    }

    pub fn projection(&self) -> &Projection {
        &self.projection
    }

    pub fn rank(&self) -> usize {
        self.projection.target_rank()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Relative roots in canonical order (height, then coordinates).
    pub fn roots(&self) -> &[RelativeRoot] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &RelativeRoot {
        &self.roots[i]
    }

    pub fn index_of(&self, r: &RelativeRoot) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn negation(&self, i: usize) -> usize {
        self.index[&self.roots[i].neg()]
    }

    fn require(&self, r: &RelativeRoot) -> Result<usize> {
        self.index_of(r)
            .ok_or_else(|| Error::NotARelativeRoot(r.to_string()))
    }

    /// Index of `π(δ)` for the ambient root `δ`, or `None` when it is zero.
    pub fn image_of(&self, ambient_root: usize) -> Option<usize> {
        self.image[ambient_root]
    }

    /// `π(J)`: indices of the unit vectors, one per orbit.
    pub fn simple_images(&self) -> &[usize] {
        &self.simple
    }

    /// Ambient roots over the relative root with index `i`, canonically ordered.
    pub fn fiber_at(&self, i: usize) -> &[usize] {
        &self.fibers[i]
    }

    /// `{δ ∈ Φ : π(δ) = α}`.
    pub fn fiber(&self, alpha: &RelativeRoot) -> Result<&[usize]> {
        Ok(&self.fibers[self.require(alpha)?])
    }

    /// Ambient roots in the kernel, i.e. `ℤ(D∖J) ∩ Φ`.
    pub fn zero_fiber(&self) -> &[usize] {
        &self.zero_fiber
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Index into [`components`](Self::components) of the component
    /// containing root `i`.
    pub fn component_of(&self, i: usize) -> usize {
        let o = self.roots[i].coords().iter().position(|&x| x != 0).expect("nonzero");
        self.component_of_coord[o]
    }

    /// One type per component; fails if some component is not a
    /// Bourbaki root system.
    pub fn classify_type(&self) -> Result<Vec<ComponentType>> {
        self.components
            .iter()
            .map(|c| c.kind.ok_or(Error::ClassificationFailure(c.rank())))
            .collect()
    }

    /// Type label such as `BC2` or `A1xA1`; unclassified components show as `?n`.
    pub fn type_label(&self) -> String {
        self.components
            .iter()
            .map(|c| c.kind.map_or_else(|| format!("?{}", c.rank()), |t| t.to_string()))
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn multiple_class(&self, alpha: &RelativeRoot) -> Result<MultipleClass> {
        let base = self.require(alpha)?;
        Ok(self.multiple_class_at(base))
    }

    pub fn multiple_class_at(&self, base: usize) -> MultipleClass {
        let alpha = &self.roots[base];
        let mut members = Vec::new();
        let mut i = 1;
        // Roots are bounded, so multiples leave Φ_P after finitely many steps.
        let bound = self.max_abs_coordinate();
        while alpha.coords().iter().all(|&c| (c * i).abs() <= bound) {
            if let Some(m) = self.index_of(&alpha.scale(i)) {
                members.push((i, m));
            }
            i += 1;
        }
        MultipleClass { base, members }
    }

    pub(crate) fn max_abs_coordinate(&self) -> i64 {
        self.roots.iter().flat_map(|r| r.coords().iter().map(|c| c.abs())).max().unwrap_or(0)
    }

    /// Whether `a + b ∈ Ψ` whenever `a, b ∈ Ψ` and `a + b ∈ Φ_P`.
    pub fn is_addition_closed(&self, psi: &[usize]) -> bool {
        let set: HashSet<usize> = psi.iter().copied().collect();
        psi.iter().all(|&a| {
            psi.iter().all(|&b| match self.index_of(&self.roots[a].add(&self.roots[b])) {
                Some(s) => set.contains(&s),
                None => true,
            })
        })
    }

    pub fn relative_height(&self, alpha: &RelativeRoot) -> Result<i64> {
        self.require(alpha)?;
        Ok(alpha.height())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::dynkin::{gamma_from_label, GammaLabel};

    pub(crate) fn folded(s: Series, n: usize, g: GammaLabel, j: Option<&[usize]>) -> RelativeRootSystem {
        let sys = build_root_system(s, n).unwrap();
        let d = diagram_of(&sys).unwrap();
        let gamma = gamma_from_label(&d, &sys, g).unwrap();
        let all: Vec<usize> = (0..n).collect();
        let datum = validate_datum(&d, j.unwrap_or(&all), &gamma).unwrap();
        project(&sys, &datum).unwrap()
    }

    fn r(c: &[i64]) -> Root {
        Root::new(c.to_vec())
    }

    #[test]
    fn a2_flip_is_bc1() {
        let rel = folded(Series::A, 2, GammaLabel::Flip, None);
        let want: Vec<Root> = [[-2], [-1], [1], [2]].iter().map(|c| r(c)).collect();
        assert_eq!(rel.roots(), want.as_slice());
        assert_eq!(rel.type_label(), "BC1");
        let fib: Vec<&Root> = rel.fiber(&r(&[1])).unwrap().iter().map(|&d| rel.ambient().root(d)).collect();
        assert_eq!(fib, vec![&r(&[0, 1]), &r(&[1, 0])]);
        assert_eq!(rel.fiber(&r(&[2])).unwrap().len(), 1);
        assert!(matches!(rel.fiber(&r(&[3])), Err(Error::NotARelativeRoot(_))));
    }

    #[test]
    fn a3_flip_is_the_double_bond_system() {
        let rel = folded(Series::A, 3, GammaLabel::Flip, None);
        let pos: Vec<&Root> = rel.roots().iter().filter(|x| x.is_positive()).collect();
        assert_eq!(pos, vec![&r(&[0, 1]), &r(&[1, 0]), &r(&[1, 1]), &r(&[2, 1])]);
        let t = rel.classify_type().unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].cartan.rank, 2);
        assert_eq!(t[0].alias.map(|a| a.series), Some(Series::C));
        assert_eq!(rel.relative_height(&r(&[2, 1])).unwrap(), 3);
    }

    #[test]
    fn b2_with_one_node_has_rank_one() {
        let rel = folded(Series::B, 2, GammaLabel::Trivial, Some(&[0]));
        assert_eq!(rel.roots(), &[r(&[-1]), r(&[1])]);
        assert_eq!(rel.fiber(&r(&[1])).unwrap().len(), 3);
        assert_eq!(rel.zero_fiber().len(), 2);
    }

    #[test]
    fn a4_flip_fiber() {
        let rel = folded(Series::A, 4, GammaLabel::Flip, None);
        assert_eq!(rel.type_label(), "BC2");
        let fib: Vec<&Root> = rel.fiber(&r(&[1, 1])).unwrap().iter().map(|&d| rel.ambient().root(d)).collect();
        assert_eq!(fib, vec![&r(&[0, 0, 1, 1]), &r(&[1, 1, 0, 0])]);
    }

    #[test]
    fn e6_flip_is_f4_and_triality_is_g2() {
        assert_eq!(folded(Series::E, 6, GammaLabel::Flip, None).type_label(), "F4");
        let g2 = folded(Series::D, 4, GammaLabel::Triality, None);
        assert_eq!(g2.type_label(), "G2");
        assert!(g2.components()[0].meets_g2);
        assert_eq!(folded(Series::D, 4, GammaLabel::Flip, None).type_label(), "B3");
    }

    #[test]
    fn g2_flag_survives_partial_j() {
        let rel = folded(Series::D, 4, GammaLabel::Triality, Some(&[0, 2, 3]));
        assert_eq!(rel.rank(), 1);
        assert!(rel.components()[0].meets_g2);
        assert_eq!(rel.type_label(), "?1");
        assert_eq!(rel.classify_type(), Err(Error::ClassificationFailure(1)));
        let plain = folded(Series::A, 4, GammaLabel::Flip, Some(&[0, 3]));
        assert!(!plain.components()[0].meets_g2);
    }

    #[test]
    fn multiples_and_closure() {
        let rel = folded(Series::A, 2, GammaLabel::Flip, None);
        let cls = rel.multiple_class(&r(&[1])).unwrap();
        assert_eq!(cls.members.iter().map(|m| m.0).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(rel.multiple_class(&r(&[2])).unwrap().members.len(), 1);
        let a = rel.index_of(&r(&[1])).unwrap();
        let a2 = rel.index_of(&r(&[2])).unwrap();
        assert!(!rel.is_addition_closed(&[a]));
        assert!(rel.is_addition_closed(&[a, a2]));
    }

    #[test]
    fn kernel_is_spanned_by_listed_generators() {
        let rel = folded(Series::A, 3, GammaLabel::Flip, Some(&[0, 2]));
        let p = rel.projection();
        assert_eq!(p.matrix(), vec![vec![1, 0, 1]]);
        for k in p.kernel_basis() {
            assert!(p.apply(k).is_zero());
        }
        let rows: Vec<&[i64]> = p.kernel_basis().iter().map(Root::coords).collect();
        assert_eq!(crate::exactlin::int_rank(&rows), 2);
    }
}
