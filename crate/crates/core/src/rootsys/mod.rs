//! Finite root systems in simple-root coordinates.
//!
//! Roots are integer vectors in the basis of the distinguished simple system.
//! Systems are generated by reflection closure from the Cartan matrix; the
//! non-reduced BC_n is obtained by adjoining the doubles of the short roots
//! of B_n. All root lists are kept in one canonical order: by height, then
//! lexicographically by coordinates.

mod cartan;
mod chain;
mod chambers;

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cartan::{CartanType, Series};
pub use chain::{chain_in, simple_sum_chain};
pub use chambers::{enumerate_positive_systems, PositiveSystem};

/// An integer coordinate vector: a root in simple-root coordinates, or a
/// relative root in the coordinates of a projection.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Root {
        Root(self.0.iter().map(|c| c * k).collect())
    }

    /// `i·self + j·other`.
    pub fn combine(&self, i: i64, other: &Root, j: i64) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| i * a + j * b).collect())
    }

    pub fn is_collinear(&self, other: &Root) -> bool {
        crate::exactlin::int_collinear(&self.0, &other.0)
    }

    /// `Some(k)` if `self = k·base` for an integer `k`.
    pub fn multiple_of(&self, base: &Root) -> Option<i64> {
        let p = base.0.iter().position(|&c| c != 0)?;
        if self.0[p] % base.0[p] != 0 {
            return None;
        }
        let k = self.0[p] / base.0[p];
        (base.scale(k) == *self).then_some(k)
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// A finite root system with a distinguished simple system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    types: Vec<CartanType>,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    simple: Vec<usize>,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
}

/// Builds the irreducible system of the given series and rank.
pub fn build_root_system(series: Series, rank: usize) -> Result<RootSystem> {
    RootSystem::product(&[CartanType::new(series, rank)?])
}

impl RootSystem {
    /// The orthogonal sum of the listed irreducible systems.
    pub fn product(types: &[CartanType]) -> Result<RootSystem> {
        if types.is_empty() {
            return Err(Error::InvalidArgument("empty product of root systems".into()));
        }
        let rank: usize = types.iter().map(|t| t.rank).sum();
        let mut gram = vec![vec![0i64; rank]; rank];
        let mut offset = 0;
        let mut doubled_blocks = Vec::new();
        for t in types {
            let g = cartan::gram(&cartan::euclidean_simple_roots(*t));
            for i in 0..t.rank {
                for j in 0..t.rank {
                    gram[offset + i][offset + j] = g[i][j];
                }
            }
            if t.series == Series::BC {
                doubled_blocks.push(offset..offset + t.rank);
            }
            offset += t.rank;
        }
        let cartan = cartan::cartan_from_gram(&gram);

        let mut roots = reflection_closure(&cartan);
        // Short roots of a B_n block have norm equal to the last simple root.
        for block in doubled_blocks {
            let short = gram[block.end - 1][block.end - 1];
            let doubles: Vec<Root> = roots
                .iter()
                .filter(|r| {
                    r.coords().iter().enumerate().all(|(i, &c)| c == 0 || block.contains(&i))
                        && norm(&gram, r) == short
                })
                .map(|r| r.scale(2))
                .collect();
            roots.extend(doubles);
        }
        roots.sort();

        let index: HashMap<Root, usize> =
            roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let simple = (0..rank)
            .map(|i| {
                let mut c = vec![0; rank];
                c[i] = 1;
                index[&Root(c)]
            })
            .collect();
        Ok(RootSystem { types: types.to_vec(), roots, index, simple, gram, cartan })
    }

    pub fn types(&self) -> &[CartanType] {
        &self.types
    }

    /// Type label such as `A2` or `A1xA1`.
    pub fn label(&self) -> String {
        self.types.iter().map(ToString::to_string).collect::<Vec<_>>().join("x")
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.types.iter().all(CartanType::is_reduced)
    }

    /// All roots in canonical order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    /// Indices of the simple roots α_1, …, α_n (Bourbaki numbering).
    pub fn simple_system(&self) -> &[usize] {
        &self.simple
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.roots.len()).filter(|&i| self.roots[i].is_positive())
    }

    pub fn negation(&self, i: usize) -> usize {
        self.index[&self.roots[i].neg()]
    }

    /// Gram matrix of the invariant form on the simple roots.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// Cartan integers `⟨α_j, α_i^∨⟩` at `[i][j]`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn inner(&self, a: &Root, b: &Root) -> i64 {
        let (a, b) = (a.coords(), b.coords());
        (0..a.len())
            .filter(|&i| a[i] != 0)
            .map(|i| a[i] * (0..b.len()).map(|j| self.gram[i][j] * b[j]).sum::<i64>())
            .sum()
    }

    /// Partition of the roots into irreducible components, via connectivity
    /// of the non-orthogonality graph. Components are listed by their first
    /// root in canonical order.
    pub fn irreducible_components(&self) -> Vec<Vec<usize>> {
        let n = self.roots.len();
        let mut uf = UnionFind::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if self.inner(&self.roots[i], &self.roots[j]) != 0 {
                    uf.union(i, j);
                }
            }
        }
        uf.groups()
    }
}

fn norm(gram: &[Vec<i64>], r: &Root) -> i64 {
    let c = r.coords();
    (0..c.len())
        .map(|i| c[i] * (0..c.len()).map(|j| gram[i][j] * c[j]).sum::<i64>())
        .sum()
}

/// Orbit of the simple roots under the simple reflections
/// `s_i(β) = β - ⟨β, α_i^∨⟩ α_i`.
fn reflection_closure(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut seen: HashSet<Root> = HashSet::new();
    let mut queue: VecDeque<Root> = VecDeque::new();
    for i in 0..n {
        let mut c = vec![0; n];
        c[i] = 1;
        let r = Root(c);
        seen.insert(r.clone());
        queue.push_back(r);
    }
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| b.0[j] * cartan[i][j]).sum();
            if pairing == 0 {
                continue;
            }
            let mut c = b.0.clone();
            c[i] -= pairing;
            let r = Root(c);
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    seen.into_iter().collect()
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }

    /// Classes ordered by smallest member, members ascending.
    pub(crate) fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: HashMap<usize, usize> = HashMap::new();
        let mut out: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            let r = self.find(i);
            let slot = *by_root.entry(r).or_insert_with(|| {
                out.push(Vec::new());
                out.len() - 1
            });
            out[slot].push(i);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: Series, n: usize) -> RootSystem {
        build_root_system(s, n).unwrap()
    }

    #[test]
    fn small_root_counts() {
        assert_eq!(sys(Series::A, 2).len(), 6);
        assert_eq!(sys(Series::G, 2).len(), 12);
        assert_eq!(sys(Series::BC, 1).len(), 4);
        assert_eq!(sys(Series::F, 4).len(), 48);
    }

    #[test]
    fn bc1_is_plus_minus_alpha_and_double() {
        let s = sys(Series::BC, 1);
        let coords: Vec<i64> = s.roots().iter().map(|r| r.coords()[0]).collect();
        assert_eq!(coords, vec![-2, -1, 1, 2]);
    }

    #[test]
    fn canonical_order_is_height_then_lex() {
        let s = sys(Series::A, 2);
        let coords: Vec<Vec<i64>> = s.roots().iter().map(|r| r.coords().to_vec()).collect();
        assert_eq!(
            coords,
            vec![vec![-1, -1], vec![-1, 0], vec![0, -1], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        assert_eq!(s.simple_system(), &[4, 3]);
    }

    #[test]
    fn unsupported_types() {
        assert!(matches!(
            build_root_system(Series::E, 5),
            Err(Error::UnsupportedType { .. })
        ));
        assert!(build_root_system(Series::C, 1).is_err());
    }

    #[test]
    fn components() {
        assert_eq!(sys(Series::A, 2).irreducible_components().len(), 1);
        assert_eq!(sys(Series::BC, 2).irreducible_components().len(), 1);
        let a1a1 = RootSystem::product(&[
            CartanType::new(Series::A, 1).unwrap(),
            CartanType::new(Series::A, 1).unwrap(),
        ])
        .unwrap();
        assert_eq!(a1a1.label(), "A1xA1");
        assert_eq!(a1a1.irreducible_components().len(), 2);
    }

    #[test]
    fn multiple_of() {
        let a = Root::new(vec![1, 2]);
        assert_eq!(Root::new(vec![2, 4]).multiple_of(&a), Some(2));
        assert_eq!(Root::new(vec![-1, -2]).multiple_of(&a), Some(-1));
        assert_eq!(Root::new(vec![2, 3]).multiple_of(&a), None);
    }
}
