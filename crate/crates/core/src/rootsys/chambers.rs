use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::rootset::RootSet;

use super::RootSystem;

/// Largest system (by number of roots) admitted to exhaustive enumeration.
pub const EXHAUSTIVE_ROOT_CAP: usize = 72;

/// A positive system of a root system, i.e. a Weyl chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveSystem {
    /// Breadth-first discovery index; 0 is the standard chamber.
    pub id: usize,
    pub positive: RootSet,
    /// Simple roots `w(α_1), …, w(α_n)` where the chamber is `w` applied to
    /// the standard one.
    pub simple: Vec<usize>,
    /// Values of a functional on the standard simple roots; it takes the
    /// value 1 on every simple root of this chamber.
    pub witness: Vec<i64>,
}

impl PositiveSystem {
    /// Evaluates the witness on a root.
    pub fn eval(&self, sys: &RootSystem, root: usize) -> i64 {
        sys.root(root)
            .coords()
            .iter()
            .zip(&self.witness)
            .map(|(c, f)| c * f)
            .sum()
    }
}

/// All positive systems, by breadth-first wall crossing from the standard
/// one. Crossing the wall of the `i`-th simple root `d` replaces the chamber
/// `w` by `w s_i`, flipping the roots on the line of `d`.
pub fn enumerate_positive_systems(sys: &RootSystem) -> Result<Vec<PositiveSystem>> {
    if sys.len() > EXHAUSTIVE_ROOT_CAP {
        return Err(Error::ExhaustiveCap { roots: sys.len(), cap: EXHAUSTIVE_ROOT_CAP });
    }
    let n = sys.rank();
    let cartan = sys.cartan();
    let gram = sys.gram();
    let line_of: Vec<Vec<usize>> = (0..sys.len())
        .map(|d| {
            (1..=2)
                .filter_map(|k| sys.index_of(&sys.root(d).scale(k)))
                .collect()
        })
        .collect();

    let start = PositiveSystem {
        id: 0,
        positive: RootSet::from_indices(sys.len(), sys.positive_roots()),
        simple: sys.simple_system().to_vec(),
        witness: vec![1; n],
    };
    let mut seen: HashMap<RootSet, usize> = HashMap::new();
    seen.insert(start.positive.clone(), 0);
    let mut out = vec![start];
    let mut queue = VecDeque::from([0usize]);

    while let Some(c) = queue.pop_front() {
        for i in 0..n {
            let cur = &out[c];
            let d = cur.simple[i];
            let mut positive = cur.positive.clone();
            for &m in &line_of[d] {
                positive.remove(m);
                positive.insert(sys.negation(m));
            }
            if seen.contains_key(&positive) {
                continue;
            }
            let droot = sys.root(d);
            let simple: Vec<usize> = (0..n)
                .map(|j| {
                    let r = sys.root(cur.simple[j]).combine(1, droot, -cartan[i][j]);
                    sys.index_of(&r)
                        .ok_or_else(|| Error::Internal(format!("{r} is not a root")))
                })
                .collect::<Result<_>>()?;
            let dd = sys.inner(droot, droot);
            let witness: Vec<i64> = (0..n)
                .map(|k| {
                    let ad: i64 = (0..n).map(|j| gram[k][j] * droot.coords()[j]).sum();
                    debug_assert_eq!((2 * ad) % dd, 0);
                    cur.witness[k] - 2 * ad / dd
                })
                .collect();
            let id = out.len();
            seen.insert(positive.clone(), id);
            out.push(PositiveSystem { id, positive, simple, witness });
            queue.push_back(id);
        }
    }
    Ok(out)
}
