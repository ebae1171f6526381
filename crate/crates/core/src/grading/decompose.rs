//! Splitting a relative root as `β + γ` with `γ` a simple image.

use serde::{Deserialize, Serialize};

use crate::borel::{BorelSubset, Origin};
use crate::error::{Error, Result};
use crate::exactlin::int_collinear;
use crate::relroot::{RelativeRoot, RelativeRootSystem};
use crate::rootset::RootSet;
use crate::rootsys::{chain_in, Root};

/// The ambient positive system behind a Borel subset found by projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberContext {
    pub witness: Vec<i64>,
    pub positive: RootSet,
    pub simple: Vec<usize>,
    pub j_prime: Vec<usize>,
}

impl ChamberContext {
    pub fn of(rel: &RelativeRootSystem, b: &BorelSubset, id: usize) -> Result<Self> {
        let Origin::Chamber { witness, simple, j_prime, .. } = &b.origin else {
            return Err(Error::MissingOrigin(id));
        };
        let sys = rel.ambient();
        let positive = RootSet::from_indices(
            sys.len(),
            (0..sys.len()).filter(|&d| dot(witness, sys.root(d)) > 0),
        );
        Ok(ChamberContext { witness: witness.clone(), positive, simple: simple.clone(), j_prime: j_prime.clone() })
    }

    /// `π(J′)` as relative root indices, deduplicated.
    pub fn simple_images(&self, rel: &RelativeRootSystem) -> Vec<usize> {
        let mut s: Vec<usize> = self.j_prime.iter().filter_map(|&d| rel.image_of(d)).collect();
        s.sort_unstable();
        s.dedup();
        s
    }
}

fn dot(f: &[i64], r: &Root) -> i64 {
    f.iter().zip(r.coords()).map(|(a, b)| a * b).sum()
}

/// `target = beta + gamma` read off a chain of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Decomposition {
    pub target: RelativeRoot,
    pub beta: RelativeRoot,
    pub gamma: RelativeRoot,
    /// Least preimage of `target` in the ambient positive system.
    pub preimage: Root,
    /// Simple roots `y_1, …, y_n` summing to `preimage`.
    pub chain: Vec<Root>,
    /// Position of `y_i`: the last term with nonzero image.
    pub split: usize,
}

/// Writes `target` as `β + γ` with `γ ∈ π(J′)` and `β` a non-collinear
/// root of the Borel subset, by cutting a simple-root chain of the least
/// preimage at its last term outside the kernel.
pub fn nc_decompose(rel: &RelativeRootSystem, ctx: &ChamberContext, target: &RelativeRoot) -> Result<Decomposition> {
    let undecomposable = |reason: String| Error::NotDecomposable { target: target.to_string(), reason };
    let t = rel.index_of(target).ok_or_else(|| Error::NotARelativeRoot(target.to_string()))?;
    for s in ctx.simple_images(rel) {
        if let Some(m) = target.multiple_of(rel.root(s)).filter(|&m| m >= 1) {
            return Err(undecomposable(format!("it is {m} times the simple image {}", rel.root(s))));
        }
    }
    let sys = rel.ambient();
    let x = rel
        .fiber_at(t)
        .iter()
        .copied()
        .find(|&d| ctx.positive.contains(d))
        .ok_or_else(|| undecomposable("no preimage is positive for this chamber".into()))?;
    let chain = chain_in(sys, &ctx.simple, &ctx.positive, x)?;
    let split = chain
        .iter()
        .rposition(|&y| rel.image_of(y).is_some())
        .ok_or_else(|| Error::Internal("chain lies in the kernel".into()))?;
    if split == 0 {
        return Err(undecomposable("the chain has a single term outside the kernel".into()));
    }
    let prefix = chain[..split]
        .iter()
        .fold(Root::new(vec![0; sys.rank()]), |acc, &y| acc.add(sys.root(y)));
    let beta = rel.projection().apply(&prefix);
    let gamma = rel.projection().apply(sys.root(chain[split]));
    if beta.is_zero() {
        return Err(undecomposable("β vanishes".into()));
    }
    if beta.add(&gamma) != *target || int_collinear(beta.coords(), gamma.coords()) {
        return Err(Error::Internal(format!("bad split of {target}: {beta} + {gamma}")));
    }
    Ok(Decomposition {
        target: target.clone(),
        beta,
        gamma,
        preimage: sys.root(x).clone(),
        chain: chain.iter().map(|&y| sys.root(y).clone()).collect(),
        split,
    })
}
