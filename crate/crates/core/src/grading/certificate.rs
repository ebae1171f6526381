//! Strong-grading certificates and their generation.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::borel::{cores_definitional, is_regular, BorelSubset};
use crate::error::{Error, Result};
use crate::relroot::{RelativeRoot, RelativeRootSystem};
use crate::rootsys::Root;

use super::decompose::{nc_decompose, ChamberContext, Decomposition};
use super::support::{abc_generator_sets, GeneratorSet};

/// Recorded with every delegated component.
pub const DELEGATION_REASON: &str =
    "component meets a G2 component of the quasi-split form; strongness follows from the split case";

/// Identifies the relative system a certificate speaks about.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDescriptor {
    pub ambient: String,
    /// 0-based nodes of `J`.
    pub j: Vec<usize>,
    /// Elements of Γ as node permutations.
    pub gamma: Vec<Vec<usize>>,
    pub relative_type: String,
    pub roots: usize,
}

impl SystemDescriptor {
    pub fn of(rel: &RelativeRootSystem) -> Self {
        SystemDescriptor {
            ambient: rel.ambient().label(),
            j: rel.datum().j().to_vec(),
            gamma: rel.datum().gamma().elements().iter().map(|s| s.0.clone()).collect(),
            relative_type: rel.type_label(),
            roots: rel.len(),
        }
    }
}

/// Where a generator of the ABC lemma sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum Placement {
    /// In `Φ_f ∖ ℝγ`.
    InBorel,
    /// Equal to `k′γ` for a larger `k′`, already handled.
    Deferred { k: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub set: GeneratorSet,
    pub i: i64,
    pub j: i64,
    pub root: RelativeRoot,
    pub placement: Placement,
}

/// One step of the descending induction: `kγ` from its generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub k: i64,
    pub decomposition: Decomposition,
    pub generators: Vec<Generator>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Proof {
    /// Steps in strictly decreasing `k`.
    Induction { steps: Vec<Step> },
    /// Handled by the split case; indexes `delegations`.
    Delegated { component: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoreRootProof {
    pub gamma: RelativeRoot,
    pub proof: Proof,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorelEntry {
    pub id: usize,
    pub positive: Vec<RelativeRoot>,
    /// Ambient chamber functional; it is 1 on the chamber's simple roots.
    pub chamber: Vec<i64>,
    pub core: Vec<CoreRootProof>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Delegation {
    pub component: usize,
    pub coordinates: Vec<usize>,
    pub kind: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongGradingCertificate {
    pub system: SystemDescriptor,
    pub borel: Vec<BorelEntry>,
    pub delegations: Vec<Delegation>,
}

pub(crate) fn delegations_of(rel: &RelativeRootSystem) -> Vec<Delegation> {
    rel.components()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.meets_g2)
        .map(|(i, c)| Delegation {
            component: i,
            coordinates: c.coordinates.clone(),
            kind: c.kind.map_or_else(|| format!("?{}", c.rank()), |t| t.to_string()),
            reason: DELEGATION_REASON.to_string(),
        })
        .collect()
}

/// Builds a certificate that the grading by relative root subgroups is
/// strong, for every Borel subset of a complete family found by projection.
pub fn certify_strong(rel: &RelativeRootSystem, all: &[BorelSubset]) -> Result<StrongGradingCertificate> {
    let reg = is_regular(rel);
    if !reg.regular {
        let w = reg.witness.map_or_else(|| "empty system".to_string(), |i| rel.root(i).to_string());
        return Err(Error::NotRegular(w));
    }
    let cores = cores_definitional(rel, all)?;
    let borel = all
        .par_iter()
        .zip(cores.par_iter())
        .enumerate()
        .map(|(id, (b, core))| {
            let ctx = ChamberContext::of(rel, b, id)?;
            let proofs = core
                .members
                .iter()
                .map(|g| prove(rel, b, &ctx, id, g))
                .collect::<Result<Vec<_>>>()?;
            Ok(BorelEntry {
                id,
                positive: b.positive.iter().map(|i| rel.root(i).clone()).collect(),
                chamber: ctx.witness.clone(),
                core: proofs,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StrongGradingCertificate { system: SystemDescriptor::of(rel), borel, delegations: delegations_of(rel) })
}

fn prove(rel: &RelativeRootSystem, b: &BorelSubset, ctx: &ChamberContext, id: usize, g: usize) -> Result<CoreRootProof> {
    let gamma = rel.root(g).clone();
    let component = rel.component_of(g);
    if rel.components()[component].meets_g2 {
        return Ok(CoreRootProof { gamma, proof: Proof::Delegated { component } });
    }
    let mut ks: Vec<i64> = rel.multiple_class_at(g).members.iter().map(|m| m.0).collect();
    ks.reverse();

    let mut steps = Vec::with_capacity(ks.len());
    for &k in &ks {
        let target = gamma.scale(k);
        let fail = |generator: String, reason: String| Error::CertificationFailure {
            borel: id,
            gamma: gamma.to_string(),
            k: k as u32,
            generator,
            reason,
        };
        let dec = nc_decompose(rel, ctx, &target).map_err(|e| fail(target.to_string(), e.to_string()))?;
        let sets = abc_generator_sets(rel, &dec.beta, &dec.gamma)
            .map_err(|e| fail(format!("{} + {}", dec.beta, dec.gamma), e.to_string()))?;
        let tagged = sets
            .set_a
            .into_iter()
            .map(|t| (GeneratorSet::A, t))
            .chain(sets.set_b.into_iter().map(|t| (GeneratorSet::B, t)));
        let mut generators = Vec::new();
        for (set, (i, j, root)) in tagged {
            let placement = place(rel, b, &gamma, &ks, k, &root)
                .ok_or_else(|| fail(root.to_string(), "neither in Φ_f∖ℝγ nor a larger multiple of γ".into()))?;
            generators.push(Generator { set, i, j, root, placement });
        }
        steps.push(Step { k, decomposition: dec, generators });
    }
    Ok(CoreRootProof { gamma, proof: Proof::Induction { steps } })
}

fn place(
    rel: &RelativeRootSystem,
    b: &BorelSubset,
    gamma: &Root,
    ks: &[i64],
    k: i64,
    root: &RelativeRoot,
) -> Option<Placement> {
    let idx = rel.index_of(root)?;
    match root.multiple_of(gamma) {
        None if b.positive.contains(idx) && !root.is_collinear(gamma) => Some(Placement::InBorel),
        Some(m) if m > k && ks.contains(&m) => Some(Placement::Deferred { k: m }),
        _ => None,
    }
}
