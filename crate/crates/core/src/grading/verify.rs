//! Independent replay of a strong-grading certificate.
//!
//! Only root arithmetic and set membership are used here: no linear
//! programming, no chain or decomposition search. Every field of the
//! certificate is recomputed or checked against a canonical rule, so any
//! change to it is detected.

use std::fmt;

use crate::borel::BorelSubset;
use crate::relroot::RelativeRootSystem;
use crate::rootset::RootSet;
use crate::rootsys::Root;

use super::certificate::{delegations_of, BorelEntry, Placement, Proof, Step, StrongGradingCertificate, SystemDescriptor};
use super::support::GeneratorSet;

/// Why a certificate was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection {
    pub location: String,
    pub reason: String,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.reason)
    }
}

type Check<T = ()> = std::result::Result<T, Rejection>;

fn reject<T>(location: impl Into<String>, reason: impl Into<String>) -> Check<T> {
    Err(Rejection { location: location.into(), reason: reason.into() })
}

fn ensure(ok: bool, location: &str, reason: &str) -> Check {
    if ok {
        Ok(())
    } else {
        reject(location, reason)
    }
}

fn collinear(a: &[i64], b: &[i64]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| a[i] * b[j] == a[j] * b[i]))
}

/// Integer `(i, j)` with `r = i·u + j·v`, for non-collinear `u, v`.
fn coefficients(r: &[i64], u: &[i64], v: &[i64]) -> Option<(i64, i64)> {
    let n = r.len();
    let (c1, c2) = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .find(|&(a, b)| u[a] * v[b] - u[b] * v[a] != 0)?;
    let det = u[c1] * v[c2] - u[c2] * v[c1];
    let ni = r[c1] * v[c2] - r[c2] * v[c1];
    let nj = u[c1] * r[c2] - u[c2] * r[c1];
    if ni % det != 0 || nj % det != 0 {
        return None;
    }
    let (i, j) = (ni / det, nj / det);
    (0..n).all(|c| i * u[c] + j * v[c] == r[c]).then_some((i, j))
}

struct Chamber {
    positive: Vec<bool>,
    simple: Vec<usize>,
    /// Images of the simple roots outside the kernel.
    images: Vec<Root>,
}

/// Checks the certificate against `rel` and the complete Borel family
/// `all`; `Ok(())` means every claim was replayed successfully.
pub fn verify_certificate(
    cert: &StrongGradingCertificate,
    rel: &RelativeRootSystem,
    all: &[BorelSubset],
) -> Check {
    ensure(cert.system == SystemDescriptor::of(rel), "system", "descriptor does not match the relative system")?;
    ensure(
        !rel.components().is_empty() && rel.components().iter().all(|c| c.rank() >= 2),
        "system",
        "a component has rank below 2, so the system is not regular",
    )?;
    ensure(cert.delegations == delegations_of(rel), "delegations", "delegated components do not match")?;
    ensure(cert.borel.len() == all.len(), "borel", "wrong number of Borel subsets")?;

    let families: Vec<&RootSet> = all.iter().map(|b| &b.positive).collect();
    for (p, e) in cert.borel.iter().enumerate() {
        verify_entry(rel, &families, p, e)?;
    }
    Ok(())
}

fn verify_entry(rel: &RelativeRootSystem, families: &[&RootSet], p: usize, e: &BorelEntry) -> Check {
    let loc = format!("borel[{p}]");
    ensure(e.id == p, &loc, "id does not match position")?;
    let set = families[p];
    let listed: Vec<Option<usize>> = e.positive.iter().map(|r| rel.index_of(r)).collect();
    ensure(
        listed.iter().copied().eq(set.iter().map(Some)),
        &loc,
        "positive roots differ from the Borel subset",
    )?;
    let chamber = verify_chamber(rel, set, &e.chamber, &loc)?;

    // Definitional core: a root is excluded when some Φ_f ∩ Φ_g is a
    // nonempty subset of its line.
    let mut isolated: Vec<&Root> = Vec::new();
    for other in families {
        let meet: Vec<usize> = set.intersection(other).iter().collect();
        if let Some(&first) = meet.first() {
            let r0 = rel.root(first);
            if meet.iter().all(|&m| collinear(rel.root(m).coords(), r0.coords())) {
                isolated.push(r0);
            }
        }
    }
    let core: Vec<usize> = set
        .iter()
        .filter(|&a| !isolated.iter().any(|r| collinear(r.coords(), rel.root(a).coords())))
        .collect();
    ensure(e.core.len() == core.len(), &loc, "core size differs")?;

    for (q, (proof, &g)) in e.core.iter().zip(&core).enumerate() {
        let loc = format!("{loc}.core[{q}]");
        let gamma = rel.root(g);
        ensure(proof.gamma == *gamma, &loc, "core root differs")?;
        let component = rel.component_of(g);
        let delegated = rel.components()[component].meets_g2;
        match &proof.proof {
            Proof::Delegated { component: c } => {
                ensure(delegated && *c == component, &loc, "delegation is not justified")?;
            }
            Proof::Induction { steps } => {
                ensure(!delegated, &loc, "component must be delegated")?;
                let bound = rel.roots().iter().flat_map(|r| r.coords().iter().map(|c| c.abs())).max().unwrap_or(0);
                let ks: Vec<i64> = (1..=bound).rev().filter(|&k| rel.index_of(&gamma.scale(k)).is_some()).collect();
                ensure(
                    steps.iter().map(|s| s.k).eq(ks.iter().copied()),
                    &loc,
                    "induction steps are not the multiples of γ in decreasing order",
                )?;
                for (t, step) in steps.iter().enumerate() {
                    verify_step(rel, set, &chamber, gamma, &ks, step, &format!("{loc}.steps[{t}]"))?;
                }
            }
        }
    }
    Ok(())
}

fn verify_chamber(rel: &RelativeRootSystem, set: &RootSet, w: &[i64], loc: &str) -> Check<Chamber> {
    let sys = rel.ambient();
    ensure(w.len() == sys.rank(), loc, "chamber functional has the wrong dimension")?;
    let vals: Vec<i64> = sys.roots().iter().map(|r| r.coords().iter().zip(w).map(|(a, b)| a * b).sum()).collect();
    ensure(vals.iter().all(|&v| v != 0), loc, "chamber functional vanishes on a root")?;
    let positive: Vec<bool> = vals.iter().map(|&v| v > 0).collect();
    for s in rel.datum().gamma().elements() {
        let stable = (0..sys.len()).all(|d| {
            let img = sys.index_of(&s.apply(sys.root(d)));
            img.is_some_and(|i| positive[i] == positive[d])
        });
        ensure(stable, loc, "chamber is not Γ-stable")?;
    }
    let simple: Vec<usize> = (0..sys.len())
        .filter(|&d| {
            positive[d]
                && !(0..sys.len()).any(|e| {
                    positive[e] && sys.index_of(&sys.root(d).sub(sys.root(e))).is_some_and(|x| positive[x])
                })
        })
        .collect();
    ensure(simple.len() == sys.rank(), loc, "chamber has the wrong number of simple roots")?;
    ensure(simple.iter().all(|&d| vals[d] == 1), loc, "chamber functional is not 1 on the simple roots")?;
    let kernel = simple.iter().filter(|&&d| rel.image_of(d).is_none()).count();
    ensure(kernel == sys.rank() - rel.datum().j().len(), loc, "simple roots miss part of the kernel")?;
    let projected = RootSet::from_indices(rel.len(), (0..sys.len()).filter(|&d| positive[d]).filter_map(|d| rel.image_of(d)));
    ensure(projected == *set, loc, "chamber does not project onto the Borel subset")?;
    let mut images: Vec<Root> = simple.iter().filter_map(|&d| rel.image_of(d)).map(|i| rel.root(i).clone()).collect();
    images.sort();
    images.dedup();
    Ok(Chamber { positive, simple, images })
}

fn verify_step(
    rel: &RelativeRootSystem,
    set: &RootSet,
    chamber: &Chamber,
    gamma: &Root,
    ks: &[i64],
    step: &Step,
    loc: &str,
) -> Check {
    let sys = rel.ambient();
    let d = &step.decomposition;
    let target = gamma.scale(step.k);
    ensure(d.target == target, loc, "target is not kγ")?;
    ensure(d.beta.add(&d.gamma) == target, loc, "β + γ_k ≠ kγ")?;
    let in_set = |r: &Root| rel.index_of(r).is_some_and(|i| set.contains(i));
    ensure(in_set(&d.beta) && in_set(&d.gamma), loc, "β or γ_k is outside Φ_f")?;
    ensure(!collinear(d.beta.coords(), d.gamma.coords()), loc, "β and γ_k are collinear")?;
    ensure(chamber.images.contains(&d.gamma), loc, "γ_k is not a simple image")?;

    // The preimage is the least positive root over the target.
    let x = sys.index_of(&d.preimage).filter(|&x| chamber.positive[x]);
    let Some(x) = x else { return reject(loc, "preimage is not a positive root") };
    let proj = |r: &Root| rel.projection().apply(r);
    ensure(proj(&d.preimage) == target, loc, "preimage does not map to the target")?;
    let least = (0..x).all(|e| !(chamber.positive[e] && proj(sys.root(e)) == target));
    ensure(least, loc, "preimage is not the least one")?;

    // The chain: simple terms, positive prefixes, canonical backward rule.
    let n = d.chain.len();
    let ys: Vec<Option<usize>> = d.chain.iter().map(|y| sys.index_of(y)).collect();
    let Some(ys) = ys.into_iter().collect::<Option<Vec<usize>>>() else {
        return reject(loc, "chain term is not a root");
    };
    ensure(n >= 1 && ys.iter().all(|y| chamber.simple.contains(y)), loc, "chain term is not simple")?;
    let mut prefixes = Vec::with_capacity(n);
    let mut acc = Root::new(vec![0; sys.rank()]);
    for y in &d.chain {
        acc = acc.add(y);
        match sys.index_of(&acc) {
            Some(i) if chamber.positive[i] => prefixes.push(i),
            _ => return reject(loc, "chain prefix is not a positive root"),
        }
    }
    ensure(prefixes[n - 1] == x, loc, "chain does not sum to the preimage")?;
    for t in (1..n).rev() {
        let cur = sys.root(prefixes[t]);
        let first = chamber
            .simple
            .iter()
            .copied()
            .find(|&s| sys.index_of(&cur.sub(sys.root(s))).is_some_and(|r| chamber.positive[r]));
        ensure(first == Some(ys[t]), loc, "chain does not follow the canonical rule")?;
    }

    // The split point.
    let p = d.split;
    ensure(p >= 1 && p < n, loc, "split index out of range")?;
    ensure(rel.image_of(ys[p]).is_some(), loc, "split term lies in the kernel")?;
    ensure(ys[p + 1..].iter().all(|&y| rel.image_of(y).is_none()), loc, "split is not the last term outside the kernel")?;
    ensure(proj(&d.chain[p]) == d.gamma, loc, "γ_k is not the image of the split term")?;
    ensure(proj(sys.root(prefixes[p - 1])) == d.beta, loc, "β is not the image of the prefix")?;

    // Generators: recomputed by solving r = i·u + j·v for every root.
    let diff = d.beta.sub(&d.gamma);
    let mut expected = Vec::new();
    for (set_name, u, skip) in [(GeneratorSet::A, &d.beta, (1, 1)), (GeneratorSet::B, &diff, (1, 2))] {
        let mut found: Vec<(i64, i64, &Root)> = rel
            .roots()
            .iter()
            .filter_map(|r| coefficients(r.coords(), u.coords(), d.gamma.coords()).map(|(i, j)| (i, j, r)))
            .filter(|&(i, j, _)| i >= 0 && j >= 0 && (i, j) != skip)
            .collect();
        found.sort();
        expected.extend(found.into_iter().map(|(i, j, r)| (set_name, i, j, r)));
    }
    ensure(step.generators.len() == expected.len(), loc, "generator list has the wrong length")?;
    for (gi, (g, (s, i, j, r))) in step.generators.iter().zip(&expected).enumerate() {
        let gloc = format!("{loc}.generators[{gi}]");
        ensure(g.set == *s && g.i == *i && g.j == *j && g.root == **r, &gloc, "generator differs")?;
        let idx = rel.index_of(r).expect("scanned from Φ_P");
        let multiple = ks.iter().copied().find(|&m| gamma.scale(m) == **r);
        let want = if set.contains(idx) && !collinear(r.coords(), gamma.coords()) {
            Placement::InBorel
        } else if let Some(m) = multiple.filter(|&m| m > step.k) {
            Placement::Deferred { k: m }
        } else {
            return reject(gloc, "generator can be neither placed nor deferred");
        };
        ensure(g.placement == want, &gloc, "placement tag is wrong")?;
    }
    Ok(())
}
