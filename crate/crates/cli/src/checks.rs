//! Cross-validation checks over catalog data, shared by `selftest` and the
//! acceptance tests.

use anyhow::{anyhow, Context};
use relroots::borel::{cores_definitional, lines, SEPARABILITY_LINE_BUDGET};
use relroots::grading::{certify_strong, mutation_report, verify_certificate, Proof};
use relroots::{
    catalog, catalog_entry, core_formula, core_sufficient, enumerate_borel_subsets, is_regular, CatalogEntry,
    RelativeRootSystem, RootSet, Strategy,
};

/// Result of one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Outcome { name: name.to_string(), passed, detail: detail.into() }
    }

    fn from_result(name: &str, r: anyhow::Result<String>) -> Self {
        match r {
            Ok(detail) => Outcome::new(name, true, detail),
            Err(e) => Outcome::new(name, false, format!("{e:#}")),
        }
    }
}

pub fn resolve(name: &str) -> anyhow::Result<(CatalogEntry, RelativeRootSystem)> {
    let e = catalog_entry(name).ok_or_else(|| anyhow!("no catalog entry {name:?}"))?;
    let rel = e.resolve().with_context(|| format!("resolving {name}"))?;
    Ok((e, rel))
}

/// Catalog systems small enough for the separability strategy.
pub fn within_line_budget() -> anyhow::Result<Vec<(CatalogEntry, RelativeRootSystem)>> {
    let mut out = Vec::new();
    for e in catalog() {
        let rel = e.resolve()?;
        if lines(&rel).len() <= SEPARABILITY_LINE_BUDGET {
            out.push((e, rel));
        }
    }
    Ok(out)
}

/// Relative types of the named foldings.
pub fn folding_types() -> Outcome {
    let expected = [("BC-from-A2", "BC1"), ("BC-from-A4", "BC2"), ("C-from-A3", "B2=C2"), ("F-from-E6", "F4")];
    let r = (|| {
        let mut seen = Vec::new();
        for (name, want) in expected {
            let (_, rel) = resolve(name)?;
            let got = rel.type_label();
            if got != want {
                return Err(anyhow!("{name}: expected {want}, got {got}"));
            }
            seen.push(format!("{name}={got}"));
        }
        Ok(seen.join(" "))
    })();
    Outcome::from_result("folding-types", r)
}

fn positive_sets(rel: &RelativeRootSystem, s: Strategy) -> anyhow::Result<Vec<RootSet>> {
    Ok(enumerate_borel_subsets(rel, s)?.into_iter().map(|b| b.positive).collect())
}

/// Separability and projection give the same family.
pub fn dual_strategy() -> Outcome {
    let r = (|| {
        let systems = within_line_budget()?;
        let mut total = 0;
        for (e, rel) in &systems {
            let a = positive_sets(rel, Strategy::Separability)?;
            let b = positive_sets(rel, Strategy::Projection)?;
            if a != b {
                return Err(anyhow!("{}: {} subsets by separability, {} by projection", e.name, a.len(), b.len()));
            }
            total += a.len();
        }
        Ok(format!("{} systems, {total} Borel subsets, 0 mismatches", systems.len()))
    })();
    Outcome::from_result("dual-strategy", r)
}

/// The three core computations agree on every Borel subset.
pub fn core_agreement() -> Outcome {
    let r = (|| {
        let systems = within_line_budget()?;
        let mut subsets = 0;
        for (e, rel) in &systems {
            let fam = enumerate_borel_subsets(rel, Strategy::Projection)?;
            let defs = cores_definitional(rel, &fam)?;
            for (id, (b, d)) in fam.iter().zip(&defs).enumerate() {
                let f = core_formula(rel, b, id)?;
                let s = core_sufficient(rel, b)?;
                if f.members != d.members || s.members != d.members {
                    return Err(anyhow!("{}: cores differ on Borel subset {id}", e.name));
                }
                subsets += 1;
            }
        }
        Ok(format!("{} systems, {subsets} Borel subsets, 0 mismatches", systems.len()))
    })();
    Outcome::from_result("core-agreement", r)
}

/// The pair scan for regularity agrees with component ranks.
pub fn regularity_agreement() -> Outcome {
    let r = (|| {
        let mut irregular = Vec::new();
        for e in catalog() {
            let rel = e.resolve()?;
            let reg = is_regular(&rel);
            if !reg.agrees_with_component_ranks() {
                return Err(anyhow!("{}: regular={} but min component rank {}", e.name, reg.regular, reg.min_component_rank));
            }
            if !reg.regular {
                irregular.push(e.name);
            }
        }
        for must in ["BC-from-A2", "B2-J1"] {
            if !irregular.iter().any(|n| n == must) {
                return Err(anyhow!("{must} should not be regular"));
            }
        }
        Ok(format!("{} entries; not regular: {}", catalog().len(), irregular.join(",")))
    })();
    Outcome::from_result("regularity", r)
}

/// Certifies and verifies strongness for one entry.
pub fn strongness_for(name: &str) -> anyhow::Result<String> {
    let (_, rel) = resolve(name)?;
    let fam = enumerate_borel_subsets(&rel, Strategy::Projection)?;
    let cert = certify_strong(&rel, &fam)?;
    verify_certificate(&cert, &rel, &fam).map_err(|r| anyhow!("{name}: rejected at {r}"))?;
    let steps: usize = cert
        .borel
        .iter()
        .flat_map(|e| &e.core)
        .map(|p| match &p.proof {
            Proof::Induction { steps } => steps.len(),
            Proof::Delegated { .. } => 0,
        })
        .sum();
    Ok(format!("{name}: {} Borel subsets, {steps} steps", cert.borel.len()))
}

pub fn strongness(names: &[&str]) -> Outcome {
    let r = names.iter().map(|n| strongness_for(n)).collect::<anyhow::Result<Vec<_>>>().map(|v| v.join("; "));
    Outcome::from_result("strongness", r)
}

/// G2-typed components are delegated rather than proved.
pub fn triality_delegation() -> Outcome {
    let r = (|| {
        let (_, rel) = resolve("G-from-D4")?;
        let fam = enumerate_borel_subsets(&rel, Strategy::Projection)?;
        let cert = certify_strong(&rel, &fam)?;
        verify_certificate(&cert, &rel, &fam).map_err(|r| anyhow!("rejected at {r}"))?;
        if cert.delegations.is_empty() {
            return Err(anyhow!("no delegation records"));
        }
        let delegated = cert.borel.iter().flat_map(|e| &e.core).filter(|p| matches!(p.proof, Proof::Delegated { .. })).count();
        Ok(format!("{} delegation(s), {delegated} delegated core roots", cert.delegations.len()))
    })();
    Outcome::from_result("triality-delegation", r)
}

/// Fibers partition Φ, and π is constant on Γ-orbits.
pub fn fiber_partition() -> Outcome {
    let r = (|| {
        for e in catalog() {
            let rel = e.resolve()?;
            let sys = rel.ambient();
            let total: usize = (0..rel.len()).map(|i| rel.fiber_at(i).len()).sum::<usize>() + rel.zero_fiber().len();
            if total != sys.len() {
                return Err(anyhow!("{}: fibers cover {total} of {} roots", e.name, sys.len()));
            }
            for s in rel.datum().gamma().elements() {
                for r in sys.roots() {
                    if rel.projection().apply(&s.apply(r)) != rel.projection().apply(r) {
                        return Err(anyhow!("{}: π({s}·{r}) ≠ π({r})", e.name));
                    }
                }
            }
        }
        Ok(format!("{} entries", catalog().len()))
    })();
    Outcome::from_result("fiber-partition", r)
}

/// Every single-field change of a certificate is rejected.
pub fn mutation_rejection(name: &str) -> Outcome {
    let r = (|| {
        let (_, rel) = resolve(name)?;
        let fam = enumerate_borel_subsets(&rel, Strategy::Projection)?;
        let cert = certify_strong(&rel, &fam)?;
        let rep = mutation_report(&cert, &rel, &fam);
        if !rep.all_rejected() {
            return Err(anyhow!("{} of {} mutations accepted, e.g. {}", rep.accepted.len(), rep.total, rep.accepted[0]));
        }
        Ok(format!(
            "{name}: {} mutations, {} rejected by schema, {} by verifier",
            rep.total, rep.rejected_by_schema, rep.rejected_by_verifier
        ))
    })();
    Outcome::from_result("mutation-rejection", r)
}

/// The quick suite behind `selftest`.
pub fn selftest() -> Vec<Outcome> {
    vec![
        folding_types(),
        dual_strategy(),
        core_agreement(),
        regularity_agreement(),
        strongness(&["C-from-A3", "BC-from-A4"]),
        triality_delegation(),
        fiber_partition(),
        mutation_rejection("BC-from-A4"),
    ]
}
