//! Borel subsets of relative root systems, their cores, and regularity.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{generic_separator, int_collinear, int_rank, positive_combination_witness, solve_independent};
use crate::exactlin::{strict_separator, Combination};
use crate::relroot::RelativeRootSystem;
use crate::rootset::RootSet;
use crate::rootsys::enumerate_positive_systems;
use crate::{Rat, RatVector};

/// Largest number of root lines the separability strategy will scan.
pub const SEPARABILITY_LINE_BUDGET: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Test every sign pattern on the root lines for strict separability.
    Separability,
    /// Project the positive systems of the ambient root system.
    Projection,
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "separability" => Ok(Strategy::Separability),
            "projection" => Ok(Strategy::Projection),
            _ => Err(Error::InvalidArgument(format!("unknown strategy {s:?}"))),
        }
    }
}

/// How a Borel subset was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Separability,
    /// Image of an ambient positive system.
    Chamber {
        id: usize,
        /// Ambient functional, 1 on every simple root of the chamber.
        witness: Vec<i64>,
        /// Simple roots of the chamber (ambient indices).
        simple: Vec<usize>,
        /// Those simple roots with nonzero image.
        j_prime: Vec<usize>,
    },
}

/// `Φ_f = {α ∈ Φ_P : f(α) > 0}` for a generic functional `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorelSubset {
    pub positive: RootSet,
    /// Positive exactly on `positive`, injective on `Φ_P`.
    pub witness: RatVector,
    pub origin: Origin,
}

impl BorelSubset {
    /// Deduplicated images `π(J′)`, or an error when the subset was not
    /// produced by projection.
    pub fn simple_images(&self, rel: &RelativeRootSystem, id: usize) -> Result<Vec<usize>> {
        let Origin::Chamber { j_prime, .. } = &self.origin else {
            return Err(Error::MissingOrigin(id));
        };
        let mut s: Vec<usize> = j_prime.iter().filter_map(|&d| rel.image_of(d)).collect();
        s.sort_unstable();
        s.dedup();
        Ok(s)
    }
}

/// Root lines `ℝα ∩ Φ_P`: each entry lists the positive roots on the line,
/// increasing; the negatives are implied.
pub fn lines(rel: &RelativeRootSystem) -> Vec<Vec<usize>> {
    let mut by_dir: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, r) in rel.roots().iter().enumerate() {
        if !r.is_positive() {
            continue;
        }
        let g = r.coords().iter().fold(0i64, |a, &c| num_integer::gcd(a, c));
        let dir: Vec<i64> = r.coords().iter().map(|c| c / g).collect();
        let slot = *by_dir.entry(dir).or_insert_with(|| {
            out.push(Vec::new());
            out.len() - 1
        });
        out[slot].push(i);
    }
    out
}

fn line_index(rel: &RelativeRootSystem, lines: &[Vec<usize>]) -> Vec<usize> {
    let mut of = vec![0; rel.len()];
    for (l, members) in lines.iter().enumerate() {
        for &i in members {
            of[i] = l;
            of[rel.negation(i)] = l;
        }
    }
    of
}

fn rat_roots(rel: &RelativeRootSystem) -> Vec<RatVector> {
    rel.roots().iter().map(|r| RatVector::from_ints(r.coords())).collect()
}

/// Canonical order: by the sign vector on the standard positive roots,
/// with the standard Borel subset first.
fn sort_family(rel: &RelativeRootSystem, family: &mut [BorelSubset]) {
    let pos: Vec<usize> = (0..rel.len()).filter(|&i| rel.root(i).is_positive()).collect();
    family.sort_by_cached_key(|b| pos.iter().map(|&i| !b.positive.contains(i)).collect::<Vec<bool>>());
}

/// All Borel subsets of `Φ_P`, in canonical order.
pub fn enumerate_borel_subsets(rel: &RelativeRootSystem, strategy: Strategy) -> Result<Vec<BorelSubset>> {
    let mut family = match strategy {
        Strategy::Separability => by_separability(rel)?,
        Strategy::Projection => by_projection(rel)?,
    };
    sort_family(rel, &mut family);
    Ok(family)
}

fn by_separability(rel: &RelativeRootSystem) -> Result<Vec<BorelSubset>> {
    let lines = lines(rel);
    if lines.len() > SEPARABILITY_LINE_BUDGET {
        return Err(Error::BudgetExceeded { lines: lines.len(), budget: SEPARABILITY_LINE_BUDGET });
    }
    let all = rat_roots(rel);
    let reps: Vec<&RatVector> = lines.iter().map(|l| &all[l[0]]).collect();
    let n = rel.len();
    (0u64..1 << lines.len())
        .into_par_iter()
        .map(|pattern| -> Result<Option<BorelSubset>> {
            let oriented: Vec<RatVector> = reps
                .iter()
                .enumerate()
                .map(|(l, v)| if pattern >> l & 1 == 0 { (*v).clone() } else { v.neg() })
                .collect();
            if strict_separator(&oriented)?.is_none() {
                return Ok(None);
            }
            let mut positive = RootSet::new(n);
            for (l, members) in lines.iter().enumerate() {
                for &i in members {
                    positive.insert(if pattern >> l & 1 == 0 { i } else { rel.negation(i) });
                }
            }
            let pos: Vec<RatVector> = positive.iter().map(|i| all[i].clone()).collect();
            let witness = generic_separator(&all, &pos)?
                .ok_or_else(|| Error::Internal("separable pattern without generic separator".into()))?;
            Ok(Some(BorelSubset { positive, witness, origin: Origin::Separability }))
        })
        .filter_map(Result::transpose)
        .collect()
}

fn by_projection(rel: &RelativeRootSystem) -> Result<Vec<BorelSubset>> {
    let sys = rel.ambient();
    let chambers = enumerate_positive_systems(sys)?;
    let kernel_rank = sys.rank() - rel.datum().j().len();
    let n = rel.len();

    // Γ-stable chambers are the chambers of Φ_{D,Γ}; those whose simple
    // roots include a base of the kernel roots project onto Borel subsets.
    let perms: Vec<Vec<usize>> = rel
        .datum()
        .gamma()
        .elements()
        .iter()
        .filter(|s| !s.is_identity())
        .map(|s| {
            (0..sys.len())
                .map(|d| sys.index_of(&s.apply(sys.root(d))).expect("automorphisms permute roots"))
                .collect()
        })
        .collect();
    let mut best: HashMap<RootSet, usize> = HashMap::new();
    for c in &chambers {
        if c.simple.iter().filter(|&&d| rel.image_of(d).is_none()).count() != kernel_rank {
            continue;
        }
        if !perms.iter().all(|p| c.positive.iter().all(|d| c.positive.contains(p[d]))) {
            continue;
        }
        let positive = RootSet::from_indices(n, c.positive.iter().filter_map(|d| rel.image_of(d)));
        best.entry(positive).and_modify(|id| *id = (*id).min(c.id)).or_insert(c.id);
    }
    let all = rat_roots(rel);
    let mut found: Vec<(RootSet, usize)> = best.into_iter().collect();
    found.sort_by_key(|(_, id)| *id);
    found
        .into_par_iter()
        .map(|(positive, id)| {
            let c = &chambers[id];
            let pos: Vec<RatVector> = positive.iter().map(|i| all[i].clone()).collect();
            let witness = generic_separator(&all, &pos)?.ok_or_else(|| {
                Error::Internal(format!("projection of chamber {id} is not a Borel subset"))
            })?;
            let j_prime = c.simple.iter().copied().filter(|&d| rel.image_of(d).is_some()).collect();
            Ok(BorelSubset {
                positive,
                witness,
                origin: Origin::Chamber { id, witness: c.witness.clone(), simple: c.simple.clone(), j_prime },
            })
        })
        .collect()
}

/// Number of Borel subsets, counted independently as the number of regions
/// of the hyperplane arrangement `{α^⊥}` via Zaslavsky's theorem.
pub fn count_chambers(rel: &RelativeRootSystem) -> usize {
    let lines = lines(rel);
    let reps: Vec<&[i64]> = lines.iter().map(|l| rel.root(l[0]).coords()).collect();
    let m = reps.len();
    let rank_of = |set: &[usize]| -> usize {
        let rows: Vec<&[i64]> = set.iter().map(|&i| reps[i]).collect();
        int_rank(&rows)
    };
    let closure = |set: &[usize], r: usize| -> Vec<usize> {
        (0..m)
            .filter(|i| {
                let mut s = set.to_vec();
                s.push(*i);
                set.contains(i) || rank_of(&s) == r
            })
            .collect()
    };

    // Flats by rank, each as a sorted list of lines.
    let mut flats: Vec<Vec<usize>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for r in 1..=rel.rank() {
        let mut next: HashSet<Vec<usize>> = HashSet::new();
        for f in &frontier {
            for l in 0..m {
                if f.contains(&l) {
                    continue;
                }
                let mut s = f.clone();
                s.push(l);
                next.insert(closure(&s, r));
            }
        }
        let mut next: Vec<Vec<usize>> = next.into_iter().collect();
        next.sort();
        flats.extend(next.iter().cloned());
        frontier = next;
    }

    let mut mu: Vec<i64> = Vec::with_capacity(flats.len());
    for (x, fx) in flats.iter().enumerate() {
        if x == 0 {
            mu.push(1);
            continue;
        }
        let s: i64 = (0..x)
            .filter(|&y| flats[y].len() < fx.len() && flats[y].iter().all(|l| fx.contains(l)))
            .map(|y| mu[y])
            .sum();
        mu.push(-s);
    }
    mu.iter().map(|v| v.unsigned_abs() as usize).sum()
}

fn check_family(rel: &RelativeRootSystem, all: &[BorelSubset]) -> Result<()> {
    let distinct: HashSet<&RootSet> = all.iter().map(|b| &b.positive).collect();
    let expected = count_chambers(rel);
    if distinct.len() != all.len() || all.len() != expected {
        return Err(Error::IncompleteBorelFamily(format!(
            "{} distinct of {} subsets given, {} regions expected",
            distinct.len(),
            all.len(),
            expected
        )));
    }
    Ok(())
}

/// Why a root of `Φ_f` is outside the core.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exclusion {
    /// `Φ_f ∩ Φ_g` spans the line of the root; `by` indexes the family.
    Isolated { by: usize },
    /// The root is `factor · simple` for an image `simple ∈ π(J′)`; `g` is
    /// a generic functional with `Φ_f ∩ Φ_g = Φ_P ∩ ℕ simple`.
    Multiple { simple: usize, factor: i64, g: RatVector },
}

/// `C_f` with a reason for every root of `Φ_f` left out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Core {
    pub members: RootSet,
    pub excluded: Vec<(usize, Exclusion)>,
}

/// Definitional cores of every member of a complete family.
pub fn cores_definitional(rel: &RelativeRootSystem, all: &[BorelSubset]) -> Result<Vec<Core>> {
    check_family(rel, all)?;
    let lines = lines(rel);
    let line_of = line_index(rel, &lines);
    Ok(all.par_iter().map(|b| definitional(b, all, &line_of)).collect())
}

/// `C_f = {α ∈ Φ_f | ∄ g : ℝα = ℝ(Φ_f ∩ Φ_g)}`, searching `g` over `all`.
pub fn core_definitional(rel: &RelativeRootSystem, b: &BorelSubset, all: &[BorelSubset]) -> Result<Core> {
    check_family(rel, all)?;
    let line_of = line_index(rel, &lines(rel));
    Ok(definitional(b, all, &line_of))
}

fn definitional(b: &BorelSubset, all: &[BorelSubset], line_of: &[usize]) -> Core {
    let mut isolating: HashMap<usize, usize> = HashMap::new();
    for (g, other) in all.iter().enumerate() {
        let meet = b.positive.intersection(&other.positive);
        let mut it = meet.iter();
        let Some(first) = it.next() else { continue };
        let l = line_of[first];
        if it.all(|i| line_of[i] == l) {
            isolating.entry(l).or_insert(g);
        }
    }
    let mut members = RootSet::new(line_of.len());
    let mut excluded = Vec::new();
    for a in b.positive.iter() {
        match isolating.get(&line_of[a]) {
            Some(&by) => excluded.push((a, Exclusion::Isolated { by })),
            None => members.insert(a),
        }
    }
    Core { members, excluded }
}

/// Roots of `Φ_f` that are a positive combination of at least two linearly
/// independent roots of `Φ_f` off their own line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SufficientCore {
    pub members: RootSet,
    /// For each member, a combination over `Φ_f` (indices into `Φ_P`).
    pub witnesses: Vec<(usize, Combination<Rat>)>,
}

pub fn core_sufficient(rel: &RelativeRootSystem, b: &BorelSubset) -> Result<SufficientCore> {
    let mut members = RootSet::new(rel.len());
    let mut witnesses = Vec::new();
    for a in b.positive.iter() {
        let target = RatVector::from_ints(rel.root(a).coords());
        let gens: Vec<usize> = b
            .positive
            .iter()
            .filter(|&x| !int_collinear(rel.root(x).coords(), rel.root(a).coords()))
            .collect();
        let vecs: Vec<RatVector> = gens.iter().map(|&x| RatVector::from_ints(rel.root(x).coords())).collect();
        if let Some(c) = positive_combination_witness(&target, &vecs, 2)? {
            members.insert(a);
            let indices = c.indices.iter().map(|&k| gens[k]).collect();
            witnesses.push((a, Combination { indices, coefficients: c.coefficients }));
        }
    }
    Ok(SufficientCore { members, witnesses })
}

/// `C_f = Φ_f ∖ ⋃_{α ∈ π(J′)} ℕα`, for a subset found by projection.
///
/// Each excluded root carries the functional `g` with `g(α) = 1` and
/// `g(β) = −|Φ_P| − 1` on the other simple images, made generic without
/// changing its signs on `Φ_P`.
pub fn core_formula(rel: &RelativeRootSystem, b: &BorelSubset, id: usize) -> Result<Core> {
    let simple = b.simple_images(rel, id)?;
    let k = rel.rank();
    if simple.len() != k {
        return Err(Error::Internal(format!("{} simple images for rank {k}", simple.len())));
    }
    let big = Rat::from_integer((-(rel.len() as i64) - 1).into());
    let columns: Vec<RatVector> = (0..k)
        .map(|c| RatVector::new(simple.iter().map(|&s| Rat::from_integer(rel.root(s).coords()[c].into())).collect()))
        .collect();
    let all = rat_roots(rel);

    let mut excluded = Vec::new();
    let mut members = RootSet::new(rel.len());
    let mut gs: HashMap<usize, RatVector> = HashMap::new();
    for a in b.positive.iter() {
        let hit = simple.iter().find_map(|&s| {
            rel.root(a).multiple_of(rel.root(s)).filter(|&m| m >= 1).map(|m| (s, m))
        });
        let Some((s, factor)) = hit else {
            members.insert(a);
            continue;
        };
        let g = match gs.get(&s) {
            Some(g) => g.clone(),
            None => {
                let values = RatVector::new(
                    simple.iter().map(|&t| if t == s { Rat::from_integer(1.into()) } else { big.clone() }).collect(),
                );
                let raw = solve_independent(&columns, &values)?
                    .ok_or_else(|| Error::Internal("simple images are dependent".into()))?;
                let raw = RatVector::new(raw);
                let pos: Vec<RatVector> = all.iter().filter(|v| crate::exactlin::sign(&raw.dot(v)) > 0).cloned().collect();
                let g = generic_separator(&all, &pos)?
                    .ok_or_else(|| Error::Internal("formula functional is not separating".into()))?;
                gs.insert(s, g.clone());
                g
            }
        };
        excluded.push((a, Exclusion::Multiple { simple: s, factor, g }));
    }
    Ok(Core { members, excluded })
}

/// Outcome of the regularity scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regularity {
    pub regular: bool,
    /// A root with no non-collinear partner spanning a further root.
    pub witness: Option<usize>,
    pub min_component_rank: usize,
}

impl Regularity {
    /// Whether the pair scan agrees with "every component has rank ≥ 2".
    pub fn agrees_with_component_ranks(&self) -> bool {
        self.regular == (self.min_component_rank >= 2)
    }
}

/// Every root `α` has a non-collinear `β` with some `xα + yβ ∈ Φ_P`,
/// `x, y ≠ 0`.
pub fn is_regular(rel: &RelativeRootSystem) -> Regularity {
    let roots = rel.roots();
    let in_plane = |a: &[i64], b: &[i64], c: &[i64]| int_rank(&[a, b, c]) == 2;
    let witness = (0..roots.len()).find(|&a| {
        let ra = roots[a].coords();
        !(0..roots.len()).any(|b| {
            let rb = roots[b].coords();
            !int_collinear(ra, rb)
                && roots.iter().any(|c| {
                    let rc = c.coords();
                    !int_collinear(rc, ra) && !int_collinear(rc, rb) && in_plane(ra, rb, rc)
                })
        })
    });
    let min_component_rank = rel.components().iter().map(|c| c.rank()).min().unwrap_or(0);
    Regularity { regular: witness.is_none() && !roots.is_empty(), witness, min_component_rank }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{diagram_of, gamma_from_label, validate_datum, GammaLabel};
    use crate::relroot::project;
    use crate::rootsys::{build_root_system, Root, Series};

    fn rel(s: Series, n: usize, g: GammaLabel, j: Option<&[usize]>) -> RelativeRootSystem {
        let sys = build_root_system(s, n).unwrap();
        let d = diagram_of(&sys).unwrap();
        let gamma = gamma_from_label(&d, &sys, g).unwrap();
        let all: Vec<usize> = (0..n).collect();
        project(&sys, &validate_datum(&d, j.unwrap_or(&all), &gamma).unwrap()).unwrap()
    }

    fn roots_of(rel: &RelativeRootSystem, s: &RootSet) -> Vec<Root> {
        s.iter().map(|i| rel.root(i).clone()).collect()
    }

    #[test]
    fn counts() {
        let bc1 = rel(Series::A, 2, GammaLabel::Flip, None);
        let a2 = rel(Series::A, 2, GammaLabel::Trivial, None);
        let bc2 = rel(Series::A, 4, GammaLabel::Flip, None);
        for (r, n) in [(&bc1, 2), (&a2, 6), (&bc2, 8)] {
            assert_eq!(enumerate_borel_subsets(r, Strategy::Separability).unwrap().len(), n);
            assert_eq!(enumerate_borel_subsets(r, Strategy::Projection).unwrap().len(), n);
            assert_eq!(count_chambers(r), n);
        }
    }

    #[test]
    fn f4_is_over_budget() {
        let f4 = rel(Series::E, 6, GammaLabel::Flip, None);
        assert_eq!(
            enumerate_borel_subsets(&f4, Strategy::Separability).unwrap_err(),
            Error::BudgetExceeded { lines: 24, budget: 12 }
        );
    }

    #[test]
    fn a2_cores() {
        let a2 = rel(Series::A, 2, GammaLabel::Trivial, None);
        let fam = enumerate_borel_subsets(&a2, Strategy::Projection).unwrap();
        let std = &fam[0];
        assert_eq!(roots_of(&a2, &std.positive), vec![Root::new(vec![0, 1]), Root::new(vec![1, 0]), Root::new(vec![1, 1])]);
        let want = vec![Root::new(vec![1, 1])];
        assert_eq!(roots_of(&a2, &core_definitional(&a2, std, &fam).unwrap().members), want);
        assert_eq!(roots_of(&a2, &core_sufficient(&a2, std).unwrap().members), want);
        assert_eq!(roots_of(&a2, &core_formula(&a2, std, 0).unwrap().members), want);
    }

    #[test]
    fn bc_cores() {
        let bc1 = rel(Series::A, 2, GammaLabel::Flip, None);
        let fam = enumerate_borel_subsets(&bc1, Strategy::Projection).unwrap();
        assert!(core_definitional(&bc1, &fam[0], &fam).unwrap().members.is_empty());
        assert!(core_formula(&bc1, &fam[0], 0).unwrap().members.is_empty());

        let bc2 = rel(Series::A, 4, GammaLabel::Flip, None);
        let fam = enumerate_borel_subsets(&bc2, Strategy::Projection).unwrap();
        let core = core_formula(&bc2, &fam[0], 0).unwrap();
        let got = roots_of(&bc2, &core.members);
        assert_eq!(got, vec![Root::new(vec![1, 1]), Root::new(vec![1, 2]), Root::new(vec![2, 2])]);
    }

    #[test]
    fn incomplete_family_is_rejected() {
        let a2 = rel(Series::A, 2, GammaLabel::Trivial, None);
        let fam = enumerate_borel_subsets(&a2, Strategy::Projection).unwrap();
        assert!(matches!(
            core_definitional(&a2, &fam[0], &fam[..5]),
            Err(Error::IncompleteBorelFamily(_))
        ));
    }

    #[test]
    fn formula_needs_projection_origin() {
        let a2 = rel(Series::A, 2, GammaLabel::Trivial, None);
        let fam = enumerate_borel_subsets(&a2, Strategy::Separability).unwrap();
        assert_eq!(core_formula(&a2, &fam[3], 3).unwrap_err(), Error::MissingOrigin(3));
    }

    #[test]
    fn regularity() {
        let bc1 = is_regular(&rel(Series::A, 2, GammaLabel::Flip, None));
        assert!(!bc1.regular && bc1.witness.is_some() && bc1.agrees_with_component_ranks());
        let bc2 = is_regular(&rel(Series::A, 4, GammaLabel::Flip, None));
        assert!(bc2.regular && bc2.agrees_with_component_ranks());
    }
}
