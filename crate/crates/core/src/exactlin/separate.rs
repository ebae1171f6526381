//! Strict separation and positive-combination queries.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::gauss::{solve_independent, span_rank};
use super::simplex::feasible_point;
use super::vector::Vector;

/// Outcome of a strict separation query, with a certificate either way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separation<T> {
    /// A functional `f` with `f(v) > 0` for every input vector.
    Separated(Vector<T>),
    /// Convex weights `y` (nonnegative, summing to one) with `Σ y_i v_i = 0`.
    Infeasible(Vec<T>),
}

impl<T: Scalar> Separation<T> {
    /// Re-checks the certificate against `vectors` by direct evaluation.
    pub fn verify(&self, vectors: &[Vector<T>]) -> bool {
        match self {
            Separation::Separated(f) => vectors.iter().all(|v| f.dot(v).is_positive()),
            Separation::Infeasible(y) => {
                if y.len() != vectors.len() || y.iter().any(|w| w.is_negative()) {
                    return false;
                }
                let total = y.iter().fold(T::zero(), |a, w| a + w.clone());
                let dim = vectors.first().map_or(0, Vector::dim);
                let sum = vectors
                    .iter()
                    .zip(y)
                    .fold(Vector::zeros(dim), |acc, (v, w)| acc.add(&v.scale(w)));
                total == T::one() && sum.is_zero()
            }
        }
    }

    pub fn functional(self) -> Option<Vector<T>> {
        match self {
            Separation::Separated(f) => Some(f),
            Separation::Infeasible(_) => None,
        }
    }
}

fn common_dim<T: Scalar>(vectors: &[Vector<T>]) -> Result<usize> {
    let first = vectors
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty vector set".into()))?;
    for v in vectors {
        first.check_dim(v)?;
    }
    Ok(first.dim())
}

/// Decides whether some functional is strictly positive on all of
/// `positives`, returning a certificate for the answer.
///
/// The functional is the first feasible vertex of `f(v) >= 1` found by
/// Bland-rule simplex, scaled to a primitive integer vector.
pub fn separate<T: Scalar>(positives: &[Vector<T>]) -> Result<Separation<T>> {
    let d = common_dim(positives)?;
    let m = positives.len();

    // f = p - q with p, q >= 0; slack s_i >= 0: f(v_i) - s_i = 1.
    let rows: Vec<Vec<T>> = positives
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut r = Vec::with_capacity(2 * d + m);
            r.extend(v.coords().iter().cloned());
            r.extend(v.coords().iter().map(|x| -x.clone()));
            r.extend((0..m).map(|j| if j == i { -T::one() } else { T::zero() }));
            r
        })
        .collect();
    if let Some(x) = feasible_point(&rows, &vec![T::one(); m]) {
        let f = Vector::new((0..d).map(|j| x[j].clone() - x[d + j].clone()).collect());
        return Ok(Separation::Separated(f.primitive()));
    }

    // Gordan alternative: y >= 0, Σ y_i v_i = 0, Σ y_i = 1.
    let mut rows: Vec<Vec<T>> = (0..d)
        .map(|j| positives.iter().map(|v| v.coords()[j].clone()).collect())
        .collect();
    rows.push(vec![T::one(); m]);
    let mut rhs = vec![T::zero(); d];
    rhs.push(T::one());
    let y = feasible_point(&rows, &rhs)
        .ok_or_else(|| Error::Internal("neither separator nor hull certificate".into()))?;
    Ok(Separation::Infeasible(y))
}

/// A functional strictly positive on every vector of `positives`, if any.
pub fn strict_separator<T: Scalar>(positives: &[Vector<T>]) -> Result<Option<Vector<T>>> {
    Ok(separate(positives)?.functional())
}

/// A functional that is positive exactly on `positives`, negative on the rest
/// of `all_roots`, and injective on `all_roots`.
pub fn generic_separator<T: Scalar>(
    all_roots: &[Vector<T>],
    positives: &[Vector<T>],
) -> Result<Option<Vector<T>>> {
    let dim = common_dim(all_roots)?;
    let all: HashSet<&Vector<T>> = all_roots.iter().collect();
    if all_roots.iter().any(|v| !all.contains(&v.neg())) {
        return Err(Error::InvalidArgument("root set not closed under negation".into()));
    }
    let pos: HashSet<&Vector<T>> = positives.iter().collect();
    if let Some(v) = positives.iter().find(|v| !all.contains(v)) {
        return Err(Error::InvalidArgument(format!("{v} is not in the root set")));
    }

    let oriented: Vec<Vector<T>> = all_roots
        .iter()
        .map(|v| if pos.contains(v) { v.clone() } else { v.neg() })
        .collect();
    let Some(base) = strict_separator(&oriented)? else {
        return Ok(None);
    };

    let mut probes: Vec<Vector<T>> = all_roots.to_vec();
    for (i, a) in all_roots.iter().enumerate() {
        for b in &all_roots[i + 1..] {
            probes.push(a.sub(b));
        }
    }
    let values: Vec<T> = probes.iter().map(|w| base.dot(w)).collect();
    let ties: Vec<&Vector<T>> = probes
        .iter()
        .zip(&values)
        .filter(|(_, v)| v.is_zero())
        .map(|(w, _)| w)
        .collect();

    let f = if ties.is_empty() {
        base
    } else {
        // Moment-curve direction avoiding every tie hyperplane.
        let direction = (1i64..)
            .map(|t| moment_curve::<T>(dim, t))
            .find(|d| ties.iter().all(|w| !d.dot(w).is_zero()))
            .expect("moment curve avoids finitely many hyperplanes");
        let min_gap = values
            .iter()
            .filter(|v| !v.is_zero())
            .map(|v| v.abs())
            .min()
            .expect("roots have nonzero value");
        let max_shift = probes
            .iter()
            .map(|w| direction.dot(w).abs())
            .max()
            .unwrap_or_else(T::zero);
        let eps = min_gap / (T::from_int(2) * (max_shift + T::one()));
        base.add(&direction.scale(&eps)).primitive()
    };

    if !is_generic_for(&f, all_roots, &pos) {
        return Err(Error::Internal("perturbed separator lost genericity".into()));
    }
    Ok(Some(f))
}

fn moment_curve<T: Scalar>(dim: usize, t: i64) -> Vector<T> {
    let mut c = Vec::with_capacity(dim);
    let mut p = T::one();
    for _ in 0..dim {
        c.push(p.clone());
        p = p * T::from_int(t);
    }
    Vector::new(c)
}

fn is_generic_for<T: Scalar>(
    f: &Vector<T>,
    all_roots: &[Vector<T>],
    positives: &HashSet<&Vector<T>>,
) -> bool {
    let values: Vec<T> = all_roots.iter().map(|v| f.dot(v)).collect();
    let signs_ok = all_roots
        .iter()
        .zip(&values)
        .all(|(v, x)| !x.is_zero() && x.is_positive() == positives.contains(v));
    let distinct: HashSet<&T> = values.iter().collect();
    signs_ok && distinct.len() == values.len()
}

/// Strictly positive coefficients over a subset of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combination<T> {
    pub indices: Vec<usize>,
    pub coefficients: Vec<T>,
}

impl<T: Scalar> Combination<T> {
    pub fn check(&self, target: &Vector<T>, generators: &[Vector<T>], min_independent: usize) -> bool {
        if self.indices.len() != self.coefficients.len()
            || self.coefficients.iter().any(|c| !c.is_positive())
            || self.indices.iter().any(|&i| i >= generators.len())
        {
            return false;
        }
        let used: Vec<Vector<T>> = self.indices.iter().map(|&i| generators[i].clone()).collect();
        let sum = used
            .iter()
            .zip(&self.coefficients)
            .fold(Vector::zeros(target.dim()), |acc, (g, c)| acc.add(&g.scale(c)));
        sum == *target && span_rank(&used).is_ok_and(|r| r >= min_independent)
    }
}

/// Writes `target` as a strictly positive combination of generators whose
/// span has rank at least `min_independent`.
///
/// Linearly independent supports are tried first, by size and then
/// lexicographically, so the witness is the smallest such support when one
/// exists. Otherwise the maximal support of the representation polyhedron is
/// computed exactly and used if its rank suffices.
pub fn positive_combination_witness<T: Scalar>(
    target: &Vector<T>,
    generators: &[Vector<T>],
    min_independent: usize,
) -> Result<Option<Combination<T>>> {
    for g in generators {
        target.check_dim(g)?;
    }
    if min_independent > generators.len() {
        return Ok(None);
    }
    if target.is_zero() && min_independent == 0 {
        return Ok(Some(Combination { indices: vec![], coefficients: vec![] }));
    }

    let max_size = target.dim().min(generators.len());
    for size in min_independent.max(1)..=max_size {
        let mut found = None;
        for_each_combination(generators.len(), size, |idx| {
            let cols: Vec<Vector<T>> = idx.iter().map(|&i| generators[i].clone()).collect();
            if let Ok(Some(c)) = solve_independent(&cols, target) {
                if c.iter().all(|x| x.is_positive()) {
                    found = Some(Combination { indices: idx.to_vec(), coefficients: c });
                    return true;
                }
            }
            false
        });
        if found.is_some() {
            return Ok(found);
        }
    }

    maximal_support(target, generators)?
        .filter(|c| {
            let used: Vec<_> = c.indices.iter().map(|&i| generators[i].clone()).collect();
            span_rank(&used).is_ok_and(|r| r >= min_independent)
        })
        .map_or(Ok(None), |c| Ok(Some(c)))
}

/// A representation `target = Σ c_i g_i`, `c >= 0`, whose support is the
/// union of the supports of all such representations.
fn maximal_support<T: Scalar>(
    target: &Vector<T>,
    generators: &[Vector<T>],
) -> Result<Option<Combination<T>>> {
    let n = generators.len();
    let d = target.dim();
    let column_rows = |extra: Option<&Vector<T>>| -> Vec<Vec<T>> {
        (0..d)
            .map(|j| {
                let mut r: Vec<T> = generators.iter().map(|g| g.coords()[j].clone()).collect();
                if let Some(t) = extra {
                    r.push(-t.coords()[j].clone());
                }
                r
            })
            .collect()
    };
    let Some(base) = feasible_point(&column_rows(None), target.coords()) else {
        return Ok(None);
    };

    let mut points: Vec<Vec<T>> = Vec::new();
    let mut support = Vec::new();
    for g in 0..n {
        // c >= 0, λ >= 0, Σ c_i g_i - λ t = 0, c_g = 1.
        let mut rows = column_rows(Some(target));
        let mut unit = vec![T::zero(); n + 1];
        unit[g] = T::one();
        rows.push(unit);
        let mut rhs = vec![T::zero(); d];
        rhs.push(T::one());
        let Some(sol) = feasible_point(&rows, &rhs) else {
            continue;
        };
        let lambda = sol[n].clone();
        let point: Vec<T> = if lambda.is_positive() {
            sol[..n].iter().map(|c| c.clone() / lambda.clone()).collect()
        } else {
            sol[..n].iter().zip(&base).map(|(c, b)| c.clone() + b.clone()).collect()
        };
        support.push(g);
        points.push(point);
    }
    if support.is_empty() {
        return Ok(None);
    }
    let count = T::from_int(points.len() as i64);
    let avg: Vec<T> = (0..n)
        .map(|i| points.iter().fold(T::zero(), |a, p| a + p[i].clone()) / count.clone())
        .collect();
    let coefficients: Vec<T> = support.iter().map(|&i| avg[i].clone()).collect();
    if coefficients.iter().any(|c| !c.is_positive()) {
        return Err(Error::Internal("maximal support average not positive".into()));
    }
    Ok(Some(Combination { indices: support, coefficients }))
}

/// Calls `f` on each `k`-subset of `0..n` in lexicographic order until it
/// returns true.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return;
        }
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type V = Vector<BigRational>;

    fn vs(rows: &[&[i64]]) -> Vec<V> {
        rows.iter().map(|r| Vector::from_ints(r)).collect()
    }

    #[test]
    fn strict_separator_examples() {
        let s = vs(&[&[1, 0], &[0, 1], &[1, 1]]);
        let f = strict_separator(&s).unwrap().unwrap();
        assert!(s.iter().all(|v| f.dot(v) > BigRational::from_int(0)));

        let opposite = vs(&[&[1, 0], &[-1, 0]]);
        let sep = separate(&opposite).unwrap();
        assert!(matches!(sep, Separation::Infeasible(_)));
        assert!(sep.verify(&opposite));
    }

    #[test]
    fn strict_separator_empty_is_rejected() {
        assert!(matches!(strict_separator::<BigRational>(&[]), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn generic_separator_a1() {
        let all = vs(&[&[1], &[-1]]);
        let f = generic_separator(&all, &vs(&[&[1]])).unwrap().unwrap();
        assert_eq!(f, Vector::from_ints(&[1]));
    }

    #[test]
    fn generic_separator_a2_distinct_values() {
        let all = vs(&[&[1, 0], &[0, 1], &[1, 1], &[-1, 0], &[0, -1], &[-1, -1]]);
        let pos = vs(&[&[1, 0], &[0, 1], &[1, 1]]);
        let f = generic_separator(&all, &pos).unwrap().unwrap();
        let values: HashSet<BigRational> = all.iter().map(|v| f.dot(v)).collect();
        assert_eq!(values.len(), 6);
        for v in &all {
            assert_eq!(f.dot(v) > BigRational::from_int(0), pos.contains(v));
        }
    }

    #[test]
    fn generic_separator_not_separable() {
        let all = vs(&[&[1], &[-1]]);
        assert_eq!(generic_separator(&all, &all).unwrap(), None);
    }

    #[test]
    fn generic_separator_rejects_bad_input() {
        let all = vs(&[&[1, 0], &[0, 1]]);
        assert!(generic_separator(&all, &vs(&[&[1, 0]])).is_err());
    }

    #[test]
    fn positive_combination_examples() {
        let q = BigRational::from_int;
        let c = positive_combination_witness(&Vector::from_ints(&[1, 1]), &vs(&[&[1, 0], &[0, 1]]), 2)
            .unwrap()
            .unwrap();
        assert_eq!(c.indices, vec![0, 1]);
        assert_eq!(c.coefficients, vec![q(1), q(1)]);

        let none = positive_combination_witness(&Vector::from_ints(&[1, 0]), &vs(&[&[1, 0]]), 2);
        assert_eq!(none.unwrap(), None);
        let none = positive_combination_witness(&Vector::from_ints(&[1, 0]), &vs(&[&[1, 0], &[2, 0]]), 2)
            .unwrap();
        assert!(none.is_none());
    }

    #[test]
    fn maximal_support_when_no_independent_support_has_enough_rank() {
        // (2,0) = (1,1) + (1,-1) needs the pair; asking for rank 2 over a
        // set where the only independent representation is the pair.
        let gens = vs(&[&[1, 1], &[1, -1], &[1, 0]]);
        let t = Vector::from_ints(&[2, 0]);
        let c = positive_combination_witness(&t, &gens, 2).unwrap().unwrap();
        assert!(c.check(&t, &gens, 2));

        let full = maximal_support(&t, &gens).unwrap().unwrap();
        assert_eq!(full.indices, vec![0, 1, 2]);
        assert!(full.check(&t, &gens, 2));
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| {
            seen.push(c.to_vec());
            false
        });
        assert_eq!(
            seen,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }
}
