//! Phase-one simplex over an exact field with Bland's pivoting rule.
//!
//! The only question asked of it is feasibility of `A x = b, x >= 0`; the
//! returned point is the first feasible basis reached from the all-artificial
//! start, which makes it a deterministic function of the input.

use crate::scalar::Scalar;

/// Finds `x >= 0` with `a x = b`, or `None` if the system is infeasible.
///
/// `a` is given row-wise; every row must have the same length.
pub fn feasible_point<T: Scalar>(a: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    assert_eq!(a.len(), b.len());
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    if m == 0 {
        return Some(vec![T::zero(); n]);
    }

    // Tableau columns: n structural, m artificial, then the right-hand side.
    let width = n + m + 1;
    let mut tab: Vec<Vec<T>> = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        assert_eq!(row.len(), n);
        let flip = rhs.is_negative();
        let mut r: Vec<T> = Vec::with_capacity(width);
        r.extend(row.iter().map(|x| if flip { -x.clone() } else { x.clone() }));
        r.extend((0..m).map(|j| if j == i { T::one() } else { T::zero() }));
        r.push(if flip { -rhs.clone() } else { rhs.clone() });
        tab.push(r);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs of the phase-one objective (sum of artificials).
    let mut cost: Vec<T> = vec![T::zero(); width];
    for r in &tab {
        for j in 0..n {
            cost[j] = cost[j].clone() - r[j].clone();
        }
        cost[width - 1] = cost[width - 1].clone() - r[width - 1].clone();
    }

    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, T)> = None;
        for (i, r) in tab.iter().enumerate() {
            if r[enter].is_positive() {
                let ratio = r[width - 1].clone() / r[enter].clone();
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so some row always qualifies.
        let (pr, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut tab, &mut cost, pr, enter);
        basis[pr] = enter;
    }

    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![T::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = tab[i][width - 1].clone();
        }
    }
    Some(x)
}

fn pivot<T: Scalar>(tab: &mut [Vec<T>], cost: &mut [T], pr: usize, pc: usize) {
    let inv = T::one() / tab[pr][pc].clone();
    for x in tab[pr].iter_mut() {
        *x = x.clone() * inv.clone();
    }
    let prow = tab[pr].clone();
    for (i, r) in tab.iter_mut().enumerate() {
        if i != pr && !r[pc].is_zero() {
            let f = r[pc].clone();
            for (x, p) in r.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x = x.clone() - p.clone() * f.clone();
                }
            }
        }
    }
    if !cost[pc].is_zero() {
        let f = cost[pc].clone();
        for (x, p) in cost.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x = x.clone() - p.clone() * f.clone();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(v: i64) -> BigRational {
        BigRational::from_int(v)
    }

    fn rows(r: &[&[i64]]) -> Vec<Vec<BigRational>> {
        r.iter().map(|row| row.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn feasible_system() {
        // x + y = 2, x - y = 0
        let a = rows(&[&[1, 1], &[1, -1]]);
        let x = feasible_point(&a, &[q(2), q(0)]).unwrap();
        assert_eq!(x, vec![q(1), q(1)]);
    }

    #[test]
    fn infeasible_system() {
        // x + y = -1 with x, y >= 0
        let a = rows(&[&[1, 1]]);
        assert!(feasible_point(&a, &[q(-1)]).is_none());
        // x = 1, x = 2
        let a = rows(&[&[1], &[1]]);
        assert!(feasible_point(&a, &[q(1), q(2)]).is_none());
    }

    #[test]
    fn negative_rhs_rows_are_flipped() {
        // -x + y = -3, y = 1  ->  x = 4
        let a = rows(&[&[-1, 1], &[0, 1]]);
        let x = feasible_point(&a, &[q(-3), q(1)]).unwrap();
        assert_eq!(x, vec![q(4), q(1)]);
    }

    #[test]
    fn degenerate_redundant_rows() {
        let a = rows(&[&[1, 1, 0], &[2, 2, 0], &[0, 0, 1]]);
        let x = feasible_point(&a, &[q(1), q(2), q(0)]).unwrap();
        assert_eq!(x[0].clone() + x[1].clone(), q(1));
        assert_eq!(x[2], q(0));
    }
}
