use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::vector::Vector;

fn common_dim<T: Scalar>(vectors: &[Vector<T>]) -> Result<Option<usize>> {
    let Some(first) = vectors.first() else {
        return Ok(None);
    };
    for v in vectors {
        first.check_dim(v)?;
    }
    Ok(Some(first.dim()))
}

/// Row echelon form in place; returns the pivot columns.
fn echelon<T: Scalar>(rows: &mut [Vec<T>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = T::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..ncols {
                    let d = rows[r][j].clone() * f.clone();
                    rows[i][j] = rows[i][j].clone() - d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Dimension of the rational span of `vectors`.
pub fn span_rank<T: Scalar>(vectors: &[Vector<T>]) -> Result<usize> {
    let Some(dim) = common_dim(vectors)? else {
        return Ok(0);
    };
    let mut rows: Vec<Vec<T>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    Ok(echelon(&mut rows, dim).len())
}

/// Whether `u` is a nonzero rational multiple of `v`.
pub fn are_collinear<T: Scalar>(u: &Vector<T>, v: &Vector<T>) -> Result<bool> {
    u.check_dim(v)?;
    if u.is_zero() || v.is_zero() {
        return Err(Error::InvalidArgument("collinearity of a zero vector".into()));
    }
    Ok(span_rank(&[u.clone(), v.clone()])? == 1)
}

/// Coefficients `c` with `Σ c_i columns[i] = target`, if the columns are
/// linearly independent and the system is consistent.
pub fn solve_independent<T: Scalar>(
    columns: &[Vector<T>],
    target: &Vector<T>,
) -> Result<Option<Vec<T>>> {
    for c in columns {
        c.check_dim(target)?;
    }
    let n = columns.len();
    let dim = target.dim();
    // Augmented system: dim equations in n unknowns.
    let mut rows: Vec<Vec<T>> = (0..dim)
        .map(|i| {
            let mut row: Vec<T> = columns.iter().map(|c| c.coords()[i].clone()).collect();
            row.push(target.coords()[i].clone());
            row
        })
        .collect();
    let pivots = echelon(&mut rows, n + 1);
    if pivots.contains(&n) || pivots.len() < n {
        return Ok(None);
    }
    Ok(Some((0..n).map(|i| rows[i][n].clone()).collect()))
}

/// Rank of a small integer matrix by fraction-free elimination.
///
/// Intended for root coordinates; entries grow at most to products of
/// `rank` original entries, which fits `i128` for every system here.
pub fn int_rank(rows: &[&[i64]]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let ncols = first.len();
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            if m[i][c] != 0 {
                let (a, b) = (m[rank][c], m[i][c]);
                let g = gcd(a, b);
                let (a, b) = (a / g, b / g);
                for j in c..ncols {
                    m[i][j] = m[i][j] * a - m[rank][j] * b;
                }
                let h = m[i][c..].iter().fold(0, |acc, &x| gcd(acc, x));
                if h > 1 {
                    m[i][c..].iter_mut().for_each(|x| *x /= h);
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Whether two nonzero integer vectors are collinear.
pub fn int_collinear(u: &[i64], v: &[i64]) -> bool {
    debug_assert_eq!(u.len(), v.len());
    (0..u.len()).all(|i| (i + 1..u.len()).all(|j| u[i] * v[j] == u[j] * v[i]))
        && (0..u.len()).all(|i| (u[i] == 0) == (v[i] == 0))
}
