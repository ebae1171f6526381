use crate::error::{Error, Result};
use crate::rootset::RootSet;

use super::RootSystem;

/// Writes the positive root `x` as `y_1 + … + y_n` with simple `y_k` and
/// every partial sum a root.
///
/// The chain is built backwards: at each step the least simple root (in
/// canonical root order) whose removal leaves a positive root is split off
/// as the next-to-last term.
pub fn simple_sum_chain(sys: &RootSystem, x: usize) -> Result<Vec<usize>> {
    let positive = RootSet::from_indices(sys.len(), sys.positive_roots());
    chain_in(sys, sys.simple_system(), &positive, x)
}

/// [`simple_sum_chain`] relative to an arbitrary positive system given by
/// its positive set and simple roots.
pub fn chain_in(sys: &RootSystem, simple: &[usize], positive: &RootSet, x: usize) -> Result<Vec<usize>> {
    if !positive.contains(x) {
        return Err(Error::InvalidArgument(format!(
            "{} is not a positive root",
            sys.root(x)
        )));
    }
    let mut order = simple.to_vec();
    order.sort_unstable();

    let mut rev = Vec::new();
    let mut cur = x;
    while !order.contains(&cur) {
        let next = order.iter().find_map(|&d| {
            let rest = sys.root(cur).sub(sys.root(d));
            sys.index_of(&rest)
                .filter(|&r| positive.contains(r))
                .map(|r| (d, r))
        });
        let Some((d, rest)) = next else {
            return Err(Error::Internal(format!(
                "no simple root can be split off {}",
                sys.root(cur)
            )));
        };
        rev.push(d);
        cur = rest;
    }
    rev.push(cur);
    rev.reverse();
    Ok(rev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, Root, Series};

    fn idx(sys: &RootSystem, c: &[i64]) -> usize {
        sys.index_of(&Root::new(c.to_vec())).unwrap()
    }

    fn chain_coords(sys: &RootSystem, c: &[i64]) -> Vec<Vec<i64>> {
        simple_sum_chain(sys, idx(sys, c))
            .unwrap()
            .into_iter()
            .map(|i| sys.root(i).coords().to_vec())
            .collect()
    }

    #[test]
    fn a2_chains() {
        let a2 = build_root_system(Series::A, 2).unwrap();
        assert_eq!(chain_coords(&a2, &[1, 0]), vec![vec![1, 0]]);
        assert_eq!(chain_coords(&a2, &[1, 1]), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn b2_long_chain() {
        let b2 = build_root_system(Series::B, 2).unwrap();
        assert_eq!(
            chain_coords(&b2, &[1, 2]),
            vec![vec![1, 0], vec![0, 1], vec![0, 1]]
        );
    }

    #[test]
    fn negative_root_is_rejected() {
        let a2 = build_root_system(Series::A, 2).unwrap();
        let err = simple_sum_chain(&a2, idx(&a2, &[-1, 0])).unwrap_err();
        assert!(matches!(err, Error::InvalidArgument(_)));
    }
}
