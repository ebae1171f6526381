use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Family label of an irreducible root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    BC,
}

impl Series {
    pub const ALL: [Series; 8] = [
        Series::A,
        Series::B,
        Series::C,
        Series::D,
        Series::E,
        Series::F,
        Series::G,
        Series::BC,
    ];

    pub fn admits(self, rank: usize) -> bool {
        match self {
            Series::A | Series::BC => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        }
    }

    /// Number of roots of the irreducible system of this series and rank.
    pub fn root_count(self, rank: usize) -> usize {
        let n = rank;
        match self {
            Series::A => n * (n + 1),
            Series::B | Series::C => 2 * n * n,
            Series::D => 2 * n * (n - 1),
            Series::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Series::F => 48,
            Series::G => 12,
            Series::BC => 2 * n * (n + 1),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::E => "E",
            Series::F => "F",
            Series::G => "G",
            Series::BC => "BC",
        };
        f.write_str(s)
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Series::ALL
            .into_iter()
            .find(|x| x.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnsupportedType { series: s.to_string(), rank: 0 })
    }
}

/// An irreducible type `(series, rank)` from the admissible table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        if !series.admits(rank) {
            return Err(Error::UnsupportedType { series: series.to_string(), rank });
        }
        Ok(CartanType { series, rank })
    }

    pub fn is_reduced(&self) -> bool {
        self.series != Series::BC
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

/// Simple roots in Euclidean coordinates (Bourbaki numbering), scaled so
/// every coordinate is an integer. BC_n uses the B_n simple roots.
pub(crate) fn euclidean_simple_roots(t: CartanType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let unit = |dim: usize, i: usize| {
        let mut v = vec![0; dim];
        v[i] = 1;
        v
    };
    let diff = |dim: usize, i: usize, j: usize| {
        let mut v = vec![0; dim];
        v[i] = 1;
        v[j] = -1;
        v
    };
    match t.series {
        Series::A => (0..n).map(|i| diff(n + 1, i, i + 1)).collect(),
        Series::B | Series::BC => {
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            s.push(unit(n, n - 1));
            s
        }
        Series::C => {
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            s.push(unit(n, n - 1).into_iter().map(|x| 2 * x).collect());
            s
        }
        Series::D => {
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut last = vec![0; n];
            last[n - 2] = 1;
            last[n - 1] = 1;
            s.push(last);
            s
        }
        Series::E => {
            // E8 in doubled coordinates; E6 and E7 are its leading subdiagrams.
            let mut s = vec![vec![1, -1, -1, -1, -1, -1, -1, 1], {
                let mut v = vec![0; 8];
                v[0] = 2;
                v[1] = 2;
                v
            }];
            for i in 0..6 {
                s.push(diff(8, i + 1, i).into_iter().map(|x| 2 * x).collect());
            }
            s.truncate(n);
            s
        }
        Series::F => vec![
            vec![0, 2, -2, 0],
            vec![0, 0, 2, -2],
            vec![0, 0, 0, 2],
            vec![1, -1, -1, -1],
        ],
        Series::G => vec![vec![1, -1, 0], vec![-2, 1, 1]],
    }
}

pub(crate) fn gram(simple: &[Vec<i64>]) -> Vec<Vec<i64>> {
    simple
        .iter()
        .map(|a| {
            simple
                .iter()
                .map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum())
                .collect()
        })
        .collect()
}

/// Cartan integers `c[i][j] = 2 (α_i, α_j) / (α_i, α_i)`.
pub(crate) fn cartan_from_gram(g: &[Vec<i64>]) -> Vec<Vec<i64>> {
    (0..g.len())
        .map(|i| {
            (0..g.len())
                .map(|j| {
                    debug_assert_eq!((2 * g[i][j]) % g[i][i], 0);
                    2 * g[i][j] / g[i][i]
                })
                .collect()
        })
        .collect()
}
