use serde::{Deserialize, Serialize};

/// A set of root indices, stored as a bitset over a fixed universe.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootSet {
    words: Vec<u64>,
}

impl RootSet {
    pub fn new(universe: usize) -> Self {
        RootSet { words: vec![0; universe.div_ceil(64)] }
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w & (1 << (i % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }

    pub fn intersection(&self, other: &Self) -> Self {
        RootSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Whether `self ∩ other` is nonempty and contained in `within`.
    pub fn meet_is_nonempty_within(&self, other: &Self, within: &Self) -> bool {
        let mut nonempty = false;
        for ((a, b), c) in self.words.iter().zip(&other.words).zip(&within.words) {
            let m = a & b;
            if m & !c != 0 {
                return false;
            }
            nonempty |= m != 0;
        }
        nonempty
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}
