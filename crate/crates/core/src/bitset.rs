//! Dense fact sets over an indexed universe, used by the enumeration cores.

use std::collections::BTreeMap;

use crate::model::{Fact, World};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(universe: usize) -> Self {
        BitSet {
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn difference(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

/// Sorted facts with their positions, mapping worlds to bitsets and back.
#[derive(Debug, Clone, Default)]
pub(crate) struct Universe {
    facts: Vec<Fact>,
    index: BTreeMap<Fact, usize>,
}

impl Universe {
    pub fn new<'a>(facts: impl IntoIterator<Item = &'a Fact>) -> Self {
        let mut facts: Vec<Fact> = facts.into_iter().cloned().collect();
        facts.sort();
        facts.dedup();
        let index = facts.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        Universe { facts, index }
    }

    pub fn len(&self) -> usize {
        self.facts.len()
    }

    pub fn empty(&self) -> BitSet {
        BitSet::new(self.len())
    }

    pub fn full(&self) -> BitSet {
        let mut s = self.empty();
        for i in 0..self.len() {
            s.insert(i);
        }
        s
    }

    /// Panics if a fact is outside the universe.
    pub fn encode<'a>(&self, facts: impl IntoIterator<Item = &'a Fact>) -> BitSet {
        let mut s = self.empty();
        for f in facts {
            s.insert(self.index[f]);
        }
        s
    }

    pub fn decode(&self, s: &BitSet) -> World {
        s.iter().map(|i| self.facts[i].clone()).collect()
    }
}
