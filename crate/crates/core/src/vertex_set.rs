use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Vertex;

/// A subset of `0..universe`, stored as a bitset. Iteration is ascending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = VertexSet::new(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices<I>(universe: usize, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut s = VertexSet::new(universe);
        for v in vertices {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: universe,
                });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Inserts `v`; panics if `v` is outside the universe.
    pub fn insert(&mut self, v: Vertex) -> bool {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        let was = self.contains(v);
        self.words[v / 64] |= 1 << (v % 64);
        !was
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        let was = self.contains(v);
        if was {
            self.words[v / 64] &= !(1 << (v % 64));
        }
        was
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    i * 64 + b
                })
            })
        })
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_words(other, |a, b| a & !b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_words(other, |a, b| a & b)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    fn zip_words(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        let universe = self.universe.max(other.universe);
        let word = |s: &VertexSet, i: usize| s.words.get(i).copied().unwrap_or(0);
        VertexSet {
            universe,
            words: (0..universe.div_ceil(64))
                .map(|i| f(word(self, i), word(other, i)))
                .collect(),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", items.join(" "))
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
