//! Fixed-width vertex bitmaps.
//!
//! A row holds one bit per vertex packed into `u64` words, bit `v % 64` of
//! word `v / 64`. The free functions operate on borrowed word slices so the
//! same code serves owned sets and rows living inside a path store.

use crate::VertexId;

pub const WORD_BITS: usize = 64;

/// Number of `u64` words needed for `n` vertices.
#[inline]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

#[inline]
pub fn contains(words: &[u64], v: VertexId) -> bool {
    let v = v as usize;
    words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
}

#[inline]
pub fn insert(words: &mut [u64], v: VertexId) {
    let v = v as usize;
    words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
}

#[inline]
pub fn remove(words: &mut [u64], v: VertexId) {
    let v = v as usize;
    words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
}

#[inline]
pub fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// Iterates set bits in ascending order.
pub fn ones(words: &[u64]) -> impl Iterator<Item = VertexId> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some((i * WORD_BITS + bit) as VertexId)
        })
    })
}

/// Owned vertex bitmap sized for a fixed vertex count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        Self {
            words: vec![0; words_for(n)],
        }
    }

    pub fn from_vertices(n: usize, vertices: impl IntoIterator<Item = VertexId>) -> Self {
        let mut set = Self::new(n);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub fn from_words(words: Vec<u64>) -> Self {
        Self { words }
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        contains(&self.words, v)
    }

    #[inline]
    pub fn insert(&mut self, v: VertexId) {
        insert(&mut self.words, v)
    }

    #[inline]
    pub fn remove(&mut self, v: VertexId) {
        remove(&mut self.words, v)
    }

    pub fn len(&self) -> usize {
        popcount(&self.words)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        ones(&self.words)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}
