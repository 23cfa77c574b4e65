//! Bitmap path store shared by concurrent writers.
//!
//! Row `r` is a vertex bitmap plus the first, second and last vertex of the
//! path it holds. Writers reserve rows through a single atomic counter, so
//! indices are unique and gap-free; the row contents are then written
//! without further coordination. The counter keeps counting past capacity,
//! which tells the host exactly how many rows a rerun needs.

use std::sync::atomic::{AtomicU32, AtomicU64, AtomicUsize, Ordering};

use crate::bitset;
use crate::error::{Error, Result};
use crate::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowEnds {
    pub first: VertexId,
    pub second: VertexId,
    pub last: VertexId,
}

#[derive(Debug)]
pub struct PathStore {
    words: usize,
    bits: Vec<AtomicU64>,
    first: Vec<AtomicU32>,
    second: Vec<AtomicU32>,
    last: Vec<AtomicU32>,
    reserved: AtomicUsize,
}

impl PathStore {
    /// A store for graphs on `n` vertices with room for `capacity` rows.
    pub fn new(n: usize, capacity: usize) -> Self {
        let mut store = Self {
            words: bitset::words_for(n),
            bits: Vec::new(),
            first: Vec::new(),
            second: Vec::new(),
            last: Vec::new(),
            reserved: AtomicUsize::new(0),
        };
        store.grow(capacity);
        store
    }

    /// `u64` words per bitmap row.
    pub fn words_per_row(&self) -> usize {
        self.words
    }

    pub fn capacity(&self) -> usize {
        self.first.len()
    }

    /// Rows requested since the last clear, including any that did not fit.
    pub fn requested(&self) -> usize {
        self.reserved.load(Ordering::Acquire)
    }

    /// Valid rows `0..len()`.
    pub fn len(&self) -> usize {
        self.requested().min(self.capacity())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn overflowed(&self) -> bool {
        self.requested() > self.capacity()
    }

    /// Grows to at least `capacity` rows, keeping existing contents.
    pub fn grow(&mut self, capacity: usize) {
        if capacity <= self.capacity() {
            return;
        }
        self.bits.resize_with(capacity * self.words, || AtomicU64::new(0));
        self.first.resize_with(capacity, || AtomicU32::new(0));
        self.second.resize_with(capacity, || AtomicU32::new(0));
        self.last.resize_with(capacity, || AtomicU32::new(0));
    }

    pub fn clear(&mut self) {
        *self.reserved.get_mut() = 0;
    }

    /// Drops rows at and beyond `len` (also resets an overflowed counter).
    pub fn truncate(&mut self, len: usize) {
        let r = self.reserved.get_mut();
        *r = (*r).min(len);
    }

    /// Reserves the next row and writes `members` and the path ends into it.
    pub fn append_reserved(&self, members: &[u64], ends: RowEnds) -> Result<usize> {
        debug_assert_eq!(members.len(), self.words);
        let row = self.reserved.fetch_add(1, Ordering::AcqRel);
        if row >= self.capacity() {
            return Err(Error::CapacityExceeded {
                capacity: self.capacity(),
                requested: row + 1,
            });
        }
        let base = row * self.words;
        for (slot, &w) in self.bits[base..base + self.words].iter().zip(members) {
            slot.store(w, Ordering::Relaxed);
        }
        self.first[row].store(ends.first, Ordering::Relaxed);
        self.second[row].store(ends.second, Ordering::Relaxed);
        self.last[row].store(ends.last, Ordering::Relaxed);
        Ok(row)
    }

    /// Copies the bitmap of `row` into `buf`.
    #[inline]
    pub fn copy_row(&self, row: usize, buf: &mut [u64]) {
        let base = row * self.words;
        for (dst, src) in buf.iter_mut().zip(&self.bits[base..base + self.words]) {
            *dst = src.load(Ordering::Relaxed);
        }
    }

    pub fn row(&self, row: usize) -> Vec<u64> {
        let mut buf = vec![0; self.words];
        self.copy_row(row, &mut buf);
        buf
    }

    #[inline]
    pub fn ends(&self, row: usize) -> RowEnds {
        RowEnds {
            first: self.first[row].load(Ordering::Relaxed),
            second: self.second[row].load(Ordering::Relaxed),
            last: self.last[row].load(Ordering::Relaxed),
        }
    }

    #[inline]
    pub fn last(&self, row: usize) -> VertexId {
        self.last[row].load(Ordering::Relaxed)
    }
}
