//! Dense bitset over typed indices.
//!
//! Vertex and edge sets are both `DenseSet`s, distinguished by their index
//! type so that a vertex set cannot be passed where an edge set is expected.
//! The word vector never carries trailing zero words, which keeps the derived
//! equality and hashing extensional.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{BitAnd, BitOr, Sub};

const WORD_BITS: usize = u64::BITS as usize;

/// A dense index usable as a `DenseSet` element.
pub trait Idx: Copy + Eq + Ord + Hash + fmt::Debug {
    fn new(index: usize) -> Self;
    fn index(self) -> usize;
}

macro_rules! index_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
        pub struct $name(pub u32);

        impl Idx for $name {
            #[inline]
            fn new(index: usize) -> Self {
                $name(u32::try_from(index).expect("index exceeds u32 range"))
            }

            #[inline]
            fn index(self) -> usize {
                self.0 as usize
            }
        }
    };
}

index_type!(
    /// Index of a vertex in its hypergraph's vertex table.
    VertexId
);
index_type!(
    /// Index of an edge, in input order.
    EdgeId
);

pub type VertexSet = DenseSet<VertexId>;
pub type EdgeSet = DenseSet<EdgeId>;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DenseSet<I> {
    words: Vec<u64>,
    _marker: PhantomData<fn() -> I>,
}

impl<I: Idx> DenseSet<I> {
    pub fn new() -> Self {
        DenseSet {
            words: Vec::new(),
            _marker: PhantomData,
        }
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n / WORD_BITS];
        let rest = n % WORD_BITS;
        if rest > 0 {
            words.push((1u64 << rest) - 1);
        }
        DenseSet {
            words,
            _marker: PhantomData,
        }
    }

    pub fn singleton(item: I) -> Self {
        let mut set = Self::new();
        set.insert(item);
        set
    }

    pub fn insert(&mut self, item: I) -> bool {
        let (word, mask) = location(item.index());
        if word >= self.words.len() {
            self.words.resize(word + 1, 0);
        }
        let fresh = self.words[word] & mask == 0;
        self.words[word] |= mask;
        fresh
    }

    pub fn remove(&mut self, item: I) -> bool {
        let (word, mask) = location(item.index());
        match self.words.get_mut(word) {
            Some(w) if *w & mask != 0 => {
                *w &= !mask;
                self.trim();
                true
            }
            _ => false,
        }
    }

    #[inline]
    pub fn contains(&self, item: I) -> bool {
        let (word, mask) = location(item.index());
        self.words.get(word).is_some_and(|w| w & mask != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn first(&self) -> Option<I> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_, I> {
        Iter {
            words: &self.words,
            word_index: 0,
            current: self.words.first().copied().unwrap_or(0),
            _marker: PhantomData,
        }
    }

    pub fn union_with(&mut self, other: &Self) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.words.truncate(other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        self.trim();
    }

    pub fn difference_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        self.trim();
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len() && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        !self.intersects(other)
    }

    pub fn to_vec(&self) -> Vec<I> {
        self.iter().collect()
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

#[inline]
fn location(index: usize) -> (usize, u64) {
    (index / WORD_BITS, 1u64 << (index % WORD_BITS))
}

pub struct Iter<'a, I> {
    words: &'a [u64],
    word_index: usize,
    current: u64,
    _marker: PhantomData<fn() -> I>,
}

impl<I: Idx> Iterator for Iter<'_, I> {
    type Item = I;

    fn next(&mut self) -> Option<I> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(I::new(self.word_index * WORD_BITS + bit));
            }
            self.word_index += 1;
            self.current = *self.words.get(self.word_index)?;
        }
    }
}

impl<'a, I: Idx> IntoIterator for &'a DenseSet<I> {
    type Item = I;
    type IntoIter = Iter<'a, I>;

    fn into_iter(self) -> Iter<'a, I> {
        self.iter()
    }
}

impl<I: Idx> FromIterator<I> for DenseSet<I> {
    fn from_iter<T: IntoIterator<Item = I>>(iter: T) -> Self {
        let mut set = Self::new();
        set.extend(iter);
        set
    }
}

impl<I: Idx> Extend<I> for DenseSet<I> {
    fn extend<T: IntoIterator<Item = I>>(&mut self, iter: T) {
        for item in iter {
            self.insert(item);
        }
    }
}

/// Lexicographic order on the ascending element sequences.
impl<I: Idx> Ord for DenseSet<I> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl<I: Idx> PartialOrd for DenseSet<I> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<I: Idx> fmt::Debug for DenseSet<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(Idx::index)).finish()
    }
}

impl<I: Idx> BitOr for &DenseSet<I> {
    type Output = DenseSet<I>;

    fn bitor(self, rhs: Self) -> DenseSet<I> {
        self.union(rhs)
    }
}

impl<I: Idx> BitAnd for &DenseSet<I> {
    type Output = DenseSet<I>;

    fn bitand(self, rhs: Self) -> DenseSet<I> {
        self.intersection(rhs)
    }
}

impl<I: Idx> Sub for &DenseSet<I> {
    type Output = DenseSet<I>;

    fn sub(self, rhs: Self) -> DenseSet<I> {
        self.difference(rhs)
    }
}
