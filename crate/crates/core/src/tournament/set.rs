use std::fmt;

use super::{CandidateId, MAX_CANDIDATES};

/// Set of candidates as a bit mask; iteration follows candidate order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct CandidateSet(u16);

impl CandidateSet {
    pub const fn empty() -> Self {
        CandidateSet(0)
    }

    /// `{0, 1, ..., k-1}`.
    pub fn full(k: usize) -> Self {
        assert!(k <= MAX_CANDIDATES);
        CandidateSet(((1u32 << k) - 1) as u16)
    }

    pub fn singleton(c: CandidateId) -> Self {
        CandidateSet(1 << c.0)
    }

    pub fn insert(&mut self, c: CandidateId) {
        self.0 |= 1 << c.0;
    }

    pub fn remove(&mut self, c: CandidateId) {
        self.0 &= !(1 << c.0);
    }

    pub fn contains(self, c: CandidateId) -> bool {
        self.0 & (1 << c.0) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: CandidateSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// The only member, if the set has exactly one.
    pub fn as_singleton(self) -> Option<CandidateId> {
        (self.len() == 1).then(|| CandidateId(self.0.trailing_zeros() as usize))
    }

    pub fn is_singleton(self, c: CandidateId) -> bool {
        self.0 == 1 << c.0
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn bits(self) -> u16 {
        self.0
    }
}

impl FromIterator<CandidateId> for CandidateSet {
    fn from_iter<I: IntoIterator<Item = CandidateId>>(iter: I) -> Self {
        let mut s = CandidateSet::empty();
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl IntoIterator for CandidateSet {
    type Item = CandidateId;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

#[derive(Clone)]
pub struct Iter(u16);

impl Iterator for Iter {
    type Item = CandidateId;

    #[inline]
    fn next(&mut self) -> Option<CandidateId> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(CandidateId(i))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl fmt::Debug for CandidateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|c| c.0)).finish()
    }
}
