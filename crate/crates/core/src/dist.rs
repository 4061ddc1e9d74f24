//! Count tables for statistics folded over an enumeration.

use alloc::vec::Vec;

use crate::genfunc::Polynomial;

/// Number of objects observed at each statistic value.
///
/// Merging is associative and commutative, so disjoint parts of a class can be
/// folded independently and combined in any order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Distribution {
    counts: Vec<u64>,
}

impl Distribution {
    pub fn new() -> Self {
        Distribution::default()
    }

    #[inline]
    pub fn record(&mut self, value: usize) {
        if value >= self.counts.len() {
            self.counts.resize(value + 1, 0);
        }
        self.counts[value] += 1;
    }

    pub fn merge(&mut self, other: &Distribution) {
        if other.counts.len() > self.counts.len() {
            self.counts.resize(other.counts.len(), 0);
        }
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }

    pub fn merged(mut self, other: Distribution) -> Distribution {
        self.merge(&other);
        self
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_u64s(&self.counts)
    }
}

impl FromIterator<usize> for Distribution {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut d = Distribution::new();
        for v in iter {
            d.record(v);
        }
        d
    }
}
