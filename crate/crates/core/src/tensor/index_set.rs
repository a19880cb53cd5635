use std::fmt;

use crate::error::{Error, Result};

/// Strictly increasing subset of `{1..n}`.
///
/// Stored 0-based; `from_one_based` and `to_one_based` are the user-facing conversions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn from_one_based(members: &[usize], n: usize) -> Result<Self> {
        for w in members.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::UnsortedIndexSet);
            }
        }
        if let Some(&bad) = members.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::IndexOutOfRange {
                tuple: members.to_vec(),
                index: bad,
                dim: n,
            });
        }
        Ok(Self(members.iter().map(|i| i - 1).collect()))
    }

    pub(crate) fn from_zero_based(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self(members)
    }

    /// Members of the bitmask `mask` over `{0..n}`.
    pub(crate) fn from_mask(mask: u64, n: usize) -> Self {
        Self((0..n).filter(|i| mask >> i & 1 == 1).collect())
    }

    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// Every nonempty subset of `{1..n}`, ordered by size and then lexicographically.
    pub fn nonempty_subsets(n: usize) -> Vec<IndexSet> {
        let mut all: Vec<IndexSet> = (1..(1u64 << n)).map(|m| Self::from_mask(m, n)).collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0)));
        all
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// 0-based members.
    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    /// Restriction `u_J`.
    pub fn restrict(&self, u: &[f64]) -> Vec<f64> {
        self.0.iter().map(|&i| u[i]).collect()
    }

    /// Zero-padded lift of `u_J` back to dimension `n`.
    pub fn lift(&self, u_j: &[f64], n: usize) -> Vec<f64> {
        let mut u = vec![0.0; n];
        for (&i, &x) in self.0.iter().zip(u_j) {
            u[i] = x;
        }
        u
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_one_based().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_members() {
        assert!(IndexSet::from_one_based(&[1, 3], 3).is_ok());
        assert_eq!(IndexSet::from_one_based(&[2, 1], 3), Err(Error::UnsortedIndexSet));
        assert!(matches!(
            IndexSet::from_one_based(&[1, 4], 3),
            Err(Error::IndexOutOfRange { index: 4, .. })
        ));
        assert!(IndexSet::from_one_based(&[0], 3).is_err());
    }

    #[test]
    fn subsets_are_ordered_by_size() {
        let s: Vec<String> = IndexSet::nonempty_subsets(3).iter().map(|j| j.to_string()).collect();
        assert_eq!(s, ["{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"]);
    }

    #[test]
    fn lift_restrict() {
        let j = IndexSet::from_one_based(&[1, 3], 3).unwrap();
        assert_eq!(j.lift(&[2.0, 5.0], 3), vec![2.0, 0.0, 5.0]);
        assert_eq!(j.restrict(&[2.0, 7.0, 5.0]), vec![2.0, 5.0]);
    }
}
