use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A composition: an ordered sequence of positive parts. The empty sequence
/// is the unique composition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart { parts });
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts, `k(α)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The integer being composed.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The partition with the same multiset of parts.
    pub fn sorted(&self) -> Partition {
        Partition::from_parts_unchecked(self.0.clone())
    }

    /// All compositions of `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Composition> {
        fn go(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(prefix.clone()));
                return;
            }
            for first in 1..=rest {
                prefix.push(first);
                go(rest - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::with_capacity(1 << n.saturating_sub(1));
        go(n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Vec<usize> {
        c.0
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A partition: parts sorted in weakly decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the given parts into a partition.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart { parts });
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `(1, 1, …, 1)` with `n` ones.
    pub fn ones(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// True when every part is odd.
    pub fn is_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self::from_parts_unchecked(parts)
    }

    /// All partitions of `n`, reverse-lexicographic: `(n)` first, `(1^n)` last.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for first in (1..=rest.min(max)).rev() {
                prefix.push(first);
                go(rest - first, first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Multiplicity vector: entry `s` is the number of parts equal to `s`.
    pub(crate) fn multiplicities(&self, n: usize) -> Vec<u8> {
        let mut m = vec![0u8; n + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("partition {parts:?} is not sorted descending")));
        }
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_of_small_numbers() {
        assert_eq!(Composition::all(0), vec![Composition::empty()]);
        let three: Vec<Vec<usize>> = Composition::all(3).into_iter().map(Vec::from).collect();
        assert_eq!(three, vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]);
        assert_eq!(Composition::all(6).len(), 32);
    }

    #[test]
    fn partitions_reverse_lex() {
        let four: Vec<Vec<usize>> = Partition::all(4).into_iter().map(Vec::from).collect();
        assert_eq!(
            four,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        assert_eq!(Partition::all(0).len(), 1);
        assert_eq!(Partition::all(12).len(), 77);
    }

    #[test]
    fn zero_parts_rejected() {
        assert!(Composition::new(vec![1, 0]).is_err());
        assert!(Partition::new(vec![0]).is_err());
        assert_eq!(Partition::new(vec![1, 3, 2]).unwrap().parts(), &[3, 2, 1]);
    }

    #[test]
    fn odd_partitions() {
        assert!(Partition::new(vec![5, 3, 1]).unwrap().is_odd());
        assert!(!Partition::new(vec![2]).unwrap().is_odd());
        assert!(Partition::ones(0).is_odd());
    }
}
