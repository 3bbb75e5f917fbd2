use std::collections::BTreeMap;

use super::basis::Partition;
use crate::error::{Error, Result};

/// Integer combination of power-sum symmetric functions `p_λ`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SymElement {
    terms: BTreeMap<Partition, i64>,
}

impl SymElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::power_sum(Partition::ones(0))
    }

    pub fn power_sum(lambda: Partition) -> Self {
        let mut f = Self::zero();
        f.terms.insert(lambda, 1);
        f
    }

    pub fn coefficient(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(l, &c)| (l, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, coefficient: i64) -> Result<()> {
        crate::accumulate(&mut self.terms, lambda, coefficient, "power-sum coefficient")
    }

    pub fn sub(&self, other: &SymElement) -> Result<SymElement> {
        let mut out = self.clone();
        for (l, c) in other.terms() {
            out.add_term(l.clone(), c.checked_neg().ok_or(Error::Overflow("negation"))?)?;
        }
        Ok(out)
    }

    /// Product; `p_λ · p_μ = p_{λ∪μ}`.
    pub fn multiply(&self, other: &SymElement) -> Result<SymElement> {
        let mut out = SymElement::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let c = ca
                    .checked_mul(cb)
                    .ok_or(Error::Overflow("power-sum product"))?;
                out.add_term(a.union(b), c)?;
            }
        }
        Ok(out)
    }

    pub fn degree(&self) -> Result<Option<usize>> {
        let mut degrees = self.terms.keys().map(Partition::size);
        let Some(first) = degrees.next() else {
            return Ok(None);
        };
        match degrees.find(|&d| d != first) {
            Some(second) => Err(Error::MixedDegrees { first, second }),
            None => Ok(Some(first)),
        }
    }

    /// Membership in the span of odd power sums.
    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(Partition::is_odd)
    }

    /// First partition in the support with an even part.
    pub fn first_even_partition(&self) -> Option<&Partition> {
        self.terms.keys().find(|l| !l.is_odd())
    }

    /// Evaluation at `1^m`: `p_λ ↦ m^{k(λ)}`.
    pub fn principal_specialization(&self, m: i64) -> Result<i64> {
        let mut acc: i64 = 0;
        for (lambda, c) in self.terms() {
            let power = m
                .checked_pow(lambda.len() as u32)
                .ok_or(Error::Overflow("principal specialization"))?;
            acc = power
                .checked_mul(c)
                .and_then(|t| t.checked_add(acc))
                .ok_or(Error::Overflow("principal specialization"))?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> SymElement {
        SymElement::power_sum(Partition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn product_merges_partitions() {
        let f = p(&[2]).multiply(&p(&[3, 1])).unwrap();
        assert_eq!(f, p(&[3, 2, 1]));
    }

    #[test]
    fn odd_membership() {
        let mut f = p(&[1, 1, 1, 1, 1]);
        f.add_term(Partition::new(vec![3, 1, 1]).unwrap(), -2).unwrap();
        f.add_term(Partition::new(vec![5]).unwrap(), 1).unwrap();
        assert!(f.is_odd());
        assert!(!p(&[2]).is_odd());
        assert!(SymElement::zero().is_odd());
    }

    #[test]
    fn cancellation_removes_terms() {
        let f = p(&[2]).sub(&p(&[2])).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn specialization() {
        let f = p(&[1, 1]).sub(&p(&[2])).unwrap();
        assert_eq!(f.principal_specialization(3).unwrap(), 9 - 3);
    }
}
