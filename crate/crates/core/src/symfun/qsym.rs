use std::collections::BTreeMap;

use super::basis::Composition;
use super::poly::binomial;
use crate::error::{Error, Result};

/// Integer combination of monomial quasisymmetric functions `M_α`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QSymElement {
    terms: BTreeMap<Composition, i64>,
}

impl QSymElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `M_()`.
    pub fn one() -> Self {
        Self::monomial(Composition::empty())
    }

    pub fn monomial(alpha: Composition) -> Self {
        let mut f = Self::zero();
        f.terms.insert(alpha, 1);
        f
    }

    pub fn coefficient(&self, alpha: &Composition) -> i64 {
        self.terms.get(alpha).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, i64)> {
        self.terms.iter().map(|(a, &c)| (a, c))
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

    pub fn add_term(&mut self, alpha: Composition, coefficient: i64) -> Result<()> {
        crate::accumulate(&mut self.terms, alpha, coefficient, "quasisymmetric coefficient")
    }

    pub fn add(&self, other: &QSymElement) -> Result<QSymElement> {
        let mut out = self.clone();
        for (a, c) in other.terms() {
            out.add_term(a.clone(), c)?;
        }
        Ok(out)
    }

    /// The common degree of all terms, `None` for zero.
    pub fn degree(&self) -> Result<Option<usize>> {
        let mut degrees = self.terms.keys().map(Composition::size);
        let Some(first) = degrees.next() else {
            return Ok(None);
        };
        match degrees.find(|&d| d != first) {
            Some(second) => Err(Error::MixedDegrees { first, second }),
            None => Ok(Some(first)),
        }
    }

    /// Quasi-shuffle product in the monomial basis.
    pub fn multiply(&self, other: &QSymElement) -> Result<QSymElement> {
        let mut out = QSymElement::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let scale = ca
                    .checked_mul(cb)
                    .ok_or(Error::Overflow("quasi-shuffle product"))?;
                for (gamma, mult) in quasi_shuffle(a.parts(), b.parts()) {
                    let c = scale
                        .checked_mul(mult)
                        .ok_or(Error::Overflow("quasi-shuffle product"))?;
                    out.add_term(Composition::new(gamma)?, c)?;
                }
            }
        }
        Ok(out)
    }

    /// Principal specialization at `1^m`: `M_α ↦ binom(m, k(α))`.
    pub fn principal_specialization(&self, m: i64) -> Result<i64> {
        self.degree()?;
        let mut acc: i64 = 0;
        for (alpha, c) in self.terms() {
            let term = c
                .checked_mul(binomial(m, alpha.len())?)
                .ok_or(Error::Overflow("principal specialization"))?;
            acc = acc
                .checked_add(term)
                .ok_or(Error::Overflow("principal specialization"))?;
        }
        Ok(acc)
    }

    /// True when each coefficient depends only on the multiset of parts.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(alpha, &c)| {
            let sorted = Composition::new(alpha.sorted().parts().to_vec()).unwrap();
            self.coefficient(&sorted) == c
        }) && {
            // sorted representatives must reach all their rearrangements
            let mut per_type: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
            for alpha in self.terms.keys() {
                *per_type.entry(alpha.sorted().parts().to_vec()).or_insert(0) += 1;
            }
            per_type
                .iter()
                .all(|(parts, &seen)| seen == distinct_rearrangements(parts))
        }
    }
}

fn distinct_rearrangements(parts: &[usize]) -> usize {
    let mut count: u128 = (1..=parts.len() as u128).product();
    let mut i = 0;
    while i < parts.len() {
        let j = parts[i..].iter().take_while(|&&p| p == parts[i]).count();
        count /= (1..=j as u128).product::<u128>();
        i += j;
    }
    count as usize
}

/// Overlapping shuffles of two compositions with multiplicity.
pub(crate) fn quasi_shuffle(a: &[usize], b: &[usize]) -> BTreeMap<Vec<usize>, i64> {
    fn go(a: &[usize], b: &[usize], prefix: &mut Vec<usize>, out: &mut BTreeMap<Vec<usize>, i64>) {
        if a.is_empty() || b.is_empty() {
            let mut word = prefix.clone();
            word.extend_from_slice(a);
            word.extend_from_slice(b);
            *out.entry(word).or_insert(0) += 1;
            return;
        }
        prefix.push(a[0]);
        go(&a[1..], b, prefix, out);
        prefix.pop();
        prefix.push(b[0]);
        go(a, &b[1..], prefix, out);
        prefix.pop();
        prefix.push(a[0] + b[0]);
        go(&a[1..], &b[1..], prefix, out);
        prefix.pop();
    }
    let mut out = BTreeMap::new();
    go(a, b, &mut Vec::new(), &mut out);
    out
}
