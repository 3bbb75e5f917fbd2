use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::setfam::CanonicalCode;

/// An element of `H^{⊗k}`: integer coefficients on `k`-tuples of isomorphism classes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearCombo {
    arity: usize,
    terms: BTreeMap<Vec<CanonicalCode>, i64>,
}

impl LinearCombo {
    pub fn new(arity: usize) -> Result<Self> {
        if arity == 0 {
            return Err(Error::InvalidArity(arity));
        }
        Ok(LinearCombo {
            arity,
            terms: BTreeMap::new(),
        })
    }

    /// `1 · (code)` in arity one.
    pub fn single(code: CanonicalCode) -> Self {
        LinearCombo {
            arity: 1,
            terms: BTreeMap::from([(vec![code], 1)]),
        }
    }

    pub(crate) fn from_map(map: BTreeMap<CanonicalCode, i64>) -> Self {
        LinearCombo {
            arity: 1,
            terms: map
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(k, c)| (vec![k], c))
                .collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, tensor: Vec<CanonicalCode>, coefficient: i64) -> Result<()> {
        assert_eq!(tensor.len(), self.arity, "tensor arity mismatch");
        crate::accumulate(&mut self.terms, tensor, coefficient, "linear combination")
    }

    pub fn coefficient(&self, tensor: &[CanonicalCode]) -> i64 {
        self.terms.get(tensor).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[CanonicalCode], i64)> {
        self.terms.iter().map(|(k, &c)| (k.as_slice(), c))
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

    /// Sum of all coefficients.
    pub fn mass(&self) -> Result<i64> {
        self.terms.values().try_fold(0i64, |acc, &c| {
            acc.checked_add(c).ok_or(Error::Overflow("coefficient mass"))
        })
    }
}
