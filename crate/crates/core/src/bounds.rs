//! Hard size limits. Exceeding one is reported as [`Error::BoundExceeded`],
//! never handled by truncation.

use crate::error::{Error, Result};

/// Width of the bitmask used for vertex sets.
pub const MAX_VERTICES: usize = 32;

/// Canonical forms are found by an exhaustive labeling search.
pub const CANONICAL_MAX_VERTICES: usize = 12;

/// Subset dynamic programs over all `2^n` restrictions (ζ_α, ζ⁻¹, Ψ, eulerian tests).
pub const SUBSET_DP_MAX_VERTICES: usize = 12;

/// Full antipode expansions (Takeuchi and recursive).
pub const ANTIPODE_MAX_VERTICES: usize = 8;

/// Enumerations over all subclutters (power-sum expansion, nerve, odd tests).
pub const SUBCLUTTER_MAX_EDGES: usize = 20;

/// Face tables of simplicial complexes.
pub const COMPLEX_MAX_VERTICES: usize = 20;

/// Terms `k^n` enumerated by an iterated coproduct.
pub const COPRODUCT_MAX_TERMS: usize = 1 << 22;

/// Degree of the D_λ transition matrix.
pub const TRANSITION_MAX_DEGREE: usize = 12;

pub(crate) fn check(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::BoundExceeded {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
