//! Exact computations in the combinatorial Hopf algebras of hypergraphs,
//! clutters and simplicial complexes.
//!
//! Vertex sets are bitmasks over `0..n`; most algorithms are dynamic programs
//! over the lattice of vertex subsets and carry hard size bounds (see
//! [`bounds`]).

pub mod bounds;
pub mod complexes;
pub mod error;
pub mod euler;
pub mod hopf;
pub mod io;
mod lattice;
pub mod setfam;
pub mod symfun;
pub mod verify;

use std::collections::btree_map::{BTreeMap, Entry};

pub use complexes::{Graph, SimplicialComplex};
pub use error::{Error, Result};
pub use hopf::{AntipodeMethod, Character, LinearCombo, ZetaInverseMethod};
pub use setfam::{CanonicalCode, Clutter, Hypergraph, VertexSet};
pub use symfun::{Composition, IntPolynomial, Partition, QSymElement, SymElement};

/// Adds `coefficient` at `key`, dropping the entry when it cancels to zero.
pub(crate) fn accumulate<K: Ord>(
    map: &mut BTreeMap<K, i64>,
    key: K,
    coefficient: i64,
    what: &'static str,
) -> Result<()> {
    if coefficient == 0 {
        return Ok(());
    }
    match map.entry(key) {
        Entry::Vacant(slot) => {
            slot.insert(coefficient);
        }
        Entry::Occupied(mut slot) => {
            let sum = slot
                .get()
                .checked_add(coefficient)
                .ok_or(Error::Overflow(what))?;
            if sum == 0 {
                slot.remove();
            } else {
                *slot.get_mut() = sum;
            }
        }
    }
    Ok(())
}
