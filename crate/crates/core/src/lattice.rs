//! Dynamic programs over the boolean lattice of a vertex set.
//!
//! Every routine takes an `allowed` table indexed by bitmask (`allowed[B]` says
//! whether `B` may be a block) and counts decompositions of vertex sets into
//! allowed blocks.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// After the call `table[m]` holds the OR of `table[s]` over all `s ⊆ m`.
pub(crate) fn close_upward(table: &mut [bool], n: usize) {
    debug_assert_eq!(table.len(), 1 << n);
    for bit in 0..n {
        let step = 1usize << bit;
        for m in 0..table.len() {
            if m & step != 0 && table[m ^ step] {
                table[m] = true;
            }
        }
    }
}

/// After the call `table[m]` holds the OR of `table[s]` over all `s ⊇ m`.
pub(crate) fn close_downward(table: &mut [bool], n: usize) {
    debug_assert_eq!(table.len(), 1 << n);
    for bit in 0..n {
        let step = 1usize << bit;
        for m in 0..table.len() {
            if m & step == 0 && table[m | step] {
                table[m] = true;
            }
        }
    }
}

/// Nonempty submasks of `mask` in descending order.
fn nonempty_submasks(mask: usize) -> impl Iterator<Item = usize> {
    let mut sub = mask;
    std::iter::from_fn(move || {
        if sub == 0 {
            return None;
        }
        let cur = sub;
        sub = (sub - 1) & mask;
        Some(cur)
    })
}

/// `sums[m] = Σ (−1)^k` over ordered decompositions of `m` into `k` nonempty
/// allowed blocks; `sums[0] = 1`.
pub(crate) fn signed_block_sums(allowed: &[bool], n: usize) -> Result<Vec<i64>> {
    let size = 1usize << n;
    let mut sums = vec![0i64; size];
    sums[0] = 1;
    for mask in 1..size {
        let mut acc: i64 = 0;
        for block in nonempty_submasks(mask) {
            if allowed[block] {
                acc = acc
                    .checked_sub(sums[mask ^ block])
                    .ok_or(Error::Overflow("signed block sum"))?;
            }
        }
        sums[mask] = acc;
    }
    Ok(sums)
}

/// Ordered decompositions `(I_1, …, I_k)` of the full set with `|I_j| = parts[j]`
/// and every block allowed.
pub(crate) fn layered_block_count(allowed: &[bool], n: usize, parts: &[usize]) -> Result<i64> {
    let size = 1usize << n;
    let full = size - 1;
    let mut layer = vec![0i64; size];
    layer[0] = 1;
    for &part in parts {
        let mut next = vec![0i64; size];
        for (mask, &ways) in layer.iter().enumerate() {
            if ways == 0 {
                continue;
            }
            let rest = full & !mask;
            for block in nonempty_submasks(rest) {
                if block.count_ones() as usize == part && allowed[block] {
                    let slot = &mut next[mask | block];
                    *slot = slot
                        .checked_add(ways)
                        .ok_or(Error::Overflow("layered block count"))?;
                }
            }
        }
        layer = next;
    }
    Ok(layer[full])
}

/// `counts[k]` is the number of ordered decompositions of the full set into
/// `k` nonempty allowed blocks.
pub(crate) fn ordered_block_counts(allowed: &[bool], n: usize) -> Result<Vec<i64>> {
    let size = 1usize << n;
    // unordered[m][k]: set partitions of m into k allowed blocks
    let mut unordered = vec![vec![0i64; n + 1]; size];
    unordered[0][0] = 1;
    for mask in 1..size {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut row = vec![0i64; n + 1];
        // blocks containing the lowest vertex of mask
        let mut extra = rest;
        loop {
            let block = extra | low;
            if allowed[block] {
                let from = &unordered[mask ^ block];
                for k in 1..=n {
                    row[k] = row[k]
                        .checked_add(from[k - 1])
                        .ok_or(Error::Overflow("ordered block count"))?;
                }
            }
            if extra == 0 {
                break;
            }
            extra = (extra - 1) & rest;
        }
        unordered[mask] = row;
    }
    let mut factorial: i64 = 1;
    let mut counts = unordered[size - 1].clone();
    for (k, c) in counts.iter_mut().enumerate().skip(1) {
        factorial = factorial
            .checked_mul(k as i64)
            .ok_or(Error::Overflow("ordered block count"))?;
        *c = c
            .checked_mul(factorial)
            .ok_or(Error::Overflow("ordered block count"))?;
    }
    Ok(counts)
}

/// Block-size multiplicities of a set partition: entry `s` counts blocks of size `s`.
pub(crate) type BlockType = Vec<u8>;

/// Number of unordered set partitions of the full set into allowed blocks,
/// grouped by block-size type.
pub(crate) fn block_type_census(allowed: &[bool], n: usize) -> HashMap<BlockType, u64> {
    let size = 1usize << n;
    let mut census: Vec<HashMap<BlockType, u64>> = Vec::with_capacity(size);
    census.push(HashMap::from([(vec![0u8; n + 1], 1u64)]));
    for mask in 1..size {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut here: HashMap<BlockType, u64> = HashMap::new();
        let mut extra = rest;
        loop {
            let block = extra | low;
            if allowed[block] {
                let len = block.count_ones() as usize;
                for (key, &count) in &census[mask ^ block] {
                    let mut key = key.clone();
                    key[len] += 1;
                    *here.entry(key).or_insert(0) += count;
                }
            }
            if extra == 0 {
                break;
            }
            extra = (extra - 1) & rest;
        }
        census.push(here);
    }
    census.pop().unwrap()
}
