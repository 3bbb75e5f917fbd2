//! Brute-force oracles and instance generators shared by the integration tests.
//! Every oracle works directly from definitions and uses none of the subset
//! dynamic programs of the library.

#![allow(dead_code)]

use std::collections::BTreeMap;

use hyperhopf_core::complexes::{Graph, SimplicialComplex};
use hyperhopf_core::setfam::{CanonicalCode, Clutter, Hypergraph, VertexSet};
use proptest::prelude::*;

pub fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
    Hypergraph::from_lists(n, edges.iter().map(|e| e.iter().copied())).unwrap()
}

pub fn clutter(n: usize, edges: &[&[usize]]) -> Clutter {
    Clutter::from_lists(n, edges.iter().map(|e| e.iter().copied())).unwrap()
}

pub fn one_based(n: usize, edges: &[&[usize]]) -> Clutter {
    Clutter::from_lists(n, edges.iter().map(|e| e.iter().map(|v| v - 1))).unwrap()
}

pub fn set(members: &[usize]) -> VertexSet {
    VertexSet::from_members(members.iter().copied(), 32).unwrap()
}

/// Hypergraph from raw masks: sizes below two dropped, duplicates removed.
pub fn from_masks(n: usize, masks: &[u32]) -> Hypergraph {
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut edges: Vec<u32> = masks
        .iter()
        .map(|m| m & full)
        .filter(|m| m.count_ones() >= 2)
        .collect();
    edges.sort();
    edges.dedup();
    Hypergraph::new(n, edges.into_iter().map(VertexSet::from_bits)).unwrap()
}

pub fn arb_hypergraph(min_n: usize, max_n: usize, max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    (min_n..=max_n).prop_flat_map(move |n| {
        let top = 1u32 << n;
        prop::collection::vec(0..top.max(1), 0..=max_edges).prop_map(move |m| from_masks(n, &m))
    })
}

pub fn arb_clutter(min_n: usize, max_n: usize, max_edges: usize) -> impl Strategy<Value = Clutter> {
    arb_hypergraph(min_n, max_n, max_edges).prop_map(|h| h.minimal_edges())
}

/// A uniformly random permutation of `0..n` drawn from `seed`.
pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

/// Whether `H|_block` has no edge, by scanning the edges.
pub fn independent(h: &Hypergraph, block: VertexSet) -> bool {
    h.edges().iter().all(|e| !e.is_subset(block))
}

/// Calls `visit` with every map `0..n → 0..k`.
pub fn for_each_map(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k == 0 {
        if n == 0 {
            visit(&[]);
        }
        return;
    }
    let mut f = vec![0usize; n];
    loop {
        visit(&f);
        let mut i = 0;
        while i < n && f[i] == k - 1 {
            f[i] = 0;
            i += 1;
        }
        if i == n {
            return;
        }
        f[i] += 1;
    }
}

/// Fibres of a map as vertex sets.
pub fn fibres(f: &[usize], k: usize) -> Vec<VertexSet> {
    let mut out = vec![VertexSet::EMPTY; k];
    for (v, &c) in f.iter().enumerate() {
        out[c].insert(v);
    }
    out
}

/// Proper colorings with `m` colors: no edge is monochromatic.
pub fn count_colorings(h: &Hypergraph, m: usize) -> i64 {
    let mut count = 0;
    for_each_map(h.vertex_count(), m, |f| {
        if fibres(f, m).into_iter().all(|b| independent(h, b)) {
            count += 1;
        }
    });
    count
}

/// Maps into `m` colors whose fibres are faces of `K`.
pub fn count_partition_functions(k: &SimplicialComplex, m: usize) -> i64 {
    let mut count = 0;
    for_each_map(k.vertex_count(), m, |f| {
        if fibres(f, m).into_iter().all(|b| k.is_face(b)) {
            count += 1;
        }
    });
    count
}

/// `ζ_α` by enumerating maps to the positions of `α`.
pub fn zeta_alpha_brute(h: &Hypergraph, parts: &[usize]) -> i64 {
    let k = parts.len();
    let mut count = 0;
    for_each_map(h.vertex_count(), k, |f| {
        let blocks = fibres(f, k);
        if blocks
            .iter()
            .zip(parts)
            .all(|(b, &a)| b.len() == a && independent(h, *b))
        {
            count += 1;
        }
    });
    count
}

/// `ζ⁻¹(H) = Σ_k (−1)^k · #{surjections V → [k] with discrete fibres}`.
pub fn zeta_inverse_brute(h: &Hypergraph) -> i64 {
    let n = h.vertex_count();
    if n == 0 {
        return 1;
    }
    let mut total = 0i64;
    for k in 1..=n {
        let mut count = 0i64;
        for_each_map(n, k, |f| {
            let blocks = fibres(f, k);
            if blocks.iter().all(|b| !b.is_empty() && independent(h, *b)) {
                count += 1;
            }
        });
        total += if k % 2 == 0 { count } else { -count };
    }
    total
}

/// `χ(H) = Σ (−1)^{|I|}` over splits into two discrete halves.
pub fn euler_character_brute(h: &Hypergraph) -> i64 {
    let n = h.vertex_count();
    let full = VertexSet::full(n);
    (0u32..1 << n)
        .map(VertexSet::from_bits)
        .filter(|&i| independent(h, i) && independent(h, full.difference(i)))
        .map(|i| if i.len() % 2 == 0 { 1 } else { -1 })
        .sum()
}

/// Relabeled, sorted edge list minimized over all permutations.
pub fn brute_canonical(h: &Hypergraph) -> (usize, Vec<Vec<usize>>) {
    let n = h.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<Vec<usize>>> = None;
    loop {
        let mut edges: Vec<Vec<usize>> = h
            .edges()
            .iter()
            .map(|e| {
                let mut image: Vec<usize> = e.iter().map(|v| perm[v]).collect();
                image.sort();
                image
            })
            .collect();
        edges.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        if best.as_ref().is_none_or(|b| edges < *b) {
            best = Some(edges);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    (n, best.unwrap())
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Takeuchi's formula read literally: every ordered decomposition into
/// nonempty blocks contributes `(−1)^k` times the disjoint sum of restrictions.
pub fn antipode_brute(h: &Hypergraph) -> BTreeMap<CanonicalCode, i64> {
    let n = h.vertex_count();
    let mut out: BTreeMap<CanonicalCode, i64> = BTreeMap::new();
    if n == 0 {
        out.insert(CanonicalCode::unit(), 1);
        return out;
    }
    for k in 1..=n {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        for_each_map(n, k, |f| {
            let blocks = fibres(f, k);
            if blocks.iter().any(|b| b.is_empty()) {
                return;
            }
            let mut sum = Hypergraph::unit();
            for b in blocks {
                sum = sum.disjoint_sum(&h.restrict(b).unwrap()).unwrap();
            }
            *out.entry(sum.canonical_code().unwrap()).or_insert(0) += sign;
        });
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Whether the graph has an induced cycle on at least four vertices, by
/// checking every vertex subset.
pub fn has_long_induced_cycle(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0u32..1 << n).any(|mask| {
        let s = VertexSet::from_bits(mask);
        s.len() >= 4
            && s.iter().all(|v| g.neighbors(v).intersection(s).len() == 2)
            && connected_within(g, s)
    })
}

fn connected_within(g: &Graph, s: VertexSet) -> bool {
    let Some(start) = s.min() else { return true };
    let mut seen = VertexSet::singleton(start);
    let mut frontier = vec![start];
    while let Some(v) = frontier.pop() {
        for w in g.neighbors(v).intersection(s).difference(seen).iter() {
            seen.insert(w);
            frontier.push(w);
        }
    }
    seen == s
}

/// Checks that `cycle` is an induced cycle of length at least four.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let mut distinct = cycle.to_vec();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != k {
        return false;
    }
    (0..k).all(|i| {
        (0..k).filter(|&j| j != i).all(|j| {
            let consecutive = (i + 1) % k == j || (j + 1) % k == i;
            g.adjacent(cycle[i], cycle[j]) == consecutive
        })
    })
}

/// Connected components of the edges `S` on `0..n`, by repeated merging.
pub fn component_sizes(n: usize, edges: &[VertexSet]) -> Vec<usize> {
    let mut blocks: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
    for &e in edges {
        let (touch, rest): (Vec<_>, Vec<_>) = blocks.into_iter().partition(|b| b.intersects(e));
        let merged = touch.into_iter().fold(e, |acc, b| acc.union(b));
        blocks = rest;
        blocks.push(merged);
    }
    let mut sizes: Vec<usize> = blocks.into_iter().map(|b| b.len()).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}
