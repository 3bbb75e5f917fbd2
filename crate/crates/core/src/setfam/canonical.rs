//! Canonical forms of hypergraphs up to vertex relabeling.
//!
//! A hypergraph is encoded as the sorted multiset of the canonical forms of
//! its connected components, so disjoint sums of codes are a merge. Each
//! component is canonized by individualization and refinement: vertices are
//! colored by an isomorphism-invariant refinement, ties are broken by
//! individualizing each member of the first non-singleton cell in turn, and
//! the minimum edge list over all discrete leaves is the form. Vertices whose
//! transposition is an automorphism are tried only once per cell.

use std::collections::HashMap;

use super::{Hypergraph, VertexSet};

/// Canonical form of a connected hypergraph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ComponentCode {
    n: u8,
    edges: Vec<VertexSet>,
}

impl ComponentCode {
    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }
}

/// Isomorphism-class key of a hypergraph: equal codes iff isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct CanonicalCode {
    components: Vec<ComponentCode>,
}

impl CanonicalCode {
    /// Code of the unit `H_∅`.
    pub fn unit() -> Self {
        CanonicalCode::default()
    }

    /// Code of the discrete hypergraph `D_n`.
    pub fn discrete(n: usize) -> Self {
        CanonicalCode {
            components: vec![
                ComponentCode {
                    n: 1,
                    edges: Vec::new()
                };
                n
            ],
        }
    }

    pub(crate) fn of(h: &Hypergraph) -> Self {
        let mut components: Vec<ComponentCode> = h
            .connected_components()
            .into_iter()
            .map(|comp| {
                let edges: Vec<VertexSet> = h
                    .edges_within(comp)
                    .map(|e| e.compress(comp))
                    .collect();
                canonize_connected(comp.len(), &edges)
            })
            .collect();
        components.sort_unstable();
        CanonicalCode { components }
    }

    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(|c| c.n as usize).sum()
    }

    pub fn components(&self) -> &[ComponentCode] {
        &self.components
    }

    pub fn is_discrete(&self) -> bool {
        self.components.iter().all(|c| c.edges.is_empty())
    }

    /// Code of the disjoint sum of the two represented hypergraphs.
    pub fn disjoint_sum(&self, other: &CanonicalCode) -> CanonicalCode {
        let mut components = Vec::with_capacity(self.components.len() + other.components.len());
        let (mut a, mut b) = (self.components.iter().peekable(), other.components.iter().peekable());
        loop {
            let next = match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => {
                    if x <= y {
                        a.next()
                    } else {
                        b.next()
                    }
                }
                (Some(_), None) => a.next(),
                (None, Some(_)) => b.next(),
                (None, None) => break,
            };
            components.push(next.unwrap().clone());
        }
        CanonicalCode { components }
    }

    /// A representative: components laid out consecutively in code order.
    pub fn to_hypergraph(&self) -> Hypergraph {
        let mut offset = 0;
        let mut edges = Vec::new();
        for c in &self.components {
            edges.extend(c.edges.iter().map(|e| e.shift(offset)));
            offset += c.n as usize;
        }
        Hypergraph::from_raw(offset, edges)
    }
}

fn canonize_connected(n: usize, edges: &[VertexSet]) -> ComponentCode {
    if n <= 1 || edges.is_empty() {
        return ComponentCode {
            n: n as u8,
            edges: edges.to_vec(),
        };
    }
    let search = Search::new(n, edges);
    let colors = search.refine(vec![0; n]);
    let mut best: Option<Vec<VertexSet>> = None;
    search.descend(colors, &mut best);
    ComponentCode {
        n: n as u8,
        edges: best.expect("search reaches at least one leaf"),
    }
}

struct Search<'a> {
    n: usize,
    edges: &'a [VertexSet],
    incident: Vec<Vec<usize>>,
    /// Vertices with equal class are interchangeable by a transposition automorphism.
    swap_class: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(n: usize, edges: &'a [VertexSet]) -> Self {
        let mut incident = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for v in e.iter() {
                incident[v].push(i);
            }
        }
        let mut swap_class: Vec<usize> = (0..n).collect();
        for u in 0..n {
            if swap_class[u] != u {
                continue;
            }
            for v in u + 1..n {
                if swap_class[v] == v && transposition_is_automorphism(edges, u, v) {
                    swap_class[v] = u;
                }
            }
        }
        Search {
            n,
            edges,
            incident,
            swap_class,
        }
    }

    /// Iterated color refinement. Each vertex's new color ranks the pair of its
    /// old color and the multiset of color-multisets of its incident edges.
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let mut classes = count_distinct(&colors);
        loop {
            let signatures: Vec<(u32, Vec<Vec<u32>>)> = (0..self.n)
                .map(|v| {
                    let mut around: Vec<Vec<u32>> = self.incident[v]
                        .iter()
                        .map(|&i| {
                            let mut cs: Vec<u32> = self.edges[i].iter().map(|w| colors[w]).collect();
                            cs.sort_unstable();
                            cs
                        })
                        .collect();
                    around.sort_unstable();
                    (colors[v], around)
                })
                .collect();
            let mut distinct: Vec<&(u32, Vec<Vec<u32>>)> = signatures.iter().collect();
            distinct.sort_unstable();
            distinct.dedup();
            let rank: HashMap<&(u32, Vec<Vec<u32>>), u32> = distinct
                .iter()
                .enumerate()
                .map(|(i, s)| (*s, i as u32))
                .collect();
            colors = signatures.iter().map(|s| rank[s]).collect();
            let now = distinct.len();
            if now == classes {
                return colors;
            }
            classes = now;
        }
    }

    fn descend(&self, colors: Vec<u32>, best: &mut Option<Vec<VertexSet>>) {
        let classes = count_distinct(&colors);
        if classes == self.n {
            let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
            let mut relabeled: Vec<VertexSet> = self.edges.iter().map(|e| e.map(&perm)).collect();
            relabeled.sort_unstable();
            if best.as_ref().is_none_or(|b| relabeled < *b) {
                *best = Some(relabeled);
            }
            return;
        }
        // first cell (in color order) with more than one vertex
        let mut sizes = vec![0usize; self.n];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = sizes.iter().position(|&s| s > 1).unwrap() as u32;
        let mut tried: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if colors[v] != target || tried.contains(&self.swap_class[v]) {
                continue;
            }
            tried.push(self.swap_class[v]);
            let split: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(w, &c)| if c == target && w != v { 2 * c + 1 } else { 2 * c })
                .collect();
            self.descend(self.refine(split), best);
        }
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut seen: Vec<u32> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn transposition_is_automorphism(edges: &[VertexSet], u: usize, v: usize) -> bool {
    let swap = |e: VertexSet| -> VertexSet {
        let (hu, hv) = (e.contains(u), e.contains(v));
        if hu == hv {
            return e;
        }
        VertexSet::from_bits(e.bits() ^ (1 << u) ^ (1 << v))
    };
    edges.iter().all(|&e| {
        let s = swap(e);
        s == e || edges.binary_search(&s).is_ok()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_lists(n, edges.iter().map(|e| e.iter().copied())).unwrap()
    }

    #[test]
    fn equal_for_reordered_edges() {
        let a = h(2, &[&[0, 1]]);
        let b = Hypergraph::from_lists(2, [vec![1usize, 0]]).unwrap();
        assert_eq!(a.canonical_code().unwrap(), b.canonical_code().unwrap());
    }

    #[test]
    fn paths_agree_and_differ_from_triangle() {
        let p1 = h(3, &[&[0, 1], &[1, 2]]);
        let p2 = h(3, &[&[1, 0], &[0, 2]]);
        let k3 = h(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(p1.canonical_code().unwrap(), p2.canonical_code().unwrap());
        assert_ne!(p1.canonical_code().unwrap(), k3.canonical_code().unwrap());
    }

    #[test]
    fn disjoint_sum_of_codes_matches_code_of_sum() {
        let a = h(3, &[&[0, 1], &[1, 2]]);
        let b = h(4, &[&[0, 1, 2], &[2, 3]]);
        let sum = a.disjoint_sum(&b).unwrap();
        let merged = a.canonical_code().unwrap().disjoint_sum(&b.canonical_code().unwrap());
        assert_eq!(sum.canonical_code().unwrap(), merged);
        assert_eq!(merged.vertex_count(), 7);
    }

    #[test]
    fn representative_round_trips() {
        let g = h(6, &[&[0, 3], &[3, 4, 5], &[1, 2]]);
        let code = g.canonical_code().unwrap();
        assert_eq!(code.to_hypergraph().canonical_code().unwrap(), code);
        assert_eq!(CanonicalCode::discrete(3), Hypergraph::discrete(3).canonical_code().unwrap());
        assert_eq!(CanonicalCode::unit(), Hypergraph::unit().canonical_code().unwrap());
    }

    #[test]
    fn complete_graph_is_fast() {
        let n = 12;
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push(vec![i, j]);
            }
        }
        let k = Hypergraph::from_lists(n, edges).unwrap();
        assert_eq!(k.canonical_code().unwrap().components().len(), 1);
    }

    #[test]
    fn cycle_vs_two_triangles() {
        let c6 = h(6, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[0, 5]]);
        let tt = h(6, &[&[0, 1], &[1, 2], &[0, 2], &[3, 4], &[4, 5], &[3, 5]]);
        assert_ne!(c6.canonical_code().unwrap(), tt.canonical_code().unwrap());
    }

    #[test]
    fn bound_enforced() {
        assert!(Hypergraph::discrete(13).canonical_code().is_err());
    }
}
