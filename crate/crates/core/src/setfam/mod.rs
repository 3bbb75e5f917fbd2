//! Hypergraphs and clutters on the vertex range `0..n`.

mod canonical;
mod vertex_set;

use std::fmt;
use std::ops::Deref;

pub use canonical::{CanonicalCode, ComponentCode};
pub use vertex_set::{subsets, witness_order, Members, VertexSet};

use crate::bounds::{self, MAX_VERTICES};
use crate::error::{Error, Result};

/// A hypergraph: `n` vertices and a set of distinct edges, each with at least
/// two vertices. Edges are kept sorted by size and then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        bounds::check("vertex count", n, MAX_VERTICES)?;
        let full = VertexSet::full(n);
        let mut edges: Vec<VertexSet> = edges.into_iter().collect();
        for &e in &edges {
            if !e.is_subset(full) {
                let vertex = e.difference(full).min().unwrap();
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if e.len() < 2 {
                return Err(Error::EdgeTooSmall { edge: e.to_vec() });
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge { edge: w[0].to_vec() });
        }
        Ok(Hypergraph { n, edges })
    }

    /// Builds a hypergraph from edge member lists.
    pub fn from_lists<E, V>(n: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = V>,
        V: IntoIterator<Item = usize>,
    {
        let sets = edges
            .into_iter()
            .map(|e| VertexSet::from_members(e, n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, sets)
    }

    /// Internal constructor: sorts and deduplicates, trusting sizes and range.
    pub(crate) fn from_raw(n: usize, mut edges: Vec<VertexSet>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        debug_assert!(edges.iter().all(|e| e.len() >= 2 && e.is_subset(VertexSet::full(n))));
        Hypergraph { n, edges }
    }

    /// The discrete hypergraph `D_n`.
    pub fn discrete(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        Hypergraph {
            n,
            edges: Vec::new(),
        }
    }

    /// The unit `H_∅` on no vertices.
    pub fn unit() -> Self {
        Self::discrete(0)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|e| e.to_vec()).collect()
    }

    pub fn is_discrete(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.n == 0
    }

    pub fn contains_edge(&self, e: VertexSet) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// True when no edge contains another.
    pub fn is_clutter(&self) -> bool {
        self.comparable_pair().is_none()
    }

    fn comparable_pair(&self) -> Option<(VertexSet, VertexSet)> {
        // sorted by size, so only later edges can be supersets
        for (i, &a) in self.edges.iter().enumerate() {
            for &b in &self.edges[i + 1..] {
                if a.is_subset(b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// `H|_I`, relabeled onto `0..|I|` in increasing vertex order.
    pub fn restrict(&self, subset: VertexSet) -> Result<Hypergraph> {
        if let Some(vertex) = subset.difference(self.vertices()).min() {
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        Ok(self.restrict_unchecked(subset))
    }

    pub(crate) fn restrict_unchecked(&self, subset: VertexSet) -> Hypergraph {
        let edges = self
            .edges
            .iter()
            .filter(|e| e.is_subset(subset))
            .map(|e| e.compress(subset))
            .collect();
        Hypergraph::from_raw(subset.len(), edges)
    }

    /// Edges of `H|_I` kept on the original labels.
    pub(crate) fn edges_within(&self, subset: VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
        self.edges.iter().copied().filter(move |e| e.is_subset(subset))
    }

    /// `H1 ⊔ H2`: the second summand's vertices are shifted past the first's.
    pub fn disjoint_sum(&self, other: &Hypergraph) -> Result<Hypergraph> {
        let n = self.n + other.n;
        bounds::check("vertex count", n, MAX_VERTICES)?;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|e| e.shift(self.n)))
            .collect();
        Ok(Hypergraph::from_raw(n, edges))
    }

    /// The clutter `C(H)` of inclusion-minimal edges.
    pub fn minimal_edges(&self) -> Clutter {
        let mut kept: Vec<VertexSet> = Vec::with_capacity(self.edges.len());
        for &e in &self.edges {
            if !kept.iter().any(|k| k.is_subset(e)) {
                kept.push(e);
            }
        }
        Clutter(Hypergraph {
            n: self.n,
            edges: kept,
        })
    }

    /// Building-set test under the identification of a building set with its
    /// non-singleton members: intersecting edges must have their union as an edge.
    pub fn is_building_set(&self) -> bool {
        self.edges.iter().enumerate().all(|(i, &a)| {
            self.edges[i + 1..]
                .iter()
                .all(|&b| !a.intersects(b) || self.contains_edge(a.union(b)))
        })
    }

    /// Components of the edge-connectivity relation, sorted by minimum vertex.
    /// Isolated vertices are singleton components.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for e in &self.edges {
            let mut it = e.iter();
            let root = it.next().unwrap();
            for v in it {
                let (a, b) = (find(&mut parent, root), find(&mut parent, v));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut comps: Vec<VertexSet> = Vec::new();
        let mut index = vec![usize::MAX; self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if index[r] == usize::MAX {
                index[r] = comps.len();
                comps.push(VertexSet::EMPTY);
            }
            comps[index[r]].insert(v);
        }
        comps
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Hypergraph> {
        let mut seen = VertexSet::EMPTY;
        if perm.len() != self.n {
            return Err(Error::Parse(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        for &p in perm {
            if p >= self.n || seen.contains(p) {
                return Err(Error::Parse(format!("{perm:?} is not a permutation")));
            }
            seen.insert(p);
        }
        Ok(Hypergraph::from_raw(
            self.n,
            self.edges.iter().map(|e| e.map(perm)).collect(),
        ))
    }

    pub fn canonical_code(&self) -> Result<CanonicalCode> {
        bounds::check(
            "canonical form vertex count",
            self.n,
            bounds::CANONICAL_MAX_VERTICES,
        )?;
        Ok(CanonicalCode::of(self))
    }

    /// `table[mask]` is true iff `H|_mask` is discrete.
    pub fn independence_table(&self) -> Result<Vec<bool>> {
        bounds::check(
            "subset table vertex count",
            self.n,
            bounds::SUBSET_DP_MAX_VERTICES.max(bounds::COMPLEX_MAX_VERTICES),
        )?;
        let mut dependent = vec![false; 1 << self.n];
        for e in &self.edges {
            dependent[e.bits() as usize] = true;
        }
        crate::lattice::close_upward(&mut dependent, self.n);
        Ok(dependent.into_iter().map(|d| !d).collect())
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(n={}, {:?})", self.n, self.edges)
    }
}

/// A hypergraph whose edges form an antichain.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clutter(Hypergraph);

impl Clutter {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        Self::try_from(Hypergraph::new(n, edges)?)
    }

    pub fn from_lists<E, V>(n: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = V>,
        V: IntoIterator<Item = usize>,
    {
        Self::try_from(Hypergraph::from_lists(n, edges)?)
    }

    pub(crate) fn from_raw(n: usize, edges: Vec<VertexSet>) -> Self {
        Hypergraph::from_raw(n, edges).minimal_edges()
    }

    /// The inclusion-maximal members of `edges`.
    pub(crate) fn from_maximal(n: usize, edges: Vec<VertexSet>) -> Self {
        let h = Hypergraph::from_raw(n, edges);
        let keep = h
            .edges
            .iter()
            .copied()
            .filter(|&e| !h.edges.iter().any(|&f| f != e && e.is_subset(f)))
            .collect();
        Clutter(Hypergraph { n, edges: keep })
    }

    pub fn discrete(n: usize) -> Self {
        Clutter(Hypergraph::discrete(n))
    }

    pub fn as_hypergraph(&self) -> &Hypergraph {
        &self.0
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.0
    }

    fn require_edge(&self, e: VertexSet) -> Result<()> {
        if self.contains_edge(e) {
            Ok(())
        } else {
            Err(Error::EdgeNotFound { edge: e.to_vec() })
        }
    }

    /// `C − e`.
    pub fn delete(&self, e: VertexSet) -> Result<Clutter> {
        self.require_edge(e)?;
        Ok(self.delete_unchecked(e))
    }

    pub(crate) fn delete_unchecked(&self, e: VertexSet) -> Clutter {
        let edges = self.edges().iter().copied().filter(|&x| x != e).collect();
        Clutter(Hypergraph { n: self.n, edges })
    }

    /// `C / e`: the vertices of `e` collapse to one fresh vertex, placed last
    /// after the surviving vertices in their original order. Comparable images
    /// are reduced to their minimal members.
    pub fn contract(&self, e: VertexSet) -> Result<Clutter> {
        self.require_edge(e)?;
        Ok(self.contract_unchecked(e))
    }

    pub(crate) fn contract_unchecked(&self, e: VertexSet) -> Clutter {
        let keep = self.vertices().difference(e);
        let fresh = keep.len();
        let images = self
            .edges()
            .iter()
            .filter(|&&x| x != e)
            .map(|&x| {
                let mut image = x.difference(e).compress(keep);
                if x.intersects(e) {
                    image.insert(fresh);
                }
                assert!(image.len() >= 2, "contraction image of size < 2");
                image
            })
            .collect();
        Clutter::from_raw(fresh + 1, images)
    }

    pub fn restrict(&self, subset: VertexSet) -> Result<Clutter> {
        Ok(Clutter(self.0.restrict(subset)?))
    }

    pub fn disjoint_sum(&self, other: &Clutter) -> Result<Clutter> {
        Ok(Clutter(self.0.disjoint_sum(&other.0)?))
    }
}

impl TryFrom<Hypergraph> for Clutter {
    type Error = Error;

    fn try_from(h: Hypergraph) -> Result<Self> {
        match h.comparable_pair() {
            Some((a, b)) => Err(Error::NotAntichain {
                smaller: a.to_vec(),
                larger: b.to_vec(),
            }),
            None => Ok(Clutter(h)),
        }
    }
}

impl Deref for Clutter {
    type Target = Hypergraph;

    fn deref(&self) -> &Hypergraph {
        &self.0
    }
}

impl AsRef<Hypergraph> for Clutter {
    fn as_ref(&self) -> &Hypergraph {
        &self.0
    }
}

impl From<Clutter> for Hypergraph {
    fn from(c: Clutter) -> Hypergraph {
        c.0
    }
}

impl fmt::Debug for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C(n={}, {:?})", self.n, self.edges)
    }
}
