//! Simplicial complexes stored by facets, nerves of clutters, intersection
//! graphs and the independence-complex correspondence.

use std::collections::VecDeque;
use std::fmt;

use crate::bounds;
use crate::error::{Error, Result};
use crate::hopf::euler_character_from_table;
use crate::lattice;
use crate::setfam::{subsets, witness_order, Clutter, Hypergraph, VertexSet};
use crate::symfun::{Composition, IntPolynomial};

/// Outcome of a predicate together with a counterexample when it fails.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict<W> {
    pub witness: Option<W>,
}

impl<W> Verdict<W> {
    pub fn pass() -> Self {
        Verdict { witness: None }
    }

    pub fn fail(witness: W) -> Self {
        Verdict {
            witness: Some(witness),
        }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// A simplicial complex on `0..n`. Every singleton is a face; the stored
/// facets are the maximal faces with at least two vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    facets: Clutter,
}

impl SimplicialComplex {
    /// The complex generated by `faces`; faces of size below two are implied.
    pub fn new<I>(n: usize, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let full = VertexSet::full(n);
        let mut big = Vec::new();
        for f in faces {
            if !f.is_subset(full) {
                let vertex = f.difference(full).min().expect("nonempty difference");
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if f.len() >= 2 {
                big.push(f);
            }
        }
        bounds::check("complex vertex count", n, bounds::MAX_VERTICES)?;
        Ok(SimplicialComplex {
            facets: Clutter::from_maximal(n, big),
        })
    }

    /// The complex whose faces are the masks marked in a down-closed table.
    fn from_face_table(n: usize, table: &[bool]) -> Self {
        let full = VertexSet::full(n).bits();
        let facets = (0u32..1 << n)
            .filter(|&m| {
                m.count_ones() >= 2
                    && table[m as usize]
                    && VertexSet::from_bits(full & !m)
                        .iter()
                        .all(|v| !table[(m | 1 << v) as usize])
            })
            .map(VertexSet::from_bits)
            .collect();
        SimplicialComplex {
            facets: Clutter::from_maximal(n, facets),
        }
    }

    pub fn from_lists<E, V>(n: usize, faces: E) -> Result<Self>
    where
        E: IntoIterator<Item = V>,
        V: IntoIterator<Item = usize>,
    {
        let faces = faces
            .into_iter()
            .map(|f| VertexSet::from_members(f, n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, faces)
    }

    /// `Δ[n]`, the full simplex.
    pub fn simplex(n: usize) -> Self {
        let facets = if n >= 2 { vec![VertexSet::full(n)] } else { Vec::new() };
        SimplicialComplex {
            facets: Clutter::from_raw(n, facets),
        }
    }

    /// `∂Δ[n]`, all proper subsets of `0..n`.
    pub fn simplex_boundary(n: usize) -> Result<Self> {
        let full = VertexSet::full(n);
        Self::new(n, full.iter().map(|v| full.difference(VertexSet::singleton(v))))
    }

    pub fn vertex_count(&self) -> usize {
        self.facets.vertex_count()
    }

    /// Maximal faces with at least two vertices.
    pub fn facets(&self) -> &[VertexSet] {
        self.facets.edges()
    }

    /// All maximal faces, isolated vertices included; `[∅]` for the empty complex.
    pub fn maximal_faces(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        if n == 0 {
            return vec![VertexSet::EMPTY];
        }
        let covered = self
            .facets()
            .iter()
            .fold(VertexSet::EMPTY, |acc, &f| acc.union(f));
        let mut out: Vec<VertexSet> = VertexSet::full(n)
            .difference(covered)
            .iter()
            .map(VertexSet::singleton)
            .collect();
        out.extend_from_slice(self.facets());
        out
    }

    pub fn is_face(&self, s: VertexSet) -> bool {
        s.is_subset(VertexSet::full(self.vertex_count()))
            && (s.len() <= 1 || self.facets().iter().any(|&f| s.is_subset(f)))
    }

    pub fn is_simplex(&self) -> bool {
        self.is_face(VertexSet::full(self.vertex_count()))
    }

    /// `table[mask]` is true iff `mask` is a face.
    pub fn face_table(&self) -> Result<Vec<bool>> {
        let n = self.vertex_count();
        bounds::check("face table vertex count", n, bounds::COMPLEX_MAX_VERTICES)?;
        let mut table = vec![false; 1 << n];
        for &f in self.facets() {
            table[f.bits() as usize] = true;
        }
        for v in 0..n {
            table[1 << v] = true;
        }
        table[0] = true;
        lattice::close_downward(&mut table, n);
        Ok(table)
    }

    /// `K|_I` relabeled onto `0..|I|`.
    pub fn restrict(&self, subset: VertexSet) -> Result<SimplicialComplex> {
        let n = self.vertex_count();
        if let Some(vertex) = subset.difference(VertexSet::full(n)).min() {
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        Self::new(
            subset.len(),
            self.facets()
                .iter()
                .map(|f| f.intersection(subset).compress(subset)),
        )
    }

    /// `K1 ∗ K2` on `0..n1+n2`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let n1 = self.vertex_count();
        let n = n1 + other.vertex_count();
        bounds::check("vertex count", n, bounds::MAX_VERTICES)?;
        let right = other.maximal_faces();
        let faces = self
            .maximal_faces()
            .into_iter()
            .flat_map(|a| right.iter().map(move |b| a.union(b.shift(n1))))
            .collect::<Vec<_>>();
        Self::new(n, faces)
    }

    /// The graph of faces of size two.
    pub fn one_skeleton(&self) -> Graph {
        let n = self.vertex_count();
        let mut edges = Vec::new();
        for &f in self.facets() {
            for u in f.iter() {
                for v in f.iter().filter(|&v| v > u) {
                    edges.push(VertexSet::singleton(u).union(VertexSet::singleton(v)));
                }
            }
        }
        Graph::from_raw(n, edges)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K(n={}, {:?})", self.vertex_count(), self.facets())
    }
}

/// A simple undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adjacency: Vec<VertexSet>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        bounds::check("graph vertex count", n, bounds::MAX_VERTICES)?;
        let full = VertexSet::full(n);
        let edges: Vec<VertexSet> = edges.into_iter().collect();
        for &e in &edges {
            if let Some(vertex) = e.difference(full).min() {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if e.len() != 2 {
                return Err(Error::Parse(format!("graph edge {:?} must have two vertices", e.to_vec())));
            }
        }
        Ok(Graph::from_raw(n, edges))
    }

    pub fn from_lists<E, V>(n: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = V>,
        V: IntoIterator<Item = usize>,
    {
        let edges = edges
            .into_iter()
            .map(|e| VertexSet::from_members(e, n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, edges)
    }

    fn from_raw(n: usize, edges: Vec<VertexSet>) -> Self {
        let mut adjacency = vec![VertexSet::EMPTY; n];
        for e in edges {
            let (u, v) = (e.min().unwrap(), e.max().unwrap());
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Graph { n, adjacency }
    }

    /// The cycle `0 − 1 − … − (n−1) − 0`.
    pub fn cycle(n: usize) -> Self {
        Graph::from_raw(
            n,
            (0..n)
                .map(|i| VertexSet::singleton(i).union(VertexSet::singleton((i + 1) % n)))
                .filter(|e| e.len() == 2)
                .collect(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn edges(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = (0..self.n)
            .flat_map(|u| {
                self.adjacency[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| VertexSet::singleton(u).union(VertexSet::singleton(v)))
            })
            .collect();
        out.sort();
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Vertex order from maximum-cardinality search, first visited first.
    pub fn maximum_cardinality_order(&self) -> Vec<usize> {
        let mut weight = vec![0usize; self.n];
        let mut visited = VertexSet::EMPTY;
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| !visited.contains(v))
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("unvisited vertex");
            visited.insert(v);
            order.push(v);
            for u in self.adjacency[v].difference(visited).iter() {
                weight[u] += 1;
            }
        }
        order
    }

    /// Chordality via a perfect elimination ordering; the witness is a
    /// chordless cycle of length at least four, listed in cycle order.
    pub fn is_chordal(&self) -> Verdict<Vec<usize>> {
        let mut elimination = self.maximum_cardinality_order();
        elimination.reverse();
        if self.is_perfect_elimination_order(&elimination) {
            return Verdict::pass();
        }
        Verdict::fail(
            self.chordless_cycle()
                .expect("a graph without a perfect elimination order has a long induced cycle"),
        )
    }

    pub fn is_perfect_elimination_order(&self, order: &[usize]) -> bool {
        let mut position = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        order.iter().all(|&v| {
            let later = VertexSet::from_bits(
                self.adjacency[v]
                    .iter()
                    .filter(|&u| position[u] > position[v])
                    .fold(0u32, |acc, u| acc | 1 << u),
            );
            let Some(parent) = later.iter().min_by_key(|&u| position[u]) else {
                return true;
            };
            let rest = later.difference(VertexSet::singleton(parent));
            rest.is_subset(self.adjacency[parent])
        })
    }

    /// Some induced cycle of length at least four, if one exists.
    pub fn chordless_cycle(&self) -> Option<Vec<usize>> {
        for v in 0..self.n {
            let nbrs = self.adjacency[v];
            for x in nbrs.iter() {
                for y in nbrs.iter().filter(|&y| y > x && !self.adjacent(x, y)) {
                    let mut closed = nbrs;
                    closed.insert(v);
                    let blocked = closed.difference(VertexSet::singleton(x).union(VertexSet::singleton(y)));
                    if let Some(path) = self.shortest_path(x, y, blocked) {
                        let mut cycle = vec![v];
                        cycle.extend(path);
                        return Some(cycle);
                    }
                }
            }
        }
        None
    }

    fn shortest_path(&self, from: usize, to: usize, blocked: VertexSet) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n];
        let mut seen = blocked;
        seen.insert(from);
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.adjacency[u].difference(seen).iter() {
                seen.insert(w);
                parent[w] = u;
                queue.push_back(w);
            }
        }
        None
    }

    /// The clique complex of the graph.
    pub fn clique_complex(&self) -> Result<SimplicialComplex> {
        let n = self.n;
        bounds::check("clique complex vertex count", n, bounds::COMPLEX_MAX_VERTICES)?;
        let mut clique = vec![false; 1 << n];
        clique[0] = true;
        for mask in 1usize..1 << n {
            let v = mask.trailing_zeros() as usize;
            let rest = mask ^ (1 << v);
            clique[mask] = clique[rest] && (rest as u32) & !self.adjacency[v].bits() == 0;
        }
        Ok(SimplicialComplex::from_face_table(n, &clique))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(n={}, {:?})", self.n, self.edges())
    }
}

/// `N(C)`: vertices are the edges of `C` in their stored order; a set of
/// edges is a face when its common intersection is nonempty.
pub fn nerve(c: &Clutter) -> Result<SimplicialComplex> {
    let m = c.edge_count();
    bounds::check("nerve vertex count", m, bounds::SUBCLUTTER_MAX_EDGES)?;
    let table: Vec<bool> = common_intersections(c.edges())
        .into_iter()
        .map(|common| !common.is_empty())
        .collect();
    Ok(SimplicialComplex::from_face_table(m, &table))
}

/// `∩` of the edges selected by each mask; the empty selection maps to `V`.
pub(crate) fn common_intersections(edges: &[VertexSet]) -> Vec<VertexSet> {
    let m = edges.len();
    let mut common = vec![VertexSet::from_bits(u32::MAX); 1 << m];
    for s in 1usize..1 << m {
        let low = s.trailing_zeros() as usize;
        common[s] = common[s ^ (1 << low)].intersection(edges[low]);
    }
    common
}

/// `G(C)`, the 1-skeleton of the nerve.
pub fn intersection_graph(c: &Clutter) -> Graph {
    let edges = c.edges();
    let mut pairs = Vec::new();
    for (i, &a) in edges.iter().enumerate() {
        for (j, &b) in edges.iter().enumerate().skip(i + 1) {
            if a.intersects(b) {
                pairs.push(VertexSet::singleton(i).union(VertexSet::singleton(j)));
            }
        }
    }
    Graph::from_raw(edges.len(), pairs)
}

/// Inclusion-minimal non-faces of `K`.
pub fn minimal_nonfaces(k: &SimplicialComplex) -> Result<Clutter> {
    let n = k.vertex_count();
    let table = k.face_table()?;
    let edges = (1u32..1 << n)
        .filter(|&m| {
            !table[m as usize]
                && VertexSet::from_bits(m)
                    .iter()
                    .all(|v| table[(m & !(1 << v)) as usize])
        })
        .map(VertexSet::from_bits)
        .collect();
    Ok(Clutter::from_raw(n, edges))
}

/// `Ind(C)`: the sets inducing no edge.
pub fn independence_complex(c: &Clutter) -> Result<SimplicialComplex> {
    let n = c.vertex_count();
    bounds::check("independence complex vertex count", n, bounds::COMPLEX_MAX_VERTICES)?;
    Ok(SimplicialComplex::from_face_table(n, &c.independence_table()?))
}

/// Flagness: every minimal nonface has two elements. The witness is the
/// smallest larger minimal nonface.
pub fn is_flag(k: &SimplicialComplex) -> Result<Verdict<VertexSet>> {
    let nonfaces = minimal_nonfaces(k)?;
    Ok(nonfaces
        .edges()
        .iter()
        .copied()
        .filter(|f| f.len() >= 3)
        .min_by(|a, b| witness_order(a.bits(), b.bits()))
        .map_or_else(Verdict::pass, Verdict::fail))
}

fn check_composition(n: usize, alpha: &Composition) -> Result<()> {
    if alpha.size() != n {
        return Err(Error::CompositionMismatch {
            parts: alpha.parts().to_vec(),
            n,
        });
    }
    Ok(())
}

/// `(ζ_K)_α(K)`: ordered decompositions into faces of sizes `α`.
pub fn zeta_k_alpha(k: &SimplicialComplex, alpha: &Composition) -> Result<i64> {
    let n = k.vertex_count();
    check_composition(n, alpha)?;
    bounds::check("ζ_α vertex count", n, bounds::SUBSET_DP_MAX_VERTICES)?;
    lattice::layered_block_count(&k.face_table()?, n, alpha.parts())
}

/// Number of maps `V → [m]` whose fibres are faces, as a polynomial in `m`.
pub fn partition_polynomial(k: &SimplicialComplex) -> Result<IntPolynomial> {
    let n = k.vertex_count();
    bounds::check("partition polynomial vertex count", n, bounds::SUBSET_DP_MAX_VERTICES)?;
    IntPolynomial::from_binomial_basis(&lattice::ordered_block_counts(&k.face_table()?, n)?)
}

/// `χ_K(K) = Σ (−1)^{|I|}` over `I` with `I` and `V∖I` both faces.
pub fn euler_char_complex(k: &SimplicialComplex) -> Result<i64> {
    let n = k.vertex_count();
    bounds::check("Euler character vertex count", n, bounds::SUBSET_DP_MAX_VERTICES)?;
    Ok(euler_character_from_table(&k.face_table()?, n))
}

/// Eulerian test from the definition: `χ_K(K|_I) = ε(K|_I)` for every `I`.
/// The witness is the smallest failing `I`.
pub fn is_eulerian_complex(k: &SimplicialComplex) -> Result<Verdict<VertexSet>> {
    let n = k.vertex_count();
    bounds::check("eulerian test vertex count", n, bounds::SUBSET_DP_MAX_VERTICES)?;
    let table = k.face_table()?;
    let mut failures: Vec<u32> = (1u32..1 << n)
        .filter(|&i| {
            let chi: i64 = subsets(i)
                .filter(|&j| table[j as usize] && table[(i ^ j) as usize])
                .map(|j| if j.count_ones() % 2 == 0 { 1 } else { -1 })
                .sum();
            chi != 0
        })
        .collect();
    failures.sort_by(|a, b| witness_order(*a, *b));
    Ok(failures
        .first()
        .map_or_else(Verdict::pass, |&i| Verdict::fail(VertexSet::from_bits(i))))
}

/// Eulerian test from the criterion "every `K|_I` is a simplex or has
/// `ζ_K⁻¹(K|_I) = 0`".
pub fn is_eulerian_complex_via_mobius(k: &SimplicialComplex) -> Result<Verdict<VertexSet>> {
    let n = k.vertex_count();
    bounds::check("eulerian test vertex count", n, bounds::SUBSET_DP_MAX_VERTICES)?;
    let table = k.face_table()?;
    let inverse = lattice::signed_block_sums(&table, n)?;
    Ok((1u32..1 << n)
        .filter(|&i| !table[i as usize] && inverse[i as usize] != 0)
        .min_by(|a, b| witness_order(*a, *b))
        .map_or_else(Verdict::pass, |i| Verdict::fail(VertexSet::from_bits(i))))
}

/// The minimal non-faces of `K` read as a hypergraph.
pub fn nonface_hypergraph(k: &SimplicialComplex) -> Result<Hypergraph> {
    Ok(minimal_nonfaces(k)?.into_hypergraph())
}
