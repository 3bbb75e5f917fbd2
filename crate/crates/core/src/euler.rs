//! Eulerian hypergraphs, the generalized Dehn–Sommerville conditions and the
//! structural predicates on clutters that relate to them.

use std::collections::HashMap;

use serde::Serialize;

use crate::bounds;
use crate::complexes::{self, Verdict};
use crate::error::{Error, Result};
use crate::hopf::{restriction_codes, zeta_inverse_table, Character};
use crate::setfam::{subsets, witness_order, CanonicalCode, Clutter, Hypergraph, VertexSet};
use crate::symfun::{component_partition, psi, Composition};

/// A restriction `H|_I` that is neither discrete nor annihilated by `ζ⁻¹`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EulerWitness {
    pub subset: VertexSet,
    pub zeta_inverse: i64,
}

/// Eulerian test: every `H|_I` is discrete or has `ζ⁻¹(H|_I) = 0`.
pub fn is_eulerian(h: &Hypergraph) -> Result<Verdict<EulerWitness>> {
    let independent = h.independence_table()?;
    let inverse = zeta_inverse_table(h)?;
    Ok((1u32..1 << h.vertex_count())
        .filter(|&i| !independent[i as usize] && inverse[i as usize] != 0)
        .min_by(|a, b| witness_order(*a, *b))
        .map_or_else(Verdict::pass, |i| {
            Verdict::fail(EulerWitness {
                subset: VertexSet::from_bits(i),
                zeta_inverse: inverse[i as usize],
            })
        }))
}

/// Eulerian test on the clutter of minimal edges.
pub fn is_eulerian_hypergraph_via_clutter(h: &Hypergraph) -> Result<bool> {
    Ok(is_eulerian(&h.minimal_edges())?.holds())
}

/// A composition and a 0-based position at which the alternating sum is nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationWitness {
    pub composition: Composition,
    pub position: usize,
    pub sum: i64,
}

/// `Σ_{j=0}^{a_i} (−1)^j ζ_{(…, a_{i−1}, j, a_i − j, a_{i+1}, …)}(H) = 0` for
/// every composition and position; zero parts are dropped before evaluating.
pub fn check_relation5(h: &Hypergraph) -> Result<Verdict<RelationWitness>> {
    let n = h.vertex_count();
    let f = psi(h)?;
    let zeta = |parts: Vec<usize>| -> Result<i64> {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        Ok(f.coefficient(&Composition::new(parts)?))
    };
    for alpha in Composition::all(n) {
        for (i, &a) in alpha.parts().iter().enumerate() {
            let mut sum: i64 = 0;
            for j in 0..=a {
                let mut parts = alpha.parts()[..i].to_vec();
                parts.push(j);
                parts.push(a - j);
                parts.extend_from_slice(&alpha.parts()[i + 1..]);
                let z = zeta(parts)?;
                sum = if j % 2 == 0 { sum.checked_add(z) } else { sum.checked_sub(z) }
                    .ok_or(Error::Overflow("relation sum"))?;
            }
            if sum != 0 {
                return Ok(Verdict::fail(RelationWitness {
                    composition: alpha.clone(),
                    position: i,
                    sum,
                }));
            }
        }
    }
    Ok(Verdict::pass())
}

/// A nonzero coefficient of `(id ⊗ (ζ̄ − ζ⁻¹) ⊗ id) ∘ Δ^(2)(H)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OddWitness {
    pub left: CanonicalCode,
    pub right: CanonicalCode,
    pub coefficient: i64,
}

/// Tests `(id ⊗ (ζ̄ − ζ⁻¹) ⊗ id) ∘ Δ^(2)(H) = 0`, collected on pairs of
/// isomorphism classes. The witness is the smallest pair with a nonzero
/// coefficient.
pub fn in_odd_subalgebra(h: &Hypergraph) -> Result<Verdict<OddWitness>> {
    let n = h.vertex_count();
    bounds::check("odd subalgebra vertex count", n, bounds::SUBSET_DP_MAX_VERTICES)?;
    let codes = restriction_codes(h)?;
    let inverse = zeta_inverse_table(h)?;
    let mut interned: HashMap<&CanonicalCode, u32> = HashMap::new();
    let ids: Vec<u32> = codes
        .iter()
        .map(|c| {
            let next = interned.len() as u32;
            *interned.entry(c).or_insert(next)
        })
        .collect();
    let full = VertexSet::full(n).bits();
    let mut totals: HashMap<(u32, u32), i64> = HashMap::new();
    for middle in subsets(full) {
        let weight = Character::ZetaBar
            .value_on_code(&codes[middle as usize])
            .checked_sub(inverse[middle as usize])
            .ok_or(Error::Overflow("odd subalgebra"))?;
        if weight == 0 {
            continue;
        }
        let rest = full ^ middle;
        for left in subsets(rest) {
            let key = (ids[left as usize], ids[(rest ^ left) as usize]);
            let slot = totals.entry(key).or_insert(0);
            *slot = slot.checked_add(weight).ok_or(Error::Overflow("odd subalgebra"))?;
        }
    }
    let mut by_id: Vec<&CanonicalCode> = vec![&codes[0]; interned.len()];
    for (code, &id) in &interned {
        by_id[id as usize] = code;
    }
    Ok(totals
        .into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|((l, r), c)| OddWitness {
            left: by_id[l as usize].clone(),
            right: by_id[r as usize].clone(),
            coefficient: c,
        })
        .min_by(|a, b| (&a.left, &a.right).cmp(&(&b.left, &b.right)))
        .map_or_else(Verdict::pass, Verdict::fail))
}

fn edge_mask_order(a: &u32, b: &u32) -> std::cmp::Ordering {
    witness_order(*a, *b)
}

fn select(c: &Clutter, mask: u32) -> Vec<VertexSet> {
    VertexSet::from_bits(mask).iter().map(|i| c.edges()[i]).collect()
}

/// Every subfamily of edges with nonempty common intersection meets in an odd
/// number of vertices; single edges count. The witness is the subfamily.
pub fn is_odd_clutter(c: &Clutter) -> Result<Verdict<Vec<VertexSet>>> {
    let m = c.edge_count();
    bounds::check("odd clutter edge count", m, bounds::SUBCLUTTER_MAX_EDGES)?;
    let common = complexes::common_intersections(c.edges());
    Ok((1u32..1 << m)
        .filter(|&s| {
            let k = common[s as usize].len();
            k > 0 && k.is_multiple_of(2)
        })
        .min_by(edge_mask_order)
        .map_or_else(Verdict::pass, |s| Verdict::fail(select(c, s))))
}

/// Condition `e ⊊ ∪(C − e)` for every edge; the witness is the first failing edge.
pub fn satisfies_star(c: &Clutter) -> Verdict<VertexSet> {
    let edges = c.edges();
    edges
        .iter()
        .enumerate()
        .find(|&(i, &e)| {
            let others = edges
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(VertexSet::EMPTY, |acc, (_, &f)| acc.union(f));
            !(e.is_subset(others) && e != others)
        })
        .map_or_else(Verdict::pass, |(_, &e)| Verdict::fail(e))
}

/// `λ(S)` has only odd parts for every subclutter `S`; the witness is `S`.
pub fn odd_partition_property(c: &Clutter) -> Result<Verdict<Vec<VertexSet>>> {
    let m = c.edge_count();
    bounds::check("subclutter edge count", m, bounds::SUBCLUTTER_MAX_EDGES)?;
    let n = c.vertex_count();
    Ok((0u32..1 << m)
        .filter(|&s| !component_partition(n, select(c, s)).is_odd())
        .min_by(edge_mask_order)
        .map_or_else(Verdict::pass, |s| Verdict::fail(select(c, s))))
}

/// Counterexamples attached to the failed flags of a [`ClassificationReport`].
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_eulerian: Option<EulerianWitnessRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub satisfies_relation5: Option<RelationWitnessRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub in_odd_subalgebra: Option<OddWitnessRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_odd_clutter: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nerve_is_flag: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intersection_graph_chordal: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub satisfies_star: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd_partition_property: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EulerianWitnessRecord {
    pub subset: Vec<usize>,
    pub zeta_inverse: i64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RelationWitnessRecord {
    pub composition: Vec<usize>,
    pub position: usize,
    pub sum: i64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OddWitnessRecord {
    pub left: crate::io::HypergraphRecord,
    pub right: crate::io::HypergraphRecord,
    pub coefficient: i64,
}

/// Whether each structural implication held on this instance.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Implications {
    /// eulerian ⇒ Dehn–Sommerville relations ∧ odd subalgebra
    pub eulerian_implies_gds: bool,
    /// odd ∧ chordal ∧ flag ⇒ eulerian
    pub odd_chordal_flag_implies_eulerian: bool,
    /// eulerian ∧ (∗) ⇒ odd ∧ chordal ∧ flag
    pub eulerian_star_implies_odd_chordal_flag: bool,
    /// all λ(S) odd ⇒ eulerian
    pub odd_partitions_implies_eulerian: bool,
}

impl Implications {
    pub fn all_hold(&self) -> bool {
        self.eulerian_implies_gds
            && self.odd_chordal_flag_implies_eulerian
            && self.eulerian_star_implies_odd_chordal_flag
            && self.odd_partitions_implies_eulerian
    }
}

/// All predicates of a clutter with witnesses for the failing ones.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ClassificationReport {
    pub is_eulerian: bool,
    pub satisfies_relation5: bool,
    pub in_odd_subalgebra: bool,
    pub is_odd_clutter: bool,
    pub nerve_is_flag: bool,
    pub intersection_graph_chordal: bool,
    pub satisfies_star: bool,
    pub odd_partition_property: bool,
    pub witnesses: Witnesses,
    pub implications: Implications,
}

fn lists(edges: &[VertexSet]) -> Vec<Vec<usize>> {
    edges.iter().map(|e| e.to_vec()).collect()
}

pub fn classify(c: &Clutter) -> Result<ClassificationReport> {
    let eulerian = is_eulerian(c)?;
    let relation = check_relation5(c)?;
    let odd_algebra = in_odd_subalgebra(c)?;
    let odd = is_odd_clutter(c)?;
    let flag = complexes::is_flag(&complexes::nerve(c)?)?;
    let chordal = complexes::intersection_graph(c).is_chordal();
    let star = satisfies_star(c);
    let partitions = odd_partition_property(c)?;

    let holds = (
        eulerian.holds(),
        relation.holds(),
        odd_algebra.holds(),
        odd.holds(),
        flag.holds(),
        chordal.holds(),
        star.holds(),
        partitions.holds(),
    );
    let (e, r, a, o, f, g, s, p) = holds;
    let implications = Implications {
        eulerian_implies_gds: !e || (r && a),
        odd_chordal_flag_implies_eulerian: !(o && g && f) || e,
        eulerian_star_implies_odd_chordal_flag: !(e && s) || (o && g && f),
        odd_partitions_implies_eulerian: !p || e,
    };
    let witnesses = Witnesses {
        is_eulerian: eulerian.witness.map(|w| EulerianWitnessRecord {
            subset: w.subset.to_vec(),
            zeta_inverse: w.zeta_inverse,
        }),
        satisfies_relation5: relation.witness.map(|w| RelationWitnessRecord {
            composition: w.composition.parts().to_vec(),
            position: w.position,
            sum: w.sum,
        }),
        in_odd_subalgebra: odd_algebra.witness.map(|w| OddWitnessRecord {
            left: crate::io::HypergraphRecord::from(&w.left.to_hypergraph()),
            right: crate::io::HypergraphRecord::from(&w.right.to_hypergraph()),
            coefficient: w.coefficient,
        }),
        is_odd_clutter: odd.witness.as_deref().map(lists),
        nerve_is_flag: flag.witness.map(VertexSet::to_vec),
        intersection_graph_chordal: chordal.witness,
        satisfies_star: star.witness.map(VertexSet::to_vec),
        odd_partition_property: partitions.witness.as_deref().map(lists),
    };
    Ok(ClassificationReport {
        is_eulerian: e,
        satisfies_relation5: r,
        in_odd_subalgebra: a,
        is_odd_clutter: o,
        nerve_is_flag: f,
        intersection_graph_chordal: g,
        satisfies_star: s,
        odd_partition_property: p,
        witnesses,
        implications,
    })
}
