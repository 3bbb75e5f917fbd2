//! Instance populations and the exhaustive implication checker.

use std::collections::BTreeSet;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds;
use crate::error::{Error, Result};
use crate::euler::{classify, is_eulerian, ClassificationReport};
use crate::io::HypergraphRecord;
use crate::setfam::{subsets, witness_order, Clutter, Hypergraph, VertexSet};
use crate::symfun::psi_powersum;

/// Largest vertex count for which every clutter class is enumerated.
pub const EXHAUSTIVE_MAX_VERTICES: usize = 5;

/// Largest vertex count for which every labeled hypergraph is enumerated.
pub const LABELED_MAX_VERTICES: usize = 4;

/// Largest vertex count accepted by the sampling mode.
pub const SAMPLED_MAX_VERTICES: usize = 8;

/// Candidate edges on `0..n` (all subsets of size at least two) in witness order.
fn candidate_edges(n: usize) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = subsets(VertexSet::full(n).bits())
        .filter(|m| m.count_ones() >= 2)
        .map(VertexSet::from_bits)
        .collect();
    out.sort_by(|a, b| witness_order(a.bits(), b.bits()));
    out
}

/// One representative per isomorphism class of clutters on exactly `n`
/// vertices, sorted by canonical code.
pub fn clutter_classes(n: usize) -> Result<Vec<Clutter>> {
    bounds::check("exhaustive clutter vertex count", n, EXHAUSTIVE_MAX_VERTICES)?;
    let candidates = candidate_edges(n);
    let mut codes = BTreeSet::new();
    let mut chosen = Vec::new();
    fn grow(
        n: usize,
        candidates: &[VertexSet],
        start: usize,
        chosen: &mut Vec<VertexSet>,
        codes: &mut BTreeSet<crate::setfam::CanonicalCode>,
    ) {
        let c = Hypergraph::from_raw(n, chosen.clone());
        codes.insert(c.canonical_code().expect("within the canonical bound"));
        for i in start..candidates.len() {
            let e = candidates[i];
            if chosen.iter().any(|&f| f.is_subset(e) || e.is_subset(f)) {
                continue;
            }
            chosen.push(e);
            grow(n, candidates, i + 1, chosen, codes);
            chosen.pop();
        }
    }
    grow(n, &candidates, 0, &mut chosen, &mut codes);
    codes
        .into_iter()
        .map(|code| Clutter::try_from(code.to_hypergraph()))
        .collect()
}

/// Every labeled hypergraph on `0..n`.
pub fn labeled_hypergraphs(n: usize) -> Result<impl Iterator<Item = Hypergraph>> {
    bounds::check("labeled hypergraph vertex count", n, LABELED_MAX_VERTICES)?;
    let candidates = candidate_edges(n);
    let count = 1u64 << candidates.len();
    Ok((0..count).map(move |mask| {
        let edges = candidates
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Hypergraph::from_raw(n, edges)
    }))
}

/// All edges of size at least two containing some edge of `h`.
pub fn up_closure(h: &Hypergraph) -> Hypergraph {
    let n = h.vertex_count();
    let edges = candidate_edges(n)
        .into_iter()
        .filter(|&s| h.edges().iter().any(|&e| e.is_subset(s)))
        .collect();
    Hypergraph::from_raw(n, edges)
}

/// A hypergraph on `0..n` where each candidate edge appears with probability `p`.
pub fn random_hypergraph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Hypergraph {
    let edges = candidate_edges(n)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Hypergraph::from_raw(n, edges)
}

/// A clutter on `0..n` built from up to `max_edges` random edges.
pub fn random_clutter<R: Rng>(rng: &mut R, n: usize, max_edges: usize) -> Clutter {
    let candidates = candidate_edges(n);
    let k = rng.gen_range(0..=max_edges);
    let edges = (0..k)
        .map(|_| candidates[rng.gen_range(0..candidates.len())])
        .collect();
    Hypergraph::from_raw(n, edges).minimal_edges()
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The implications the checker can test.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// eulerian ⇒ Dehn–Sommerville relations and the odd-subalgebra condition.
    Prop,
    /// `H` is eulerian iff its clutter of minimal edges is.
    Hc,
    /// odd ∧ chordal ∧ flag ⇒ eulerian.
    Clique,
    /// eulerian ∧ (∗) ⇒ odd ∧ chordal ∧ flag.
    Converse,
    /// all `λ(S)` odd ⇒ eulerian.
    Coincide,
    /// eulerian ⇒ Ψ lies in the span of odd power sums.
    OddImage,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Prop,
        Check::Hc,
        Check::Clique,
        Check::Converse,
        Check::Coincide,
        Check::OddImage,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Prop => "prop",
            Check::Hc => "hc",
            Check::Clique => "clique",
            Check::Converse => "converse",
            Check::Coincide => "coincide",
            Check::OddImage => "odd-image",
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    pub check: Check,
    pub instance: HypergraphRecord,
}

/// Per-clutter outcome.
struct ClutterOutcome {
    eulerian: bool,
    gds: bool,
    odd_subalgebra: bool,
    violations: Vec<Violation>,
}

fn check_clutter(c: &Clutter, checks: &[Check]) -> Result<ClutterOutcome> {
    let report: ClassificationReport = classify(c)?;
    let imp = report.implications;
    let mut violations = Vec::new();
    let mut flag = |check: Check, ok: bool| {
        if checks.contains(&check) && !ok {
            violations.push(Violation {
                check,
                instance: HypergraphRecord::from(c.as_hypergraph()),
            });
        }
    };
    flag(Check::Prop, imp.eulerian_implies_gds);
    flag(Check::Clique, imp.odd_chordal_flag_implies_eulerian);
    flag(Check::Converse, imp.eulerian_star_implies_odd_chordal_flag);
    flag(Check::Coincide, imp.odd_partitions_implies_eulerian);
    if checks.contains(&Check::OddImage) && report.is_eulerian {
        flag(Check::OddImage, psi_powersum(c)?.is_odd());
    }
    if checks.contains(&Check::Hc) {
        let up = up_closure(c);
        flag(Check::Hc, is_eulerian(&up)?.holds() == report.is_eulerian);
    }
    Ok(ClutterOutcome {
        eulerian: report.is_eulerian,
        gds: report.satisfies_relation5,
        odd_subalgebra: report.in_odd_subalgebra,
        violations,
    })
}

/// Counts for the clutters on one vertex count.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LevelCounts {
    pub vertices: usize,
    pub clutters: usize,
    pub eulerian: usize,
    /// The Dehn–Sommerville relations hold but the clutter is not eulerian.
    pub gds_not_eulerian: usize,
    /// The odd-subalgebra condition holds but the clutter is not eulerian.
    pub odd_subalgebra_not_eulerian: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EnumerationReport {
    pub mode: &'static str,
    pub max_vertices: usize,
    pub checks: Vec<Check>,
    pub levels: Vec<LevelCounts>,
    /// Labeled hypergraphs tested for the `hc` equivalence.
    pub hypergraphs_checked: usize,
    pub violations: Vec<Violation>,
}

impl EnumerationReport {
    pub fn total_clutters(&self) -> usize {
        self.levels.iter().map(|l| l.clutters).sum()
    }

    pub fn total_eulerian(&self) -> usize {
        self.levels.iter().map(|l| l.eulerian).sum()
    }
}

fn run_level(
    vertices: usize,
    population: &[Clutter],
    checks: &[Check],
    violations: &mut Vec<Violation>,
) -> Result<LevelCounts> {
    let outcomes = population
        .par_iter()
        .map(|c| check_clutter(c, checks))
        .collect::<Result<Vec<_>>>()?;
    let mut level = LevelCounts {
        vertices,
        clutters: population.len(),
        eulerian: 0,
        gds_not_eulerian: 0,
        odd_subalgebra_not_eulerian: 0,
    };
    for o in outcomes {
        level.eulerian += usize::from(o.eulerian);
        level.gds_not_eulerian += usize::from(o.gds && !o.eulerian);
        level.odd_subalgebra_not_eulerian += usize::from(o.odd_subalgebra && !o.eulerian);
        violations.extend(o.violations);
    }
    Ok(level)
}

fn hc_over_labeled(max_vertices: usize, violations: &mut Vec<Violation>) -> Result<usize> {
    let mut checked = 0;
    for n in 0..=max_vertices.min(LABELED_MAX_VERTICES) {
        let population: Vec<Hypergraph> = labeled_hypergraphs(n)?.collect();
        checked += population.len();
        let bad = population
            .par_iter()
            .map(|h| {
                let direct = is_eulerian(h)?.holds();
                let via = is_eulerian(&h.minimal_edges())?.holds();
                Ok((direct != via).then(|| Violation {
                    check: Check::Hc,
                    instance: HypergraphRecord::from(h),
                }))
            })
            .collect::<Result<Vec<_>>>()?;
        violations.extend(bad.into_iter().flatten());
    }
    Ok(checked)
}

/// Runs `checks` over every clutter class on at most `max_vertices` vertices.
/// The `hc` check also covers every labeled hypergraph on at most four
/// vertices and the up-closure of every clutter class.
pub fn enumerate(max_vertices: usize, checks: &[Check]) -> Result<EnumerationReport> {
    bounds::check("exhaustive clutter vertex count", max_vertices, EXHAUSTIVE_MAX_VERTICES)?;
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();
    let mut violations = Vec::new();
    let mut levels = Vec::new();
    for n in 0..=max_vertices {
        let population = clutter_classes(n)?;
        levels.push(run_level(n, &population, &checks, &mut violations)?);
    }
    let hypergraphs_checked = if checks.contains(&Check::Hc) {
        hc_over_labeled(max_vertices, &mut violations)?
    } else {
        0
    };
    Ok(EnumerationReport {
        mode: "exhaustive",
        max_vertices,
        checks,
        levels,
        hypergraphs_checked,
        violations,
    })
}

/// Runs `checks` over `samples` seeded random clutters for each vertex count
/// in `min_vertices..=max_vertices`.
pub fn sample(
    min_vertices: usize,
    max_vertices: usize,
    samples: usize,
    seed: u64,
    checks: &[Check],
) -> Result<EnumerationReport> {
    bounds::check("sampled clutter vertex count", max_vertices, SAMPLED_MAX_VERTICES)?;
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();
    let mut rng = seeded_rng(seed);
    let mut violations = Vec::new();
    let mut levels = Vec::new();
    for n in min_vertices..=max_vertices {
        let population: Vec<Clutter> = (0..samples)
            .map(|_| random_clutter(&mut rng, n, 2 * n))
            .collect();
        levels.push(run_level(n, &population, &checks, &mut violations)?);
    }
    Ok(EnumerationReport {
        mode: "sampled",
        max_vertices,
        checks,
        levels,
        hypergraphs_checked: 0,
        violations,
    })
}
