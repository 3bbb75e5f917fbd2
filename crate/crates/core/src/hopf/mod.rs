//! Coproducts, characters and antipodes in the Hopf algebra of hypergraphs.

mod combo;

pub use combo::LinearCombo;

use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;

use crate::bounds;
use crate::error::{Error, Result};
use crate::lattice;
use crate::setfam::{subsets, CanonicalCode, Clutter, Hypergraph, VertexSet};
use crate::symfun::{self, Composition};

/// The characters used throughout: `ζ`, its conjugate `ζ̄` and the counit `ε`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Character {
    Zeta,
    ZetaBar,
    Counit,
}

impl Character {
    pub fn value(self, h: &Hypergraph) -> i64 {
        self.eval(h.vertex_count(), h.is_discrete())
    }

    pub fn value_on_code(self, code: &CanonicalCode) -> i64 {
        self.eval(code.vertex_count(), code.is_discrete())
    }

    fn eval(self, n: usize, discrete: bool) -> i64 {
        match self {
            Character::Zeta => i64::from(discrete),
            Character::ZetaBar if discrete => {
                if n.is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            }
            Character::ZetaBar => 0,
            Character::Counit => i64::from(n == 0),
        }
    }

    /// Applies the character to every tensor factor and sums.
    pub fn apply(self, combo: &LinearCombo) -> Result<i64> {
        combo.terms().try_fold(0i64, |acc, (tensor, c)| {
            let v: i64 = tensor.iter().map(|t| self.value_on_code(t)).product();
            v.checked_mul(c)
                .and_then(|t| t.checked_add(acc))
                .ok_or(Error::Overflow("character evaluation"))
        })
    }
}

/// Canonical codes of `H|_B` for every mask `B`.
pub(crate) fn restriction_codes(h: &Hypergraph) -> Result<Vec<CanonicalCode>> {
    let n = h.vertex_count();
    bounds::check("restriction table vertex count", n, bounds::CANONICAL_MAX_VERTICES)?;
    Ok((0u32..1 << n)
        .map(|mask| {
            h.restrict_unchecked(VertexSet::from_bits(mask))
                .canonical_code()
                .expect("restriction within bound")
        })
        .collect())
}

/// `Δ(H) = Σ_{I ⊆ V} H|_I ⊗ H|_{V∖I}`.
pub fn coproduct(h: &Hypergraph) -> Result<LinearCombo> {
    iterated_coproduct(h, 2)
}

/// Sum over ordered decompositions `V = I_1 ⊔ … ⊔ I_k`, empty blocks allowed.
pub fn iterated_coproduct(h: &Hypergraph, k: usize) -> Result<LinearCombo> {
    if k == 0 {
        return Err(Error::InvalidArity(k));
    }
    let n = h.vertex_count();
    let mass = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    bounds::check(
        "iterated coproduct term count",
        usize::try_from(mass).unwrap_or(usize::MAX),
        bounds::COPRODUCT_MAX_TERMS,
    )?;
    let codes = restriction_codes(h)?;
    let mut memo: HashMap<(usize, u32), BTreeMap<Vec<CanonicalCode>, i64>> = HashMap::new();
    let terms = split(&codes, VertexSet::full(n).bits(), k, &mut memo);
    let mut out = LinearCombo::new(k)?;
    for (tensor, c) in terms {
        out.add_term(tensor, c)?;
    }
    Ok(out)
}

fn split(
    codes: &[CanonicalCode],
    mask: u32,
    k: usize,
    memo: &mut HashMap<(usize, u32), BTreeMap<Vec<CanonicalCode>, i64>>,
) -> BTreeMap<Vec<CanonicalCode>, i64> {
    if k == 1 {
        return BTreeMap::from([(vec![codes[mask as usize].clone()], 1)]);
    }
    if let Some(hit) = memo.get(&(k, mask)) {
        return hit.clone();
    }
    let mut out: BTreeMap<Vec<CanonicalCode>, i64> = BTreeMap::new();
    for first in subsets(mask) {
        let head = &codes[first as usize];
        for (tail, c) in split(codes, mask ^ first, k - 1, memo) {
            let mut tensor = Vec::with_capacity(k);
            tensor.push(head.clone());
            tensor.extend(tail);
            *out.entry(tensor).or_insert(0) += c;
        }
    }
    memo.insert((k, mask), out.clone());
    out
}

/// `ζ_α(H)`: ordered decompositions into discrete blocks of sizes `α`.
pub fn zeta_alpha(h: &Hypergraph, alpha: &Composition) -> Result<i64> {
    let n = h.vertex_count();
    if alpha.size() != n {
        return Err(Error::CompositionMismatch {
            parts: alpha.parts().to_vec(),
            n,
        });
    }
    bounds::check("ζ_α vertex count", n, bounds::SUBSET_DP_MAX_VERTICES)?;
    lattice::layered_block_count(&h.independence_table()?, n, alpha.parts())
}

/// Algorithms for the antipode.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum AntipodeMethod {
    /// Alternating sum over ordered decompositions into nonempty blocks.
    #[default]
    Takeuchi,
    /// `S(H) = −H − Σ_{∅≠I⊊V} H|_I · S(H|_{V∖I})`, memoized on isomorphism classes.
    Recursive,
}

impl FromStr for AntipodeMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "takeuchi" => Ok(AntipodeMethod::Takeuchi),
            "recursive" => Ok(AntipodeMethod::Recursive),
            other => Err(Error::Parse(format!("unknown antipode method {other:?}"))),
        }
    }
}

pub fn antipode(h: &Hypergraph, method: AntipodeMethod) -> Result<LinearCombo> {
    match method {
        AntipodeMethod::Takeuchi => antipode_takeuchi(h),
        AntipodeMethod::Recursive => antipode_recursive(h),
    }
}

type CodeSum = BTreeMap<CanonicalCode, i64>;

fn add_into(target: &mut CodeSum, key: CanonicalCode, c: i64) -> Result<()> {
    crate::accumulate(target, key, c, "antipode coefficient")
}

/// `S(H) = Σ_{k≥1} (−1)^k Σ_{I_1⊔…⊔I_k=V} H|_{I_1} ⊔ … ⊔ H|_{I_k}`.
///
/// Tabulated over vertex masks: `T(m) = −Σ_{∅≠B⊆m} H|_B · T(m∖B)`, `T(∅) = 1`.
pub fn antipode_takeuchi(h: &Hypergraph) -> Result<LinearCombo> {
    let n = h.vertex_count();
    bounds::check("antipode vertex count", n, bounds::ANTIPODE_MAX_VERTICES)?;
    let codes = restriction_codes(h)?;
    let size = 1usize << n;
    let mut table: Vec<CodeSum> = Vec::with_capacity(size);
    table.push(BTreeMap::from([(CanonicalCode::unit(), 1)]));
    for mask in 1..size as u32 {
        let mut here = CodeSum::new();
        for block in subsets(mask).filter(|&b| b != 0) {
            let head = &codes[block as usize];
            for (tail, &c) in &table[(mask ^ block) as usize] {
                add_into(&mut here, head.disjoint_sum(tail), -c)?;
            }
        }
        table.push(here);
    }
    Ok(LinearCombo::from_map(table.pop().expect("nonempty table")))
}

/// Antipode by the standard recursion for graded connected bialgebras.
pub fn antipode_recursive(h: &Hypergraph) -> Result<LinearCombo> {
    bounds::check(
        "antipode vertex count",
        h.vertex_count(),
        bounds::ANTIPODE_MAX_VERTICES,
    )?;
    let mut memo: HashMap<CanonicalCode, CodeSum> = HashMap::new();
    let code = h.canonical_code()?;
    Ok(LinearCombo::from_map(recursive_step(&code, &mut memo)?))
}

fn recursive_step(code: &CanonicalCode, memo: &mut HashMap<CanonicalCode, CodeSum>) -> Result<CodeSum> {
    if let Some(hit) = memo.get(code) {
        return Ok(hit.clone());
    }
    let h = code.to_hypergraph();
    let n = h.vertex_count();
    let mut out = CodeSum::new();
    if n == 0 {
        out.insert(CanonicalCode::unit(), 1);
    } else {
        out.insert(code.clone(), -1);
        let codes = restriction_codes(&h)?;
        let full = VertexSet::full(n).bits();
        for part in subsets(full).filter(|&i| i != 0 && i != full) {
            let head = &codes[part as usize];
            let tail = recursive_step(&codes[(full ^ part) as usize], memo)?;
            for (t, c) in tail {
                add_into(&mut out, head.disjoint_sum(&t), -c)?;
            }
        }
    }
    memo.insert(code.clone(), out.clone());
    Ok(out)
}

/// `m ∘ (S ⊗ id) ∘ Δ(H)`, collected on isomorphism classes; equals `ε(H)·H_∅`.
pub fn antipode_convolution(h: &Hypergraph, method: AntipodeMethod) -> Result<LinearCombo> {
    let n = h.vertex_count();
    let codes = restriction_codes(h)?;
    let full = VertexSet::full(n).bits();
    let mut out = CodeSum::new();
    for part in subsets(full) {
        let left = antipode(&h.restrict_unchecked(VertexSet::from_bits(part)), method)?;
        let right = &codes[(full ^ part) as usize];
        for (tensor, c) in left.terms() {
            add_into(&mut out, tensor[0].disjoint_sum(right), c)?;
        }
    }
    Ok(LinearCombo::from_map(out))
}

/// Routes to the Möbius character `ζ⁻¹ = ζ ∘ S`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ZetaInverseMethod {
    /// `Σ_{α ⊨ n} (−1)^{k(α)} ζ_α(H)`.
    TakeuchiSum,
    /// `ζ⁻¹(C) = ζ⁻¹(C − e) − ζ⁻¹(C / e)` on the clutter of minimal edges.
    #[default]
    DeletionContraction,
    /// `ζ` applied to the expanded antipode.
    AntipodeThenZeta,
}

impl ZetaInverseMethod {
    pub const ALL: [ZetaInverseMethod; 3] = [
        ZetaInverseMethod::TakeuchiSum,
        ZetaInverseMethod::DeletionContraction,
        ZetaInverseMethod::AntipodeThenZeta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ZetaInverseMethod::TakeuchiSum => "takeuchi-sum",
            ZetaInverseMethod::DeletionContraction => "deletion-contraction",
            ZetaInverseMethod::AntipodeThenZeta => "antipode-then-zeta",
        }
    }
}

impl FromStr for ZetaInverseMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ZetaInverseMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown ζ⁻¹ method {s:?}")))
    }
}

pub fn zeta_inverse(h: &Hypergraph, method: ZetaInverseMethod) -> Result<i64> {
    bounds::check("ζ⁻¹ vertex count", h.vertex_count(), bounds::SUBSET_DP_MAX_VERTICES)?;
    match method {
        ZetaInverseMethod::TakeuchiSum => {
            let f = symfun::psi(h)?;
            let value = f.terms().try_fold(0i64, |acc, (alpha, c)| {
                let signed = if alpha.len() % 2 == 0 { c } else { -c };
                acc.checked_add(signed).ok_or(Error::Overflow("ζ⁻¹"))
            });
            value
        }
        ZetaInverseMethod::DeletionContraction => {
            let mut memo = HashMap::new();
            deletion_contraction(&h.minimal_edges(), &mut memo)
        }
        ZetaInverseMethod::AntipodeThenZeta => Character::Zeta.apply(&antipode_takeuchi(h)?),
    }
}

fn deletion_contraction(c: &Clutter, memo: &mut HashMap<Clutter, i64>) -> Result<i64> {
    let Some(&last) = c.edges().last() else {
        return Ok(if c.vertex_count().is_multiple_of(2) { 1 } else { -1 });
    };
    if let Some(&hit) = memo.get(c) {
        return Ok(hit);
    }
    let e = *c
        .edges()
        .iter()
        .find(|x| x.len() == last.len())
        .expect("a largest edge exists");
    let deleted = deletion_contraction(&c.delete_unchecked(e), memo)?;
    let contracted = deletion_contraction(&c.contract_unchecked(e), memo)?;
    let value = deleted
        .checked_sub(contracted)
        .ok_or(Error::Overflow("deletion-contraction"))?;
    memo.insert(c.clone(), value);
    Ok(value)
}

/// `ζ⁻¹(H|_B)` for every mask `B`, in one pass over the subset lattice.
pub fn zeta_inverse_table(h: &Hypergraph) -> Result<Vec<i64>> {
    let n = h.vertex_count();
    bounds::check("ζ⁻¹ vertex count", n, bounds::SUBSET_DP_MAX_VERTICES)?;
    lattice::signed_block_sums(&h.independence_table()?, n)
}

/// `χ(H) = (ζ̄ζ)(H) = Σ (−1)^{|I|}` over `I` with `H|_I` and `H|_{V∖I}` discrete.
pub fn euler_character(h: &Hypergraph) -> Result<i64> {
    let n = h.vertex_count();
    bounds::check("Euler character vertex count", n, bounds::SUBSET_DP_MAX_VERTICES)?;
    Ok(euler_character_from_table(&h.independence_table()?, n))
}

pub(crate) fn euler_character_from_table(independent: &[bool], n: usize) -> i64 {
    let full = VertexSet::full(n).bits();
    subsets(full)
        .filter(|&i| independent[i as usize] && independent[(full ^ i) as usize])
        .map(|i| if i.count_ones() % 2 == 0 { 1 } else { -1 })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_lists(n, edges.iter().map(|e| e.iter().copied())).unwrap()
    }

    fn code(n: usize, edges: &[&[usize]]) -> CanonicalCode {
        hg(n, edges).canonical_code().unwrap()
    }

    fn k3() -> Hypergraph {
        hg(3, &[&[0, 1], &[1, 2], &[0, 2]])
    }

    #[test]
    fn coproduct_examples() {
        let unit = CanonicalCode::unit();
        let d = coproduct(&Hypergraph::unit()).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.coefficient(&[unit.clone(), unit.clone()]), 1);

        let d1 = CanonicalCode::discrete(1);
        let d = coproduct(&Hypergraph::discrete(1)).unwrap();
        assert_eq!(d.coefficient(&[d1.clone(), unit.clone()]), 1);
        assert_eq!(d.coefficient(&[unit.clone(), d1.clone()]), 1);
        assert_eq!(d.len(), 2);

        let e2 = code(2, &[&[0, 1]]);
        let k3c = k3().canonical_code().unwrap();
        let d = coproduct(&k3()).unwrap();
        assert_eq!(d.len(), 4);
        assert_eq!(d.coefficient(&[unit.clone(), k3c.clone()]), 1);
        assert_eq!(d.coefficient(&[d1.clone(), e2.clone()]), 3);
        assert_eq!(d.coefficient(&[e2, d1]), 3);
        assert_eq!(d.coefficient(&[k3c, unit]), 1);
        assert_eq!(d.mass().unwrap(), 8);
    }

    #[test]
    fn iterated_coproduct_examples() {
        let h = hg(4, &[&[0, 1, 2], &[2, 3]]);
        let once = iterated_coproduct(&h, 1).unwrap();
        assert_eq!(once, LinearCombo::single(h.canonical_code().unwrap()));
        assert_eq!(iterated_coproduct(&h, 2).unwrap(), coproduct(&h).unwrap());

        let d = iterated_coproduct(&Hypergraph::discrete(2), 3).unwrap();
        assert_eq!(d.mass().unwrap(), 9);
        let (d1, u) = (CanonicalCode::discrete(1), CanonicalCode::unit());
        assert_eq!(d.coefficient(&[d1.clone(), d1.clone(), u.clone()]), 2);
        assert_eq!(d.coefficient(&[CanonicalCode::discrete(2), u.clone(), u]), 1);
        assert!(matches!(iterated_coproduct(&h, 0), Err(Error::InvalidArity(0))));
    }

    #[test]
    fn zeta_alpha_examples() {
        let comp = |p: &[usize]| Composition::new(p.to_vec()).unwrap();
        assert_eq!(zeta_alpha(&Hypergraph::discrete(2), &comp(&[1, 1])).unwrap(), 2);
        assert_eq!(zeta_alpha(&k3(), &comp(&[2, 1])).unwrap(), 0);
        assert_eq!(zeta_alpha(&k3(), &comp(&[1, 1, 1])).unwrap(), 6);
        assert_eq!(zeta_alpha(&Hypergraph::unit(), &Composition::empty()).unwrap(), 1);
        assert!(matches!(
            zeta_alpha(&k3(), &comp(&[1, 1])),
            Err(Error::CompositionMismatch { .. })
        ));
    }

    #[test]
    fn antipode_examples() {
        for method in [AntipodeMethod::Takeuchi, AntipodeMethod::Recursive] {
            let s = antipode(&Hypergraph::discrete(1), method).unwrap();
            assert_eq!(s.len(), 1);
            assert_eq!(s.coefficient(&[CanonicalCode::discrete(1)]), -1);

            let e2 = hg(2, &[&[0, 1]]);
            let s = antipode(&e2, method).unwrap();
            assert_eq!(s.len(), 2);
            assert_eq!(s.coefficient(&[e2.canonical_code().unwrap()]), -1);
            assert_eq!(s.coefficient(&[CanonicalCode::discrete(2)]), 2);

            let s = antipode(&Hypergraph::discrete(2), method).unwrap();
            assert_eq!(s, LinearCombo::single(CanonicalCode::discrete(2)));

            let s = antipode(&Hypergraph::unit(), method).unwrap();
            assert_eq!(s, LinearCombo::single(CanonicalCode::unit()));
        }
    }

    #[test]
    fn antipode_methods_agree_and_invert() {
        let h = hg(5, &[&[0, 1], &[1, 2, 3], &[3, 4], &[0, 4]]);
        let t = antipode_takeuchi(&h).unwrap();
        assert_eq!(t, antipode_recursive(&h).unwrap());
        for method in [AntipodeMethod::Takeuchi, AntipodeMethod::Recursive] {
            assert!(antipode_convolution(&h, method).unwrap().is_zero());
        }
        let unit = antipode_convolution(&Hypergraph::unit(), AntipodeMethod::Takeuchi).unwrap();
        assert_eq!(unit, LinearCombo::single(CanonicalCode::unit()));
    }

    #[test]
    fn zeta_inverse_examples() {
        let full = |n: usize| Hypergraph::new(n, [VertexSet::full(n)]).unwrap();
        for method in ZetaInverseMethod::ALL {
            assert_eq!(zeta_inverse(&full(4), method).unwrap(), 2);
            assert_eq!(zeta_inverse(&full(5), method).unwrap(), 0);
            for n in 0..5 {
                let expected = if n % 2 == 0 { 1 } else { -1 };
                assert_eq!(zeta_inverse(&Hypergraph::discrete(n), method).unwrap(), expected);
            }
            assert_eq!(zeta_inverse(&k3(), method).unwrap(), -6);
        }
        let table = zeta_inverse_table(&k3()).unwrap();
        assert_eq!(table[7], -6);
        assert_eq!(table[3], 2);
        assert_eq!(table[1], -1);
    }

    #[test]
    fn method_names_round_trip() {
        for m in ZetaInverseMethod::ALL {
            assert_eq!(m.name().parse::<ZetaInverseMethod>().unwrap(), m);
        }
        assert!("bogus".parse::<ZetaInverseMethod>().is_err());
    }

    #[test]
    fn euler_character_examples() {
        assert_eq!(euler_character(&Hypergraph::unit()).unwrap(), 1);
        for n in 1..6 {
            assert_eq!(euler_character(&Hypergraph::discrete(n)).unwrap(), 0);
        }
        assert_eq!(euler_character(&hg(2, &[&[0, 1]])).unwrap(), -2);
        assert_eq!(euler_character(&k3()).unwrap(), 0);
    }

    #[test]
    fn characters_are_multiplicative() {
        let a = hg(2, &[&[0, 1]]);
        let b = Hypergraph::discrete(3);
        let sum = a.disjoint_sum(&b).unwrap();
        for ch in [Character::Zeta, Character::ZetaBar, Character::Counit] {
            assert_eq!(ch.value(&sum), ch.value(&a) * ch.value(&b));
            let db = ch.value(&b);
            let dd = ch.value(&b.disjoint_sum(&b).unwrap());
            assert_eq!(dd, db * db);
        }
        assert_eq!(Character::ZetaBar.value(&b), -1);
    }
}
