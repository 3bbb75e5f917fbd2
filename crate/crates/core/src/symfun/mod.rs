//! Quasisymmetric and symmetric functions attached to hypergraphs: the
//! canonical morphism Ψ, its power-sum expansion, chromatic polynomials and
//! the `D_λ` transition matrix.

mod basis;
mod poly;
mod qsym;
mod sym;

pub use basis::{Composition, Partition};
pub use poly::IntPolynomial;
pub use qsym::QSymElement;
pub use sym::SymElement;

use crate::bounds;
use crate::error::{Error, Result};
use crate::lattice;
use crate::setfam::{Clutter, Hypergraph, VertexSet};

/// `Ψ(H) = Σ_α ζ_α(H) M_α`.
///
/// Set partitions of `V` into discrete blocks are counted once by block-size
/// type; an ordered decomposition of shape `α` arises from a set partition of
/// type `sort(α)` in `Π_s m_s!` ways, `m_s` being the number of blocks of size `s`.
pub fn psi(h: &Hypergraph) -> Result<QSymElement> {
    let n = h.vertex_count();
    bounds::check("Ψ vertex count", n, bounds::SUBSET_DP_MAX_VERTICES)?;
    let census = lattice::block_type_census(&h.independence_table()?, n);
    let mut out = QSymElement::zero();
    for alpha in Composition::all(n) {
        let multiplicities = alpha.sorted().multiplicities(n);
        let Some(&count) = census.get(&multiplicities) else {
            continue;
        };
        let mut coefficient = i64::try_from(count).map_err(|_| Error::Overflow("Ψ"))?;
        for &m in &multiplicities {
            for f in 2..=m as i64 {
                coefficient = coefficient.checked_mul(f).ok_or(Error::Overflow("Ψ"))?;
            }
        }
        out.add_term(alpha, coefficient)?;
    }
    Ok(out)
}

/// `λ(S)`: component sizes of the subclutter `S` on the full vertex set.
pub fn component_partition(n: usize, edges: impl IntoIterator<Item = VertexSet>) -> Partition {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for e in edges {
        let mut it = e.iter();
        if let Some(root) = it.next() {
            for v in it {
                let (a, b) = (find(&mut parent, root), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut sizes = vec![0usize; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        sizes[r] += 1;
    }
    Partition::from_parts_unchecked(sizes.into_iter().filter(|&s| s > 0).collect())
}

/// `Ψ(C) = Σ_{S ⊆ C} (−1)^{|S|} p_{λ(S)}`.
pub fn psi_powersum(c: &Clutter) -> Result<SymElement> {
    let m = c.edge_count();
    bounds::check("power-sum subclutter count", m, bounds::SUBCLUTTER_MAX_EDGES)?;
    let edges = c.edges();
    let mut out = SymElement::zero();
    for mask in 0u32..(1 << m) {
        let chosen = VertexSet::from_bits(mask).iter().map(|i| edges[i]);
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        out.add_term(component_partition(c.vertex_count(), chosen), sign)?;
    }
    Ok(out)
}

/// Rewrites a homogeneous power-sum combination in the monomial basis using
/// `p_k = M_(k)` and the quasi-shuffle product.
pub fn powersum_to_monomial(f: &SymElement, n: usize) -> Result<QSymElement> {
    if let Some(d) = f.degree()? {
        if d != n {
            return Err(Error::MixedDegrees { first: d, second: n });
        }
    }
    let mut out = QSymElement::zero();
    for (lambda, c) in f.terms() {
        let mut product = QSymElement::one();
        for &part in lambda.parts() {
            product = product.multiply(&QSymElement::monomial(Composition::new(vec![part])?))?;
        }
        for (alpha, d) in product.terms() {
            let scaled = d.checked_mul(c).ok_or(Error::Overflow("power-sum conversion"))?;
            out.add_term(alpha.clone(), scaled)?;
        }
    }
    Ok(out)
}

/// `c_k = Σ_{k(α)=k} ζ_α(H)`: ordered decompositions into `k` discrete blocks.
pub fn block_counts(h: &Hypergraph) -> Result<Vec<i64>> {
    let f = psi(h)?;
    let mut counts = vec![0i64; h.vertex_count() + 1];
    for (alpha, c) in f.terms() {
        counts[alpha.len()] = counts[alpha.len()]
            .checked_add(c)
            .ok_or(Error::Overflow("block counts"))?;
    }
    Ok(counts)
}

/// `χ(H, m) = Ψ(H)(1^m) = Σ_k c_k binom(m, k)`.
pub fn chromatic_polynomial(h: &Hypergraph) -> Result<IntPolynomial> {
    IntPolynomial::from_binomial_basis(&block_counts(h)?)
}

pub fn eval_chromatic(h: &Hypergraph, m: i64) -> Result<i64> {
    chromatic_polynomial(h)?.eval(m)
}

/// `Ψ(D_λ)` in the power-sum basis, where `D_λ` is the disjoint sum of the
/// single-edge clutters on `λ_i` vertices.
pub fn d_lambda_psi(lambda: &Partition) -> Result<SymElement> {
    let mut out = SymElement::one();
    for &part in lambda.parts() {
        let factor = if part == 1 {
            SymElement::power_sum(Partition::ones(1))
        } else {
            SymElement::power_sum(Partition::ones(part))
                .sub(&SymElement::power_sum(Partition::new(vec![part])?))?
        };
        out = out.multiply(&factor)?;
    }
    Ok(out)
}

/// Matrix of the `Ψ(D_λ)` in the `p_μ` basis over the partitions of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    pub partitions: Vec<Partition>,
    pub entries: Vec<Vec<i64>>,
}

impl TransitionMatrix {
    pub fn square(&self) -> Result<Vec<Vec<i64>>> {
        let size = self.partitions.len();
        let mut out = vec![vec![0i64; size]; size];
        for i in 0..size {
            for j in 0..size {
                let mut acc: i64 = 0;
                for k in 0..size {
                    acc = self.entries[i][k]
                        .checked_mul(self.entries[k][j])
                        .and_then(|t| t.checked_add(acc))
                        .ok_or(Error::Overflow("matrix product"))?;
                }
                out[i][j] = acc;
            }
        }
        Ok(out)
    }

    pub fn is_involution(&self) -> Result<bool> {
        let sq = self.square()?;
        Ok(sq
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j))))
    }
}

/// Rows and columns follow [`Partition::all`]: `(n)` first, `(1^n)` last.
pub fn transition_matrix(n: usize) -> Result<TransitionMatrix> {
    bounds::check("transition matrix degree", n, bounds::TRANSITION_MAX_DEGREE)?;
    let partitions = Partition::all(n);
    let entries = partitions
        .iter()
        .map(|lambda| {
            let f = d_lambda_psi(lambda)?;
            Ok(partitions.iter().map(|mu| f.coefficient(mu)).collect())
        })
        .collect::<Result<Vec<Vec<i64>>>>()?;
    Ok(TransitionMatrix {
        partitions,
        entries,
    })
}
