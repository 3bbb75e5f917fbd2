//! JSON records for instances and results.
//!
//! Hypergraphs and clutters are `{"vertices": n, "edges": [[...], ...]}` and
//! complexes are `{"vertices": n, "facets": [[...], ...]}`. An instance file
//! may add `"kind"` and `"one_based"`.

use serde::{Deserialize, Serialize};

use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::hopf::LinearCombo;
use crate::setfam::{Clutter, Hypergraph};
use crate::symfun::{IntPolynomial, QSymElement, SymElement};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HypergraphRecord {
    pub vertices: usize,
    pub edges: Vec<Vec<usize>>,
}

impl From<&Hypergraph> for HypergraphRecord {
    fn from(h: &Hypergraph) -> Self {
        HypergraphRecord {
            vertices: h.vertex_count(),
            edges: h.edge_lists(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ComplexRecord {
    pub vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

impl From<&SimplicialComplex> for ComplexRecord {
    fn from(k: &SimplicialComplex) -> Self {
        ComplexRecord {
            vertices: k.vertex_count(),
            facets: k.facets().iter().map(|f| f.to_vec()).collect(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Hypergraph,
    Clutter,
    Complex,
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hypergraph" => Ok(Kind::Hypergraph),
            "clutter" => Ok(Kind::Clutter),
            "complex" => Ok(Kind::Complex),
            other => Err(Error::Parse(format!("unknown instance kind {other:?}"))),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    kind: Option<Kind>,
    #[serde(default)]
    one_based: bool,
    vertices: usize,
    edges: Option<Vec<Vec<usize>>>,
    facets: Option<Vec<Vec<usize>>>,
}

/// A validated instance of one of the three kinds.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Instance {
    Hypergraph(Hypergraph),
    Clutter(Clutter),
    Complex(SimplicialComplex),
}

impl Instance {
    pub fn kind(&self) -> Kind {
        match self {
            Instance::Hypergraph(_) => Kind::Hypergraph,
            Instance::Clutter(_) => Kind::Clutter,
            Instance::Complex(_) => Kind::Complex,
        }
    }
}

/// Parses an instance. `kind` and `one_based` override the file's own fields;
/// without any kind, a file with `facets` is a complex and otherwise a hypergraph.
pub fn parse_instance(text: &str, kind: Option<Kind>, one_based: bool) -> Result<Instance> {
    let raw: RawInstance =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let one_based = one_based || raw.one_based;
    let kind = kind.or(raw.kind).unwrap_or(if raw.facets.is_some() {
        Kind::Complex
    } else {
        Kind::Hypergraph
    });
    let shift = |sets: Vec<Vec<usize>>| -> Result<Vec<Vec<usize>>> {
        if !one_based {
            return Ok(sets);
        }
        sets.into_iter()
            .map(|s| {
                s.into_iter()
                    .map(|v| {
                        v.checked_sub(1)
                            .ok_or_else(|| Error::Parse("vertex 0 in a one-based instance".into()))
                    })
                    .collect()
            })
            .collect()
    };
    let n = raw.vertices;
    match kind {
        Kind::Complex => {
            if raw.edges.is_some() {
                return Err(Error::Parse("a complex lists \"facets\", not \"edges\"".into()));
            }
            let facets = shift(raw.facets.unwrap_or_default())?;
            Ok(Instance::Complex(SimplicialComplex::from_lists(n, facets)?))
        }
        Kind::Hypergraph | Kind::Clutter => {
            if raw.facets.is_some() {
                return Err(Error::Parse("a hypergraph lists \"edges\", not \"facets\"".into()));
            }
            let edges = shift(raw.edges.unwrap_or_default())?;
            let h = Hypergraph::from_lists(n, edges)?;
            Ok(if kind == Kind::Clutter {
                Instance::Clutter(Clutter::try_from(h)?)
            } else {
                Instance::Hypergraph(h)
            })
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TensorTerm {
    pub coefficient: i64,
    pub tensor: Vec<HypergraphRecord>,
}

/// Terms in canonical order, each factor given by its canonical representative.
pub fn linear_combo_records(combo: &LinearCombo) -> Vec<TensorTerm> {
    combo
        .terms()
        .map(|(tensor, coefficient)| TensorTerm {
            coefficient,
            tensor: tensor
                .iter()
                .map(|code| HypergraphRecord::from(&code.to_hypergraph()))
                .collect(),
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MonomialTerm {
    pub composition: Vec<usize>,
    pub coefficient: i64,
}

pub fn qsym_records(f: &QSymElement) -> Vec<MonomialTerm> {
    f.terms()
        .map(|(alpha, coefficient)| MonomialTerm {
            composition: alpha.parts().to_vec(),
            coefficient,
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PowerSumTerm {
    pub partition: Vec<usize>,
    pub coefficient: i64,
}

pub fn sym_records(f: &SymElement) -> Vec<PowerSumTerm> {
    f.terms()
        .map(|(lambda, coefficient)| PowerSumTerm {
            partition: lambda.parts().to_vec(),
            coefficient,
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PolynomialRecord {
    /// Constant term first.
    pub coefficients: Vec<i64>,
    pub text: String,
}

impl From<&IntPolynomial> for PolynomialRecord {
    fn from(p: &IntPolynomial) -> Self {
        PolynomialRecord {
            coefficients: p.coefficients().to_vec(),
            text: p.to_string(),
        }
    }
}

/// Human-readable rendering of a power-sum combination, e.g. `p[1,1] - 2 p[2]`.
pub fn render_sym(f: &SymElement) -> String {
    render(f.terms().map(|(l, c)| (format!("p{:?}", l.parts()), c)))
}

/// Human-readable rendering of a monomial quasisymmetric combination.
pub fn render_qsym(f: &QSymElement) -> String {
    render(f.terms().map(|(a, c)| (format!("M{:?}", a.parts()), c)))
}

fn render(terms: impl Iterator<Item = (String, i64)>) -> String {
    let mut out = String::new();
    for (name, c) in terms {
        let magnitude = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        if magnitude != 1 {
            out.push_str(&format!("{magnitude} "));
        }
        out.push_str(&name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
