//! Python bindings for `hyperhopf-core`.

use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use hyperhopf_core::complexes::{self, SimplicialComplex};
use hyperhopf_core::error::Error;
use hyperhopf_core::euler;
use hyperhopf_core::hopf::{self, AntipodeMethod, ZetaInverseMethod};
use hyperhopf_core::io as records;
use hyperhopf_core::setfam::{Clutter, Hypergraph, VertexSet};
use hyperhopf_core::symfun::{self, Composition};
use hyperhopf_core::verify::{self, Check};

fn to_py(e: Error) -> PyErr {
    if e.is_resource_bound() {
        PyOverflowError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

/// Converts a serializable record to plain Python objects.
fn to_python<'py>(py: Python<'py>, value: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn clutter_of(h: &Hypergraph) -> PyResult<Clutter> {
    Clutter::try_from(h.clone()).map_err(to_py)
}

/// A hypergraph on vertices `0..n`; every edge has at least two vertices.
#[pyclass(name = "Hypergraph", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyHypergraph {
    inner: Hypergraph,
}

impl From<Hypergraph> for PyHypergraph {
    fn from(inner: Hypergraph) -> Self {
        PyHypergraph { inner }
    }
}

#[pymethods]
impl PyHypergraph {
    #[new]
    #[pyo3(signature = (vertices, edges, one_based = false))]
    fn new(vertices: usize, edges: Vec<Vec<usize>>, one_based: bool) -> PyResult<Self> {
        let edges = if one_based {
            edges
                .into_iter()
                .map(|e| {
                    e.into_iter()
                        .map(|v| v.checked_sub(1).ok_or_else(|| PyValueError::new_err("vertex 0 in one-based input")))
                        .collect::<PyResult<Vec<_>>>()
                })
                .collect::<PyResult<Vec<_>>>()?
        } else {
            edges
        };
        Ok(Hypergraph::from_lists(vertices, edges).map_err(to_py)?.into())
    }

    #[getter]
    fn vertices(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edges(&self) -> Vec<Vec<usize>> {
        self.inner.edge_lists()
    }

    fn __repr__(&self) -> String {
        format!("Hypergraph({}, {:?})", self.inner.vertex_count(), self.inner.edge_lists())
    }

    fn is_discrete(&self) -> bool {
        self.inner.is_discrete()
    }

    fn is_clutter(&self) -> bool {
        self.inner.is_clutter()
    }

    fn is_building_set(&self) -> bool {
        self.inner.is_building_set()
    }

    fn restrict(&self, subset: Vec<usize>) -> PyResult<Self> {
        let s = VertexSet::from_members(subset, self.inner.vertex_count()).map_err(to_py)?;
        Ok(self.inner.restrict(s).map_err(to_py)?.into())
    }

    fn disjoint_sum(&self, other: &PyHypergraph) -> PyResult<Self> {
        Ok(self.inner.disjoint_sum(&other.inner).map_err(to_py)?.into())
    }

    fn minimal_edges(&self) -> Self {
        self.inner.minimal_edges().into_hypergraph().into()
    }

    fn connected_components(&self) -> Vec<Vec<usize>> {
        self.inner
            .connected_components()
            .into_iter()
            .map(VertexSet::to_vec)
            .collect()
    }

    /// Canonical representative of the isomorphism class.
    fn canonical(&self) -> PyResult<Self> {
        Ok(self.inner.canonical_code().map_err(to_py)?.to_hypergraph().into())
    }

    fn is_isomorphic(&self, other: &PyHypergraph) -> PyResult<bool> {
        Ok(self.inner.canonical_code().map_err(to_py)? == other.inner.canonical_code().map_err(to_py)?)
    }

    /// `C − e` on the clutter.
    fn delete(&self, edge: Vec<usize>) -> PyResult<Self> {
        let e = VertexSet::from_members(edge, self.inner.vertex_count()).map_err(to_py)?;
        Ok(clutter_of(&self.inner)?.delete(e).map_err(to_py)?.into_hypergraph().into())
    }

    /// `C / e` on the clutter.
    fn contract(&self, edge: Vec<usize>) -> PyResult<Self> {
        let e = VertexSet::from_members(edge, self.inner.vertex_count()).map_err(to_py)?;
        Ok(clutter_of(&self.inner)?.contract(e).map_err(to_py)?.into_hypergraph().into())
    }

    /// Ψ in the monomial basis as `(composition, coefficient)` pairs.
    fn psi(&self) -> PyResult<Vec<(Vec<usize>, i64)>> {
        let f = symfun::psi(&self.inner).map_err(to_py)?;
        Ok(f.terms().map(|(a, c)| (a.parts().to_vec(), c)).collect())
    }

    /// Ψ in the power-sum basis, computed on the clutter of minimal edges.
    fn psi_powersum(&self) -> PyResult<Vec<(Vec<usize>, i64)>> {
        let f = symfun::psi_powersum(&self.inner.minimal_edges()).map_err(to_py)?;
        Ok(f.terms().map(|(l, c)| (l.parts().to_vec(), c)).collect())
    }

    /// Chromatic polynomial coefficients, constant term first.
    fn chromatic_polynomial(&self) -> PyResult<Vec<i64>> {
        Ok(symfun::chromatic_polynomial(&self.inner)
            .map_err(to_py)?
            .coefficients()
            .to_vec())
    }

    fn zeta_alpha(&self, composition: Vec<usize>) -> PyResult<i64> {
        let alpha = Composition::new(composition).map_err(to_py)?;
        hopf::zeta_alpha(&self.inner, &alpha).map_err(to_py)
    }

    #[pyo3(signature = (method = "deletion-contraction"))]
    fn zeta_inverse(&self, method: &str) -> PyResult<i64> {
        let method: ZetaInverseMethod = method.parse().map_err(to_py)?;
        hopf::zeta_inverse(&self.inner, method).map_err(to_py)
    }

    fn euler_character(&self) -> PyResult<i64> {
        hopf::euler_character(&self.inner).map_err(to_py)
    }

    /// Antipode as a list of `(coefficient, Hypergraph)`.
    #[pyo3(signature = (method = "takeuchi"))]
    fn antipode(&self, method: &str) -> PyResult<Vec<(i64, PyHypergraph)>> {
        let method: AntipodeMethod = method.parse().map_err(to_py)?;
        let s = hopf::antipode(&self.inner, method).map_err(to_py)?;
        Ok(s.terms()
            .map(|(t, c)| (c, t[0].to_hypergraph().into()))
            .collect())
    }

    /// Coproduct as a list of `(coefficient, left, right)`.
    fn coproduct(&self) -> PyResult<Vec<(i64, PyHypergraph, PyHypergraph)>> {
        let d = hopf::coproduct(&self.inner).map_err(to_py)?;
        Ok(d.terms()
            .map(|(t, c)| (c, t[0].to_hypergraph().into(), t[1].to_hypergraph().into()))
            .collect())
    }

    /// `(eulerian, witness subset or None)`.
    fn is_eulerian(&self) -> PyResult<(bool, Option<Vec<usize>>)> {
        let v = euler::is_eulerian(&self.inner).map_err(to_py)?;
        Ok((v.holds(), v.witness.map(|w| w.subset.to_vec())))
    }

    fn satisfies_relation5(&self) -> PyResult<bool> {
        Ok(euler::check_relation5(&self.inner).map_err(to_py)?.holds())
    }

    fn in_odd_subalgebra(&self) -> PyResult<bool> {
        Ok(euler::in_odd_subalgebra(&self.inner).map_err(to_py)?.holds())
    }

    /// Full classification report of the clutter as a dict.
    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let report = euler::classify(&clutter_of(&self.inner)?).map_err(to_py)?;
        to_python(py, &report)
    }

    fn nerve(&self) -> PyResult<PyComplex> {
        Ok(complexes::nerve(&clutter_of(&self.inner)?).map_err(to_py)?.into())
    }

    fn independence_complex(&self) -> PyResult<PyComplex> {
        Ok(complexes::independence_complex(&clutter_of(&self.inner)?)
            .map_err(to_py)?
            .into())
    }

    /// `(chordal, chordless cycle or None)` for the intersection graph.
    fn intersection_graph_chordal(&self) -> PyResult<(bool, Option<Vec<usize>>)> {
        let v = complexes::intersection_graph(&clutter_of(&self.inner)?).is_chordal();
        Ok((v.holds(), v.witness))
    }
}

/// A simplicial complex on `0..n` given by its facets.
#[pyclass(name = "SimplicialComplex", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyComplex {
    inner: SimplicialComplex,
}

impl From<SimplicialComplex> for PyComplex {
    fn from(inner: SimplicialComplex) -> Self {
        PyComplex { inner }
    }
}

#[pymethods]
impl PyComplex {
    #[new]
    fn new(vertices: usize, facets: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(SimplicialComplex::from_lists(vertices, facets).map_err(to_py)?.into())
    }

    #[staticmethod]
    fn simplex(n: usize) -> Self {
        SimplicialComplex::simplex(n).into()
    }

    #[staticmethod]
    fn simplex_boundary(n: usize) -> PyResult<Self> {
        Ok(SimplicialComplex::simplex_boundary(n).map_err(to_py)?.into())
    }

    #[getter]
    fn vertices(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn facets(&self) -> Vec<Vec<usize>> {
        self.inner.facets().iter().map(|f| f.to_vec()).collect()
    }

    fn __repr__(&self) -> String {
        format!("SimplicialComplex({}, {:?})", self.vertices(), self.facets())
    }

    fn is_face(&self, face: Vec<usize>) -> PyResult<bool> {
        let s = VertexSet::from_members(face, self.inner.vertex_count()).map_err(to_py)?;
        Ok(self.inner.is_face(s))
    }

    fn join(&self, other: &PyComplex) -> PyResult<Self> {
        Ok(self.inner.join(&other.inner).map_err(to_py)?.into())
    }

    fn restrict(&self, subset: Vec<usize>) -> PyResult<Self> {
        let s = VertexSet::from_members(subset, self.inner.vertex_count()).map_err(to_py)?;
        Ok(self.inner.restrict(s).map_err(to_py)?.into())
    }

    fn minimal_nonfaces(&self) -> PyResult<PyHypergraph> {
        Ok(complexes::nonface_hypergraph(&self.inner).map_err(to_py)?.into())
    }

    fn partition_polynomial(&self) -> PyResult<Vec<i64>> {
        Ok(complexes::partition_polynomial(&self.inner)
            .map_err(to_py)?
            .coefficients()
            .to_vec())
    }

    fn euler_character(&self) -> PyResult<i64> {
        complexes::euler_char_complex(&self.inner).map_err(to_py)
    }

    fn is_eulerian(&self) -> PyResult<(bool, Option<Vec<usize>>)> {
        let v = complexes::is_eulerian_complex(&self.inner).map_err(to_py)?;
        Ok((v.holds(), v.witness.map(VertexSet::to_vec)))
    }

    fn is_flag(&self) -> PyResult<(bool, Option<Vec<usize>>)> {
        let v = complexes::is_flag(&self.inner).map_err(to_py)?;
        Ok((v.holds(), v.witness.map(VertexSet::to_vec)))
    }
}

/// Parses an instance in the JSON file format.
#[pyfunction]
#[pyo3(signature = (text, kind = None, one_based = false))]
fn parse_instance(py: Python<'_>, text: &str, kind: Option<&str>, one_based: bool) -> PyResult<Py<PyAny>> {
    let kind = kind.map(str::parse).transpose().map_err(to_py)?;
    Ok(match records::parse_instance(text, kind, one_based).map_err(to_py)? {
        records::Instance::Hypergraph(h) => Py::new(py, PyHypergraph::from(h))?.into_any(),
        records::Instance::Clutter(c) => Py::new(py, PyHypergraph::from(c.into_hypergraph()))?.into_any(),
        records::Instance::Complex(k) => Py::new(py, PyComplex::from(k))?.into_any(),
    })
}

type TransitionRows = (Vec<Vec<usize>>, Vec<Vec<i64>>);

/// Matrix of `Ψ(D_λ)` in the power-sum basis: `(partitions, rows)`.
#[pyfunction]
fn transition_matrix(n: usize) -> PyResult<TransitionRows> {
    let m = symfun::transition_matrix(n).map_err(to_py)?;
    Ok((
        m.partitions.iter().map(|p| p.parts().to_vec()).collect(),
        m.entries,
    ))
}

/// Runs the implication checker over every clutter class on at most
/// `max_vertices` vertices and returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (max_vertices, checks = None))]
fn enumerate<'py>(py: Python<'py>, max_vertices: usize, checks: Option<Vec<String>>) -> PyResult<Bound<'py, PyAny>> {
    let checks: Vec<Check> = match checks {
        None => Check::ALL.to_vec(),
        Some(names) => names
            .iter()
            .map(|c| c.parse())
            .collect::<Result<_, _>>()
            .map_err(to_py)?,
    };
    let report = py.detach(|| verify::enumerate(max_vertices, &checks)).map_err(to_py)?;
    to_python(py, &report)
}

#[pymodule]
fn hyperhopf(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHypergraph>()?;
    m.add_class::<PyComplex>()?;
    m.add_function(wrap_pyfunction!(parse_instance, m)?)?;
    m.add_function(wrap_pyfunction!(transition_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    Ok(())
}
