//! Python bindings: the graph type, the four modifications, the exact
//! solvers, certificate lifts and the audit checks, driven in-process.
//!
//! Usage from Python:
//!
//!     import coeven_py as cv
//!     g = cv.Graph.from_graph6("Bw")
//!     cv.coeven_domination_number(g).value      # 1
//!     t = cv.contract_edge(g, 0, 1)
//!     cv.coeven_domination_number(t.graph).value  # 2 — the upper window breaks

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::IntoPyObjectExt;

use coeven::{CheckKind, Edge, Element, LiftDirection, Relation};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_kind(op: &str) -> PyResult<CheckKind> {
    op.parse::<CheckKind>().map_err(value_err)
}

fn parse_relation(relation: &str) -> PyResult<Relation> {
    relation.parse::<Relation>().map_err(value_err)
}

fn parse_direction(direction: &str) -> PyResult<LiftDirection> {
    direction.parse::<LiftDirection>().map_err(value_err)
}

/// Immutable simple undirected graph on dense ids 0..n.
#[pyclass(name = "Graph", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGraph {
    inner: coeven::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: coeven::Graph::new(n, &edges).map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: coeven::parse_graph6(text).map_err(value_err)?,
        })
    }

    fn to_graph6(&self) -> PyResult<String> {
        coeven::emit_graph6(&self.inner).map_err(value_err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().iter().map(|e| e.endpoints()).collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        self.inner.has_edge(u, v).map_err(value_err)
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.inner.degree(v).map_err(value_err)
    }

    #[pyo3(signature = (v, closed=false))]
    fn neighborhood(&self, v: usize, closed: bool) -> PyResult<Vec<usize>> {
        self.inner.neighborhood(v, closed).map_err(value_err)
    }

    fn connected_components(&self) -> Vec<Vec<usize>> {
        self.inner.connected_components()
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.vertex_count()
    }
}

/// Optimum value plus one certificate and a search-size statistic.
#[pyclass(name = "DominationResult", frozen, get_all)]
struct PyDominationResult {
    value: usize,
    certificate: Vec<usize>,
    explored: u64,
}

impl From<coeven::DominationResult> for PyDominationResult {
    fn from(r: coeven::DominationResult) -> Self {
        PyDominationResult {
            value: r.value,
            certificate: r.certificate,
            explored: r.explored,
        }
    }
}

#[pymethods]
impl PyDominationResult {
    fn __repr__(&self) -> String {
        format!(
            "DominationResult(value={}, certificate={:?})",
            self.value, self.certificate
        )
    }
}

/// A transformed graph with the old-id -> new-id mapping.
#[pyclass(name = "TransformOutcome", frozen, get_all)]
struct PyTransformOutcome {
    graph: PyGraph,
    mapping: Vec<Option<usize>>,
    merged_into: Option<usize>,
}

impl From<coeven::TransformResult> for PyTransformOutcome {
    fn from(t: coeven::TransformResult) -> Self {
        PyTransformOutcome {
            graph: PyGraph { inner: t.graph },
            mapping: t.mapping,
            merged_into: t.merged_into,
        }
    }
}

/// A lifted candidate certificate with its verdicts.
#[pyclass(name = "CandidateCert", frozen, get_all)]
struct PyCandidateCert {
    vertex_set: Vec<usize>,
    valid: bool,
    claimed_bound: i64,
    within_bound: bool,
    proof_case: String,
}

impl From<coeven::CandidateCert> for PyCandidateCert {
    fn from(c: coeven::CandidateCert) -> Self {
        let case = match c.proof_case {
            coeven::LiftCase::I => "i",
            coeven::LiftCase::Ii => "ii",
            coeven::LiftCase::Iii => "iii",
            coeven::LiftCase::Backward => "backward",
        };
        PyCandidateCert {
            vertex_set: c.vertex_set,
            valid: c.valid,
            claimed_bound: c.claimed_bound,
            within_bound: c.within_bound,
            proof_case: case.to_string(),
        }
    }
}

/// One evaluated window on one (graph, element) instance.
#[pyclass(name = "BoundCheck", frozen)]
struct PyBoundCheck {
    check: coeven::BoundCheck,
}

#[pymethods]
impl PyBoundCheck {
    #[getter]
    fn operation(&self) -> String {
        self.check.operation.tag().to_string()
    }

    /// The vertex id, the edge as a pair, or None for additivity.
    #[getter]
    fn element(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        match self.check.element {
            None => Ok(py.None()),
            Some(Element::Vertex(v)) => v.into_py_any(py),
            Some(Element::Edge(e)) => e.endpoints().into_py_any(py),
        }
    }

    #[getter]
    fn base_value(&self) -> usize {
        self.check.base_value
    }

    #[getter]
    fn transformed_value(&self) -> Option<usize> {
        self.check.transformed_value
    }

    #[getter]
    fn removal_value(&self) -> Option<usize> {
        self.check.removal_value
    }

    #[getter]
    fn contraction_value(&self) -> Option<usize> {
        self.check.contraction_value
    }

    #[getter]
    fn degree(&self) -> Option<usize> {
        self.check.degree
    }

    /// Window ends as exact halves (floats are exact for .5 values).
    #[getter]
    fn lower(&self) -> f64 {
        self.check.lower.twice() as f64 / 2.0
    }

    #[getter]
    fn upper(&self) -> f64 {
        self.check.upper.twice() as f64 / 2.0
    }

    #[getter]
    fn holds_lower(&self) -> bool {
        self.check.holds_lower
    }

    #[getter]
    fn holds_upper(&self) -> bool {
        self.check.holds_upper
    }

    fn holds(&self) -> bool {
        self.check.holds()
    }

    fn __repr__(&self) -> String {
        format!(
            "BoundCheck({}, base={}, window=[{}, {}], holds={})",
            self.check.operation,
            self.check.base_value,
            self.check.lower,
            self.check.upper,
            self.check.holds()
        )
    }
}

/// A (graph, element, relation) hit from a witness search or violation sweep.
#[pyclass(name = "WitnessRecord", frozen)]
struct PyWitnessRecord {
    record: coeven::WitnessRecord,
}

#[pymethods]
impl PyWitnessRecord {
    /// graph6 encoding of the unmodified graph.
    #[getter]
    fn graph(&self) -> String {
        self.record.graph.clone()
    }

    #[getter]
    fn relation(&self) -> String {
        self.record.relation.to_string()
    }

    #[getter]
    fn check(&self) -> PyBoundCheck {
        PyBoundCheck {
            check: self.record.check.clone(),
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "WitnessRecord({}, {}, {})",
            self.record.graph, self.record.relation, self.record.check.operation
        )
    }
}

/// Streaming iterator over all labeled graphs on `n` vertices.
#[pyclass(name = "LabeledGraphs")]
struct PyLabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

#[pymethods]
impl PyLabeledGraphs {
    fn __iter__(slf: PyRef<'_, Self>) -> PyRef<'_, Self> {
        slf
    }

    fn __next__(&mut self) -> Option<PyGraph> {
        if self.next >= self.end {
            return None;
        }
        let g = coeven::Graph::from_upper_triangle_mask(self.n, self.next).expect("n is small");
        self.next += 1;
        Some(PyGraph { inner: g })
    }

    fn __len__(&self) -> usize {
        (self.end - self.next) as usize
    }
}

#[pyfunction]
fn forced_vertices(g: &PyGraph) -> Vec<usize> {
    coeven::forced_vertices(&g.inner)
}

#[pyfunction]
fn is_dominating_set(g: &PyGraph, set: Vec<usize>) -> PyResult<bool> {
    coeven::is_dominating_set(&g.inner, &set).map_err(value_err)
}

#[pyfunction]
fn is_coeven_dominating_set(g: &PyGraph, set: Vec<usize>) -> PyResult<bool> {
    coeven::is_coeven_dominating_set(&g.inner, &set).map_err(value_err)
}

#[pyfunction]
fn domination_number(g: &PyGraph) -> PyDominationResult {
    coeven::domination_number(&g.inner).into()
}

#[pyfunction]
fn coeven_domination_number(g: &PyGraph) -> PyDominationResult {
    coeven::coeven_domination_number(&g.inner).into()
}

#[pyfunction]
#[pyo3(signature = (g, cap=coeven::DEFAULT_SOLVER_CAP))]
fn coeven_brute_force(g: &PyGraph, cap: usize) -> PyResult<PyDominationResult> {
    Ok(coeven::coeven_brute_force(&g.inner, cap)
        .map_err(value_err)?
        .into())
}

#[pyfunction]
fn remove_vertex(g: &PyGraph, v: usize) -> PyResult<PyTransformOutcome> {
    Ok(coeven::remove_vertex(&g.inner, v).map_err(value_err)?.into())
}

#[pyfunction]
fn remove_edge(g: &PyGraph, u: usize, v: usize) -> PyResult<PyTransformOutcome> {
    let e = Edge::new(u, v).map_err(value_err)?;
    Ok(coeven::remove_edge(&g.inner, e).map_err(value_err)?.into())
}

#[pyfunction]
fn contract_vertex(g: &PyGraph, v: usize) -> PyResult<PyTransformOutcome> {
    Ok(coeven::contract_vertex(&g.inner, v).map_err(value_err)?.into())
}

#[pyfunction]
fn contract_edge(g: &PyGraph, u: usize, v: usize) -> PyResult<PyTransformOutcome> {
    let e = Edge::new(u, v).map_err(value_err)?;
    Ok(coeven::contract_edge(&g.inner, e).map_err(value_err)?.into())
}

#[pyfunction]
#[pyo3(signature = (g, v, certificate, direction="forward"))]
fn vertex_removal_lift(
    g: &PyGraph,
    v: usize,
    certificate: Vec<usize>,
    direction: &str,
) -> PyResult<PyCandidateCert> {
    let dir = parse_direction(direction)?;
    Ok(coeven::vertex_removal_lift(&g.inner, v, &certificate, dir)
        .map_err(value_err)?
        .into())
}

#[pyfunction]
#[pyo3(signature = (g, v, certificate, direction="forward"))]
fn vertex_contraction_lift(
    g: &PyGraph,
    v: usize,
    certificate: Vec<usize>,
    direction: &str,
) -> PyResult<PyCandidateCert> {
    let dir = parse_direction(direction)?;
    Ok(coeven::vertex_contraction_lift(&g.inner, v, &certificate, dir)
        .map_err(value_err)?
        .into())
}

#[pyfunction]
#[pyo3(signature = (g, u, v, certificate, direction="forward"))]
fn edge_removal_lift(
    g: &PyGraph,
    u: usize,
    v: usize,
    certificate: Vec<usize>,
    direction: &str,
) -> PyResult<PyCandidateCert> {
    let e = Edge::new(u, v).map_err(value_err)?;
    let dir = parse_direction(direction)?;
    Ok(coeven::edge_removal_lift(&g.inner, e, &certificate, dir)
        .map_err(value_err)?
        .into())
}

#[pyfunction]
#[pyo3(signature = (g, u, v, certificate, direction="forward"))]
fn edge_contraction_lift(
    g: &PyGraph,
    u: usize,
    v: usize,
    certificate: Vec<usize>,
    direction: &str,
) -> PyResult<PyCandidateCert> {
    let e = Edge::new(u, v).map_err(value_err)?;
    let dir = parse_direction(direction)?;
    Ok(coeven::edge_contraction_lift(&g.inner, e, &certificate, dir)
        .map_err(value_err)?
        .into())
}

#[pyfunction]
#[pyo3(signature = (g, op, vertex=None, edge=None))]
fn check_operation_bounds(
    g: &PyGraph,
    op: &str,
    vertex: Option<usize>,
    edge: Option<(usize, usize)>,
) -> PyResult<PyBoundCheck> {
    let kind = parse_kind(op)?;
    let element = match (vertex, edge) {
        (Some(v), None) => Element::Vertex(v),
        (None, Some((u, v))) => Element::Edge(Edge::new(u, v).map_err(value_err)?),
        (None, None) if kind == CheckKind::Additivity => Element::Vertex(0),
        _ => return Err(PyValueError::new_err("pass exactly one of vertex= or edge=")),
    };
    Ok(PyBoundCheck {
        check: coeven::check_operation_bounds(&g.inner, element, kind).map_err(value_err)?,
    })
}

#[pyfunction]
fn check_additivity(g: &PyGraph) -> PyBoundCheck {
    PyBoundCheck {
        check: coeven::check_additivity(&g.inner),
    }
}

#[pyfunction]
#[pyo3(signature = (g, cap=coeven::DEFAULT_SOLVER_CAP))]
fn audit_graph(g: &PyGraph, cap: usize) -> PyResult<Vec<PyBoundCheck>> {
    Ok(coeven::audit_graph(&g.inner, cap)
        .map_err(value_err)?
        .into_iter()
        .map(|check| PyBoundCheck { check })
        .collect())
}

#[pyfunction]
fn graph_witnesses(g: &PyGraph, op: &str, relation: &str) -> PyResult<Vec<PyWitnessRecord>> {
    Ok(
        coeven::graph_witnesses(&g.inner, parse_kind(op)?, parse_relation(relation)?)
            .map_err(value_err)?
            .into_iter()
            .map(|record| PyWitnessRecord { record })
            .collect(),
    )
}

#[pyfunction]
#[pyo3(signature = (graphs, op, relation, limit=None))]
fn witness_search(
    graphs: Vec<PyGraph>,
    op: &str,
    relation: &str,
    limit: Option<usize>,
) -> PyResult<Vec<PyWitnessRecord>> {
    let stream = graphs.into_iter().map(|g| g.inner);
    Ok(
        coeven::witness_search(stream, parse_kind(op)?, parse_relation(relation)?, limit)
            .map_err(value_err)?
            .into_iter()
            .map(|record| PyWitnessRecord { record })
            .collect(),
    )
}

#[pyfunction]
fn enumerate_labeled(n: usize) -> PyResult<PyLabeledGraphs> {
    drop(coeven::enumerate_labeled(n).map_err(value_err)?); // range check only
    Ok(PyLabeledGraphs {
        n,
        next: 0,
        end: coeven::labeled_graph_count(n),
    })
}

#[pyfunction]
fn gnp(n: usize, p: f64, seed: u64) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: coeven::gnp(n, p, seed).map_err(value_err)?,
    })
}

#[pyfunction]
fn path(n: usize) -> PyGraph {
    PyGraph {
        inner: coeven::families::path(n),
    }
}

#[pyfunction]
fn cycle(n: usize) -> PyResult<PyGraph> {
    if n < 3 {
        return Err(PyValueError::new_err("a simple cycle needs at least 3 vertices"));
    }
    Ok(PyGraph {
        inner: coeven::families::cycle(n),
    })
}

#[pyfunction]
fn complete(n: usize) -> PyGraph {
    PyGraph {
        inner: coeven::families::complete(n),
    }
}

#[pyfunction]
fn star(leaves: usize) -> PyGraph {
    PyGraph {
        inner: coeven::families::star(leaves),
    }
}

#[pyfunction]
fn double_star(a: usize, b: usize) -> PyGraph {
    PyGraph {
        inner: coeven::families::double_star(a, b),
    }
}

#[pyfunction]
fn bridged_triangles() -> PyGraph {
    PyGraph {
        inner: coeven::families::bridged_triangles(),
    }
}

#[pyfunction]
fn vertex_removal_upper_witness() -> PyGraph {
    PyGraph {
        inner: coeven::families::vertex_removal_upper_witness(),
    }
}

#[pymodule]
fn coeven_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyDominationResult>()?;
    m.add_class::<PyTransformOutcome>()?;
    m.add_class::<PyCandidateCert>()?;
    m.add_class::<PyBoundCheck>()?;
    m.add_class::<PyWitnessRecord>()?;
    m.add_class::<PyLabeledGraphs>()?;
    m.add_function(wrap_pyfunction!(forced_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(is_dominating_set, m)?)?;
    m.add_function(wrap_pyfunction!(is_coeven_dominating_set, m)?)?;
    m.add_function(wrap_pyfunction!(domination_number, m)?)?;
    m.add_function(wrap_pyfunction!(coeven_domination_number, m)?)?;
    m.add_function(wrap_pyfunction!(coeven_brute_force, m)?)?;
    m.add_function(wrap_pyfunction!(remove_vertex, m)?)?;
    m.add_function(wrap_pyfunction!(remove_edge, m)?)?;
    m.add_function(wrap_pyfunction!(contract_vertex, m)?)?;
    m.add_function(wrap_pyfunction!(contract_edge, m)?)?;
    m.add_function(wrap_pyfunction!(vertex_removal_lift, m)?)?;
    m.add_function(wrap_pyfunction!(vertex_contraction_lift, m)?)?;
    m.add_function(wrap_pyfunction!(edge_removal_lift, m)?)?;
    m.add_function(wrap_pyfunction!(edge_contraction_lift, m)?)?;
    m.add_function(wrap_pyfunction!(check_operation_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(check_additivity, m)?)?;
    m.add_function(wrap_pyfunction!(audit_graph, m)?)?;
    m.add_function(wrap_pyfunction!(graph_witnesses, m)?)?;
    m.add_function(wrap_pyfunction!(witness_search, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_labeled, m)?)?;
    m.add_function(wrap_pyfunction!(gnp, m)?)?;
    m.add_function(wrap_pyfunction!(path, m)?)?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(complete, m)?)?;
    m.add_function(wrap_pyfunction!(star, m)?)?;
    m.add_function(wrap_pyfunction!(double_star, m)?)?;
    m.add_function(wrap_pyfunction!(bridged_triangles, m)?)?;
    m.add_function(wrap_pyfunction!(vertex_removal_upper_witness, m)?)?;
    Ok(())
}
