//! Python bindings for `tsbalance`.
//!
//! Probabilities cross the boundary as exact `"num/den"` strings, rationals
//! come back the same way, and structured reports are returned as JSON
//! text with sorted keys.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use tsbalance::exact::{format_rational, parse_probability};
use tsbalance::graph::builtin::builtin;
use tsbalance::graph::io::{emit_graph6_string, parse_edge_list, parse_graph6};
use tsbalance::graph::{apsp, is_distance_balanced, is_nicely_distance_balanced};
use tsbalance::report::{AnalysisReport, BalancingSummary, ReportOptions};
use tsbalance::symmetry::{analyze_graph, automorphism_orbits};
use tsbalance::ts::TsProfile;
use tsbalance::walk::rho as rho_walk;
use tsbalance::wreath::{check_wreath_balance, wreath_product};
use tsbalance::{Error, Guards, VisitSet};

create_exception!(pytsbalance, TsbError, PyException, "Base error for tsbalance.");
create_exception!(pytsbalance, GuardError, TsbError, "A size guard was exceeded.");
create_exception!(pytsbalance, DisconnectedError, TsbError, "The graph is disconnected.");

fn py_err(e: Error) -> PyErr {
    match e {
        Error::GuardExceeded { .. } => GuardError::new_err(e.to_string()),
        Error::Disconnected(..) => DisconnectedError::new_err(e.to_string()),
        _ => TsbError::new_err(e.to_string()),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("value serializes");
    serde_json::to_string(&v).expect("json serializes")
}

fn guards(max_n: Option<usize>, max_product: Option<usize>) -> Guards {
    let d = Guards::default();
    Guards {
        max_order: max_n.unwrap_or(d.max_order),
        max_product: max_product.unwrap_or(d.max_product),
    }
}

/// A simple undirected graph on vertices `0..order`.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: tsbalance::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(order: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = tsbalance::Graph::from_edges(order, edges).map_err(py_err)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        let inner = parse_graph6(text.trim().as_bytes()).map_err(py_err)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: parse_edge_list(text).map_err(py_err)? })
    }

    /// Named graph such as `builtin("wheel", [7])` or `builtin("h9")`.
    #[staticmethod]
    #[pyo3(signature = (name, params = Vec::new()))]
    fn builtin(name: &str, params: Vec<usize>) -> PyResult<Self> {
        Ok(PyGraph { inner: builtin(name, &params).map_err(py_err)? })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, u: usize) -> PyResult<Vec<usize>> {
        self.inner.check_vertex(u).map_err(py_err)?;
        Ok(self.inner.neighbors(u).to_vec())
    }

    fn graph6(&self) -> String {
        emit_graph6_string(&self.inner)
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn __repr__(&self) -> String {
        format!("Graph(order={}, size={})", self.inner.order(), self.inner.size())
    }
}

/// Shortest walk length from `u` to `v` visiting every vertex of `visit`.
#[pyfunction]
#[pyo3(signature = (g, visit, u, v, max_n = None))]
fn rho(g: &PyGraph, visit: Vec<usize>, u: usize, v: usize, max_n: Option<usize>) -> PyResult<u32> {
    let d = apsp(&g.inner).map_err(py_err)?;
    let a = VisitSet::new(g.inner.order(), visit).map_err(py_err)?;
    rho_walk(&d, &a, u, v, &guards(max_n, None)).map_err(py_err)
}

fn profile(g: &PyGraph, max_n: Option<usize>) -> PyResult<TsProfile> {
    let d = apsp(&g.inner).map_err(py_err)?;
    TsProfile::compute(&g.inner, &d, &guards(max_n, None)).map_err(py_err)
}

/// Total distance vectors `(W_0, ..., W_n)` of every vertex.
#[pyfunction]
#[pyo3(signature = (g, max_n = None))]
fn total_distance_vectors(g: &PyGraph, max_n: Option<usize>) -> PyResult<Vec<Vec<u64>>> {
    Ok(profile(g, max_n)?.vectors().iter().map(|w| w.0.clone()).collect())
}

/// Exact `d^p(u)` for every vertex, as `"num/den"` strings.
#[pyfunction]
#[pyo3(signature = (g, p, max_n = None))]
fn expected_distances(g: &PyGraph, p: &str, max_n: Option<usize>) -> PyResult<Vec<String>> {
    let p = parse_probability(p).map_err(py_err)?;
    let prof = profile(g, max_n)?;
    (0..g.inner.order())
        .map(|u| prof.expected_distance(u, &p).map(|x| format_rational(&x)).map_err(py_err))
        .collect()
}

#[pyfunction]
fn distance_balanced(g: &PyGraph) -> PyResult<bool> {
    let d = apsp(&g.inner).map_err(py_err)?;
    Ok(is_distance_balanced(&g.inner, &d))
}

#[pyfunction]
fn nicely_distance_balanced(g: &PyGraph) -> PyResult<bool> {
    let d = apsp(&g.inner).map_err(py_err)?;
    Ok(is_nicely_distance_balanced(&g.inner, &d))
}

#[pyfunction]
#[pyo3(signature = (g, p, max_n = None))]
fn pts_distance_balanced(g: &PyGraph, p: &str, max_n: Option<usize>) -> PyResult<bool> {
    let p = parse_probability(p).map_err(py_err)?;
    profile(g, max_n)?.is_pts_distance_balanced(&p).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (g, max_n = None))]
fn ts_distance_balanced(g: &PyGraph, max_n: Option<usize>) -> PyResult<bool> {
    Ok(profile(g, max_n)?.is_ts_distance_balanced())
}

/// The set of `p` at which `g` is pTS-distance-balanced, as JSON.
#[pyfunction]
#[pyo3(signature = (g, max_n = None))]
fn balancing_probabilities(g: &PyGraph, max_n: Option<usize>) -> PyResult<String> {
    let set = profile(g, max_n)?.balancing_probabilities(&g.inner);
    Ok(to_json(&BalancingSummary::from_set(&set)))
}

#[pyfunction]
#[pyo3(signature = (g, max_n = None))]
fn orbits(g: &PyGraph, max_n: Option<usize>) -> PyResult<Vec<Vec<usize>>> {
    let d = apsp(&g.inner).map_err(py_err)?;
    let part = automorphism_orbits(&g.inner, &d, &guards(max_n, None)).map_err(py_err)?;
    Ok(part.classes().to_vec())
}

/// The wreath product of `g` (base) and `h` (colors).
#[pyfunction]
#[pyo3(signature = (g, h, max_product = None))]
fn wreath(g: &PyGraph, h: &PyGraph, max_product: Option<usize>) -> PyResult<PyGraph> {
    let (inner, _) = wreath_product(&g.inner, &h.inner, &guards(None, max_product)).map_err(py_err)?;
    Ok(PyGraph { inner })
}

/// Both sides of the wreath product balance criterion, as JSON.
#[pyfunction]
#[pyo3(signature = (g, h, max_n = None, max_product = None))]
fn wreath_check(g: &PyGraph, h: &PyGraph, max_n: Option<usize>, max_product: Option<usize>) -> PyResult<String> {
    let check = check_wreath_balance(&g.inner, &h.inner, &guards(max_n, max_product)).map_err(py_err)?;
    Ok(to_json(&check))
}

/// Vertex pairs in distinct orbits with equal total distance vectors.
#[pyfunction]
#[pyo3(signature = (g, max_n = None))]
fn search(g: &PyGraph, max_n: Option<usize>) -> PyResult<String> {
    let hits = analyze_graph(&g.inner, &guards(max_n, None)).map_err(py_err)?;
    Ok(to_json(&hits))
}

/// The full analysis report, as JSON.
#[pyfunction]
#[pyo3(signature = (g, ts = true, p = None, max_n = None))]
fn report(g: &PyGraph, ts: bool, p: Option<&str>, max_n: Option<usize>) -> PyResult<String> {
    let p = p.map(parse_probability).transpose().map_err(py_err)?;
    let r = AnalysisReport::build(&g.inner, &guards(max_n, None), &ReportOptions { ts, p })
        .map_err(py_err)?;
    Ok(to_json(&r))
}

#[pymodule]
fn pytsbalance(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("TsbError", py.get_type::<TsbError>())?;
    m.add("GuardError", py.get_type::<GuardError>())?;
    m.add("DisconnectedError", py.get_type::<DisconnectedError>())?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(rho, m)?)?;
    m.add_function(wrap_pyfunction!(total_distance_vectors, m)?)?;
    m.add_function(wrap_pyfunction!(expected_distances, m)?)?;
    m.add_function(wrap_pyfunction!(distance_balanced, m)?)?;
    m.add_function(wrap_pyfunction!(nicely_distance_balanced, m)?)?;
    m.add_function(wrap_pyfunction!(pts_distance_balanced, m)?)?;
    m.add_function(wrap_pyfunction!(ts_distance_balanced, m)?)?;
    m.add_function(wrap_pyfunction!(balancing_probabilities, m)?)?;
    m.add_function(wrap_pyfunction!(orbits, m)?)?;
    m.add_function(wrap_pyfunction!(wreath, m)?)?;
    m.add_function(wrap_pyfunction!(wreath_check, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add_function(wrap_pyfunction!(report, m)?)?;
    Ok(())
}
