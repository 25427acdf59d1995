//! Python bindings: exposes labeled graphs and the main ideal-theoretic
//! operations (Groebner bases, initial ideals, dimension, Hilbert data,
//! regularity, verification suites) to Python.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use scrollbei_core::hilbert::reduced_series;
use scrollbei_core::report::graph_label;
use scrollbei_core::ring::render;
use scrollbei_core::suites::{self, run_suite, SuiteRequest};
use scrollbei_core::{
    buchberger, certify_cm, clique_intervals, is_groebner, predicted_minimal_primes,
    regularity_cm, scroll_edge_ideal, CmCertificate, LabeledGraph, MonomialOrder, PolyRing,
};

fn err(e: scrollbei_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A simple graph on vertices 1..=n with the labeling intrinsic.
#[pyclass(name = "Graph", from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: LabeledGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: LabeledGraph::from_edges(n, &edges).map_err(err)?,
        })
    }

    /// Parse the `n/e/cliques` text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: scrollbei_core::parse_graph(text).map_err(err)?,
        })
    }

    /// Union of interval cliques `[(a, b), ...]` on max(b) vertices.
    #[staticmethod]
    fn from_cliques(cliques: Vec<(usize, usize)>) -> PyResult<Self> {
        let n = cliques.iter().map(|&(_, b)| b).max().unwrap_or(1);
        Ok(PyGraph {
            inner: LabeledGraph::from_cliques(n, &cliques).map_err(err)?,
        })
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        PyGraph {
            inner: LabeledGraph::path(n),
        }
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        PyGraph {
            inner: LabeledGraph::complete(n),
        }
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.num_vertices()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn is_closed(&self) -> bool {
        self.inner.is_closed_labeling()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn connected_components(&self) -> Vec<Vec<usize>> {
        self.inner.connected_components()
    }

    fn maximal_cliques(&self) -> PyResult<Vec<Vec<usize>>> {
        self.inner.maximal_cliques().map_err(err)
    }

    /// Interval facets of a closed labeling, sorted by left endpoint.
    fn clique_intervals(&self) -> PyResult<Vec<(usize, usize)>> {
        Ok(clique_intervals(&self.inner)
            .map_err(err)?
            .intervals()
            .to_vec())
    }

    /// A permutation (old label -> new label) making the graph closed,
    /// or None.
    fn find_closed_labeling(&self) -> PyResult<Option<Vec<usize>>> {
        scrollbei_core::find_closed_labeling(&self.inner).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Graph({})", graph_label(&self.inner))
    }
}

/// Generators of the edge ideal (monic under graded revlex), as text.
#[pyfunction]
fn generators(g: &PyGraph) -> Vec<String> {
    let ring = PolyRing::for_vertices(g.inner.num_vertices());
    scroll_edge_ideal(&g.inner)
        .generators()
        .iter()
        .map(|p| render(p, &ring, MonomialOrder::GradedRevLex))
        .collect()
}

/// Reduced Groebner basis of the edge ideal under graded revlex.
#[pyfunction]
fn groebner_basis(g: &PyGraph) -> Vec<String> {
    let ring = PolyRing::for_vertices(g.inner.num_vertices());
    buchberger(&scroll_edge_ideal(&g.inner), MonomialOrder::GradedRevLex)
        .elements()
        .iter()
        .map(|p| render(p, &ring, MonomialOrder::GradedRevLex))
        .collect()
}

/// Whether the generators themselves already form a Groebner basis.
#[pyfunction]
fn generators_are_groebner(g: &PyGraph) -> bool {
    is_groebner(&scroll_edge_ideal(&g.inner), MonomialOrder::GradedRevLex)
}

/// Minimal generators of the revlex initial ideal, as monomial text.
#[pyfunction]
fn initial_ideal(g: &PyGraph) -> Vec<String> {
    suites::monomial_strings(suites::initial_of(&g.inner).min_gens())
}

/// Krull dimension of the quotient by the edge ideal.
#[pyfunction]
fn quotient_dim(g: &PyGraph) -> PyResult<usize> {
    suites::quotient_dim(&g.inner).map_err(err)
}

/// Reduced Hilbert series `(numerator coefficients, denominator exponent)`
/// with the series `P(t) / (1-t)^e`.
#[pyfunction]
fn hilbert_series(g: &PyGraph) -> PyResult<(Vec<i64>, usize)> {
    let series = reduced_series(&suites::initial_of(&g.inner)).map_err(err)?;
    Ok((
        series.numerator.coeffs().iter().map(|&c| c as i64).collect(),
        series.denominator_exponent,
    ))
}

/// Certified Castelnuovo-Mumford regularity of the quotient; raises when
/// the labeling is not closed or no Cohen-Macaulay certificate exists.
#[pyfunction]
fn regularity(g: &PyGraph) -> PyResult<usize> {
    regularity_cm(&g.inner).map_err(err)
}

/// Whether the blockwise Cohen-Macaulay certificate applies, plus the
/// regular sequence or the refusal reason.
#[pyfunction]
fn cm_certificate(g: &PyGraph) -> PyResult<(bool, Vec<String>, String)> {
    match certify_cm(&g.inner).map_err(err)? {
        CmCertificate::Certified { regular_vars } => Ok((
            true,
            regular_vars.iter().map(|v| format!("x{}", v + 1)).collect(),
            String::new(),
        )),
        CmCertificate::Unavailable { reason } => Ok((false, Vec::new(), reason)),
    }
}

/// Predicted minimal primes (connected closed labelings), rendered as
/// generator lists.
#[pyfunction]
fn minimal_primes(g: &PyGraph) -> PyResult<Vec<Vec<String>>> {
    let ring = PolyRing::for_vertices(g.inner.num_vertices());
    Ok(predicted_minimal_primes(&g.inner)
        .map_err(err)?
        .iter()
        .map(|p| {
            p.generators()
                .iter()
                .map(|f| render(f, &ring, MonomialOrder::GradedRevLex))
                .collect()
        })
        .collect())
}

/// Run a verification suite and return its JSON report.
#[pyfunction]
#[pyo3(signature = (name, max_n=None, field_primes=None))]
fn verify(name: &str, max_n: Option<usize>, field_primes: Option<Vec<u64>>) -> PyResult<String> {
    let req = SuiteRequest {
        max_n,
        field_primes: field_primes.unwrap_or_else(|| vec![3, 5]),
        workers: 1,
    };
    Ok(run_suite(name, &req).map_err(err)?.render_json())
}

#[pymodule]
fn scrollbei_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(generators, m)?)?;
    m.add_function(wrap_pyfunction!(groebner_basis, m)?)?;
    m.add_function(wrap_pyfunction!(generators_are_groebner, m)?)?;
    m.add_function(wrap_pyfunction!(initial_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(quotient_dim, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_series, m)?)?;
    m.add_function(wrap_pyfunction!(regularity, m)?)?;
    m.add_function(wrap_pyfunction!(cm_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_primes, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
