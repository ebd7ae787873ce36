//! Python bindings for `simcent`.

use std::collections::BTreeMap;

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use simcent::centrality::{self as cent, AverageKind, AverageScope, DegreeCentrality};
use simcent::{adjacency, io, oracle, spectral, walks};
use simcent::{ClosenessVariant, DegreeQuery, GeneratorConfig, Model, NearnessGraph, WalkScope, WalkSemantics};

create_exception!(pysimcent, SimcentError, PyException);

/// `(value, exact, flags)` for one simplex.
type Row = (f64, Option<String>, Vec<String>);
/// Quantity name to `(checked, mismatches)`.
type OracleTable = BTreeMap<String, (usize, usize)>;

fn err(e: simcent::Error) -> PyErr {
    SimcentError::new_err(format!("{}: {e}", e.kind()))
}

fn bad(msg: impl Into<String>) -> PyErr {
    SimcentError::new_err(format!("argument: {}", msg.into()))
}

fn need(v: Option<usize>, name: &str) -> PyResult<usize> {
    v.ok_or_else(|| bad(format!("{name} is required")))
}

fn semantics(name: &str) -> PyResult<WalkSemantics> {
    match name {
        "at-least" | "at_least" => Ok(WalkSemantics::AtLeast),
        "exact" => Ok(WalkSemantics::Exact),
        other => Err(bad(format!("unknown semantics {other:?}"))),
    }
}

fn scope(name: &str) -> PyResult<WalkScope> {
    match name {
        "level" => Ok(WalkScope::Level),
        "same-dimension" | "same_dimension" => Ok(WalkScope::SameDimension),
        other => Err(bad(format!("unknown scope {other:?}"))),
    }
}

/// A finite abstract simplicial complex.
#[pyclass(frozen)]
struct Complex {
    inner: simcent::Complex,
}

#[pymethods]
impl Complex {
    /// Downward closure of a list of simplices given as vertex labels.
    #[new]
    fn new(facets: Vec<Vec<String>>) -> PyResult<Self> {
        simcent::Complex::from_label_sets(&facets).map(|inner| Complex { inner }).map_err(err)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        io::parse_complex_file(text).map(|inner| Complex { inner }).map_err(err)
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| SimcentError::new_err(format!("io: {path}: {e}")))?;
        Self::parse(&text)
    }

    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        simcent::fixtures::by_name(name).map(|inner| Complex { inner }).ok_or_else(|| bad(format!("unknown fixture {name:?}")))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn f_vector(&self) -> Vec<usize> {
        self.inner.f_vector()
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.vertex_table().labels().to_vec()
    }

    #[getter]
    fn facets(&self) -> Vec<Vec<String>> {
        self.inner.facet_labels()
    }

    #[getter]
    fn digest(&self) -> String {
        io::complex_digest(&self.inner)
    }

    /// Labels of the `q`-simplices in basis order.
    fn simplices(&self, q: usize) -> Vec<Vec<String>> {
        self.inner.layer(q).iter().map(|s| self.inner.labels_of(s)).collect()
    }

    fn emit(&self) -> String {
        io::emit_complex(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Complex(dim={}, f_vector={:?})", self.inner.dim(), self.inner.f_vector())
    }
}

/// Degree of every `q`-simplex, keyed by its joined label.
#[pyfunction]
#[pyo3(signature = (complex, q, kind, p=None, h=None, strict=false))]
fn degrees(complex: &Complex, q: usize, kind: &str, p: Option<usize>, h: Option<isize>, strict: bool) -> PyResult<BTreeMap<String, i64>> {
    let step = || match h {
        Some(h) if h >= 1 => Ok(h as usize),
        _ => Err(bad("h >= 1 is required")),
    };
    let query = match kind {
        "lower" | "strict-lower" => {
            let strict = kind == "strict-lower";
            let p = need(p, "p")?;
            match h {
                Some(h) => DegreeQuery::LowerStep { h, p, strict },
                None => DegreeQuery::Lower { p, strict },
            }
        }
        "upper" | "strict-upper" => {
            let strict = kind == "strict-upper";
            match (h, p) {
                (Some(_), _) => DegreeQuery::UpperStep { h: step()?, strict },
                (None, Some(p)) => DegreeQuery::Upper { p, strict },
                (None, None) => return Err(bad("upper degrees need p or h")),
            }
        }
        "adjacency" => DegreeQuery::Adjacency { p: need(p, "p")?, maximal: false },
        "maximal-adjacency" => DegreeQuery::Adjacency { p: need(p, "p")?, maximal: true },
        "two-param" => DegreeQuery::TwoParam { p1: q + step()?, p2: need(p, "p")?, strict_upper: strict },
        "maximal" => DegreeQuery::MaximalSimplicial,
        other => return Err(bad(format!("unknown degree kind {other:?}"))),
    };
    let c = &complex.inner;
    let report = adjacency::degree_report(c, q, query).map_err(err)?;
    Ok(report.values.iter().map(|(s, d)| (c.label(s), *d)).collect())
}

/// `(q,h,h')`-Laplacian as a list of integer rows over the `q`-simplices.
#[pyfunction]
#[pyo3(signature = (complex, q, h, hp, part="total"))]
fn laplacian(complex: &Complex, q: usize, h: usize, hp: usize, part: &str) -> PyResult<Vec<Vec<i64>>> {
    let b = spectral::laplacian(&complex.inner, q, h, hp).map_err(err)?;
    let m = match part {
        "up" => &b.up,
        "down" => &b.down,
        "total" => &b.total,
        other => return Err(bad(format!("unknown part {other:?}"))),
    };
    Ok(m.row_iter().map(|r| r.iter().copied().collect()).collect())
}

/// Centrality of every `q`-simplex: label -> (value, exact or None, flags).
#[pyfunction]
#[pyo3(signature = (complex, measure, q, p=None, h=None, variant=None, semantics="at-least", scope="level"))]
#[allow(clippy::too_many_arguments)]
fn centrality(
    complex: &Complex,
    measure: &str,
    q: usize,
    p: Option<usize>,
    h: Option<usize>,
    variant: Option<&str>,
    semantics: &str,
    scope: &str,
) -> PyResult<BTreeMap<String, Row>> {
    let c = &complex.inner;
    let sem = self::semantics(semantics)?;
    let scope = self::scope(scope)?;
    let report = match measure {
        "degree" => {
            let kind = match variant.unwrap_or("maximal") {
                "upper" => DegreeCentrality::Upper { h: need(h, "h")?, strict: false },
                "strict-upper" => DegreeCentrality::Upper { h: need(h, "h")?, strict: true },
                "adjacency" => DegreeCentrality::Adjacency { p: need(p, "p")?, maximal: false },
                "maximal-adjacency" => DegreeCentrality::Adjacency { p: need(p, "p")?, maximal: true },
                "maximal" => DegreeCentrality::MaximalSimplicial,
                other => return Err(bad(format!("unknown degree variant {other:?}"))),
            };
            cent::degree_centrality_report(c, q, kind)
        }
        "eigenvector" => cent::eigenvector_centrality(c, q, need(p, "p")?),
        "closeness" => {
            let v = match variant.unwrap_or("harmonic") {
                "harmonic" => ClosenessVariant::Harmonic,
                "reciprocal-sum" => ClosenessVariant::ReciprocalSum,
                other => return Err(bad(format!("unknown closeness variant {other:?}"))),
            };
            cent::closeness_report(c, q, need(p, "p")?, sem, v, scope)
        }
        "betweenness" => cent::betweenness_report(c, q, need(p, "p")?, sem, scope),
        "clustering" => cent::clustering_report(c, q),
        other => return Err(bad(format!("unknown measure {other:?}"))),
    }
    .map_err(err)?;
    Ok(report
        .values
        .iter()
        .map(|e| {
            let flags = e.flags.iter().map(|f| f.name().to_string()).collect();
            (c.label(&e.simplex), (e.value.to_f64(), e.value.exact_string(), flags))
        })
        .collect())
}

/// Normalised average degree as an exact `p/q` string.
#[pyfunction]
#[pyo3(signature = (complex, kind="maximal", q=None))]
fn average_degree(complex: &Complex, kind: &str, q: Option<usize>) -> PyResult<String> {
    let kind = match kind {
        "strict-upper" => AverageKind::StrictUpper,
        "maximal-adjacency" => AverageKind::MaximalAdjacency,
        "maximal" => AverageKind::Maximal,
        other => return Err(bad(format!("unknown average kind {other:?}"))),
    };
    let scope = q.map_or(AverageScope::Whole, AverageScope::Dimension);
    Ok(cent::average_degree(&complex.inner, scope, kind).map_err(err)?.value.to_string())
}

/// Maximal `p`-connected components as lists of simplex labels.
#[pyfunction]
#[pyo3(signature = (complex, p, semantics="at-least"))]
fn components(complex: &Complex, p: usize, semantics: &str) -> PyResult<Vec<Vec<String>>> {
    let c = &complex.inner;
    let g = NearnessGraph::new(c);
    let part = walks::components(&g, p, self::semantics(semantics)?);
    Ok(part.classes.iter().map(|cl| cl.iter().map(|s| c.label(s)).collect()).collect())
}

/// `Q*_p` for `p = 0 ..= dim K`.
#[pyfunction]
#[pyo3(signature = (complex, semantics="at-least"))]
fn q_star(complex: &Complex, semantics: &str) -> PyResult<Vec<usize>> {
    Ok(walks::q_star_vector(&NearnessGraph::new(&complex.inner), self::semantics(semantics)?))
}

/// Differential check against brute force: quantity -> (checked, mismatches).
#[pyfunction]
#[pyo3(signature = (complex, seed=0))]
fn check_oracle(complex: &Complex, seed: u64) -> PyResult<(bool, OracleTable)> {
    let r = oracle::diff_all(&complex.inner, seed).map_err(err)?;
    let table = r.diffs.iter().map(|d| (d.quantity.clone(), (d.checked, d.mismatches.len()))).collect();
    Ok((r.is_clean(), table))
}

/// Seeded random complex from the pure or flag model.
#[pyfunction]
#[pyo3(signature = (model, n, prob, seed, dim=2))]
fn generate(model: &str, n: usize, prob: f64, seed: u64, dim: usize) -> PyResult<Complex> {
    let model = match model {
        "pure" => Model::Pure { dim, prob },
        "flag" => Model::Flag { prob },
        other => return Err(bad(format!("unknown model {other:?}"))),
    };
    io::generate_complex(&GeneratorConfig { model, n, seed }).map(|inner| Complex { inner }).map_err(err)
}

#[pymodule]
fn pysimcent(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Complex>()?;
    m.add("SimcentError", m.py().get_type::<SimcentError>())?;
    m.add_function(wrap_pyfunction!(degrees, m)?)?;
    m.add_function(wrap_pyfunction!(laplacian, m)?)?;
    m.add_function(wrap_pyfunction!(centrality, m)?)?;
    m.add_function(wrap_pyfunction!(average_degree, m)?)?;
    m.add_function(wrap_pyfunction!(components, m)?)?;
    m.add_function(wrap_pyfunction!(q_star, m)?)?;
    m.add_function(wrap_pyfunction!(check_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    Ok(())
}
