//! Complex files, report emission and random complex generation.

use std::collections::BTreeMap;

use petgraph::algo::maximal_cliques;
use petgraph::graph::UnGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::adjacency::DegreeReport;
use crate::centrality::CentralityReport;
use crate::complex::{combinations, Complex, Simplex};
use crate::error::{arg, Error, Result};
use crate::walks::{ComponentPartition, Distance};

/// Parses one simplex per line. Labels are separated by whitespace or
/// commas, `#` starts a comment, blank lines are skipped.
pub fn parse_complex_file(text: &str) -> Result<Complex> {
    let mut sets = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let labels: Vec<&str> = body.split(|ch: char| ch.is_whitespace() || ch == ',').filter(|t| !t.is_empty()).collect();
        if labels.is_empty() {
            if body.contains(',') {
                return Err(Error::Parse { line: i + 1, message: "separators without labels".into() });
            }
            continue;
        }
        sets.push(labels);
        lines.push(i + 1);
    }
    Complex::from_label_sets(&sets).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse { line: lines[line - 1], message },
        other => other,
    })
}

/// Facets only, one per line, in sorted order.
pub fn emit_complex(c: &Complex) -> String {
    c.facet_labels().iter().map(|f| f.join(" ") + "\n").collect()
}

/// SHA-256 of the emitted facet list.
pub fn complex_digest(c: &Complex) -> String {
    hex::encode(Sha256::digest(emit_complex(c).as_bytes()))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RowValue {
    Number(f64),
    Infinite,
}

impl RowValue {
    fn json(&self) -> serde_json::Value {
        match self {
            RowValue::Number(x) => serde_json::json!(x),
            RowValue::Infinite => serde_json::json!("inf"),
        }
    }

    fn text(&self) -> String {
        match self {
            RowValue::Number(x) => x.to_string(),
            RowValue::Infinite => "inf".into(),
        }
    }
}

impl From<Distance> for RowValue {
    fn from(d: Distance) -> Self {
        match d {
            Distance::Finite(n) => RowValue::Number(n.into()),
            Distance::Infinite => RowValue::Infinite,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReportRow {
    pub simplex: String,
    pub value: RowValue,
    pub exact: Option<String>,
    pub flags: Vec<String>,
}

/// Per-simplex values in a format-independent shape.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub measure: String,
    pub params: BTreeMap<String, String>,
    pub complex_digest: String,
    pub values: Vec<ReportRow>,
    pub metadata: BTreeMap<String, String>,
}

#[derive(Serialize)]
struct JsonRow<'a> {
    simplex: &'a str,
    value: serde_json::Value,
    exact: Option<&'a str>,
    flags: &'a [String],
}

#[derive(Serialize)]
struct JsonReport<'a> {
    measure: &'a str,
    params: &'a BTreeMap<String, String>,
    complex_digest: &'a str,
    values: Vec<JsonRow<'a>>,
    metadata: &'a BTreeMap<String, String>,
}

impl Report {
    pub fn new(c: &Complex, measure: &str, params: BTreeMap<String, String>) -> Self {
        Report { measure: measure.into(), params, complex_digest: complex_digest(c), values: Vec::new(), metadata: BTreeMap::new() }
    }

    pub fn from_centrality(c: &Complex, r: &CentralityReport) -> Self {
        let mut out = Report::new(c, &r.measure, r.params.clone());
        out.metadata = r.metadata.clone();
        out.values = r
            .values
            .iter()
            .map(|e| ReportRow {
                simplex: c.label(&e.simplex),
                value: RowValue::Number(e.value.to_f64()),
                exact: e.value.exact_string(),
                flags: e.flags.iter().map(|f| f.name().to_string()).collect(),
            })
            .collect();
        out
    }

    pub fn from_degrees(c: &Complex, r: &DegreeReport) -> Self {
        let params = BTreeMap::from([("q".to_string(), r.q.to_string()), ("kind".to_string(), r.query.to_string())]);
        let mut out = Report::new(c, "degree", params);
        out.values = r
            .values
            .iter()
            .map(|(s, d)| ReportRow { simplex: c.label(s), value: RowValue::Number(*d as f64), exact: Some(d.to_string()), flags: Vec::new() })
            .collect();
        out
    }

    /// One row per simplex of dimension `>= p` with its class index.
    pub fn from_components(c: &Complex, part: &ComponentPartition, q_star: &[usize]) -> Self {
        let params = BTreeMap::from([("p".to_string(), part.p.to_string()), ("semantics".to_string(), part.semantics.name().to_string())]);
        let mut out = Report::new(c, "components", params);
        out.metadata.insert("q_star".into(), part.q_star().to_string());
        let sizes: Vec<String> = part.class_sizes().iter().map(usize::to_string).collect();
        out.metadata.insert("class_sizes".into(), sizes.join(" "));
        let vector: Vec<String> = q_star.iter().rev().map(usize::to_string).collect();
        out.metadata.insert("q_star_vector_top_down".into(), vector.join(" "));
        let mut rows: Vec<(Simplex, usize)> =
            part.classes.iter().enumerate().flat_map(|(k, cl)| cl.iter().map(move |s| (s.clone(), k))).collect();
        rows.sort();
        out.values = rows
            .into_iter()
            .map(|(s, k)| ReportRow { simplex: c.label(&s), value: RowValue::Number(k as f64), exact: Some(k.to_string()), flags: Vec::new() })
            .collect();
        out
    }

    pub fn to_json(&self) -> String {
        let doc = JsonReport {
            measure: &self.measure,
            params: &self.params,
            complex_digest: &self.complex_digest,
            values: self
                .values
                .iter()
                .map(|r| JsonRow { simplex: &r.simplex, value: r.value.json(), exact: r.exact.as_deref(), flags: &r.flags })
                .collect(),
            metadata: &self.metadata,
        };
        serde_json::to_string_pretty(&doc).expect("report serialises") + "\n"
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["simplex", "value", "exact", "flags"]).expect("in-memory write");
        for r in &self.values {
            let value = r.value.text();
            let exact = r.exact.clone().unwrap_or_default();
            let flags = r.flags.join(";");
            w.write_record([r.simplex.as_str(), &value, &exact, &flags]).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }
}

/// A square integer matrix over a chain basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixReport {
    pub measure: String,
    pub params: BTreeMap<String, String>,
    pub complex_digest: String,
    pub basis: Vec<String>,
    pub rows: Vec<Vec<i64>>,
}

impl MatrixReport {
    pub fn new(c: &Complex, measure: &str, params: BTreeMap<String, String>, basis: &[Simplex], m: &nalgebra::DMatrix<i64>) -> Self {
        MatrixReport {
            measure: measure.into(),
            params,
            complex_digest: complex_digest(c),
            basis: basis.iter().map(|s| c.label(s)).collect(),
            rows: m.row_iter().map(|r| r.iter().copied().collect()).collect(),
        }
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let doc = serde_json::json!({
                    "measure": self.measure,
                    "params": self.params,
                    "complex_digest": self.complex_digest,
                    "basis": self.basis,
                    "matrix": self.rows,
                });
                serde_json::to_string_pretty(&doc).expect("matrix serialises") + "\n"
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let mut header = vec!["simplex".to_string()];
                header.extend(self.basis.iter().cloned());
                w.write_record(&header).expect("in-memory write");
                for (label, row) in self.basis.iter().zip(&self.rows) {
                    let mut rec = vec![label.clone()];
                    rec.extend(row.iter().map(i64::to_string));
                    w.write_record(&rec).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// generation
// ---------------------------------------------------------------------------

pub const GENERATOR_NAME: &str = "simcent-chacha8";
pub const GENERATOR_VERSION: u32 = 1;
/// Largest number of candidate facets the pure model will enumerate.
pub const MAX_CANDIDATES: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Model {
    /// Each `(dim+1)`-subset of the vertices is a facet with probability `prob`.
    Pure { dim: usize, prob: f64 },
    /// Clique complex of a random graph with edge probability `prob`.
    Flag { prob: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratorConfig {
    pub model: Model,
    pub n: usize,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn metadata(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::from([
            ("generator".to_string(), GENERATOR_NAME.to_string()),
            ("version".to_string(), GENERATOR_VERSION.to_string()),
            ("n".to_string(), self.n.to_string()),
            ("seed".to_string(), self.seed.to_string()),
        ]);
        match self.model {
            Model::Pure { dim, prob } => {
                m.insert("model".into(), "pure".into());
                m.insert("dim".into(), dim.to_string());
                m.insert("prob".into(), prob.to_string());
            }
            Model::Flag { prob } => {
                m.insert("model".into(), "flag".into());
                m.insert("prob".into(), prob.to_string());
            }
        }
        m
    }
}

fn candidate_count(n: usize, k: usize) -> u64 {
    (0..k as u64).fold(1u64, |acc, i| acc.saturating_mul(n as u64 - i) / (i + 1))
}

pub fn generate_complex(cfg: &GeneratorConfig) -> Result<Complex> {
    if cfg.n == 0 {
        return arg("generator needs n >= 1");
    }
    let prob = match cfg.model {
        Model::Pure { prob, .. } | Model::Flag { prob } => prob,
    };
    if !(0.0..=1.0).contains(&prob) {
        return arg(format!("probability {prob} is outside [0, 1]"));
    }
    let width = (cfg.n - 1).to_string().len();
    let label = |v: usize| format!("{v:0width$}");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let facets: Vec<Vec<usize>> = match cfg.model {
        Model::Pure { dim, .. } => {
            if dim + 1 > cfg.n {
                return arg(format!("pure model needs dim + 1 <= n (dim={dim}, n={})", cfg.n));
            }
            if candidate_count(cfg.n, dim + 1) > MAX_CANDIDATES {
                return arg(format!("pure model would enumerate more than {MAX_CANDIDATES} subsets"));
            }
            let all: Vec<usize> = (0..cfg.n).collect();
            combinations(&all, dim + 1).into_iter().filter(|_| rng.random_bool(prob)).collect()
        }
        Model::Flag { .. } => {
            let mut g = UnGraph::<usize, ()>::new_undirected();
            let ids: Vec<_> = (0..cfg.n).map(|v| g.add_node(v)).collect();
            for i in 0..cfg.n {
                for j in i + 1..cfg.n {
                    if rng.random_bool(prob) {
                        g.add_edge(ids[i], ids[j], ());
                    }
                }
            }
            let mut cliques: Vec<Vec<usize>> = maximal_cliques(&g)
                .into_iter()
                .map(|cl| {
                    let mut v: Vec<usize> = cl.into_iter().map(|id| g[id]).collect();
                    v.sort_unstable();
                    v
                })
                .collect();
            cliques.sort();
            cliques
        }
    };
    let sets: Vec<Vec<String>> = facets.iter().map(|f| f.iter().map(|&v| label(v)).collect()).collect();
    Complex::from_label_sets(&sets)
}

/// Complex file with the generator metadata as leading comments.
pub fn emit_generated(c: &Complex, cfg: &GeneratorConfig) -> String {
    let mut out: String = cfg.metadata().iter().map(|(k, v)| format!("# {k}: {v}\n")).collect();
    out.push_str(&emit_complex(c));
    out
}
