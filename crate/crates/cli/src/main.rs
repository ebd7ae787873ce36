use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use simcent::centrality::{self, AverageKind, AverageScope, DegreeCentrality};
use simcent::io::{self, MatrixReport, ReportRow, RowValue};
use simcent::walks::{self, NearnessGraph};
use simcent::{oracle, spectral, ClosenessVariant, Complex, DegreeQuery, Error, Format, GeneratorConfig, Model, Report, WalkScope, WalkSemantics};

#[derive(Parser)]
#[command(name = "simcent", version, about = "Higher-order adjacency, Laplacians and centrality on simplicial complexes")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write output here instead of standard output.
    #[arg(short = 'o', long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum DegreeKind {
    Lower,
    StrictLower,
    Upper,
    StrictUpper,
    Adjacency,
    MaximalAdjacency,
    TwoParam,
    Maximal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Part {
    Up,
    Down,
    Total,
}

#[derive(Clone, Copy, ValueEnum)]
enum Measure {
    Degree,
    Eigenvector,
    Closeness,
    Betweenness,
    Clustering,
    Average,
}

#[derive(Clone, Copy, ValueEnum)]
enum Semantics {
    AtLeast,
    Exact,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Level,
    SameDimension,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Pure,
    Flag,
}

#[derive(Args)]
struct CentralityOpts {
    #[arg(long, value_enum)]
    measure: Measure,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    h: Option<usize>,
    /// degree: upper|strict-upper|adjacency|maximal-adjacency|maximal;
    /// closeness: harmonic|reciprocal-sum;
    /// average: strict-upper|maximal-adjacency|maximal.
    #[arg(long)]
    variant: Option<String>,
    #[arg(long, value_enum, default_value_t = Semantics::AtLeast)]
    semantics: Semantics,
    #[arg(long, value_enum, default_value_t = ScopeArg::Level)]
    scope: ScopeArg,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, f-vector, facets and Q*-vector.
    Info { file: PathBuf },
    /// Degree of every q-simplex.
    Degrees {
        file: PathBuf,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        p: Option<usize>,
        /// Step: target dimension q-h for lower kinds, q+h for upper and two-param kinds.
        #[arg(long, allow_negative_numbers = true)]
        h: Option<isize>,
        #[arg(long, value_enum)]
        kind: DegreeKind,
        /// Strict upper part for two-param.
        #[arg(long)]
        strict: bool,
    },
    /// Multi combinatorial Laplacian matrix.
    Laplacian {
        file: PathBuf,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        h: usize,
        #[arg(long)]
        hp: usize,
        #[arg(long, value_enum, default_value_t = Part::Total)]
        part: Part,
    },
    /// Centrality of every q-simplex.
    Centrality {
        file: PathBuf,
        #[command(flatten)]
        opts: CentralityOpts,
    },
    /// Maximal p-connected components.
    Components {
        file: PathBuf,
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value_t = Semantics::AtLeast)]
        semantics: Semantics,
    },
    /// Compare every quantity against brute-force enumeration.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random complex file.
    Gen {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        prob: f64,
        #[arg(long)]
        seed: u64,
        /// Facet dimension for the pure model.
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn kind(&self) -> &str {
        match self {
            Failure::Lib(e) => e.kind(),
            Failure::Io(_) => "io",
            Failure::Usage(_) => "argument",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Io(m) | Failure::Usage(m) => m.clone(),
        }
    }

    fn code(&self) -> u8 {
        match self {
            Failure::Lib(Error::Parse { .. } | Error::EmptyComplex) => 3,
            Failure::Lib(Error::GuardExceeded { .. }) => 4,
            Failure::Io(_) => 3,
            _ => 2,
        }
    }
}

type Outcome = Result<(String, u8), Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn load(path: &Path) -> Result<Complex, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(io::parse_complex_file(&text)?)
}

fn need(v: Option<usize>, name: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{name} is required here")))
}

fn step(h: Option<isize>) -> Result<usize, Failure> {
    match h {
        None => usage("--h is required here"),
        Some(h) if h < 1 => usage("--h must be at least 1 here"),
        Some(h) => Ok(h as usize),
    }
}

fn degree_query(q: usize, p: Option<usize>, h: Option<isize>, kind: DegreeKind, strict: bool) -> Result<DegreeQuery, Failure> {
    Ok(match kind {
        DegreeKind::Lower | DegreeKind::StrictLower => {
            let strict = matches!(kind, DegreeKind::StrictLower);
            let p = need(p, "p")?;
            match h {
                Some(h) => DegreeQuery::LowerStep { h, p, strict },
                None => DegreeQuery::Lower { p, strict },
            }
        }
        DegreeKind::Upper | DegreeKind::StrictUpper => {
            let strict = matches!(kind, DegreeKind::StrictUpper);
            match (h, p) {
                (Some(_), _) => DegreeQuery::UpperStep { h: step(h)?, strict },
                (None, Some(p)) => DegreeQuery::Upper { p, strict },
                (None, None) => return usage("upper degrees need --p or --h"),
            }
        }
        DegreeKind::Adjacency => DegreeQuery::Adjacency { p: need(p, "p")?, maximal: false },
        DegreeKind::MaximalAdjacency => DegreeQuery::Adjacency { p: need(p, "p")?, maximal: true },
        DegreeKind::TwoParam => DegreeQuery::TwoParam { p1: q + step(h)?, p2: need(p, "p")?, strict_upper: strict },
        DegreeKind::Maximal => DegreeQuery::MaximalSimplicial,
    })
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn semantics(s: Semantics) -> WalkSemantics {
    match s {
        Semantics::AtLeast => WalkSemantics::AtLeast,
        Semantics::Exact => WalkSemantics::Exact,
    }
}

fn info(c: &Complex, format: Format) -> String {
    let g = NearnessGraph::new(c);
    let q_star = walks::q_star_vector(&g, WalkSemantics::AtLeast);
    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let facets: Vec<String> = c.facet_labels().iter().map(|f| f.join("-")).collect();
    match format {
        Format::Json => {
            let doc = json!({
                "complex_digest": io::complex_digest(c),
                "dim": c.dim(),
                "f_vector": c.f_vector(),
                "vertices": c.vertex_table().labels(),
                "facets": facets,
                "q_star": q_star,
            });
            serde_json::to_string_pretty(&doc).expect("info serialises") + "\n"
        }
        Format::Csv => {
            let mut out = String::from("key,value\n");
            out += &format!("complex_digest,{}\n", io::complex_digest(c));
            out += &format!("dim,{}\n", c.dim());
            out += &format!("f_vector,{}\n", join(&c.f_vector()));
            out += &format!("vertices,{}\n", c.vertex_table().labels().join(" "));
            out += &format!("facets,{}\n", facets.join(" "));
            out += &format!("q_star,{}\n", join(&q_star));
            out
        }
    }
}

fn oracle_output(c: &Complex, seed: u64, format: Format) -> Outcome {
    let report = oracle::diff_all(c, seed)?;
    let code = if report.is_clean() { 0 } else { 1 };
    let rows = report
        .diffs
        .iter()
        .map(|d| ("check", d))
        .chain(report.diagnostics.iter().map(|d| ("diagnostic", d)));
    let text = match format {
        Format::Json => {
            let entries: Vec<_> = rows
                .map(|(role, d)| {
                    json!({
                        "quantity": d.quantity,
                        "role": role,
                        "checked": d.checked,
                        "mismatches": d.mismatches.iter().map(|m| json!({"item": m.item, "expected": m.expected, "actual": m.actual})).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = json!({
                "complex_digest": io::complex_digest(c),
                "clean": report.is_clean(),
                "seed": seed,
                "results": entries,
            });
            serde_json::to_string_pretty(&doc).expect("oracle serialises") + "\n"
        }
        Format::Csv => {
            let mut out = String::from("quantity,role,checked,mismatches\n");
            for (role, d) in rows {
                out += &format!("{},{role},{},{}\n", d.quantity, d.checked, d.mismatches.len());
            }
            out
        }
    };
    Ok((text, code))
}

fn centrality_output(c: &Complex, format: Format, opts: &CentralityOpts) -> Result<String, Failure> {
    let CentralityOpts { measure, q, p, h, .. } = *opts;
    let variant = opts.variant.as_deref();
    let sem = semantics(opts.semantics);
    let scope = match opts.scope {
        ScopeArg::Level => WalkScope::Level,
        ScopeArg::SameDimension => WalkScope::SameDimension,
    };
    let report = match measure {
        Measure::Degree => {
            let kind = match variant.unwrap_or("maximal") {
                "upper" => DegreeCentrality::Upper { h: need(h, "h")?, strict: false },
                "strict-upper" => DegreeCentrality::Upper { h: need(h, "h")?, strict: true },
                "adjacency" => DegreeCentrality::Adjacency { p: need(p, "p")?, maximal: false },
                "maximal-adjacency" => DegreeCentrality::Adjacency { p: need(p, "p")?, maximal: true },
                "maximal" => DegreeCentrality::MaximalSimplicial,
                other => return usage(format!("unknown degree variant {other:?}")),
            };
            centrality::degree_centrality_report(c, need(q, "q")?, kind)?
        }
        Measure::Eigenvector => centrality::eigenvector_centrality(c, need(q, "q")?, need(p, "p")?)?,
        Measure::Closeness => {
            let v = match variant.unwrap_or("harmonic") {
                "harmonic" => ClosenessVariant::Harmonic,
                "reciprocal-sum" => ClosenessVariant::ReciprocalSum,
                other => return usage(format!("unknown closeness variant {other:?}")),
            };
            centrality::closeness_report(c, need(q, "q")?, need(p, "p")?, sem, v, scope)?
        }
        Measure::Betweenness => centrality::betweenness_report(c, need(q, "q")?, need(p, "p")?, sem, scope)?,
        Measure::Clustering => centrality::clustering_report(c, need(q, "q")?)?,
        Measure::Average => {
            let (kind, name) = match variant.unwrap_or("maximal") {
                "strict-upper" => (AverageKind::StrictUpper, "strict-upper"),
                "maximal-adjacency" => (AverageKind::MaximalAdjacency, "maximal-adjacency"),
                "maximal" => (AverageKind::Maximal, "maximal"),
                other => return usage(format!("unknown average variant {other:?}")),
            };
            let (scope, label) = match q {
                Some(q) => (AverageScope::Dimension(q), format!("K_{q}")),
                None => (AverageScope::Whole, "K".to_string()),
            };
            let avg = centrality::average_degree(c, scope, kind)?;
            let mut pairs = vec![("variant", name.to_string())];
            if let Some(q) = q {
                pairs.push(("q", q.to_string()));
            }
            let mut r = Report::new(c, "average_degree", params(&pairs));
            r.metadata.insert("numerator".into(), avg.numerator.to_string());
            r.metadata.insert("denominator".into(), avg.denominator.to_string());
            r.values.push(ReportRow {
                simplex: label,
                value: RowValue::Number(num_to_f64(&avg.value)),
                exact: Some(avg.value.to_string()),
                flags: Vec::new(),
            });
            return Ok(r.emit(format));
        }
    };
    Ok(Report::from_centrality(c, &report).emit(format))
}

fn num_to_f64(r: &simcent::Rational) -> f64 {
    simcent::Value::Exact(r.clone()).to_f64()
}

fn run(cli: Cli) -> Outcome {
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    let text = match cli.command {
        Command::Info { file } => info(&load(&file)?, format),
        Command::Degrees { file, q, p, h, kind, strict } => {
            let c = load(&file)?;
            let query = degree_query(q, p, h, kind, strict)?;
            Report::from_degrees(&c, &simcent::adjacency::degree_report(&c, q, query)?).emit(format)
        }
        Command::Laplacian { file, q, h, hp, part } => {
            let c = load(&file)?;
            let bundle = spectral::laplacian(&c, q, h, hp)?;
            let (m, name) = match part {
                Part::Up => (&bundle.up, "up"),
                Part::Down => (&bundle.down, "down"),
                Part::Total => (&bundle.total, "total"),
            };
            let ps = params(&[("q", q.to_string()), ("h", h.to_string()), ("hp", hp.to_string()), ("part", name.to_string())]);
            MatrixReport::new(&c, "laplacian", ps, c.layer(q), m).emit(format)
        }
        Command::Centrality { file, opts } => centrality_output(&load(&file)?, format, &opts)?,
        Command::Components { file, p, semantics: s } => {
            let c = load(&file)?;
            let g = NearnessGraph::new(&c);
            let sem = semantics(s);
            if p > c.dim() {
                return usage(format!("p={p} exceeds dim K={}", c.dim()));
            }
            let part = walks::components(&g, p, sem);
            Report::from_components(&c, &part, &walks::q_star_vector(&g, sem)).emit(format)
        }
        Command::Oracle { file, seed } => return oracle_output(&load(&file)?, seed, format),
        Command::Gen { model, n, prob, seed, dim } => {
            let model = match model {
                ModelArg::Pure => Model::Pure { dim, prob },
                ModelArg::Flag => Model::Flag { prob },
            };
            let cfg = GeneratorConfig { model, n, seed };
            io::emit_generated(&io::generate_complex(&cfg)?, &cfg)
        }
    };
    Ok((text, 0))
}

fn report_failure(f: &Failure) -> ExitCode {
    eprintln!("{}", json!({"kind": f.kind(), "message": f.message()}));
    ExitCode::from(f.code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.to_string();
            let first = message.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
            return report_failure(&Failure::Usage(first.to_string()));
        }
    };
    let out = cli.out.clone();
    match run(cli) {
        Ok((text, code)) => {
            if let Some(path) = out {
                if let Err(e) = fs::write(&path, &text) {
                    return report_failure(&Failure::Io(format!("{}: {e}", path.display())));
                }
            } else {
                print!("{text}");
            }
            ExitCode::from(code)
        }
        Err(f) => report_failure(&f),
    }
}
