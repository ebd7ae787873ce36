//! Centrality measures on simplices: normalised degrees, average degrees,
//! eigenvector, closeness, betweenness and simplicial clustering.
//!
//! Degree-based values, closeness, betweenness and clustering are exact
//! rationals. Eigenvector centrality is the only floating-point measure.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::adjacency::{self, deg_star_a, deg_star_u, maximal_raw, DegreeQuery};
use crate::complex::{Complex, Simplex};
use crate::error::{arg, Error, Result};
use crate::spectral;
use crate::walks::{self, search_within, NearnessGraph, WalkSemantics};

pub type Rational = BigRational;

fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Rational {
    Rational::new(n.into(), d.into())
}

fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        BigInt::zero()
    } else {
        num_integer::binomial(BigInt::from(n), BigInt::from(k))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flag {
    /// Normalised value above 1.
    OutOfRange,
    /// Degenerate input: zero matrix, singleton or tiny component.
    Degenerate,
}

impl Flag {
    pub fn name(self) -> &'static str {
        match self {
            Flag::OutOfRange => "out_of_range",
            Flag::Degenerate => "degenerate",
        }
    }
}

/// An exact value with its warning flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Score {
    pub value: Rational,
    pub flags: Vec<Flag>,
}

impl Score {
    fn plain(value: Rational) -> Self {
        Score { value, flags: Vec::new() }
    }

    fn degenerate() -> Self {
        Score { value: Rational::zero(), flags: vec![Flag::Degenerate] }
    }

    /// `num / den`, flagged above 1. `0/0` is 0 with a degenerate flag.
    fn quotient(num: i64, den: BigInt, what: &str) -> Result<Self> {
        if den.is_zero() {
            return if num == 0 {
                Ok(Score::degenerate())
            } else {
                Err(Error::UndefinedDenominator(format!("{what} vanishes with numerator {num}")))
            };
        }
        Ok(Score::normalised(Rational::new(num.into(), den)))
    }

    fn normalised(value: Rational) -> Self {
        let flags = if value > Rational::from_integer(1.into()) { vec![Flag::OutOfRange] } else { Vec::new() };
        Score { value, flags }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(Rational),
    Real(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Value::Real(x) => *x,
        }
    }

    /// `p/q` (or `p` for integers) when exact.
    pub fn exact_string(&self) -> Option<String> {
        match self {
            Value::Exact(r) => Some(r.to_string()),
            Value::Real(_) => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{r}"),
            Value::Real(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CentralityEntry {
    pub simplex: Simplex,
    pub value: Value,
    pub flags: Vec<Flag>,
}

/// Values for every simplex of one dimension, in basis order.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralityReport {
    pub measure: String,
    pub params: BTreeMap<String, String>,
    pub values: Vec<CentralityEntry>,
    pub metadata: BTreeMap<String, String>,
}

impl CentralityReport {
    fn new(measure: &str, params: &[(&str, String)]) -> Self {
        CentralityReport {
            measure: measure.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            values: Vec::new(),
            metadata: BTreeMap::new(),
        }
    }

    fn push_score(&mut self, s: &Simplex, score: Score) {
        self.values.push(CentralityEntry { simplex: s.clone(), value: Value::Exact(score.value), flags: score.flags });
    }

    pub fn get(&self, s: &Simplex) -> Option<&CentralityEntry> {
        self.values.iter().find(|e| &e.simplex == s)
    }
}

fn layer_of(c: &Complex, q: usize) -> Result<&[Simplex]> {
    if q > c.dim() {
        return arg(format!("q={q} exceeds dim K={}", c.dim()));
    }
    Ok(c.layer(q))
}

// ---------------------------------------------------------------------------
// degree centralities
// ---------------------------------------------------------------------------

/// `deg^{h,h}_U(v) / C(f_0 - 1, h)`; the strict variant counts facets.
pub fn vertex_upper_degree_centrality(c: &Complex, v: &Simplex, h: usize, strict: bool) -> Result<Score> {
    c.require(v)?;
    if v.dim() != 0 {
        return arg(format!("{v} is not a vertex"));
    }
    if c.f_vector()[0] == 1 {
        return Err(Error::UndefinedDenominator("a complex with one vertex has C(f_0 - 1, h) = 0".into()));
    }
    if h == 0 || h > c.dim() {
        return arg(format!("vertex upper centrality needs 1 <= h <= dim K (h={h}, dim K={})", c.dim()));
    }
    upper_degree_centrality(c, v, h, strict)
}

/// `deg^{h,q+h}_U(σ) / C(f_0 - (q+1), q+h)`. Values above 1 are flagged.
pub fn upper_degree_centrality(c: &Complex, s: &Simplex, h: usize, strict: bool) -> Result<Score> {
    c.require(s)?;
    if h == 0 {
        return arg("upper degree centrality needs h >= 1");
    }
    let q = s.dim();
    if q + h > c.dim() {
        return Ok(Score::plain(Rational::zero()));
    }
    let den = binom(c.f_vector()[0] as i64 - (q as i64 + 1), (q + h) as i64);
    let num = adjacency::degree(c, s, DegreeQuery::UpperStep { h, strict })?;
    Score::quotient(num, den, &format!("C(f_0 - {}, {})", q + 1, q + h))
}

fn adjacency_denominator(c: &Complex, q: usize, p: usize) -> BigInt {
    let f0 = c.f_vector()[0] as i64;
    let inner: BigInt = (p + 1..=c.dim()).map(|qq| binom(f0 - (p as i64 + 1), qq as i64)).sum();
    binom(q as i64 + 1, p as i64 + 1) * (inner - 1)
}

/// `deg^p_A(σ)` (or its maximal version) over
/// `C(q+1, p+1) (Σ_{q'=p+1}^{dim K} C(f_0 - (p+1), q') - 1)`.
pub fn adjacency_degree_centrality(c: &Complex, s: &Simplex, p: usize, maximal: bool) -> Result<Score> {
    c.require(s)?;
    let q = s.dim();
    if p >= q {
        return arg(format!("adjacency centrality needs p < q (p={p}, q={q})"));
    }
    let den = adjacency_denominator(c, q, p);
    let num = adjacency::degree(c, s, DegreeQuery::Adjacency { p, maximal })?;
    Score::quotient(num, den, &format!("adjacency normaliser at q={q}, p={p}"))
}

/// `deg*(σ) / (Σ f_i - 1)`.
pub fn maximal_simplicial_degree_centrality(c: &Complex, s: &Simplex) -> Result<Score> {
    c.require(s)?;
    let total = c.len() as i64 - 1;
    if total == 0 {
        return Err(Error::UndefinedDenominator("a complex with one simplex has Σ f_i - 1 = 0".into()));
    }
    let num = adjacency::degree(c, s, DegreeQuery::MaximalSimplicial)?;
    Ok(Score::normalised(ratio(num, total)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegreeCentrality {
    Upper { h: usize, strict: bool },
    Adjacency { p: usize, maximal: bool },
    MaximalSimplicial,
}

pub fn degree_centrality_report(c: &Complex, q: usize, kind: DegreeCentrality) -> Result<CentralityReport> {
    let layer = layer_of(c, q)?;
    let mut report = match kind {
        DegreeCentrality::Upper { h, strict } => {
            let mut r = CentralityReport::new("upper_degree", &[("q", q.to_string()), ("h", h.to_string()), ("strict", strict.to_string())]);
            let den = binom(c.f_vector()[0] as i64 - (q as i64 + 1), (q + h) as i64);
            r.metadata.insert("denominator".into(), den.to_string());
            r
        }
        DegreeCentrality::Adjacency { p, maximal } => {
            let mut r = CentralityReport::new("adjacency_degree", &[("q", q.to_string()), ("p", p.to_string()), ("maximal", maximal.to_string())]);
            r.metadata.insert("denominator".into(), adjacency_denominator(c, q, p).to_string());
            r
        }
        DegreeCentrality::MaximalSimplicial => {
            let mut r = CentralityReport::new("maximal_simplicial_degree", &[("q", q.to_string())]);
            r.metadata.insert("denominator".into(), (c.len() - 1).to_string());
            r
        }
    };
    for s in layer {
        let score = match kind {
            DegreeCentrality::Upper { h, strict } => upper_degree_centrality(c, s, h, strict)?,
            DegreeCentrality::Adjacency { p, maximal } => adjacency_degree_centrality(c, s, p, maximal)?,
            DegreeCentrality::MaximalSimplicial => maximal_simplicial_degree_centrality(c, s)?,
        };
        report.push_score(s, score);
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// average degrees
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AverageKind {
    /// Strict upper degree over `M_q`.
    StrictUpper,
    /// Maximal adjacency degree over `N_q`.
    MaximalAdjacency,
    /// Maximal simplicial degree over `M_q + N_q`.
    Maximal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AverageScope {
    Dimension(usize),
    Whole,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AverageDegree {
    pub value: Rational,
    pub numerator: BigInt,
    pub denominator: BigInt,
}

/// `M_q = Σ_{h=1}^{dim K - q} f_q C(f_0 - (q+1), q+h)`.
pub fn m_constant(c: &Complex, q: usize) -> BigInt {
    let f = c.f_vector();
    let fq = BigInt::from(*f.get(q).unwrap_or(&0));
    (1..=c.dim().saturating_sub(q))
        .map(|h| &fq * binom(f[0] as i64 - (q as i64 + 1), (q + h) as i64))
        .sum()
}

/// `N_q = Σ_{p=0}^{q-1} f_q C(q+1, p+1) (Σ_{q'=p+1}^{dim K} C(f_0 - (p+1), q') - 1)`.
pub fn n_constant(c: &Complex, q: usize) -> BigInt {
    let fq = BigInt::from(*c.f_vector().get(q).unwrap_or(&0));
    (0..q).map(|p| &fq * adjacency_denominator(c, q, p)).sum()
}

/// Normalised average degree. An empty normaliser with a zero numerator
/// gives 0; with a positive numerator it is an error. At `q = 0` the
/// maximal kind reduces to the strict upper one since `N_0 = 0`.
pub fn average_degree(c: &Complex, scope: AverageScope, kind: AverageKind) -> Result<AverageDegree> {
    let dims: Vec<usize> = match scope {
        AverageScope::Dimension(q) => {
            layer_of(c, q)?;
            vec![q]
        }
        AverageScope::Whole => (0..=c.dim()).collect(),
    };
    let mut num = BigInt::zero();
    let mut den = BigInt::zero();
    for q in dims {
        for s in c.layer(q) {
            num += match kind {
                AverageKind::StrictUpper => deg_star_u(c, s),
                AverageKind::MaximalAdjacency => deg_star_a(c, s),
                AverageKind::Maximal => deg_star_u(c, s) + deg_star_a(c, s),
            };
        }
        den += match kind {
            AverageKind::StrictUpper => m_constant(c, q),
            AverageKind::MaximalAdjacency => n_constant(c, q),
            AverageKind::Maximal => m_constant(c, q) + n_constant(c, q),
        };
    }
    let value = if den.is_zero() {
        if !num.is_zero() {
            return Err(Error::UndefinedDenominator(format!("average degree normaliser is 0 with numerator {num}")));
        }
        Rational::zero()
    } else {
        Rational::new(num.clone(), den.clone())
    };
    Ok(AverageDegree { value, numerator: num, denominator: den })
}

// ---------------------------------------------------------------------------
// eigenvector
// ---------------------------------------------------------------------------

/// Principal eigenvector of the `p`-adjacency matrix among `q`-simplices.
pub fn eigenvector_centrality(c: &Complex, q: usize, p: usize) -> Result<CentralityReport> {
    let layer = layer_of(c, q)?;
    let a = spectral::adjacency_matrix(c, q, p)?;
    let eig = spectral::principal_eigenvector(&a.to_f64())?;
    let mut r = CentralityReport::new("eigenvector", &[("q", q.to_string()), ("p", p.to_string())]);
    r.metadata.insert("eigenvalue".into(), format!("{:e}", eig.eigenvalue));
    r.metadata.insert("residual".into(), format!("{:e}", eig.residual));
    r.metadata.insert("iterations".into(), eig.iterations.to_string());
    r.metadata.insert("degenerate".into(), eig.degenerate.to_string());
    let flags = if eig.degenerate { vec![Flag::Degenerate] } else { Vec::new() };
    for (s, x) in layer.iter().zip(&eig.vector) {
        r.values.push(CentralityEntry { simplex: s.clone(), value: Value::Real(*x), flags: flags.clone() });
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// walk-based measures
// ---------------------------------------------------------------------------

/// Which simplices walks may visit and count as endpoints.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum WalkScope {
    /// All simplices of dimension `>= p`.
    #[default]
    Level,
    /// Only simplices of the same dimension as the one being scored.
    SameDimension,
}

impl WalkScope {
    pub fn name(self) -> &'static str {
        match self {
            WalkScope::Level => "level",
            WalkScope::SameDimension => "same-dimension",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ClosenessVariant {
    /// `Σ 1/d` over the scope, with `1/∞ = 0`.
    #[default]
    Harmonic,
    /// `1 / Σ d` over the component.
    ReciprocalSum,
}

impl ClosenessVariant {
    pub fn name(self) -> &'static str {
        match self {
            ClosenessVariant::Harmonic => "harmonic",
            ClosenessVariant::ReciprocalSum => "reciprocal_sum",
        }
    }
}

fn scope_mask(g: &NearnessGraph, s: &Simplex, p: usize, scope: WalkScope) -> Vec<bool> {
    g.nodes()
        .iter()
        .map(|t| match scope {
            WalkScope::Level => t.dim() >= p,
            WalkScope::SameDimension => t.dim() == s.dim(),
        })
        .collect()
}

/// Finite distances and geodesic counts from node `i` inside the mask.
fn rows_from(g: &NearnessGraph, i: usize, p: usize, sem: WalkSemantics, mask: &[bool]) -> (Vec<Option<u32>>, Vec<u128>) {
    let search = search_within(g, i, p, sem, Some(mask));
    let mut dist: Vec<Option<u32>> = (0..g.len()).map(|j| search.dist[2 * j + 1]).collect();
    let mut count: Vec<u128> = (0..g.len()).map(|j| search.count[2 * j + 1]).collect();
    dist[i] = Some(0);
    count[i] = 1;
    (dist, count)
}

pub fn closeness(
    g: &NearnessGraph,
    s: &Simplex,
    p: usize,
    sem: WalkSemantics,
    variant: ClosenessVariant,
    scope: WalkScope,
) -> Result<Score> {
    let i = g.node(s, p)?;
    let mask = scope_mask(g, s, p, scope);
    let (dist, _) = rows_from(g, i, p, sem, &mask);
    let others = (0..g.len()).filter(|&j| j != i && mask[j]);
    match variant {
        ClosenessVariant::Harmonic => Ok(Score::plain(
            others.filter_map(|j| dist[j]).map(|d| ratio(1, d)).fold(Rational::zero(), |a, b| a + b),
        )),
        ClosenessVariant::ReciprocalSum => {
            let total: u64 = others.filter_map(|j| dist[j]).map(u64::from).sum();
            if total == 0 {
                Ok(Score::degenerate())
            } else {
                Ok(Score::plain(ratio(1, total)))
            }
        }
    }
}

/// `2 / ((n-1)(n-2)) Σ_{pairs} l_ij(σ) / l_ij` over the at-least component
/// of `σ` inside the scope. Components with fewer than three members give 0
/// with a degenerate flag.
pub fn betweenness(g: &NearnessGraph, s: &Simplex, p: usize, scope: WalkScope) -> Result<Score> {
    let sem = WalkSemantics::AtLeast;
    let k = g.node(s, p)?;
    let mask = scope_mask(g, s, p, scope);
    let (dk, ck) = rows_from(g, k, p, sem, &mask);
    let comp: Vec<usize> = (0..g.len()).filter(|&j| j != k && dk[j].is_some()).collect();
    let n = comp.len() + 1;
    if n < 3 {
        return Ok(Score::degenerate());
    }
    let mut sum = Rational::zero();
    for (a, &i) in comp.iter().enumerate() {
        let (di, ci) = rows_from(g, i, p, sem, &mask);
        for &j in &comp[a + 1..] {
            let (dij, dik, dkj) = (di[j].expect("same component"), di[k].expect("same component"), dk[j].expect("same component"));
            if dik + dkj == dij {
                sum += ratio(BigInt::from(ci[k]) * BigInt::from(ck[j]), BigInt::from(ci[j]));
            }
        }
    }
    Ok(Score::plain(sum * ratio(2, (n - 1) * (n - 2))))
}

pub fn closeness_report(
    c: &Complex,
    q: usize,
    p: usize,
    sem: WalkSemantics,
    variant: ClosenessVariant,
    scope: WalkScope,
) -> Result<CentralityReport> {
    let layer = layer_of(c, q)?;
    if q < p {
        return arg(format!("closeness needs q >= p (q={q}, p={p})"));
    }
    let g = walks::build_nearness_graph(c);
    let mut r = CentralityReport::new(
        "closeness",
        &[("q", q.to_string()), ("p", p.to_string()), ("semantics", sem.name().into()), ("variant", variant.name().into()), ("scope", scope.name().into())],
    );
    for s in layer {
        r.push_score(s, closeness(&g, s, p, sem, variant, scope)?);
    }
    Ok(r)
}

pub fn betweenness_report(c: &Complex, q: usize, p: usize, sem: WalkSemantics, scope: WalkScope) -> Result<CentralityReport> {
    let layer = layer_of(c, q)?;
    if q < p {
        return arg(format!("betweenness needs q >= p (q={q}, p={p})"));
    }
    if sem != WalkSemantics::AtLeast {
        return arg("betweenness is defined with at-least semantics only");
    }
    let g = walks::build_nearness_graph(c);
    let mut r = CentralityReport::new(
        "betweenness",
        &[("q", q.to_string()), ("p", p.to_string()), ("semantics", sem.name().into()), ("scope", scope.name().into())],
    );
    for s in layer {
        r.push_score(s, betweenness(&g, s, p, scope)?);
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// clustering
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighbourSet {
    pub center: Simplex,
    /// In basis order.
    pub members: Vec<Simplex>,
    /// Linked member pairs, each once, first member earlier in basis order.
    pub link_pairs: Vec<(Simplex, Simplex)>,
}

/// Facets properly containing `s` and, for `q > 0`, simplices maximal
/// `p`-adjacent to `s` for some `p < q`.
pub fn maximal_neighbours(c: &Complex, s: &Simplex) -> Result<Vec<Simplex>> {
    c.require(s)?;
    Ok(c.simplices()
        .filter(|t| {
            let upper = s.is_proper_face_of(t) && c.is_facet(t).unwrap_or(false);
            let adjacent = s.dim() > 0 && t.common_count(s).checked_sub(1).is_some_and(|p| maximal_raw(c, t, s, p));
            upper || adjacent
        })
        .cloned()
        .collect())
}

/// Link between two maximal neighbours of `center`.
pub fn linked(c: &Complex, g: &NearnessGraph, a: &Simplex, b: &Simplex, center: &Simplex) -> Result<bool> {
    let members = maximal_neighbours(c, center)?;
    if a == b || !members.contains(a) || !members.contains(b) {
        return arg("linked needs two distinct maximal neighbours of the center");
    }
    Ok(linked_raw(g, a, b, center))
}

fn linked_raw(g: &NearnessGraph, a: &Simplex, b: &Simplex, center: &Simplex) -> bool {
    let shared_outside = a.vertices().iter().any(|v| b.contains_vertex(*v) && !center.contains_vertex(*v));
    if center.dim() == 0 || shared_outside {
        return shared_outside;
    }
    let (i, j) = (g.index_of(a).expect("member"), g.index_of(b).expect("member"));
    if g.neighbours(i).iter().any(|(k, _)| *k == j) {
        return false;
    }
    g.neighbours(i).iter().any(|&(x, _)| {
        let mid = &g.nodes()[x];
        !mid.is_face_of(center) && g.neighbours(x).iter().any(|(k, _)| *k == j)
    })
}

pub fn neighbour_set(c: &Complex, g: &NearnessGraph, s: &Simplex) -> Result<NeighbourSet> {
    let members = maximal_neighbours(c, s)?;
    let mut link_pairs = Vec::new();
    for (k, a) in members.iter().enumerate() {
        for b in &members[k + 1..] {
            if linked_raw(g, a, b, s) {
                link_pairs.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(NeighbourSet { center: s.clone(), members, link_pairs })
}

/// Links among maximal neighbours over `C(deg*, 2)`; 0 when `deg* <= 1`.
pub fn clustering(c: &Complex, g: &NearnessGraph, s: &Simplex) -> Result<Rational> {
    let set = neighbour_set(c, g, s)?;
    let d = set.members.len();
    if d <= 1 {
        return Ok(Rational::zero());
    }
    Ok(ratio(set.link_pairs.len(), d * (d - 1) / 2))
}

pub fn clustering_report(c: &Complex, q: usize) -> Result<CentralityReport> {
    let layer = layer_of(c, q)?;
    let g = walks::build_nearness_graph(c);
    let mut r = CentralityReport::new("clustering", &[("q", q.to_string())]);
    for s in layer {
        r.push_score(s, Score::plain(clustering(c, &g, s)?));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn s(c: &Complex, l: &str) -> Simplex {
        c.simplex_str(l).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        ratio(n, d)
    }

    #[test]
    fn vertex_upper_examples() {
        let tri = fixtures::k_tri();
        let v = s(&tri, "0");
        assert_eq!(vertex_upper_degree_centrality(&tri, &v, 1, false).unwrap().value, r(1, 1));
        assert_eq!(vertex_upper_degree_centrality(&tri, &v, 2, false).unwrap().value, r(1, 1));
        let wind = fixtures::k_wind();
        assert_eq!(vertex_upper_degree_centrality(&wind, &s(&wind, "0"), 2, false).unwrap().value, r(1, 5));
        let one = Complex::from_vertex_sets(&[vec![0]]).unwrap();
        assert!(vertex_upper_degree_centrality(&one, &s(&one, "0"), 1, false).is_err());
    }

    #[test]
    fn upper_examples_flag_out_of_range() {
        let two = fixtures::k_two();
        let sc = upper_degree_centrality(&two, &s(&two, "1 2"), 1, false).unwrap();
        assert_eq!(sc.value, r(2, 1));
        assert_eq!(sc.flags, vec![Flag::OutOfRange]);
        let tet = fixtures::k_tet();
        let sc = upper_degree_centrality(&tet, &s(&tet, "0 1"), 1, false).unwrap();
        assert_eq!(sc.value, r(2, 1));
        assert_eq!(sc.flags, vec![Flag::OutOfRange]);
        let tri = fixtures::k_tri();
        assert_eq!(upper_degree_centrality(&tri, &s(&tri, "0 1 2"), 1, false).unwrap().value, r(0, 1));
    }

    #[test]
    fn adjacency_examples() {
        let bow = fixtures::k_bow();
        let t1 = s(&bow, "0 1 2");
        assert_eq!(adjacency_degree_centrality(&bow, &t1, 0, true).unwrap().value, r(1, 27));
        assert_eq!(adjacency_degree_centrality(&bow, &t1, 0, false).unwrap().value, r(1, 9));
        let tet = fixtures::k_tet();
        let sc = adjacency_degree_centrality(&tet, &s(&tet, "0 1 2"), 1, false).unwrap();
        assert_eq!(sc, Score::degenerate());
        assert!(adjacency_degree_centrality(&bow, &t1, 2, false).is_err());
    }

    #[test]
    fn maximal_simplicial_examples() {
        let two = fixtures::k_two();
        assert_eq!(maximal_simplicial_degree_centrality(&two, &s(&two, "1 2")).unwrap().value, r(1, 5));
        let bow = fixtures::k_bow();
        assert_eq!(maximal_simplicial_degree_centrality(&bow, &s(&bow, "0 1 2")).unwrap().value, r(1, 12));
        let one = Complex::from_vertex_sets(&[vec![0]]).unwrap();
        assert!(maximal_simplicial_degree_centrality(&one, &s(&one, "0")).is_err());
    }

    #[test]
    fn average_examples() {
        let tri = fixtures::k_tri();
        assert_eq!(average_degree(&tri, AverageScope::Dimension(2), AverageKind::StrictUpper).unwrap().value, r(0, 1));
        let two = fixtures::k_two();
        let a = average_degree(&two, AverageScope::Dimension(2), AverageKind::MaximalAdjacency).unwrap();
        assert_eq!(a.denominator, BigInt::from(30));
        assert_eq!(a.value, r(1, 5));
        let tet = fixtures::k_tet();
        let a = average_degree(&tet, AverageScope::Dimension(0), AverageKind::Maximal).unwrap();
        assert_eq!(a.denominator, BigInt::from(28));
        assert_eq!(a.value, r(1, 7));
        assert!(average_degree(&tet, AverageScope::Dimension(4), AverageKind::Maximal).is_err());
    }

    #[test]
    fn eigenvector_examples() {
        let two = fixtures::k_two();
        let rep = eigenvector_centrality(&two, 2, 1).unwrap();
        assert!(rep.values.iter().all(|e| (e.value.to_f64() - 0.5).abs() < 1e-12));
        let tet = fixtures::k_tet();
        let rep = eigenvector_centrality(&tet, 2, 1).unwrap();
        assert!(rep.values.iter().all(|e| e.flags == vec![Flag::Degenerate] && e.value.to_f64() == 0.25));
        let wind = fixtures::k_wind();
        let rep = eigenvector_centrality(&wind, 2, 0).unwrap();
        assert!(rep.values.iter().all(|e| (e.value.to_f64() - 1.0 / 3.0).abs() < 1e-12));
    }

    #[test]
    fn closeness_and_betweenness_on_chain() {
        let chain = fixtures::t_chain();
        let g = walks::build_nearness_graph(&chain);
        let (t1, t2) = (s(&chain, "0 1 2"), s(&chain, "1 2 3"));
        let h = |x| closeness(&g, x, 1, WalkSemantics::AtLeast, ClosenessVariant::Harmonic, WalkScope::Level).unwrap().value;
        assert_eq!(h(&t2), r(2, 1));
        assert_eq!(h(&t1), r(3, 2));
        assert_eq!(betweenness(&g, &t2, 1, WalkScope::Level).unwrap().value, r(1, 1));
        assert_eq!(betweenness(&g, &t1, 1, WalkScope::Level).unwrap().value, r(0, 1));
        let edge = s(&chain, "0 1");
        assert_eq!(betweenness(&g, &edge, 1, WalkScope::Level).unwrap(), Score::degenerate());
        let two = fixtures::k_two();
        let g = walks::build_nearness_graph(&two);
        let t = s(&two, "0 1 2");
        let rs = closeness(&g, &t, 1, WalkSemantics::AtLeast, ClosenessVariant::ReciprocalSum, WalkScope::Level).unwrap();
        assert_eq!(rs.value, r(1, 1));
        let iso = s(&two, "0 1");
        let rs = closeness(&g, &iso, 1, WalkSemantics::AtLeast, ClosenessVariant::ReciprocalSum, WalkScope::Level).unwrap();
        assert_eq!(rs, Score::degenerate());
    }

    #[test]
    fn wind_triangles_have_zero_betweenness_among_triangles() {
        let wind = fixtures::k_wind();
        let g = walks::build_nearness_graph(&wind);
        for t in wind.layer(2) {
            assert_eq!(betweenness(&g, t, 0, WalkScope::SameDimension).unwrap().value, r(0, 1));
        }
    }

    #[test]
    fn neighbour_examples() {
        let wind = fixtures::k_wind();
        assert_eq!(maximal_neighbours(&wind, &s(&wind, "0")).unwrap(), wind.layer(2).to_vec());
        let cl = fixtures::k_clust4();
        let e12 = s(&cl, "1 2");
        let mut got = maximal_neighbours(&cl, &e12).unwrap();
        got.sort();
        let mut want = vec![s(&cl, "0 1 2"), s(&cl, "1 2 3"), s(&cl, "0 1 3")];
        want.sort();
        assert_eq!(got, want);
        let two = fixtures::k_two();
        assert_eq!(maximal_neighbours(&two, &s(&two, "1 2")).unwrap(), two.layer(2).to_vec());
    }

    #[test]
    fn link_examples() {
        let cl = fixtures::k_clust4();
        let g = walks::build_nearness_graph(&cl);
        let e12 = s(&cl, "1 2");
        assert!(linked(&cl, &g, &s(&cl, "0 1 2"), &s(&cl, "0 1 3"), &e12).unwrap());
        assert!(!linked(&cl, &g, &s(&cl, "0 1 2"), &s(&cl, "1 2 3"), &e12).unwrap());
        let wind = fixtures::k_wind();
        let g = walks::build_nearness_graph(&wind);
        let set = neighbour_set(&wind, &g, &s(&wind, "0")).unwrap();
        assert!(set.link_pairs.is_empty());
    }

    #[test]
    fn clustering_examples() {
        let wind = fixtures::k_wind();
        let g = walks::build_nearness_graph(&wind);
        assert_eq!(clustering(&wind, &g, &s(&wind, "0")).unwrap(), r(0, 1));
        let cl = fixtures::k_clust4();
        let g = walks::build_nearness_graph(&cl);
        assert_eq!(clustering(&cl, &g, &s(&cl, "1")).unwrap(), r(1, 1));
        assert_eq!(clustering(&cl, &g, &s(&cl, "1 2")).unwrap(), r(2, 3));
    }
}
