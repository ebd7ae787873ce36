//! Brute-force reference implementations for differential testing.
//!
//! Nothing here calls into the adjacency, spectral, walks or centrality
//! modules except to fetch the values being checked. Predicates are literal
//! loops over all simplices of the complex.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use petgraph::graph::{NodeIndex, UnGraph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::adjacency::{self, DegreeQuery};
use crate::centrality::{self, ClosenessVariant, WalkScope};
use crate::complex::{Complex, Simplex};
use crate::error::{Error, Result};
use crate::spectral::{self, TheoremFamily};
use crate::walks::{self, Distance, WalkSemantics};

/// Largest vertex count [`diff_all`] accepts.
pub const VERTEX_LIMIT: usize = 14;

fn subset(a: &Simplex, b: &Simplex) -> bool {
    a.vertices().iter().all(|v| b.vertices().contains(v))
}

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) as i64 / (i + 1) as i64;
    }
    r
}

/// Literal predicates over a fixed list of simplices.
pub struct Naive<'a> {
    pub complex: &'a Complex,
    pub nodes: Vec<Simplex>,
}

impl<'a> Naive<'a> {
    pub fn new(c: &'a Complex) -> Self {
        Naive { complex: c, nodes: c.simplices().cloned().collect() }
    }

    /// Number of `p`-simplices that are faces of both.
    pub fn common_faces(&self, a: &Simplex, b: &Simplex, p: usize) -> usize {
        self.nodes.iter().filter(|t| t.dim() == p && subset(t, a) && subset(t, b)).count()
    }

    /// Number of `p`-simplices having both as faces.
    pub fn common_cofaces(&self, a: &Simplex, b: &Simplex, p: usize) -> usize {
        self.nodes.iter().filter(|t| t.dim() == p && subset(a, t) && subset(b, t)).count()
    }

    pub fn lower(&self, a: &Simplex, b: &Simplex, p: usize, strict: bool) -> bool {
        self.common_faces(a, b, p) > 0 && (!strict || self.common_faces(a, b, p + 1) == 0)
    }

    pub fn upper(&self, a: &Simplex, b: &Simplex, p: usize, strict: bool) -> bool {
        self.common_cofaces(a, b, p) > 0 && (!strict || self.common_cofaces(a, b, p + 1) == 0)
    }

    pub fn p_adjacent(&self, a: &Simplex, b: &Simplex, p: usize) -> bool {
        if a == b {
            return false;
        }
        if a.dim() == 0 && b.dim() == 0 {
            return p == 0 && self.upper(a, b, 1, false);
        }
        self.lower(a, b, p, true) && !self.upper(a, b, a.dim() + b.dim() - p, false)
    }

    /// `partner` is `p`-adjacent to `center` and is not a proper face of
    /// another simplex `p`-adjacent to `center`.
    pub fn maximal(&self, partner: &Simplex, center: &Simplex, p: usize) -> bool {
        self.p_adjacent(partner, center, p)
            && !self.nodes.iter().any(|t| t != partner && subset(partner, t) && self.p_adjacent(t, center, p))
    }

    pub fn degree(&self, s: &Simplex, query: DegreeQuery) -> i64 {
        let q = s.dim();
        let others = || self.nodes.iter().filter(move |t| *t != s);
        let count = |f: &dyn Fn(&Simplex) -> bool| others().filter(|t| f(t)).count() as i64;
        match query {
            DegreeQuery::Lower { p, strict } => count(&|t| self.lower(s, t, p, strict)),
            DegreeQuery::LowerStep { h, p, strict } => {
                count(&|t| t.dim() as isize == q as isize - h && self.lower(s, t, p, strict))
            }
            DegreeQuery::Upper { p, strict } => count(&|t| self.upper(s, t, p, strict)),
            DegreeQuery::UpperStep { h, strict } => count(&|t| t.dim() == q + h && self.upper(s, t, q + h, strict)),
            DegreeQuery::Adjacency { p, maximal: false } => count(&|t| self.p_adjacent(t, s, p)),
            DegreeQuery::Adjacency { p, maximal: true } => count(&|t| self.maximal(t, s, p)),
            DegreeQuery::TwoParam { p1, p2, strict_upper } => {
                count(&|t| self.upper(s, t, p1, strict_upper)) + count(&|t| self.maximal(t, s, p2))
            }
            DegreeQuery::MaximalSimplicial => self.maximal_neighbours(s).len() as i64,
        }
    }

    /// Simplices maximal `p`-adjacent to `s` for some `p < q`, or strictly
    /// `q'`-upper adjacent to `s` where `q'` is their own dimension.
    pub fn maximal_neighbours(&self, s: &Simplex) -> Vec<Simplex> {
        self.nodes
            .iter()
            .filter(|t| *t != s)
            .filter(|t| {
                let adjacent = (0..s.dim()).any(|p| self.maximal(t, s, p));
                let upper = t.dim() > s.dim() && self.upper(s, t, t.dim(), true);
                adjacent || upper
            })
            .cloned()
            .collect()
    }

    /// Level of the nearness edge between `a` and `b`, if any.
    pub fn near(&self, a: &Simplex, b: &Simplex) -> Option<usize> {
        if a == b {
            return None;
        }
        if a.dim() == 0 && b.dim() == 0 {
            return self.upper(a, b, 1, false).then_some(0);
        }
        (0..=a.dim().min(b.dim())).find(|&p| self.maximal(a, b, p) || self.maximal(b, a, p))
    }
}

/// Parity of the permutation taking the ascending vertex list of `tau` to
/// the list of removed vertices followed by the vertices of `sigma`.
pub fn permutation_sign(tau: &Simplex, sigma: &Simplex) -> i64 {
    if !subset(sigma, tau) {
        return 0;
    }
    let mut seq: Vec<usize> = tau.vertices().iter().copied().filter(|v| !sigma.vertices().contains(v)).collect();
    seq.extend(sigma.vertices());
    let mut inversions = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

impl Naive<'_> {
    /// Signed number of common `p`-cofaces (`upper`) or `p`-faces.
    pub fn odeg(&self, a: &Simplex, b: &Simplex, p: usize, upper: bool) -> i64 {
        self.nodes
            .iter()
            .filter(|t| t.dim() == p)
            .map(|t| {
                if upper {
                    permutation_sign(t, a) * permutation_sign(t, b)
                } else {
                    permutation_sign(a, t) * permutation_sign(b, t)
                }
            })
            .sum()
    }

    /// Entry `(a, b)` of `L_{q,h,h'}` from degrees and oriented degrees.
    pub fn laplacian_entry(&self, a: &Simplex, b: &Simplex, h: usize, h_down: usize) -> i64 {
        let q = a.dim();
        if a == b {
            let up = self.nodes.iter().filter(|t| t.dim() == q + h && subset(a, t)).count() as i64;
            let down = if h_down <= q { binomial(q + 1, q - h_down + 1) } else { 0 };
            up + down
        } else {
            let down = if h_down <= q { self.odeg(a, b, q - h_down, false) } else { 0 };
            self.odeg(a, b, q + h, true) + down
        }
    }
}

/// Nearness relation tabulated once for walk-based checks.
pub struct NaiveWalks {
    pub nodes: Vec<Simplex>,
    near: Vec<Vec<Option<usize>>>,
}

impl NaiveWalks {
    pub fn new(naive: &Naive<'_>) -> Self {
        let n = naive.nodes.len();
        let near = (0..n)
            .map(|i| (0..n).map(|j| naive.near(&naive.nodes[i], &naive.nodes[j])).collect())
            .collect();
        NaiveWalks { nodes: naive.nodes.clone(), near }
    }

    fn index(&self, s: &Simplex) -> usize {
        self.nodes.iter().position(|t| t == s).expect("member")
    }

    /// Distances from `src` by growing the set of `(end, saw level p)`
    /// pairs reachable by walks of length exactly 1, 2, ...
    pub fn distances_from(&self, src: usize, p: usize, sem: WalkSemantics) -> Vec<Distance> {
        let n = self.nodes.len();
        let mut dist = vec![Distance::Infinite; n];
        dist[src] = Distance::Finite(0);
        let mut frontier: BTreeSet<(usize, bool)> = BTreeSet::from([(src, sem == WalkSemantics::AtLeast)]);
        for len in 1..=(2 * n + 1) as u32 {
            let mut next = BTreeSet::new();
            for &(u, seen) in &frontier {
                for v in 0..n {
                    if let Some(l) = self.near[u][v] {
                        if l >= p && self.nodes[v].dim() >= p {
                            next.insert((v, seen || l == p));
                        }
                    }
                }
            }
            for &(v, seen) in &next {
                if seen && dist[v] == Distance::Infinite {
                    dist[v] = Distance::Finite(len);
                }
            }
            if next.is_empty() || next == frontier {
                break;
            }
            frontier = next;
        }
        dist
    }

    pub fn distance(&self, a: &Simplex, b: &Simplex, p: usize, sem: WalkSemantics) -> Distance {
        self.distances_from(self.index(a), p, sem)[self.index(b)]
    }

    /// Classes under at-least semantics, via union-find over the edges.
    pub fn component_count(&self, p: usize) -> usize {
        let n = self.nodes.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.near[i][j].is_some_and(|l| l >= p) && self.nodes[i].dim() >= p && self.nodes[j].dim() >= p {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        (0..n).filter(|&i| self.nodes[i].dim() >= p).map(|i| find(&mut parent, i)).collect::<HashSet<_>>().len()
    }

    /// All shortest at-least walks from `i` to `j`, each a list of indices.
    fn shortest_walks(&self, i: usize, j: usize, p: usize, to_j: &[Distance]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut walk = vec![i];
        self.extend(&mut walk, j, p, to_j, &mut out);
        out
    }

    fn extend(&self, walk: &mut Vec<usize>, j: usize, p: usize, to_j: &[Distance], out: &mut Vec<Vec<usize>>) {
        let u = *walk.last().expect("non-empty");
        if u == j {
            out.push(walk.clone());
            return;
        }
        let Distance::Finite(left) = to_j[u] else { return };
        for v in 0..self.nodes.len() {
            if self.near[u][v].is_some_and(|l| l >= p) && to_j[v] == Distance::Finite(left - 1) {
                walk.push(v);
                self.extend(walk, j, p, to_j, out);
                walk.pop();
            }
        }
    }

    /// Betweenness by enumerating every shortest walk between every pair
    /// of the component of `k`.
    pub fn betweenness(&self, k: usize, p: usize) -> BigRational {
        let from_k = self.distances_from(k, p, WalkSemantics::AtLeast);
        let comp: Vec<usize> = (0..self.nodes.len()).filter(|&x| x != k && from_k[x].is_finite()).collect();
        let n = comp.len() + 1;
        if n < 3 {
            return BigRational::zero();
        }
        let mut sum = BigRational::zero();
        for (a, &i) in comp.iter().enumerate() {
            for &j in &comp[a + 1..] {
                let to_j = self.distances_from(j, p, WalkSemantics::AtLeast);
                let walks = self.shortest_walks(i, j, p, &to_j);
                let through = walks.iter().filter(|w| w.contains(&k)).count();
                sum += BigRational::new(BigInt::from(through), BigInt::from(walks.len()));
            }
        }
        sum * BigRational::new(BigInt::from(2), BigInt::from((n - 1) * (n - 2)))
    }

    pub fn harmonic_closeness(&self, k: usize, p: usize) -> BigRational {
        self.distances_from(k, p, WalkSemantics::AtLeast)
            .iter()
            .enumerate()
            .filter(|&(x, _)| x != k && self.nodes[x].dim() >= p)
            .filter_map(|(_, d)| d.finite())
            .map(|d| BigRational::new(BigInt::from(1), BigInt::from(d)))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn reciprocal_closeness(&self, k: usize, p: usize) -> BigRational {
        let total: u64 = self
            .distances_from(k, p, WalkSemantics::AtLeast)
            .iter()
            .filter(|d| d.is_finite())
            .filter_map(|d| d.finite())
            .map(u64::from)
            .sum();
        if total == 0 {
            BigRational::zero()
        } else {
            BigRational::new(BigInt::from(1), BigInt::from(total))
        }
    }
}

/// Clustering as the standard clustering coefficient of the center in an
/// auxiliary graph: the center, its maximal neighbours, an edge from the
/// center to each neighbour, and an edge between linked neighbours.
pub fn naive_clustering(naive: &Naive<'_>, walks: &NaiveWalks, s: &Simplex) -> BigRational {
    let members = naive.maximal_neighbours(s);
    let mut g = UnGraph::<(), ()>::new_undirected();
    let center = g.add_node(());
    let ids: Vec<NodeIndex> = members.iter().map(|_| g.add_node(())).collect();
    for &id in &ids {
        g.add_edge(center, id, ());
    }
    for a in 0..members.len() {
        for b in a + 1..members.len() {
            if naive_linked(naive, walks, &members[a], &members[b], s) {
                g.add_edge(ids[a], ids[b], ());
            }
        }
    }
    let nbrs: Vec<NodeIndex> = g.neighbors(center).collect();
    let d = nbrs.len();
    if d < 2 {
        return BigRational::zero();
    }
    let mut links = 0usize;
    for a in 0..d {
        for b in a + 1..d {
            if g.find_edge(nbrs[a], nbrs[b]).is_some() {
                links += 1;
            }
        }
    }
    BigRational::new(BigInt::from(2 * links), BigInt::from(d * (d - 1)))
}

fn naive_linked(naive: &Naive<'_>, walks: &NaiveWalks, a: &Simplex, b: &Simplex, s: &Simplex) -> bool {
    let shared = naive.nodes.iter().any(|t| subset(t, a) && subset(t, b) && !subset(t, s));
    if shared || s.dim() == 0 {
        return shared;
    }
    let (i, j) = (walks.index(a), walks.index(b));
    if walks.distance(a, b, 0, WalkSemantics::AtLeast) != Distance::Finite(2) {
        return false;
    }
    (0..walks.nodes.len()).any(|x| walks.near[i][x].is_some() && walks.near[x][j].is_some() && !subset(&walks.nodes[x], s))
}

// ---------------------------------------------------------------------------
// differential driver
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub item: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleDiff {
    pub quantity: String,
    /// Number of values compared.
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl OracleDiff {
    fn new(quantity: &str) -> Self {
        OracleDiff { quantity: quantity.into(), checked: 0, mismatches: Vec::new() }
    }

    fn check<T: PartialEq + ToString>(&mut self, item: impl FnOnce() -> String, expected: T, actual: T) {
        self.checked += 1;
        if expected != actual {
            self.mismatches.push(Mismatch { item: item(), expected: expected.to_string(), actual: actual.to_string() });
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub diffs: Vec<OracleDiff>,
    /// Known, documented disagreements reported separately.
    pub diagnostics: Vec<OracleDiff>,
}

impl OracleReport {
    pub fn is_clean(&self) -> bool {
        self.diffs.iter().all(|d| d.mismatches.is_empty())
    }

    pub fn diff(&self, quantity: &str) -> Option<&OracleDiff> {
        self.diffs.iter().chain(&self.diagnostics).find(|d| d.quantity == quantity)
    }
}

/// Every legal degree query at a `q`-simplex of `c`.
pub fn legal_queries(c: &Complex, q: usize) -> Vec<DegreeQuery> {
    let top = c.dim();
    let mut out = Vec::new();
    for strict in [false, true] {
        out.extend((0..=q).map(|p| DegreeQuery::Lower { p, strict }));
        for h in -((top - q) as isize)..=q as isize {
            let partner = (q as isize - h) as usize;
            out.extend((0..=q.min(partner)).map(|p| DegreeQuery::LowerStep { h, p, strict }));
        }
        out.extend((q..=top).map(|p| DegreeQuery::Upper { p, strict }));
        out.extend((1..=top - q).map(|h| DegreeQuery::UpperStep { h, strict }));
        for p1 in q + 1..=top {
            out.extend((0..q).map(|p2| DegreeQuery::TwoParam { p1, p2, strict_upper: strict }));
        }
    }
    for maximal in [false, true] {
        if q == 0 {
            out.push(DegreeQuery::Adjacency { p: 0, maximal });
        }
        out.extend((0..q).map(|p| DegreeQuery::Adjacency { p, maximal }));
    }
    out.push(DegreeQuery::MaximalSimplicial);
    out
}

fn theorem_naive_query(family: TheoremFamily, p: usize) -> DegreeQuery {
    match family {
        TheoremFamily::Lower => DegreeQuery::Lower { p, strict: false },
        TheoremFamily::Upper => DegreeQuery::Upper { p, strict: false },
        TheoremFamily::Adjacency => DegreeQuery::Adjacency { p, maximal: false },
        TheoremFamily::MaximalAdjacency => DegreeQuery::Adjacency { p, maximal: true },
    }
}

/// Theorem families with their legal `p` at dimension `q`.
pub fn theorem_cases(c: &Complex, q: usize) -> Vec<(TheoremFamily, usize)> {
    let mut out: Vec<(TheoremFamily, usize)> = (0..=q).map(|p| (TheoremFamily::Lower, p)).collect();
    out.extend((q..=c.dim()).map(|p| (TheoremFamily::Upper, p)));
    let adj: Vec<usize> = if q == 0 { vec![0] } else { (0..q).collect() };
    for p in adj {
        out.push((TheoremFamily::Adjacency, p));
        out.push((TheoremFamily::MaximalAdjacency, p));
    }
    out
}

/// Legal `(h, h')` pairs for the Laplacian at dimension `q`.
pub fn laplacian_cases(c: &Complex, q: usize) -> Vec<(usize, usize)> {
    let hs: Vec<usize> = (1..=(c.dim() - q).max(1)).collect();
    let hds: Vec<usize> = (1..=q.max(1)).collect();
    hs.iter().flat_map(|&h| hds.iter().map(move |&hd| (h, hd))).collect()
}

/// Runs every computed quantity against its brute-force counterpart.
/// Deterministic in `(c, seed)`; the seed drives the relabelling used for the
/// orientation-invariance check.
pub fn diff_all(c: &Complex, seed: u64) -> Result<OracleReport> {
    let nv = c.vertex_table().len();
    if nv > VERTEX_LIMIT {
        return Err(Error::GuardExceeded { limit: VERTEX_LIMIT, actual: nv });
    }
    let naive = Naive::new(c);
    let nw = NaiveWalks::new(&naive);
    let label = |s: &Simplex| c.label(s);
    let mut diffs = Vec::new();

    let mut deg = OracleDiff::new("degrees");
    for s in c.simplices() {
        for query in legal_queries(c, s.dim()) {
            deg.check(|| format!("{} {query}", label(s)), naive.degree(s, query), adjacency::degree(c, s, query)?);
        }
    }
    diffs.push(deg);

    let mut thm = OracleDiff::new("theorem_degrees");
    for q in 0..=c.dim() {
        for (family, p) in theorem_cases(c, q) {
            let rep = spectral::theorem_degrees(c, q, p, family)?;
            for (s, v) in rep.values {
                thm.check(|| format!("{} {family:?}({p})", label(&s)), naive.degree(&s, theorem_naive_query(family, p)), v);
            }
        }
    }
    diffs.push(thm);

    let mut lap = OracleDiff::new("laplacian_entries");
    let mut adj = OracleDiff::new("adjacency_matrix");
    for q in 0..=c.dim() {
        let layer = c.layer(q);
        for (h, hd) in laplacian_cases(c, q) {
            let l = spectral::laplacian(c, q, h, hd)?.total;
            for (i, a) in layer.iter().enumerate() {
                for (j, b) in layer.iter().enumerate() {
                    lap.check(
                        || format!("L[{q},{h},{hd}]({},{})", label(a), label(b)),
                        naive.laplacian_entry(a, b, h, hd),
                        l[(i, j)],
                    );
                }
            }
        }
        let ps: Vec<usize> = if q == 0 { vec![0] } else { (0..q).collect() };
        for p in ps {
            let m = spectral::adjacency_matrix(c, q, p)?.entries;
            for (i, a) in layer.iter().enumerate() {
                for (j, b) in layer.iter().enumerate() {
                    adj.check(|| format!("A({q},{p})({},{})", label(a), label(b)), i64::from(naive.p_adjacent(a, b, p)), m[(i, j)]);
                }
            }
        }
    }
    diffs.push(lap);
    diffs.push(adj);

    let g = walks::build_nearness_graph(c);
    let mut near = OracleDiff::new("nearness_edges");
    for (i, a) in nw.nodes.iter().enumerate() {
        for b in &nw.nodes[i + 1..] {
            let show = |l: Option<usize>| l.map_or("none".to_string(), |l| l.to_string());
            near.check(|| format!("{}~{}", label(a), label(b)), show(naive.near(a, b)), show(g.edge_level(a, b)));
        }
    }
    diffs.push(near);

    let mut dist = OracleDiff::new("distances");
    let mut comps = OracleDiff::new("components");
    for p in 0..=c.dim() {
        for sem in [WalkSemantics::AtLeast, WalkSemantics::Exact] {
            for a in nw.nodes.iter().filter(|s| s.dim() >= p) {
                let expected = nw.distances_from(nw.index(a), p, sem);
                let row = walks::geodesic_counts(&g, a, p, sem)?;
                for (b, d, _) in &row.entries {
                    dist.check(|| format!("d_{p}[{}]({},{})", sem.name(), label(a), label(b)), expected[nw.index(b)], *d);
                }
            }
        }
        comps.check(|| format!("Q*_{p}"), nw.component_count(p), walks::components(&g, p, WalkSemantics::AtLeast).q_star());
    }
    diffs.push(dist);
    diffs.push(comps);

    let mut close = OracleDiff::new("closeness");
    let mut betw = OracleDiff::new("betweenness");
    for p in 0..=c.dim() {
        for s in c.simplices().filter(|s| s.dim() >= p) {
            let k = nw.index(s);
            let h = centrality::closeness(&g, s, p, WalkSemantics::AtLeast, ClosenessVariant::Harmonic, WalkScope::Level)?;
            close.check(|| format!("harmonic_{p}({})", label(s)), nw.harmonic_closeness(k, p), h.value);
            let r = centrality::closeness(&g, s, p, WalkSemantics::AtLeast, ClosenessVariant::ReciprocalSum, WalkScope::Level)?;
            close.check(|| format!("reciprocal_{p}({})", label(s)), nw.reciprocal_closeness(k, p), r.value);
            let b = centrality::betweenness(&g, s, p, WalkScope::Level)?;
            betw.check(|| format!("betweenness_{p}({})", label(s)), nw.betweenness(k, p), b.value);
        }
    }
    diffs.push(close);
    diffs.push(betw);

    let mut clus = OracleDiff::new("clustering");
    let mut cent = OracleDiff::new("maximal_simplicial_centrality");
    let total = c.len() as i64 - 1;
    for s in c.simplices() {
        clus.check(|| label(s), naive_clustering(&naive, &nw, s), centrality::clustering(c, &g, s)?);
        if total > 0 {
            let expected = BigRational::new(BigInt::from(naive.maximal_neighbours(s).len()), BigInt::from(total));
            cent.check(|| label(s), expected, centrality::maximal_simplicial_degree_centrality(c, s)?.value);
        }
    }
    diffs.push(clus);
    diffs.push(cent);

    diffs.push(orientation_invariance(c, seed)?);

    let mut closed = OracleDiff::new("strict_upper_closed_form");
    for s in c.simplices() {
        for h in 1..=c.dim() - s.dim() {
            closed.check(
                || format!("{} h={h}", label(s)),
                naive.degree(s, DegreeQuery::UpperStep { h, strict: true }),
                adjacency::strict_upper_closed_form(c, s, h)?,
            );
        }
    }
    Ok(OracleReport { diffs, diagnostics: vec![closed] })
}

/// Relabels the vertices by a seeded permutation (which changes every
/// canonical orientation) and checks that degrees, centralities, Laplacian
/// diagonals and classical Laplacian entries up to sign are unchanged.
pub fn orientation_invariance(c: &Complex, seed: u64) -> Result<OracleDiff> {
    let labels: Vec<String> = c.vertex_table().labels().to_vec();
    let mut perm: Vec<usize> = (0..labels.len()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let width = labels.len().to_string().len();
    let rename = |l: &str| {
        let i = labels.iter().position(|x| x == l).expect("known label");
        format!("r{:0width$}", perm[i])
    };
    let facets: Vec<Vec<String>> =
        c.facet_labels().iter().map(|f| f.iter().map(|l| rename(l)).collect()).collect();
    let d = Complex::from_label_sets(&facets)?;
    let image = |s: &Simplex| -> Result<Simplex> {
        let ls: Vec<String> = c.labels_of(s).iter().map(|l| rename(l)).collect();
        d.simplex(&ls)
    };

    let mut out = OracleDiff::new("orientation_invariance");
    let (gc, gd) = (walks::build_nearness_graph(c), walks::build_nearness_graph(&d));
    for s in c.simplices() {
        let t = image(s)?;
        let name = c.label(s);
        for query in [DegreeQuery::MaximalSimplicial, DegreeQuery::Lower { p: 0, strict: false }] {
            out.check(|| format!("{name} {query}"), adjacency::degree(c, s, query)?, adjacency::degree(&d, &t, query)?);
        }
        out.check(|| format!("{name} clustering"), centrality::clustering(c, &gc, s)?, centrality::clustering(&d, &gd, &t)?);
        for p in 0..=s.dim() {
            let h1 = centrality::closeness(&gc, s, p, WalkSemantics::AtLeast, ClosenessVariant::Harmonic, WalkScope::Level)?;
            let h2 = centrality::closeness(&gd, &t, p, WalkSemantics::AtLeast, ClosenessVariant::Harmonic, WalkScope::Level)?;
            out.check(|| format!("{name} closeness_{p}"), h1.value, h2.value);
            let b1 = centrality::betweenness(&gc, s, p, WalkScope::Level)?;
            let b2 = centrality::betweenness(&gd, &t, p, WalkScope::Level)?;
            out.check(|| format!("{name} betweenness_{p}"), b1.value, b2.value);
        }
    }
    for q in 0..=c.dim() {
        for (h, hd) in laplacian_cases(c, q) {
            let (l1, l2) = (spectral::laplacian(c, q, h, hd)?.total, spectral::laplacian(&d, q, h, hd)?.total);
            for (i, a) in c.layer(q).iter().enumerate() {
                for (j, b) in c.layer(q).iter().enumerate() {
                    // multi-step signs depend on the vertex order, so only
                    // the classical operator is covariant off the diagonal
                    if i != j && (h, hd) != (1, 1) {
                        continue;
                    }
                    let (ia, jb) = (d.index_of(&image(a)?).expect("image"), d.index_of(&image(b)?).expect("image"));
                    out.check(|| format!("|L[{q},{h},{hd}]({},{})|", c.label(a), c.label(b)), l1[(i, j)].abs(), l2[(ia, jb)].abs());
                }
            }
        }
    }
    Ok(out)
}
