//! Maximal nearness graph, `p`-walks, `p`-distances and connectivity.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::adjacency::{maximal_raw, upper_raw};
use crate::complex::{Complex, Simplex};
use crate::error::{arg, Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum WalkSemantics {
    /// Every step has level `>= p`.
    #[default]
    AtLeast,
    /// Every step has level `>= p` and some step has level exactly `p`.
    Exact,
}

impl WalkSemantics {
    pub fn name(self) -> &'static str {
        match self {
            WalkSemantics::AtLeast => "at-least",
            WalkSemantics::Exact => "exact",
        }
    }
}

/// A walk length or infinity. Orders finite values below infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// Undirected graph on all simplices; an edge carries the dimension of the
/// pair's common face when either simplex is maximal adjacent to the other
/// at that level. Vertices spanning an edge of the complex are joined at
/// level 0.
#[derive(Clone, Debug)]
pub struct NearnessGraph {
    nodes: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
    adj: Vec<Vec<(usize, usize)>>,
}

pub fn build_nearness_graph(c: &Complex) -> NearnessGraph {
    let nodes: Vec<Simplex> = c.simplices().cloned().collect();
    let index = nodes.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let mut adj = vec![Vec::new(); nodes.len()];
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            let (a, b) = (&nodes[i], &nodes[j]);
            let level = if a.dim() == 0 && b.dim() == 0 {
                upper_raw(c, a, b, 1, false).then_some(0)
            } else {
                let common = a.common_count(b);
                let p = common.checked_sub(1);
                p.filter(|&p| maximal_raw(c, a, b, p) || maximal_raw(c, b, a, p))
            };
            if let Some(l) = level {
                adj[i].push((j, l));
                adj[j].push((i, l));
            }
        }
    }
    NearnessGraph { nodes, index, adj }
}

impl NearnessGraph {
    pub fn new(c: &Complex) -> Self {
        build_nearness_graph(c)
    }

    pub fn nodes(&self) -> &[Simplex] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// `(neighbour index, level)` pairs of node `i`, ascending by index.
    pub fn neighbours(&self, i: usize) -> &[(usize, usize)] {
        &self.adj[i]
    }

    pub fn edge_level(&self, a: &Simplex, b: &Simplex) -> Option<usize> {
        let (i, j) = (self.index_of(a)?, self.index_of(b)?);
        self.adj[i].iter().find(|(k, _)| *k == j).map(|(_, l)| *l)
    }

    /// All edges `(i, j, level)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.adj[i].iter().filter(move |(j, _)| *j > i).map(move |&(j, l)| (i, j, l)))
            .collect()
    }

    pub fn max_dim(&self) -> usize {
        self.nodes.iter().map(Simplex::dim).max().unwrap_or(0)
    }

    /// Indices of the simplices of dimension `>= p`.
    pub fn level_nodes(&self, p: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.nodes[i].dim() >= p).collect()
    }

    pub(crate) fn node(&self, s: &Simplex, p: usize) -> Result<usize> {
        let i = self.index_of(s).ok_or_else(|| Error::NotMember(s.to_string()))?;
        if s.dim() < p {
            return arg(format!("simplex {s} has dimension below level p={p}"));
        }
        Ok(i)
    }
}

/// Breadth-first search over `(node, seen-level-p)` states. Under at-least
/// semantics every state already has the flag set.
pub(crate) struct Search {
    pub(crate) dist: Vec<Option<u32>>,
    pub(crate) count: Vec<u128>,
    parent: Vec<Option<usize>>,
}

fn search(g: &NearnessGraph, src: usize, p: usize, sem: WalkSemantics) -> Search {
    search_within(g, src, p, sem, None)
}

/// `mask`, when given, limits the walk to the marked nodes.
pub(crate) fn search_within(g: &NearnessGraph, src: usize, p: usize, sem: WalkSemantics, mask: Option<&[bool]>) -> Search {
    let n = g.len();
    let mut s = Search { dist: vec![None; 2 * n], count: vec![0; 2 * n], parent: vec![None; 2 * n] };
    let start = 2 * src + usize::from(sem == WalkSemantics::AtLeast);
    s.dist[start] = Some(0);
    s.count[start] = 1;
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        let (u, flag) = (state / 2, state % 2);
        let d = s.dist[state].expect("queued states are reached");
        for &(v, level) in &g.adj[u] {
            if level < p || mask.is_some_and(|m| !m[v]) {
                continue;
            }
            let next = 2 * v + (flag | usize::from(level == p));
            match s.dist[next] {
                None => {
                    s.dist[next] = Some(d + 1);
                    s.count[next] = s.count[state];
                    s.parent[next] = Some(state);
                    queue.push_back(next);
                }
                Some(dn) if dn == d + 1 => s.count[next] += s.count[state],
                _ => {}
            }
        }
    }
    s
}

pub fn p_distance(g: &NearnessGraph, a: &Simplex, b: &Simplex, p: usize, sem: WalkSemantics) -> Result<Distance> {
    let (i, j) = (g.node(a, p)?, g.node(b, p)?);
    if i == j {
        return Ok(Distance::Finite(0));
    }
    Ok(search(g, i, p, sem).dist[2 * j + 1].map_or(Distance::Infinite, Distance::Finite))
}

/// A shortest admissible walk from `a` to `b`, endpoints included.
pub fn shortest_walk(
    g: &NearnessGraph,
    a: &Simplex,
    b: &Simplex,
    p: usize,
    sem: WalkSemantics,
) -> Result<Option<Vec<Simplex>>> {
    let (i, j) = (g.node(a, p)?, g.node(b, p)?);
    if i == j {
        return Ok(Some(vec![a.clone()]));
    }
    let s = search(g, i, p, sem);
    let mut state = 2 * j + 1;
    if s.dist[state].is_none() {
        return Ok(None);
    }
    let mut walk = vec![g.nodes[j].clone()];
    while let Some(prev) = s.parent[state] {
        walk.push(g.nodes[prev / 2].clone());
        state = prev;
    }
    walk.reverse();
    Ok(Some(walk))
}

/// Distances and geodesic multiplicities from one source over `K_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: Simplex,
    pub p: usize,
    pub semantics: WalkSemantics,
    /// Targets in basis order with their distance and number of shortest walks.
    pub entries: Vec<(Simplex, Distance, u128)>,
}

impl DistanceRow {
    pub fn get(&self, t: &Simplex) -> Option<(Distance, u128)> {
        self.entries.iter().find(|(s, ..)| s == t).map(|(_, d, n)| (*d, *n))
    }
}

pub fn geodesic_counts(g: &NearnessGraph, source: &Simplex, p: usize, sem: WalkSemantics) -> Result<DistanceRow> {
    let i = g.node(source, p)?;
    let s = search(g, i, p, sem);
    let entries = g
        .level_nodes(p)
        .into_iter()
        .map(|j| {
            let (d, n) = if j == i {
                (Distance::Finite(0), 1)
            } else {
                let st = 2 * j + 1;
                (s.dist[st].map_or(Distance::Infinite, Distance::Finite), s.count[st])
            };
            (g.nodes[j].clone(), d, n)
        })
        .collect();
    Ok(DistanceRow { source: source.clone(), p, semantics: sem, entries })
}

/// Classes of mutually `p`-connected simplices of dimension `>= p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    pub p: usize,
    pub semantics: WalkSemantics,
    /// Each class in basis order; classes ordered by their first member.
    pub classes: Vec<Vec<Simplex>>,
}

impl ComponentPartition {
    pub fn q_star(&self) -> usize {
        self.classes.len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn class_of(&self, s: &Simplex) -> Option<&[Simplex]> {
        self.classes.iter().find(|c| c.contains(s)).map(Vec::as_slice)
    }
}

/// Under exact semantics two distinct simplices are connected iff their
/// at-least class contains an edge of level exactly `p`; other simplices
/// are singletons.
pub fn components(g: &NearnessGraph, p: usize, sem: WalkSemantics) -> ComponentPartition {
    let mut label = vec![usize::MAX; g.len()];
    let mut classes = Vec::new();
    for start in g.level_nodes(p) {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = classes.len();
        let mut members = vec![start];
        let mut has_exact = false;
        let mut k = 0;
        while k < members.len() {
            let u = members[k];
            for &(v, level) in &g.adj[u] {
                if level < p {
                    continue;
                }
                has_exact |= level == p;
                if label[v] == usize::MAX {
                    label[v] = classes.len();
                    members.push(v);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        if sem == WalkSemantics::Exact && !has_exact {
            classes.extend(members.into_iter().map(|m| vec![m]));
        } else {
            classes.push(members);
        }
    }
    classes.sort_by_key(|c| c[0]);
    let classes = classes.into_iter().map(|c| c.into_iter().map(|i| g.nodes[i].clone()).collect()).collect();
    ComponentPartition { p, semantics: sem, classes }
}

/// `Q*_p` for `p = 0 ..= dim K` (index `p`).
pub fn q_star_vector(g: &NearnessGraph, sem: WalkSemantics) -> Vec<usize> {
    (0..=g.max_dim()).map(|p| components(g, p, sem).q_star()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eccentricity {
    pub p: usize,
    pub values: Vec<(Simplex, Distance)>,
    pub diameter: Distance,
}

/// Eccentricities over all of `K_p`; unreachable pairs give infinity.
pub fn eccentricity_diameter(g: &NearnessGraph, p: usize, sem: WalkSemantics) -> Result<Eccentricity> {
    let members: Vec<Simplex> = g.level_nodes(p).into_iter().map(|i| g.nodes[i].clone()).collect();
    eccentricity_within(g, p, sem, &members)
}

/// Eccentricities with both ends restricted to `members`.
pub fn eccentricity_within(g: &NearnessGraph, p: usize, sem: WalkSemantics, members: &[Simplex]) -> Result<Eccentricity> {
    let mut values = Vec::with_capacity(members.len());
    for a in members {
        let row = geodesic_counts(g, a, p, sem)?;
        let ecc = members
            .iter()
            .map(|b| row.get(b).map(|(d, _)| d).ok_or_else(|| Error::Argument(format!("{b} is below level p={p}"))))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .max()
            .unwrap_or(Distance::Finite(0));
        values.push((a.clone(), ecc));
    }
    let diameter = values.iter().map(|(_, e)| *e).max().unwrap_or(Distance::Finite(0));
    Ok(Eccentricity { p, values, diameter })
}

/// Mean pairwise distance `2 Σ d / (n (n - 1))` inside a component.
pub fn average_walk_length(g: &NearnessGraph, p: usize, sem: WalkSemantics, component: &[Simplex]) -> Result<BigRational> {
    let n = component.len();
    if n < 2 {
        return Err(Error::UndefinedResult("average walk length of a singleton component".into()));
    }
    let mut total: u64 = 0;
    for (k, a) in component.iter().enumerate() {
        let row = geodesic_counts(g, a, p, sem)?;
        for b in &component[k + 1..] {
            match row.get(b) {
                Some((Distance::Finite(d), _)) => total += d as u64,
                _ => return Err(Error::UndefinedResult(format!("{a} and {b} are not {p}-connected"))),
            }
        }
    }
    Ok(BigRational::new(BigInt::from(2 * total), BigInt::from(n * (n - 1))))
}

/// Average walk length of every class at level `p`; `None` for singletons.
pub fn average_walk_lengths(g: &NearnessGraph, p: usize, sem: WalkSemantics) -> Result<Vec<(Vec<Simplex>, Option<BigRational>)>> {
    components(g, p, sem)
        .classes
        .into_iter()
        .map(|class| {
            let v = if class.len() < 2 { None } else { Some(average_walk_length(g, p, sem, &class)?) };
            Ok((class, v))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn s(c: &Complex, l: &str) -> Simplex {
        c.simplex_str(l).unwrap()
    }

    #[test]
    fn nearness_graph_examples() {
        let bow = fixtures::k_bow();
        let g = build_nearness_graph(&bow);
        assert_eq!(g.edge_level(&s(&bow, "0 1 2"), &s(&bow, "2 3 4")), Some(0));
        let two = fixtures::k_two();
        let g = build_nearness_graph(&two);
        assert_eq!(g.edge_level(&s(&two, "0 1 2"), &s(&two, "1 2 3")), Some(1));
        assert_eq!(g.edge_level(&s(&two, "0 1 2"), &s(&two, "1 2")), None);
        let chain = fixtures::t_chain();
        let g = build_nearness_graph(&chain);
        assert_eq!(g.edge_level(&s(&chain, "1 2 3"), &s(&chain, "2 3 4")), Some(1));
        assert_eq!(g.edge_level(&s(&chain, "0 1 2"), &s(&chain, "1 2 3")), Some(1));
    }

    #[test]
    fn distance_examples() {
        let chain = fixtures::t_chain();
        let g = build_nearness_graph(&chain);
        let (t1, t3) = (s(&chain, "0 1 2"), s(&chain, "2 3 4"));
        assert_eq!(p_distance(&g, &t1, &t3, 1, WalkSemantics::AtLeast).unwrap(), Distance::Finite(2));
        assert_eq!(p_distance(&g, &t1, &t1, 2, WalkSemantics::Exact).unwrap(), Distance::Finite(0));
        let walk = shortest_walk(&g, &t1, &t3, 1, WalkSemantics::AtLeast).unwrap().unwrap();
        assert_eq!(walk[1], s(&chain, "1 2 3"));
        let bow = fixtures::k_bow();
        let g = build_nearness_graph(&bow);
        let (b1, b2) = (s(&bow, "0 1 2"), s(&bow, "2 3 4"));
        assert_eq!(p_distance(&g, &b1, &b2, 1, WalkSemantics::AtLeast).unwrap(), Distance::Infinite);
        assert_eq!(p_distance(&g, &b1, &b2, 0, WalkSemantics::Exact).unwrap(), Distance::Finite(1));
        assert!(p_distance(&g, &s(&bow, "0"), &b1, 1, WalkSemantics::AtLeast).is_err());
    }

    #[test]
    fn component_examples() {
        let two = fixtures::k_two();
        let g = build_nearness_graph(&two);
        assert_eq!(components(&g, 2, WalkSemantics::AtLeast).q_star(), 2);
        assert_eq!(components(&g, 1, WalkSemantics::AtLeast).q_star(), 6);
        let chain = fixtures::t_chain();
        let g = build_nearness_graph(&chain);
        let part = components(&g, 1, WalkSemantics::AtLeast);
        let tri: Vec<Simplex> = chain.layer(2).to_vec();
        assert!(part.classes.contains(&tri));
        assert_eq!(part.class_sizes().iter().sum::<usize>(), g.level_nodes(1).len());
    }

    #[test]
    fn exact_semantics_needs_a_level_p_step() {
        let chain = fixtures::t_chain();
        let g = build_nearness_graph(&chain);
        let (t1, t2) = (s(&chain, "0 1 2"), s(&chain, "1 2 3"));
        assert_eq!(p_distance(&g, &t1, &t2, 0, WalkSemantics::Exact).unwrap(), Distance::Finite(2));
        assert_eq!(p_distance(&g, &t1, &t2, 2, WalkSemantics::Exact).unwrap(), Distance::Infinite);
        assert_eq!(p_distance(&g, &t1, &t2, 0, WalkSemantics::AtLeast).unwrap(), Distance::Finite(1));
    }

    #[test]
    fn eccentricity_and_average_length() {
        let chain = fixtures::t_chain();
        let g = build_nearness_graph(&chain);
        let tri = chain.layer(2).to_vec();
        let e = eccentricity_within(&g, 1, WalkSemantics::AtLeast, &tri).unwrap();
        let vals: Vec<Distance> = e.values.iter().map(|(_, d)| *d).collect();
        assert_eq!(vals, vec![Distance::Finite(2), Distance::Finite(1), Distance::Finite(2)]);
        assert_eq!(e.diameter, Distance::Finite(2));
        assert_eq!(eccentricity_diameter(&g, 1, WalkSemantics::AtLeast).unwrap().diameter, Distance::Infinite);
        let avg = average_walk_length(&g, 1, WalkSemantics::AtLeast, &tri).unwrap();
        assert_eq!(avg, BigRational::new(4.into(), 3.into()));
        assert!(average_walk_length(&g, 1, WalkSemantics::AtLeast, &tri[..1]).is_err());
        let tet = fixtures::k_tet();
        let g = build_nearness_graph(&tet);
        assert_eq!(eccentricity_diameter(&g, 3, WalkSemantics::AtLeast).unwrap().diameter, Distance::Finite(0));
    }

    #[test]
    fn geodesic_count_examples() {
        let chain = fixtures::t_chain();
        let g = build_nearness_graph(&chain);
        let row = geodesic_counts(&g, &s(&chain, "0 1 2"), 1, WalkSemantics::AtLeast).unwrap();
        assert_eq!(row.get(&s(&chain, "2 3 4")), Some((Distance::Finite(2), 1)));
        let wind = fixtures::k_wind();
        let g = build_nearness_graph(&wind);
        let row = geodesic_counts(&g, &s(&wind, "0 1 2"), 0, WalkSemantics::AtLeast).unwrap();
        assert_eq!(row.get(&s(&wind, "0 3 4")), Some((Distance::Finite(1), 1)));
        assert_eq!(row.get(&s(&wind, "0 5 6")), Some((Distance::Finite(1), 1)));
    }
}
