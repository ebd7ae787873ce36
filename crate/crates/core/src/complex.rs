//! Finite abstract simplicial complexes with deterministic chain bases.
//!
//! Vertices carry arbitrary text labels. Internal ids are assigned by sorting
//! the labels lexicographically, and every simplex is stored as a strictly
//! increasing id sequence, which is also its canonical orientation.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{arg, Error, Result};

pub type VertexId = usize;

/// Largest facet dimension accepted at construction (the closure of a facet
/// of dimension `d` has `2^(d+1) - 1` members).
pub const MAX_FACET_DIM: usize = 20;

/// A simplex as a strictly increasing sequence of vertex ids.
///
/// Ordering is by dimension first, then lexicographic on the id tuple, which
/// is the row/column order used for every matrix in the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    /// Builds a simplex from ids in any order. Repeated ids are rejected.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return arg("a simplex needs at least one vertex");
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return arg(format!("repeated vertex in {vertices:?}"));
        }
        Ok(Simplex(vertices))
    }

    /// Caller guarantees `vertices` is strictly increasing and non-empty.
    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// `self ⊆ other` (a simplex is a face of itself).
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.len() <= other.len() && self.0.iter().all(|v| other.contains_vertex(*v))
    }

    pub fn is_proper_face_of(&self, other: &Simplex) -> bool {
        self.len() < other.len() && self.is_face_of(other)
    }

    /// Number of shared vertices.
    pub fn common_count(&self, other: &Simplex) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    /// Shared vertices; `None` when the two simplices are disjoint.
    pub fn intersection(&self, other: &Simplex) -> Option<Simplex> {
        let common: Vec<_> = self.0.iter().copied().filter(|v| other.contains_vertex(*v)).collect();
        (!common.is_empty()).then_some(Simplex(common))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let set: BTreeSet<_> = self.0.iter().chain(other.0.iter()).copied().collect();
        Simplex(set.into_iter().collect())
    }

    /// `self ∪ {v}`; `v` must not already be a vertex.
    pub fn with_vertex(&self, v: VertexId) -> Simplex {
        let pos = self.0.binary_search(&v).unwrap_err();
        let mut out = self.0.clone();
        out.insert(pos, v);
        Simplex(out)
    }

    /// All `p`-faces, in lexicographic order.
    pub fn faces(&self, p: usize) -> Result<Vec<Simplex>> {
        if p > self.dim() {
            return arg(format!("face dimension {p} exceeds simplex dimension {}", self.dim()));
        }
        Ok(combinations(&self.0, p + 1).into_iter().map(Simplex).collect())
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// k-subsets of a sorted slice, lexicographic.
pub(crate) fn combinations(items: &[VertexId], k: usize) -> Vec<Vec<VertexId>> {
    let n = items.len();
    if k == 0 || k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Bijection between vertex labels and ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexTable {
    labels: Vec<String>,
    ids: BTreeMap<String, VertexId>,
}

impl VertexTable {
    fn from_labels(labels: BTreeSet<String>) -> Self {
        let labels: Vec<String> = labels.into_iter().collect();
        let ids = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        VertexTable { labels, ids }
    }

    pub fn label(&self, id: VertexId) -> &str {
        &self.labels[id]
    }

    pub fn id(&self, label: &str) -> Option<VertexId> {
        self.ids.get(label).copied()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Ordered simplices per dimension; fixes matrix row/column indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainBasis {
    by_dim: Vec<Vec<Simplex>>,
    position: HashMap<Simplex, usize>,
    offsets: Vec<usize>,
}

impl ChainBasis {
    fn new(by_dim: Vec<Vec<Simplex>>) -> Self {
        let mut position = HashMap::new();
        let mut offsets = Vec::with_capacity(by_dim.len() + 1);
        let mut acc = 0;
        for layer in &by_dim {
            offsets.push(acc);
            for (i, s) in layer.iter().enumerate() {
                position.insert(s.clone(), i);
            }
            acc += layer.len();
        }
        offsets.push(acc);
        ChainBasis { by_dim, position, offsets }
    }

    /// Simplices of dimension `q`; empty outside `0..=dim`.
    pub fn layer(&self, q: usize) -> &[Simplex] {
        self.by_dim.get(q).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Index of `s` within its own dimension.
    pub fn position(&self, s: &Simplex) -> Option<usize> {
        self.position.get(s).copied()
    }

    /// Index of `s` in the concatenation of all layers.
    pub fn global_index(&self, s: &Simplex) -> Option<usize> {
        self.position(s).map(|i| self.offsets[s.dim()] + i)
    }

    pub fn at_global(&self, g: usize) -> &Simplex {
        let q = self.offsets.partition_point(|&o| o <= g) - 1;
        &self.by_dim[q][g - self.offsets[q]]
    }

    pub fn len(&self) -> usize {
        *self.offsets.last().unwrap_or(&0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }
}

/// An immutable, downward-closed simplicial complex.
#[derive(Clone, Debug)]
pub struct Complex {
    vertices: VertexTable,
    basis: ChainBasis,
    facet_flags: Vec<Vec<bool>>,
    max_coface_dim: Vec<Vec<usize>>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.basis.by_dim == other.basis.by_dim
    }
}

impl Eq for Complex {}

impl Complex {
    /// Downward closure of the given label sets. `sets[i]` is reported as
    /// line `i + 1` in errors.
    pub fn from_label_sets<S: AsRef<str>>(sets: &[Vec<S>]) -> Result<Self> {
        let mut labels = BTreeSet::new();
        for (i, set) in sets.iter().enumerate() {
            if set.is_empty() {
                return Err(Error::Parse { line: i + 1, message: "empty simplex".into() });
            }
            let mut seen = BTreeSet::new();
            for l in set {
                let l = l.as_ref();
                if !seen.insert(l) {
                    return Err(Error::Parse {
                        line: i + 1,
                        message: format!("duplicate vertex label '{l}'"),
                    });
                }
                labels.insert(l.to_string());
            }
            if set.len() > MAX_FACET_DIM + 1 {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("simplex dimension {} exceeds limit {MAX_FACET_DIM}", set.len() - 1),
                });
            }
        }
        if labels.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let table = VertexTable::from_labels(labels);
        let id_sets: Vec<Vec<VertexId>> = sets
            .iter()
            .map(|set| set.iter().map(|l| table.id(l.as_ref()).expect("label registered")).collect())
            .collect();
        Ok(Self::close(table, &id_sets))
    }

    /// Convenience constructor over integer vertex names. Labels are the
    /// decimal names zero-padded to a common width, so label order and
    /// numeric order agree.
    pub fn from_vertex_sets(sets: &[Vec<usize>]) -> Result<Self> {
        let width = sets.iter().flatten().max().map_or(1, |m| m.to_string().len());
        let labelled: Vec<Vec<String>> = sets
            .iter()
            .map(|s| s.iter().map(|v| format!("{v:0width$}")).collect())
            .collect();
        Self::from_label_sets(&labelled)
    }

    fn close(vertices: VertexTable, sets: &[Vec<VertexId>]) -> Self {
        let mut layers: Vec<BTreeSet<Vec<VertexId>>> = Vec::new();
        for set in sets {
            let mut sorted = set.clone();
            sorted.sort_unstable();
            for k in 1..=sorted.len() {
                if layers.len() < k {
                    layers.resize_with(k, BTreeSet::new);
                }
                for face in combinations(&sorted, k) {
                    layers[k - 1].insert(face);
                }
            }
        }
        let by_dim: Vec<Vec<Simplex>> =
            layers.into_iter().map(|l| l.into_iter().map(Simplex::from_sorted).collect()).collect();
        let basis = ChainBasis::new(by_dim);

        let top = basis.by_dim.len();
        let mut facet_flags: Vec<Vec<bool>> = basis.by_dim.iter().map(|l| vec![true; l.len()]).collect();
        let mut max_coface_dim: Vec<Vec<usize>> =
            basis.by_dim.iter().enumerate().map(|(q, l)| vec![q; l.len()]).collect();
        for q in (1..top).rev() {
            for (j, s) in basis.by_dim[q].iter().enumerate() {
                let m = max_coface_dim[q][j];
                for face in combinations(&s.0, q) {
                    let i = basis.position[&Simplex(face)];
                    facet_flags[q - 1][i] = false;
                    max_coface_dim[q - 1][i] = max_coface_dim[q - 1][i].max(m);
                }
            }
        }
        Complex { vertices, basis, facet_flags, max_coface_dim }
    }

    pub fn vertex_table(&self) -> &VertexTable {
        &self.vertices
    }

    pub fn chain_basis(&self) -> &ChainBasis {
        &self.basis
    }

    /// Simplices of dimension `q` in basis order.
    pub fn layer(&self, q: usize) -> &[Simplex] {
        self.basis.layer(q)
    }

    pub fn dim(&self) -> usize {
        self.basis.by_dim.len() - 1
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.basis.by_dim.iter().map(Vec::len).collect()
    }

    /// Total number of simplices, `Σ f_q`.
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.basis.position.contains_key(s)
    }

    /// Membership test for an arbitrary sorted id slice.
    pub fn contains_ids(&self, ids: &[VertexId]) -> bool {
        // the map is keyed by `Simplex`; allocation is unavoidable here
        !ids.is_empty() && self.basis.position.contains_key(&Simplex(ids.to_vec()))
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.basis.position(s)
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.basis.iter()
    }

    pub fn require(&self, s: &Simplex) -> Result<usize> {
        self.index_of(s).ok_or_else(|| Error::NotMember(self.label(s)))
    }

    pub fn is_facet(&self, s: &Simplex) -> Result<bool> {
        let i = self.require(s)?;
        Ok(self.facet_flags[s.dim()][i])
    }

    pub fn facets(&self) -> impl Iterator<Item = &Simplex> {
        self.basis
            .by_dim
            .iter()
            .zip(&self.facet_flags)
            .flat_map(|(layer, flags)| layer.iter().zip(flags).filter(|(_, f)| **f).map(|(s, _)| s))
    }

    /// Largest dimension of a simplex of the complex containing `s`.
    pub fn max_coface_dim(&self, s: &Simplex) -> Option<usize> {
        self.index_of(s).map(|i| self.max_coface_dim[s.dim()][i])
    }

    /// Facets containing `s`, including `s` itself when it is a facet.
    pub fn facets_containing(&self, s: &Simplex) -> Result<Vec<Simplex>> {
        self.require(s)?;
        Ok(self.facets().filter(|f| s.is_face_of(f)).cloned().collect())
    }

    /// Immediate cofaces of `s` (dimension `dim s + 1`).
    pub fn cofaces_codim1(&self, s: &Simplex) -> Vec<Simplex> {
        (0..self.vertices.len())
            .filter(|v| !s.contains_vertex(*v))
            .map(|v| s.with_vertex(v))
            .filter(|c| self.contains(c))
            .collect()
    }

    /// Looks a simplex up by its vertex labels.
    pub fn simplex<S: AsRef<str>>(&self, labels: &[S]) -> Result<Simplex> {
        let ids = labels
            .iter()
            .map(|l| {
                self.vertices
                    .id(l.as_ref())
                    .ok_or_else(|| Error::NotMember(format!("vertex '{}'", l.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        let s = Simplex::new(ids)?;
        self.require(&s)?;
        Ok(s)
    }

    /// Whitespace-separated label lookup, e.g. `"0 1 2"`.
    pub fn simplex_str(&self, labels: &str) -> Result<Simplex> {
        let parts: Vec<&str> = labels.split([' ', ',', '-']).filter(|p| !p.is_empty()).collect();
        self.simplex(&parts)
    }

    /// Labels joined with `-`, e.g. `a-b-c`.
    pub fn label(&self, s: &Simplex) -> String {
        s.vertices()
            .iter()
            .map(|&v| self.vertices.labels.get(v).map_or_else(|| v.to_string(), Clone::clone))
            .collect::<Vec<_>>()
            .join("-")
    }

    pub fn labels_of(&self, s: &Simplex) -> Vec<String> {
        s.vertices().iter().map(|&v| self.vertices.labels[v].clone()).collect()
    }

    /// Facets as label lists, lexicographic. Feeding these back through
    /// [`Complex::from_label_sets`] rebuilds an identical complex.
    pub fn facet_labels(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<VertexId>> = self.facets().map(|f| f.vertices().to_vec()).collect();
        out.sort();
        out.into_iter().map(|ids| ids.into_iter().map(|v| self.vertices.labels[v].clone()).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn f_vectors_of_fixtures() {
        assert_eq!(fixtures::k_tri().f_vector(), vec![3, 3, 1]);
        assert_eq!(fixtures::k_two().f_vector(), vec![4, 5, 2]);
        assert_eq!(fixtures::k_tet().f_vector(), vec![4, 6, 4, 1]);
        assert_eq!(fixtures::k_wind().f_vector(), vec![7, 9, 3]);
        assert_eq!(fixtures::k_bow().f_vector(), vec![5, 6, 2]);
    }

    #[test]
    fn listed_subsets_are_absorbed() {
        let c = Complex::from_vertex_sets(&[vec![0, 1, 2], vec![0, 1], vec![2]]).unwrap();
        assert_eq!(c.f_vector(), vec![3, 3, 1]);
        assert_eq!(c.facets().count(), 1);
    }

    #[test]
    fn faces_of_simplex() {
        let s = Simplex::new(vec![2, 0, 1]).unwrap();
        let edges: Vec<_> = s.faces(1).unwrap().iter().map(|f| f.vertices().to_vec()).collect();
        assert_eq!(edges, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(s.faces(0).unwrap().len(), 3);
        assert_eq!(Simplex::new(vec![0, 1, 2, 3]).unwrap().faces(2).unwrap().len(), 4);
        assert!(matches!(s.faces(3), Err(Error::Argument(_))));
    }

    #[test]
    fn facets_containing_examples() {
        let two = fixtures::k_two();
        let e = two.simplex_str("1 2").unwrap();
        assert_eq!(two.facets_containing(&e).unwrap().len(), 2);
        let tet = fixtures::k_tet();
        let v = tet.simplex_str("0").unwrap();
        assert_eq!(tet.facets_containing(&v).unwrap(), vec![tet.simplex_str("0 1 2 3").unwrap()]);
        let bow = fixtures::k_bow();
        assert_eq!(bow.facets_containing(&bow.simplex_str("2").unwrap()).unwrap().len(), 2);
        let outsider = Simplex::new(vec![0, 3]).unwrap();
        assert!(matches!(two.facets_containing(&outsider), Err(Error::NotMember(_))));
    }

    #[test]
    fn rejects_empty_and_duplicates() {
        let none: Vec<Vec<String>> = vec![];
        assert_eq!(Complex::from_label_sets(&none), Err(Error::EmptyComplex));
        let err = Complex::from_label_sets(&[vec!["a", "b"], vec!["c", "c"]]).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn single_vertex_is_legal() {
        let c = Complex::from_label_sets(&[vec!["x"]]).unwrap();
        assert_eq!(c.f_vector(), vec![1]);
        assert_eq!(c.dim(), 0);
    }

    #[test]
    fn labels_sort_lexicographically() {
        let c = Complex::from_label_sets(&[vec!["b", "a"], vec!["c", "b"]]).unwrap();
        assert_eq!(c.vertex_table().labels(), &["a", "b", "c"]);
        assert_eq!(c.label(&c.simplex(&["b", "c"]).unwrap()), "b-c");
    }

    #[test]
    fn max_coface_dimension() {
        let two = fixtures::k_two();
        assert_eq!(two.max_coface_dim(&two.simplex_str("0").unwrap()), Some(2));
        let bow = fixtures::k_bow();
        assert_eq!(bow.max_coface_dim(&bow.simplex_str("0 1 2").unwrap()), Some(2));
    }

    #[test]
    fn global_indices_round_trip() {
        let c = fixtures::t_chain();
        for (g, s) in c.simplices().enumerate() {
            assert_eq!(c.chain_basis().global_index(s), Some(g));
            assert_eq!(c.chain_basis().at_global(g), s);
        }
    }
}
