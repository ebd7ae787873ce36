//! Oriented machinery: incidence signs, `(q,h)`-boundary matrices, multi
//! combinatorial Laplacians, `p`-adjacency matrices and the matrix formulas
//! for degrees, plus the power iteration used for eigenvector centrality.
//!
//! All chain bases use the canonical ascending orientation. Integer matrices
//! are exact; floating point appears only in [`principal_eigenvector`].

use nalgebra::DMatrix;

use crate::adjacency::{DegreeQuery, DegreeReport};
use crate::complex::{Complex, Simplex};
use crate::error::{arg, Error, Result};

/// Coefficient of `sigma` in the `(dim tau - dim sigma)`-boundary of `tau`:
/// the parity of the permutation that moves the removed vertices of `tau`
/// (in ascending order) to the front. Zero when `sigma` is not a face.
pub fn incidence_sign(tau: &Simplex, sigma: &Simplex) -> i8 {
    if !sigma.is_face_of(tau) {
        return 0;
    }
    let transpositions: usize = tau
        .vertices()
        .iter()
        .enumerate()
        .filter(|(_, v)| !sigma.contains_vertex(**v))
        .enumerate()
        .map(|(k, (pos, _))| pos - k)
        .sum();
    if transpositions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Matrix of the `(q,h)`-boundary operator, stored by column. Rows index
/// `(q-h)`-simplices, columns `q`-simplices, both in chain-basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub q: usize,
    pub h: usize,
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<Vec<(usize, i8)>>,
}

impl BoundaryMatrix {
    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.columns[col].iter().find(|(r, _)| *r == row).map_or(0, |(_, v)| *v)
    }

    pub fn to_dense(&self) -> DMatrix<i64> {
        let mut m = DMatrix::zeros(self.rows, self.cols);
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m[(i, j)] = v as i64;
            }
        }
        m
    }

    pub fn abs_dense(&self) -> DMatrix<i64> {
        self.to_dense().abs()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }
}

/// Boundary matrix without range checks: `h = 0` gives the identity and
/// dimensions outside the complex give empty blocks.
pub(crate) fn boundary_any(c: &Complex, q: usize, h: usize) -> BoundaryMatrix {
    let cols = c.layer(q);
    let rows = if h <= q { c.layer(q - h).len() } else { 0 };
    let columns = if h > q {
        vec![Vec::new(); cols.len()]
    } else {
        cols.iter()
            .map(|tau| {
                tau.faces(q - h)
                    .expect("q - h <= q")
                    .into_iter()
                    .map(|f| (c.index_of(&f).expect("downward closed"), incidence_sign(tau, &f)))
                    .collect()
            })
            .collect()
    };
    BoundaryMatrix { q, h, rows, cols: cols.len(), columns }
}

/// Matrix of `∂_{q,h}`; requires `1 <= h <= q <= dim K`. Its transpose is the
/// matrix of the adjoint.
pub fn boundary_matrix(c: &Complex, q: usize, h: usize) -> Result<BoundaryMatrix> {
    if h == 0 || h > q || q > c.dim() {
        return arg(format!("boundary needs 1 <= h <= q <= dim K (q={q}, h={h}, dim K={})", c.dim()));
    }
    Ok(boundary_any(c, q, h))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Upper,
    Lower,
}

/// Signed count of common `p`-cofaces (upper) or common `p`-faces (lower),
/// one term per unoriented simplex with canonical signs.
pub fn oriented_degree(c: &Complex, a: &Simplex, b: &Simplex, p: usize, side: Side) -> Result<i64> {
    c.require(a)?;
    c.require(b)?;
    if a == b {
        return arg("oriented degree is only defined between distinct simplices");
    }
    let sum = match side {
        Side::Upper => c
            .layer(p)
            .iter()
            .filter(|tau| a.is_face_of(tau) && b.is_face_of(tau))
            .map(|tau| incidence_sign(tau, a) as i64 * incidence_sign(tau, b) as i64)
            .sum(),
        Side::Lower => c
            .layer(p)
            .iter()
            .filter(|tau| tau.is_face_of(a) && tau.is_face_of(b))
            .map(|tau| incidence_sign(a, tau) as i64 * incidence_sign(b, tau) as i64)
            .sum(),
    };
    Ok(sum)
}

/// Upper, lower and total `(q,h,h')`-Laplacian matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaplacianBundle {
    pub q: usize,
    pub h: usize,
    pub h_down: usize,
    pub up: DMatrix<i64>,
    pub down: DMatrix<i64>,
    pub total: DMatrix<i64>,
}

/// `L = B_{q+h,h} B_{q+h,h}^t + B_{q,h'}^t B_{q,h'}`. Missing dimensions give
/// zero blocks.
pub fn laplacian(c: &Complex, q: usize, h: usize, h_down: usize) -> Result<LaplacianBundle> {
    if q > c.dim() {
        return arg(format!("q={q} exceeds dim K={}", c.dim()));
    }
    if h == 0 || h_down == 0 {
        return arg("Laplacian steps h and h' must be at least 1");
    }
    let b_up = boundary_any(c, q + h, h).to_dense();
    let b_down = boundary_any(c, q, h_down).to_dense();
    let up = &b_up * b_up.transpose();
    let down = b_down.transpose() * &b_down;
    let total = &up + &down;
    Ok(LaplacianBundle { q, h, h_down, up, down, total })
}

/// 0/1 matrix of `p`-adjacency among `q`-simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyMatrix01 {
    pub q: usize,
    pub p: usize,
    pub entries: DMatrix<i64>,
}

impl AdjacencyMatrix01 {
    pub fn to_f64(&self) -> DMatrix<f64> {
        self.entries.map(|v| v as f64)
    }
}

fn clamp01(m: DMatrix<i64>) -> DMatrix<i64> {
    m.map(|v| v.min(1))
}

/// Number of common `p`-faces between `q`- and `q2`-simplices.
pub(crate) fn common_face_counts(c: &Complex, q: usize, q2: usize, p: usize) -> DMatrix<i64> {
    let (rows, cols) = (c.layer(q).len(), c.layer(q2).len());
    if p > q || p > q2 {
        return DMatrix::zeros(rows, cols);
    }
    let a = boundary_any(c, q, q - p).abs_dense();
    let b = boundary_any(c, q2, q2 - p).abs_dense();
    a.transpose() * b
}

/// Number of common `p`-cofaces between `q`- and `q2`-simplices.
pub(crate) fn common_coface_counts(c: &Complex, q: usize, q2: usize, p: usize) -> DMatrix<i64> {
    let (rows, cols) = (c.layer(q).len(), c.layer(q2).len());
    if p < q || p < q2 || p > c.dim() {
        return DMatrix::zeros(rows, cols);
    }
    let a = boundary_any(c, p, p - q).abs_dense();
    let b = boundary_any(c, p, p - q2).abs_dense();
    a * b.transpose()
}

/// `adj^p` between `q`-simplices (rows) and `q2`-simplices (columns):
/// `m_L(p) (1 - m_L(p+1)) (1 - m_U(q+q2-p))`, with the vertex convention
/// (edge-sharing vertices are adjacent) when `q = q2 = p = 0`.
pub(crate) fn adj_block(c: &Complex, q: usize, q2: usize, p: usize) -> DMatrix<i64> {
    if q == 0 && q2 == 0 {
        let mut m = clamp01(common_coface_counts(c, 0, 0, 1));
        m.fill_diagonal(0);
        return if p == 0 { m } else { m.map(|_| 0) };
    }
    let m_l = clamp01(common_face_counts(c, q, q2, p));
    let m_l_next = clamp01(common_face_counts(c, q, q2, p + 1));
    let m_u = if q + q2 >= p {
        clamp01(common_coface_counts(c, q, q2, q + q2 - p))
    } else {
        DMatrix::zeros(m_l.nrows(), m_l.ncols())
    };
    m_l.zip_zip_map(&m_l_next, &m_u, |l, ln, u| l * (1 - ln) * (1 - u))
}

fn check_adjacency_params(q: usize, p: usize) -> Result<()> {
    if p < q || (q == 0 && p == 0) {
        Ok(())
    } else {
        arg(format!("p-adjacency matrix needs p < q, or q = p = 0 (q={q}, p={p})"))
    }
}

/// `A(q,p)`: symmetric 0/1 matrix with zero diagonal, `(i,j) = adj^p(σ_i, σ_j)`.
pub fn adjacency_matrix(c: &Complex, q: usize, p: usize) -> Result<AdjacencyMatrix01> {
    check_adjacency_params(q, p)?;
    if q > c.dim() {
        return arg(format!("q={q} exceeds dim K={}", c.dim()));
    }
    Ok(AdjacencyMatrix01 { q, p, entries: adj_block(c, q, q, p) })
}

/// Degree families available through the matrix formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremFamily {
    Lower,
    Upper,
    Adjacency,
    MaximalAdjacency,
}

fn row_sums(m: &DMatrix<i64>) -> Vec<i64> {
    m.row_iter().map(|r| r.sum()).collect()
}

/// Degrees of every `q`-simplex computed only from boundary matrices and
/// sign functions.
pub fn theorem_degrees(c: &Complex, q: usize, p: usize, family: TheoremFamily) -> Result<DegreeReport> {
    if q > c.dim() {
        return arg(format!("q={q} exceeds dim K={}", c.dim()));
    }
    let n = c.layer(q).len();
    let top = c.dim();
    let (query, values): (DegreeQuery, Vec<i64>) = match family {
        TheoremFamily::Lower => {
            if p > q {
                return arg(format!("lower degree needs p <= q (p={p}, q={q})"));
            }
            let mut acc = vec![-1i64; n];
            for q2 in p..=top {
                for (a, r) in acc.iter_mut().zip(row_sums(&clamp01(common_face_counts(c, q, q2, p)))) {
                    *a += r;
                }
            }
            (DegreeQuery::Lower { p, strict: false }, acc)
        }
        TheoremFamily::Upper => {
            if p < q {
                return arg(format!("upper degree needs p >= q (p={p}, q={q})"));
            }
            // the self term is 1 exactly when the simplex has a p-coface
            let own = clamp01(common_coface_counts(c, q, q, p));
            let mut acc: Vec<i64> = own.diagonal().iter().map(|v| -v).collect();
            for q2 in 0..=p.min(top) {
                for (a, r) in acc.iter_mut().zip(row_sums(&clamp01(common_coface_counts(c, q, q2, p)))) {
                    *a += r;
                }
            }
            (DegreeQuery::Upper { p, strict: false }, acc)
        }
        TheoremFamily::Adjacency | TheoremFamily::MaximalAdjacency => {
            check_adjacency_params(q, p)?;
            let maximal = family == TheoremFamily::MaximalAdjacency;
            let mut acc = vec![0i64; n];
            for q2 in p..=top {
                let adj = adj_block(c, q, q2, p);
                let mut counted = adj.clone();
                if maximal {
                    let mut cover = DMatrix::<i64>::zeros(n, adj.ncols());
                    for q3 in q2 + 1..=top {
                        let faces = boundary_any(c, q3, q3 - q2).abs_dense();
                        cover += adj_block(c, q, q3, p) * faces.transpose();
                    }
                    let correction = clamp01(cover).component_mul(&adj);
                    counted -= correction;
                }
                for (a, r) in acc.iter_mut().zip(row_sums(&counted)) {
                    *a += r;
                }
            }
            (DegreeQuery::Adjacency { p, maximal }, acc)
        }
    };
    Ok(DegreeReport { query, q, values: c.layer(q).iter().cloned().zip(values).collect() })
}

pub const POWER_TOLERANCE: f64 = 1e-12;
pub const POWER_MAX_ITERATIONS: usize = 100_000;

/// Principal eigenpair of a symmetric non-negative matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenResult {
    pub eigenvalue: f64,
    /// Non-negative, sums to 1.
    pub vector: Vec<f64>,
    /// Max-norm of `A x - λ x`.
    pub residual: f64,
    pub iterations: usize,
    /// Set for the all-zero matrix (uniform vector, λ = 0) and when the
    /// iteration cap is hit.
    pub degenerate: bool,
    /// Indices carrying the mass: the connected component with the largest
    /// spectral radius (ties to the smallest index).
    pub component: Vec<usize>,
}

fn pattern_components(a: &DMatrix<f64>) -> Vec<Vec<usize>> {
    let n = a.nrows();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            for v in 0..n {
                if !seen[v] && a[(u, v)] != 0.0 {
                    seen[v] = true;
                    comp.push(v);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Shifted power iteration on `B + I` from the uniform vector; the shift
/// makes the Perron root strictly dominant on bipartite patterns.
fn power_iterate(b: &DMatrix<f64>) -> (f64, Vec<f64>, usize, bool) {
    let m = b.nrows();
    let mut x = vec![1.0 / m as f64; m];
    let mut iterations = 0;
    let mut converged = false;
    while iterations < POWER_MAX_ITERATIONS {
        iterations += 1;
        let mut y: Vec<f64> = (0..m).map(|i| x[i] + (0..m).map(|j| b[(i, j)] * x[j]).sum::<f64>()).collect();
        let total: f64 = y.iter().sum();
        y.iter_mut().for_each(|v| *v /= total);
        let diff = x.iter().zip(&y).map(|(u, v)| (u - v).abs()).fold(0.0, f64::max);
        x = y;
        if diff <= POWER_TOLERANCE {
            converged = true;
            break;
        }
    }
    let bx: Vec<f64> = (0..m).map(|i| (0..m).map(|j| b[(i, j)] * x[j]).sum()).collect();
    let num: f64 = x.iter().zip(&bx).map(|(u, v)| u * v).sum();
    let den: f64 = x.iter().map(|u| u * u).sum();
    (num / den, x, iterations, converged)
}

pub fn principal_eigenvector(a: &DMatrix<f64>) -> Result<EigenResult> {
    let n = a.nrows();
    if n != a.ncols() {
        return arg("matrix must be square");
    }
    if n == 0 {
        return Err(Error::UndefinedResult("eigenvector of an empty matrix".into()));
    }
    if a != &a.transpose() {
        return arg("matrix must be symmetric");
    }
    if a.iter().any(|v| *v < 0.0 || !v.is_finite()) {
        return arg("matrix must be finite and non-negative");
    }

    // (eigenvalue, component, local vector, iterations, converged)
    type Candidate = (f64, Vec<usize>, Vec<f64>, usize, bool);
    let mut best: Option<Candidate> = None;
    for comp in pattern_components(a) {
        let sub = DMatrix::from_fn(comp.len(), comp.len(), |i, j| a[(comp[i], comp[j])]);
        if sub.iter().all(|v| *v == 0.0) {
            continue;
        }
        let (lambda, x, iters, converged) = power_iterate(&sub);
        let better = match &best {
            None => true,
            Some((l, ..)) => lambda > l + 1e-9 * l.max(1.0),
        };
        if better {
            best = Some((lambda, comp, x, iters, converged));
        }
    }

    let (eigenvalue, component, vector, iterations, degenerate) = match best {
        None => (0.0, (0..n).collect(), vec![1.0 / n as f64; n], 0, true),
        Some((lambda, comp, x, iters, converged)) => {
            let mut full = vec![0.0; n];
            for (k, &i) in comp.iter().enumerate() {
                full[i] = x[k];
            }
            (lambda, comp, full, iters, !converged)
        }
    };
    let residual = (0..n)
        .map(|i| ((0..n).map(|j| a[(i, j)] * vector[j]).sum::<f64>() - eigenvalue * vector[i]).abs())
        .fold(0.0, f64::max);
    Ok(EigenResult { eigenvalue, vector, residual, iterations, degenerate, component })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjacency;
    use crate::fixtures;

    fn s(c: &Complex, l: &str) -> Simplex {
        c.simplex_str(l).unwrap()
    }

    #[test]
    fn signs_of_triangle_boundaries() {
        let t = Simplex::new(vec![0, 1, 2]).unwrap();
        let v = |i| Simplex::new(vec![i]).unwrap();
        assert_eq!(incidence_sign(&t, &v(2)), 1);
        assert_eq!(incidence_sign(&t, &v(1)), -1);
        assert_eq!(incidence_sign(&t, &v(0)), 1);
        let e = |a, b| Simplex::new(vec![a, b]).unwrap();
        assert_eq!(incidence_sign(&t, &e(1, 2)), 1);
        assert_eq!(incidence_sign(&t, &e(0, 2)), -1);
        assert_eq!(incidence_sign(&t, &e(0, 1)), 1);
        assert_eq!(incidence_sign(&t, &t), 1);
        assert_eq!(incidence_sign(&t, &e(0, 3)), 0);
    }

    #[test]
    fn boundary_matrix_examples() {
        let tri = fixtures::k_tri();
        let b = boundary_matrix(&tri, 1, 1).unwrap();
        for col in &b.columns {
            let mut vals: Vec<i8> = col.iter().map(|(_, v)| *v).collect();
            vals.sort();
            assert_eq!(vals, vec![-1, 1]);
        }
        let b22 = boundary_matrix(&tri, 2, 2).unwrap().to_dense();
        assert_eq!(b22.column(0).iter().copied().collect::<Vec<_>>(), vec![1, -1, 1]);
        let tet = fixtures::k_tet();
        let b31 = boundary_matrix(&tet, 3, 1).unwrap();
        assert_eq!(b31.nnz(), 4);
        assert_eq!(b31.to_dense().column(0).iter().copied().collect::<Vec<_>>(), vec![-1, 1, -1, 1]);
        assert!(boundary_matrix(&tet, 2, 3).is_err());
        assert!(boundary_matrix(&tet, 4, 1).is_err());
    }

    #[test]
    fn oriented_degree_examples() {
        let tri = fixtures::k_tri();
        let (e01, e02) = (s(&tri, "0 1"), s(&tri, "0 2"));
        assert_eq!(oriented_degree(&tri, &e01, &e02, 0, Side::Lower).unwrap(), 1);
        assert_eq!(oriented_degree(&tri, &e01, &e02, 2, Side::Upper).unwrap(), -1);
        let bow = fixtures::k_bow();
        assert_eq!(oriented_degree(&bow, &s(&bow, "0 1"), &s(&bow, "3 4"), 0, Side::Lower).unwrap(), 0);
    }

    #[test]
    fn laplacian_examples() {
        let tri = fixtures::k_tri();
        let l = laplacian(&tri, 1, 1, 1).unwrap();
        assert!(l.total.diagonal().iter().all(|v| *v == 3));
        let tet = fixtures::k_tet();
        let l = laplacian(&tet, 1, 2, 1).unwrap();
        assert!(l.total.diagonal().iter().all(|v| *v == 3));
        let l = laplacian(&tri, 2, 1, 1).unwrap();
        assert!(l.up.iter().all(|v| *v == 0));
        assert_eq!(l.total[(0, 0)], 3);
    }

    #[test]
    fn adjacency_matrix_examples() {
        let two = fixtures::k_two();
        assert_eq!(adjacency_matrix(&two, 2, 1).unwrap().entries, DMatrix::from_row_slice(2, 2, &[0, 1, 1, 0]));
        let tet = fixtures::k_tet();
        assert!(adjacency_matrix(&tet, 2, 1).unwrap().entries.iter().all(|v| *v == 0));
        let bow = fixtures::k_bow();
        assert_eq!(adjacency_matrix(&bow, 2, 0).unwrap().entries, DMatrix::from_row_slice(2, 2, &[0, 1, 1, 0]));
        assert!(adjacency_matrix(&bow, 1, 1).is_err());
    }

    #[test]
    fn theorem_degrees_on_bowtie() {
        let bow = fixtures::k_bow();
        let a = theorem_degrees(&bow, 2, 0, TheoremFamily::Adjacency).unwrap();
        assert_eq!(a.values.iter().map(|(_, v)| *v).collect::<Vec<_>>(), vec![3, 3]);
        let a = theorem_degrees(&bow, 2, 0, TheoremFamily::MaximalAdjacency).unwrap();
        assert_eq!(a.values.iter().map(|(_, v)| *v).collect::<Vec<_>>(), vec![1, 1]);
    }

    #[test]
    fn theorem_lower_matches_enumeration_on_k_two() {
        let two = fixtures::k_two();
        let rep = theorem_degrees(&two, 2, 1, TheoremFamily::Lower).unwrap();
        for (sx, v) in rep.values {
            assert_eq!(v, adjacency::degree(&two, &sx, DegreeQuery::Lower { p: 1, strict: false }).unwrap());
        }
    }

    #[test]
    fn eigenvector_examples() {
        let swap = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        let r = principal_eigenvector(&swap).unwrap();
        assert!((r.eigenvalue - 1.0).abs() < 1e-12);
        assert!(r.vector.iter().all(|v| (v - 0.5).abs() < 1e-12));
        assert!(!r.degenerate);

        let zero = DMatrix::<f64>::zeros(4, 4);
        let r = principal_eigenvector(&zero).unwrap();
        assert!(r.degenerate);
        assert_eq!(r.eigenvalue, 0.0);
        assert!(r.vector.iter().all(|v| *v == 0.25));

        let asym = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(principal_eigenvector(&asym).is_err());
    }

    #[test]
    fn reducible_matrix_picks_largest_component() {
        // triangle on {0,1,2} and an edge {3,4}
        let mut a = DMatrix::<f64>::zeros(5, 5);
        for (i, j) in [(0, 1), (1, 2), (0, 2), (3, 4)] {
            a[(i, j)] = 1.0;
            a[(j, i)] = 1.0;
        }
        let r = principal_eigenvector(&a).unwrap();
        assert_eq!(r.component, vec![0, 1, 2]);
        assert!((r.eigenvalue - 2.0).abs() < 1e-10);
        assert_eq!(r.vector[3], 0.0);
        // two equal edges: smallest index wins
        let mut b = DMatrix::<f64>::zeros(4, 4);
        for (i, j) in [(0, 1), (2, 3)] {
            b[(i, j)] = 1.0;
            b[(j, i)] = 1.0;
        }
        assert_eq!(principal_eigenvector(&b).unwrap().component, vec![0, 1]);
    }
}
