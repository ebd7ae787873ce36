//! Higher-order adjacency predicates and degree families.
//!
//! Every degree here is an exhaustive count over the simplices of the
//! complex; the matrix formulas in [`crate::spectral`] are checked against
//! these counts. Predicates use downward closure to answer face and coface
//! questions through membership tests:
//!
//! * two simplices share a `p`-face iff they share at least `p + 1` vertices;
//! * they lie in a common `p`-simplex iff their union `U` is a member and
//!   `dim U <= p <= max coface dimension of U`.

use std::fmt;

use crate::complex::{Complex, Simplex};
use crate::error::{arg, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AdjacencyFamily {
    Lower,
    StrictLower,
    Upper,
    StrictUpper,
    PAdjacent,
    MaximalPAdjacent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AdjacencyKind {
    pub family: AdjacencyFamily,
    pub p: usize,
}

/// Which degree to count. `q` below is the dimension of the simplex the
/// degree is taken at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegreeQuery {
    /// Simplices of any dimension sharing a `p`-face (strict: and no
    /// `(p+1)`-face). Requires `p <= q`.
    Lower { p: usize, strict: bool },
    /// As `Lower`, restricted to simplices of dimension `q - h`. `h` may be
    /// negative (higher-dimensional partners).
    LowerStep { h: isize, p: usize, strict: bool },
    /// Simplices lying with this one in a common `p`-simplex (strict: and in
    /// no common `(p+1)`-simplex). Requires `p >= q`.
    Upper { p: usize, strict: bool },
    /// `(q+h)`-simplices containing this one (strict: that are facets).
    UpperStep { h: usize, strict: bool },
    /// `p`-adjacency degree; `maximal` counts only maximal partners.
    Adjacency { p: usize, maximal: bool },
    /// Upper degree at level `p1 > q` plus maximal `p2`-adjacency degree,
    /// `p2 < q`; `strict_upper` switches to the strict upper degree.
    TwoParam { p1: usize, p2: usize, strict_upper: bool },
    /// Maximal adjacency summed over `p < q` plus strict upper summed over `h`.
    MaximalSimplicial,
}

impl fmt::Display for DegreeQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let star = |b: bool| if b { "*" } else { "" };
        match *self {
            DegreeQuery::Lower { p, strict } => write!(f, "L({p}{})", star(strict)),
            DegreeQuery::LowerStep { h, p, strict } => write!(f, "L({h},{p}{})", star(strict)),
            DegreeQuery::Upper { p, strict } => write!(f, "U({p}{})", star(strict)),
            DegreeQuery::UpperStep { h, strict } => write!(f, "U({h},q+{h}{})", star(strict)),
            DegreeQuery::Adjacency { p, maximal } => write!(f, "A({p}{})", star(maximal)),
            DegreeQuery::TwoParam { p1, p2, strict_upper } => {
                write!(f, "({p1}{},{p2}*)", star(strict_upper))
            }
            DegreeQuery::MaximalSimplicial => write!(f, "deg*"),
        }
    }
}

/// Degree values for every simplex of one dimension, in basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub query: DegreeQuery,
    pub q: usize,
    pub values: Vec<(Simplex, i64)>,
}

// ---------------------------------------------------------------------------
// raw predicates (membership assumed, no argument checks)
// ---------------------------------------------------------------------------

pub(crate) fn lower_raw(a: &Simplex, b: &Simplex, p: usize, strict: bool) -> bool {
    let common = a.common_count(b);
    if strict {
        common == p + 1
    } else {
        common > p
    }
}

pub(crate) fn upper_raw(c: &Complex, a: &Simplex, b: &Simplex, p: usize, strict: bool) -> bool {
    let u = a.union(b);
    match c.max_coface_dim(&u) {
        Some(top) if u.dim() <= p && p <= top => !strict || p == top,
        _ => false,
    }
}

pub(crate) fn p_adjacent_raw(c: &Complex, a: &Simplex, b: &Simplex, p: usize) -> bool {
    if a == b {
        return false;
    }
    if a.dim() == 0 && b.dim() == 0 {
        return p == 0 && upper_raw(c, a, b, 1, false);
    }
    // sharing exactly p+1 vertices makes a ∪ b a (q+q'-p)-set; the pair is
    // upper adjacent at that level iff the union is a member
    lower_raw(a, b, p, true) && !c.contains(&a.union(b))
}

/// `partner` is maximal `p`-adjacent to `center`. Any larger partner that is
/// also `p`-adjacent can be reached by adding one vertex outside `center`, so
/// only codimension-one cofaces need checking.
pub(crate) fn maximal_raw(c: &Complex, partner: &Simplex, center: &Simplex, p: usize) -> bool {
    p_adjacent_raw(c, partner, center, p)
        && !c.cofaces_codim1(partner).iter().any(|up| p_adjacent_raw(c, up, center, p))
}

fn check_pair(c: &Complex, a: &Simplex, b: &Simplex) -> Result<()> {
    c.require(a)?;
    c.require(b)?;
    if a == b {
        return arg("adjacency is only defined between distinct simplices");
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// public predicates
// ---------------------------------------------------------------------------

/// `a` and `b` share a `p`-face; with `strict`, they share no `(p+1)`-face.
pub fn lower_adjacent(c: &Complex, a: &Simplex, b: &Simplex, p: usize, strict: bool) -> Result<bool> {
    check_pair(c, a, b)?;
    Ok(lower_raw(a, b, p, strict))
}

/// Some `p`-simplex contains both; with `strict`, no `(p+1)`-simplex does.
pub fn upper_adjacent(c: &Complex, a: &Simplex, b: &Simplex, p: usize, strict: bool) -> Result<bool> {
    c.require(a)?;
    c.require(b)?;
    Ok(upper_raw(c, a, b, p, strict))
}

/// Strictly `p`-lower adjacent and not `(q+q'-p)`-upper adjacent. Two
/// vertices are adjacent (at `p = 0`) iff they span an edge.
pub fn p_adjacent(c: &Complex, a: &Simplex, b: &Simplex, p: usize) -> Result<bool> {
    check_pair(c, a, b)?;
    Ok(p_adjacent_raw(c, a, b, p))
}

/// `partner` is `p`-adjacent to `center` and not a proper face of another
/// simplex `p`-adjacent to `center`. Directional.
pub fn maximal_p_adjacent(c: &Complex, partner: &Simplex, center: &Simplex, p: usize) -> Result<bool> {
    check_pair(c, partner, center)?;
    Ok(maximal_raw(c, partner, center, p))
}

pub fn adjacent(c: &Complex, a: &Simplex, b: &Simplex, kind: AdjacencyKind) -> Result<bool> {
    let p = kind.p;
    match kind.family {
        AdjacencyFamily::Lower => lower_adjacent(c, a, b, p, false),
        AdjacencyFamily::StrictLower => lower_adjacent(c, a, b, p, true),
        AdjacencyFamily::Upper => upper_adjacent(c, a, b, p, false),
        AdjacencyFamily::StrictUpper => upper_adjacent(c, a, b, p, true),
        AdjacencyFamily::PAdjacent => p_adjacent(c, a, b, p),
        AdjacencyFamily::MaximalPAdjacent => maximal_p_adjacent(c, a, b, p),
    }
}

// ---------------------------------------------------------------------------
// degrees
// ---------------------------------------------------------------------------

/// Checks the parameter ranges of `query` at a `q`-simplex.
pub fn validate(query: &DegreeQuery, q: usize) -> Result<()> {
    match *query {
        DegreeQuery::Lower { p, .. } if p > q => arg(format!("lower degree needs p <= q (p={p}, q={q})")),
        DegreeQuery::LowerStep { h, p, .. } => {
            let partner = q as isize - h;
            if partner < 0 {
                arg(format!("partner dimension q-h = {partner} is negative"))
            } else if p > q || p as isize > partner {
                arg(format!("lower (h,p) degree needs p <= q and p <= q-h (h={h}, p={p}, q={q})"))
            } else {
                Ok(())
            }
        }
        DegreeQuery::Upper { p, .. } if p < q => arg(format!("upper degree needs p >= q (p={p}, q={q})")),
        DegreeQuery::UpperStep { h: 0, .. } => arg("upper (h,q+h) degree needs h >= 1"),
        DegreeQuery::Adjacency { p, .. } if p >= q && !(q == 0 && p == 0) => {
            arg(format!("adjacency degree needs p < q (p={p}, q={q})"))
        }
        DegreeQuery::TwoParam { p1, p2, .. } if p1 <= q || p2 >= q => {
            arg(format!("two-parameter degree needs p1 > q and p2 < q (p1={p1}, p2={p2}, q={q})"))
        }
        _ => Ok(()),
    }
}

fn count<F: Fn(&Simplex) -> bool>(c: &Complex, s: &Simplex, pred: F) -> i64 {
    c.simplices().filter(|t| *t != s && pred(t)).count() as i64
}

/// Maximal `p`-adjacency degree summed over `p < q` (vertex convention at `q = 0`
/// is not included: a vertex has no proper faces to collaborate through).
pub fn deg_star_a(c: &Complex, s: &Simplex) -> i64 {
    (0..s.dim()).map(|p| count(c, s, |t| maximal_raw(c, t, s, p))).sum()
}

/// Number of facets properly containing `s`.
pub fn deg_star_u(c: &Complex, s: &Simplex) -> i64 {
    (1..=c.dim().saturating_sub(s.dim()))
        .map(|h| count(c, s, |t| t.dim() == s.dim() + h && s.is_face_of(t) && upper_raw(c, s, t, s.dim() + h, true)))
        .sum()
}

/// Exhaustive degree count of `s`.
pub fn degree(c: &Complex, s: &Simplex, query: DegreeQuery) -> Result<i64> {
    c.require(s)?;
    let q = s.dim();
    validate(&query, q)?;
    Ok(match query {
        DegreeQuery::Lower { p, strict } => count(c, s, |t| lower_raw(s, t, p, strict)),
        DegreeQuery::LowerStep { h, p, strict } => {
            let target = (q as isize - h) as usize;
            count(c, s, |t| t.dim() == target && lower_raw(s, t, p, strict))
        }
        DegreeQuery::Upper { p, strict } => count(c, s, |t| t.dim() <= p && upper_raw(c, s, t, p, strict)),
        DegreeQuery::UpperStep { h, strict } => {
            count(c, s, |t| t.dim() == q + h && upper_raw(c, s, t, q + h, strict))
        }
        DegreeQuery::Adjacency { p, maximal: false } => count(c, s, |t| p_adjacent_raw(c, s, t, p)),
        DegreeQuery::Adjacency { p, maximal: true } => count(c, s, |t| maximal_raw(c, t, s, p)),
        DegreeQuery::TwoParam { p1, p2, strict_upper } => {
            count(c, s, |t| t.dim() <= p1 && upper_raw(c, s, t, p1, strict_upper))
                + count(c, s, |t| maximal_raw(c, t, s, p2))
        }
        DegreeQuery::MaximalSimplicial => deg_star_a(c, s) + deg_star_u(c, s),
    })
}

/// Degrees of every `q`-simplex.
pub fn degree_report(c: &Complex, q: usize, query: DegreeQuery) -> Result<DegreeReport> {
    validate(&query, q)?;
    let values = c.layer(q).iter().map(|s| degree(c, s, query).map(|d| (s.clone(), d))).collect::<Result<_>>()?;
    Ok(DegreeReport { query, q, values })
}

pub(crate) fn binomial_i64(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// Alternating-sum expression for the strict `(h, q+h)`-upper degree in terms
/// of the plain upper degrees. It agrees with [`degree`] only when distinct
/// cofaces of `s` meet inside a common higher coface; callers treat the
/// enumerated value as authoritative.
pub fn strict_upper_closed_form(c: &Complex, s: &Simplex, h: usize) -> Result<i64> {
    c.require(s)?;
    let q = s.dim();
    if h == 0 || q + h > c.dim() {
        return arg(format!("closed form needs 1 <= h <= dim K - q (h={h}, q={q}, dim K={})", c.dim()));
    }
    let steps = c.dim() - (q + h);
    let mut total = 0i64;
    for i in 0..=steps {
        let up = degree(c, s, DegreeQuery::UpperStep { h: h + i, strict: false })?;
        let sign = if i % 2 == 0 { 1 } else { -1 };
        total += sign * up * binomial_i64((h + i) as i64, h as i64);
    }
    Ok(total)
}
