//! Small named complexes used across tests, the CLI and the Python bindings,
//! plus a seeded generator of small mixed-dimension complexes.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::Complex;

fn build(sets: &[&[usize]]) -> Complex {
    let sets: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
    Complex::from_vertex_sets(&sets).expect("fixture is well formed")
}

/// closure{012}
pub fn k_tri() -> Complex {
    build(&[&[0, 1, 2]])
}

/// closure{012, 123}
pub fn k_two() -> Complex {
    build(&[&[0, 1, 2], &[1, 2, 3]])
}

/// closure{012, 234}: two triangles meeting in one vertex.
pub fn k_bow() -> Complex {
    build(&[&[0, 1, 2], &[2, 3, 4]])
}

/// closure{0123}
pub fn k_tet() -> Complex {
    build(&[&[0, 1, 2, 3]])
}

/// closure{012, 034, 056}: three triangles sharing vertex 0.
pub fn k_wind() -> Complex {
    build(&[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6]])
}

/// closure{012, 123, 013}
pub fn k_clust4() -> Complex {
    build(&[&[0, 1, 2], &[1, 2, 3], &[0, 1, 3]])
}

/// closure{012, 123, 234}
pub fn t_chain() -> Complex {
    build(&[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4]])
}

pub fn all() -> Vec<(&'static str, Complex)> {
    vec![
        ("K_tri", k_tri()),
        ("K_two", k_two()),
        ("K_bow", k_bow()),
        ("K_tet", k_tet()),
        ("K_wind", k_wind()),
        ("K_clust4", k_clust4()),
        ("T_chain", t_chain()),
    ]
}

pub fn by_name(name: &str) -> Option<Complex> {
    all().into_iter().find(|(n, _)| n.eq_ignore_ascii_case(name)).map(|(_, c)| c)
}

/// A random complex on at most `max_vertices` vertices with facets of
/// dimension at most `max_dim`. Between one and eight facets are drawn, each
/// of uniformly random size.
pub fn random_complex(seed: u64, max_vertices: usize, max_dim: usize) -> Complex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(3.max(max_dim + 1).min(max_vertices)..=max_vertices);
    let k = rng.random_range(1..=8);
    let sets: Vec<Vec<usize>> = (0..k)
        .map(|_| {
            let size = rng.random_range(1..=(max_dim + 1).min(n));
            sample(&mut rng, n, size).into_vec()
        })
        .collect();
    Complex::from_vertex_sets(&sets).expect("non-empty sets of distinct vertices")
}

/// `count` complexes with seeds `seed, seed + 1, ...`.
pub fn random_corpus(count: usize, seed: u64, max_vertices: usize, max_dim: usize) -> Vec<Complex> {
    (0..count as u64).map(|i| random_complex(seed.wrapping_add(i), max_vertices, max_dim)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_complexes_respect_bounds() {
        for c in random_corpus(50, 7, 12, 3) {
            assert!(c.vertex_table().len() <= 12);
            assert!(c.dim() <= 3);
        }
    }

    #[test]
    fn random_complex_is_seeded() {
        assert_eq!(random_complex(42, 10, 3), random_complex(42, 10, 3));
    }
}
