use proptest::collection::{btree_set, vec};
use proptest::prelude::*;

use simcent::adjacency;
use simcent::io::{emit_complex, parse_complex_file};
use simcent::oracle::{self, Naive};
use simcent::spectral::{self, incidence_sign};
use simcent::walks::{self, Distance};
use simcent::{Complex, NearnessGraph, WalkSemantics};

fn complex_strategy() -> impl Strategy<Value = Complex> {
    vec(btree_set(0usize..9, 1..=4), 1..=6).prop_map(|sets| {
        let sets: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        Complex::from_vertex_sets(&sets).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn parse_inverts_emit(c in complex_strategy()) {
        let text = emit_complex(&c);
        let back = parse_complex_file(&text).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(emit_complex(&back), text);
    }

    #[test]
    fn facets_generate_the_complex(c in complex_strategy()) {
        for s in c.simplices() {
            prop_assert!(c.facets().any(|f| s.is_face_of(f)));
            for p in 0..s.dim() {
                for face in s.faces(p).unwrap() {
                    prop_assert!(c.contains(&face));
                }
            }
        }
    }

    #[test]
    fn laplacians_are_symmetric_psd(c in complex_strategy(), x in vec(-9i64..=9, 64)) {
        for q in 0..=c.dim() {
            for (h, hd) in oracle::laplacian_cases(&c, q) {
                let b = spectral::laplacian(&c, q, h, hd).unwrap();
                let n = b.total.nrows();
                prop_assert_eq!(&b.total, &b.total.transpose());
                for m in [&b.up, &b.down, &b.total] {
                    let quad: i64 = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| x[i] * m[(i, j)] * x[j]).sum();
                    prop_assert!(quad >= 0);
                }
            }
        }
    }

    #[test]
    fn boundary_squares_to_zero(c in complex_strategy()) {
        for q in 1..c.dim() {
            let outer = spectral::boundary_matrix(&c, q + 1, 1).unwrap().to_dense();
            let inner = spectral::boundary_matrix(&c, q, 1).unwrap().to_dense();
            prop_assert!((inner * outer).iter().all(|&v| v == 0));
        }
    }

    #[test]
    fn boundary_columns_have_binomial_support(c in complex_strategy()) {
        for q in 1..=c.dim() {
            for h in 1..=q {
                let b = spectral::boundary_matrix(&c, q, h).unwrap();
                for col in &b.columns {
                    prop_assert_eq!(col.len() as u64, num_integer::binomial(q as u64 + 1, (q - h) as u64 + 1));
                }
            }
        }
    }

    #[test]
    fn signs_match_permutation_parity(c in complex_strategy()) {
        for tau in c.simplices() {
            for p in 0..tau.dim() {
                for sigma in tau.faces(p).unwrap() {
                    prop_assert_eq!(i64::from(incidence_sign(tau, &sigma)), oracle::permutation_sign(tau, &sigma));
                }
            }
        }
    }

    #[test]
    fn degrees_match_enumeration(c in complex_strategy()) {
        let naive = Naive::new(&c);
        for s in c.simplices() {
            for query in oracle::legal_queries(&c, s.dim()) {
                prop_assert_eq!(adjacency::degree(&c, s, query).unwrap(), naive.degree(s, query));
            }
        }
    }

    #[test]
    fn distances_form_a_metric(c in complex_strategy()) {
        let g = NearnessGraph::new(&c);
        for p in 0..=c.dim() {
            let nodes: Vec<_> = c.simplices().filter(|s| s.dim() >= p).cloned().collect();
            let d: Vec<Vec<Distance>> = nodes
                .iter()
                .map(|a| nodes.iter().map(|b| walks::p_distance(&g, a, b, p, WalkSemantics::AtLeast).unwrap()).collect())
                .collect();
            for i in 0..nodes.len() {
                prop_assert_eq!(d[i][i], Distance::Finite(0));
                for j in 0..nodes.len() {
                    prop_assert_eq!(d[i][j], d[j][i]);
                    for k in 0..nodes.len() {
                        if let (Some(a), Some(b)) = (d[i][j].finite(), d[j][k].finite()) {
                            prop_assert!(d[i][k].finite().is_some_and(|x| x <= a + b));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn q_star_counts_partition_the_level(c in complex_strategy()) {
        let g = NearnessGraph::new(&c);
        for p in 0..=c.dim() {
            let part = walks::components(&g, p, WalkSemantics::AtLeast);
            let level = c.simplices().filter(|s| s.dim() >= p).count();
            prop_assert_eq!(part.class_sizes().iter().sum::<usize>(), level);
        }
    }
}
