use simcent::io::{generate_complex, GeneratorConfig, Model};
use simcent::oracle::diff_all;
use simcent::{fixtures, Error};

fn assert_clean(name: &str, c: &simcent::Complex, seed: u64) {
    let report = diff_all(c, seed).unwrap();
    for d in &report.diffs {
        assert!(d.mismatches.is_empty(), "{name}: {} {:?}", d.quantity, &d.mismatches[..d.mismatches.len().min(3)]);
    }
}

#[test]
fn mixed_random_complexes_agree_with_brute_force() {
    for (i, c) in fixtures::random_corpus(40, 91, 10, 3).iter().enumerate() {
        assert_clean(&format!("random#{i}"), c, i as u64);
    }
}

#[test]
fn generated_complexes_agree_with_brute_force() {
    for seed in 0..6 {
        for model in [Model::Pure { dim: 2, prob: 0.3 }, Model::Flag { prob: 0.5 }] {
            let cfg = GeneratorConfig { model, n: 8, seed };
            match generate_complex(&cfg) {
                Ok(c) => assert_clean(&format!("{model:?} seed {seed}"), &c, seed),
                Err(Error::EmptyComplex) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
}

#[test]
fn oracle_refuses_large_complexes() {
    let big = simcent::Complex::from_vertex_sets(&(0..15).map(|v| vec![v, v + 1]).collect::<Vec<_>>()).unwrap();
    assert!(matches!(diff_all(&big, 0), Err(Error::GuardExceeded { limit: 14, actual: 16 })));
}
