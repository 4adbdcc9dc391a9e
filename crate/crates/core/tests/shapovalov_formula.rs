use std::time::Instant;

use bethe_core::exactring::scalar::{int, ratio};
use bethe_core::exactring::Scalar;
use bethe_core::shapovalov::*;

#[test]
fn symbolic_cases_match_product_formula() {
    for (n, m) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (1, 3)] {
        let t = Instant::now();
        let r = verify_shap_formula(n, m, DetMode::Symbolic).unwrap();
        eprintln!("(n,m)=({n},{m}) match={} constant={} degree={} in {:?}", r.matches, r.constant, r.degree_found, t.elapsed());
        assert!(r.matches, "({n},{m})");
        assert!(r.degree_ok, "({n},{m})");
    }
}

#[test]
fn three_by_three_symbolic() {
    let t = Instant::now();
    let r = verify_shap_formula(3, 3, DetMode::Symbolic).unwrap();
    eprintln!("(3,3) match={} constant={} degree={} in {:?}", r.matches, r.constant, r.degree_found, t.elapsed());
    assert!(r.matches && r.degree_ok);
}

#[test]
fn singular_scan() {
    let diffs = [int(-2), int(-1), int(0), ratio(1, 2), int(1), int(2), int(3), int(4)];
    for d in &diffs {
        for m in 1..=4usize {
            let b1 = ratio(3, 7);
            let a2: Scalar = &b1 + d;
            let dim = singular_space(&a2, &ratio(-11, 3), &ratio(5, 2), &b1, m, m).unwrap();
            let expected = usize::from(*d == int(m as i64 - 1));
            assert_eq!(dim, expected, "a2-b1={d} m={m}");
        }
    }
}

#[test]
fn k_matrix_up_to_six() {
    for n in 1..=6 {
        let t = Instant::now();
        let (_, ring) = k_matrix(n).unwrap();
        let det = k_matrix_det(n).unwrap();
        let v = vandermonde_product(&ring);
        let sign = if det == v { 1 } else if det == -&v { -1 } else { 0 };
        eprintln!("K n={n}: sign {sign} in {:?}", t.elapsed());
        assert_ne!(sign, 0);
    }
}
