use bethe_core::bethe::*;
use bethe_core::exactring::scalar::{int, ratio};
use bethe_core::exactring::{Scalar, ScalarMatrix};
use bethe_core::yangrep::{FactorSpec, Module, Representation};

fn rep(factors: &[(i64, i64)]) -> Representation<Scalar> {
    Representation::new(Module::new(factors.iter().map(|&(a, b)| FactorSpec::irrep_int(a, b)).collect()).unwrap())
}

#[test]
fn diagonal_point_on_dim_four() {
    let r = rep(&[(1, 0), (3, 2)]);
    let p = BlowupPoint::diagonal(int(1), int(2)).unwrap();
    let g = bethe_generator_matrices(&r, &p);
    assert!(commutativity_check(&g));
    assert_eq!(algebra_closure(&g).len(), 4);
    let s = joint_spectrum_numeric(&g, 1e-9);
    assert_eq!(s.eigenline_count(), 4);
}

#[test]
fn scalar_point_needs_exceptional_generator() {
    let r = rep(&[(1, 0), (3, 2)]);
    let p = BlowupPoint::diagonal(int(1), int(1)).unwrap();
    let g = bethe_generator_matrices(&r, &p);
    assert!(commutativity_check(&g));
    assert_eq!(algebra_closure(&g).len(), 4);
    assert!(algebra_closure(&g.without_exceptional()).len() < 4);
}

#[test]
fn nilpotent_point_generators_are_t21_coefficients() {
    let m = Module::new(vec![
        FactorSpec::verma(ratio(1, 3), int(2), 3),
        FactorSpec::verma(ratio(-5, 2), ratio(7, 4), 3),
    ])
    .unwrap();
    let r = Representation::new(m);
    let p = BlowupPoint::new(mat2(int(0), int(1), int(0), int(0)), None).unwrap();
    let g = bethe_generator_matrices(&r, &p);
    let t = |k| g.get(GeneratorTag::TraceCoeff(k)).unwrap().clone();
    // u^2 tr(e12 T) = u t21^{(1)} + t21^{(2)}
    assert_eq!(t(1), r.t_coeff(2, 1, 1));
    assert_eq!(t(0), r.t_coeff(2, 1, 2));
    assert!(t(2).is_zero());
}

#[test]
fn casimir_is_in_the_commutant_of_scalar_algebra() {
    let r = rep(&[(2, 0), (5, 3)]);
    let p = BlowupPoint::new(mat2(int(1), int(0), int(0), int(1)), Some([int(2), int(-1), int(3)])).unwrap();
    let g = bethe_generator_matrices(&r, &p).without_exceptional();
    let omega = r.casimir();
    assert!(g.matrices().all(|m| m.commutes_with(&omega)));
}

#[test]
fn one_dimensional_module() {
    let r = rep(&[(0, 0)]);
    let p = BlowupPoint::diagonal(int(1), int(3)).unwrap();
    let g = bethe_generator_matrices(&r, &p);
    let cert = certify_generators(&g, &ScalarMatrix::identity(1)).unwrap();
    assert_eq!(cert.verdict, Verdict::Simple);
    let table = rp1_scan(&r, &[(int(1), int(0)), (int(1), int(1))], 1e-9).unwrap();
    assert!(table.points.iter().all(|pt| pt.eigenline_count == 1));
}
