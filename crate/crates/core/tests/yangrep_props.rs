use proptest::prelude::*;

use bethe_core::bethe::{algebra_closure, bethe_generator_matrices, mat2, BlowupPoint, GeneratorSet};
use bethe_core::exactring::scalar::{int, ratio};
use bethe_core::exactring::{Scalar, ScalarMatrix, Span};
use bethe_core::shapovalov::{expected_leading_t21, leading_t21};
use bethe_core::yangrep::{group_action, qdet_centrality_check, rtt_check, FactorSpec, Module, Representation};

fn rep(f: Vec<FactorSpec>) -> Representation<Scalar> {
    Representation::new(Module::new(f).unwrap())
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| ratio(n, d))
}

fn nonzero() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |x| *x != int(0))
}

fn irrep() -> impl Strategy<Value = FactorSpec> {
    (scalar(), 0i64..=2).prop_map(|(b, k)| FactorSpec::irrep(&b + int(k), b))
}

/// `Σ_k t_ik(u) ⊗ t_kj(u)` for representations of the two tensor halves.
fn glued(left: &Representation<Scalar>, right: &Representation<Scalar>, i: usize, j: usize, u: &Scalar) -> ScalarMatrix {
    let a = left.t(i, 1).eval(u).kron(&right.t(1, j).eval(u));
    a.add(&left.t(i, 2).eval(u).kron(&right.t(2, j).eval(u)))
}

fn span_of(elems: &[ScalarMatrix]) -> Span {
    let mut s = Span::new(elems[0].rows() * elems[0].cols());
    for e in elems {
        s.insert(e.data());
    }
    s
}

fn same_span(a: &Span, b: &Span) -> bool {
    a.dim() == b.dim() && a.basis().all(|v| b.contains(v))
}

fn closure_span(g: &GeneratorSet) -> Span {
    span_of(algebra_closure(g).elements())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coproduct_is_coassociative(a in irrep(), b in irrep(), c in irrep(), u in nonzero()) {
        let whole = rep(vec![a.clone(), b.clone(), c.clone()]);
        let (ra, rb, rc) = (rep(vec![a.clone()]), rep(vec![b.clone()]), rep(vec![c.clone()]));
        let (rab, rbc) = (rep(vec![a, b.clone()]), rep(vec![b, c]));
        for i in 1..=2 {
            for j in 1..=2 {
                let direct = whole.t(i, j).eval(&u);
                prop_assert_eq!(&direct, &glued(&rab, &rc, i, j, &u));
                prop_assert_eq!(&direct, &glued(&ra, &rbc, i, j, &u));
            }
        }
        prop_assert!(ra.dim() * rb.dim() * rc.dim() == whole.dim());
    }

    #[test]
    fn generators_shift_the_grading(a in irrep(), b in irrep()) {
        let r = rep(vec![a, b]);
        for ((i, j, _), m) in r.generator_matrices() {
            let shift = i as i64 - j as i64;
            prop_assert!(r.module().respects_level_shift(&m, shift), "t{}{}", i, j);
        }
    }

    #[test]
    fn truncated_vermas_satisfy_rtt(
        a1 in scalar(), b1 in scalar(), a2 in scalar(), b2 in scalar(),
        u in nonzero(), v in nonzero(),
    ) {
        prop_assume!(u != v);
        let r = rep(vec![FactorSpec::verma(a1, b1, 3), FactorSpec::dual_verma(a2, b2, 3)]);
        prop_assert!(rtt_check(&r, &[(u, v)]).unwrap().all_hold);
        prop_assert!(qdet_centrality_check(&r));
    }

    #[test]
    fn qdet_is_central_on_irreps(a in irrep(), b in irrep(), c in irrep()) {
        prop_assert!(qdet_centrality_check(&rep(vec![a, b, c])));
    }

    /// `ρ(gᵀ) B(C) ρ(gᵀ)⁻¹ = B(g⁻¹ C g)`.
    #[test]
    fn conjugation_equivariance(
        c in prop::array::uniform4(scalar()),
        g in prop::array::uniform4(scalar()),
    ) {
        let det = &g[0] * &g[3] - &g[1] * &g[2];
        prop_assume!(g[0] != int(0) && det != int(0));
        prop_assume!(!(c[1] == int(0) && c[2] == int(0) && c[0] == c[3]));
        let r = rep(vec![FactorSpec::irrep_int(1, 0), FactorSpec::irrep_int(3, 2)]);
        let transposed = [[g[0].clone(), g[2].clone()], [g[1].clone(), g[3].clone()]];
        let rho = group_action(r.module(), &transposed).unwrap();
        let rho_inv = rho.inverse().unwrap();
        let gm = ScalarMatrix::from_rows(vec![vec![g[0].clone(), g[1].clone()], vec![g[2].clone(), g[3].clone()]]).unwrap();
        let cm = ScalarMatrix::from_rows(vec![vec![c[0].clone(), c[1].clone()], vec![c[2].clone(), c[3].clone()]]).unwrap();
        let moved = gm.inverse().unwrap().mul(&cm).mul(&gm);
        let p = BlowupPoint::new(mat2(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()), None).unwrap();
        let q = BlowupPoint::new(
            mat2(moved[(0, 0)].clone(), moved[(0, 1)].clone(), moved[(1, 0)].clone(), moved[(1, 1)].clone()),
            None,
        )
        .unwrap();
        let lhs = closure_span(&bethe_generator_matrices(&r, &p).conjugate(&rho, &rho_inv));
        let rhs = closure_span(&bethe_generator_matrices(&r, &q));
        prop_assert!(same_span(&lhs, &rhs));
    }

    #[test]
    fn scaling_invariance(c in prop::array::uniform4(scalar()), lambda in nonzero()) {
        prop_assume!(!(c[1] == int(0) && c[2] == int(0) && c[0] == c[3]));
        let r = rep(vec![FactorSpec::irrep_int(2, 0), FactorSpec::irrep_int(5, 3)]);
        let at = |s: &Scalar| {
            let p = BlowupPoint::new(mat2(&c[0] * s, &c[1] * s, &c[2] * s, &c[3] * s), None).unwrap();
            closure_span(&bethe_generator_matrices(&r, &p))
        };
        prop_assert!(same_span(&at(&int(1)), &at(&lambda)));
    }
}

#[test]
fn leading_term_in_a() {
    for (n, cutoff) in [(2, 2), (3, 2)] {
        for r in 1..=n {
            assert_eq!(leading_t21(n, cutoff, r).unwrap(), expected_leading_t21(n, cutoff, r).unwrap(), "n={n} r={r}");
        }
    }
}
