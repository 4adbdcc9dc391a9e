use bethe_core::bethe::{bethe_generator_matrices, self_adjoint_check, BlowupPoint};
use bethe_core::exactring::scalar::{int, ratio};
use bethe_core::exactring::{principal_minors_positive, rank, Scalar, ScalarMatrix};
use bethe_core::yangrep::{FactorSpec, Module, Representation};
use bethe_core::unitary::*;

fn rep_of(factors: &[(i64, i64)]) -> Representation<Scalar> {
    Representation::new(Module::new(factors.iter().map(|&(a, b)| FactorSpec::irrep_int(a, b)).collect()).unwrap())
}

#[test]
fn convention_selection() {
    let report = select_convention(&selection_suite()).unwrap();
    for (conv, label, r, e) in &report.trials {
        eprintln!("{:?}/{:?} {label}: rank {r}, expected {e}", conv.r_sign, conv.arg_order);
    }
    let sel = report.selected.expect("some convention passes");
    eprintln!("selected {sel:?}");
    assert_eq!(sel, TauConvention::literal(RSign::Plus));
}

#[test]
fn tau_is_the_sigma_chain_of_the_sites() {
    let conv = selected_convention().unwrap();
    for b in [vec![(3, 2), (1, 0)], vec![(5, 3), (2, 0)], vec![(3, 0)], vec![(4, 2), (1, 0), (-1, -2)]] {
        let blocks = StringBlocks::from_ints(&b).unwrap();
        let tau = tau_map(&blocks, conv).unwrap();
        assert_eq!(tau, sigma_chain(&blocks.site_params(), RSign::Minus).unwrap(), "{}", blocks.label());
    }
}

#[test]
fn two_spin_blocks() {
    let conv = selected_convention().unwrap();
    let blocks = StringBlocks::spin_chain(&[int(4), int(1)]).unwrap();
    let tau = tau_map(&blocks, conv).unwrap();
    assert_eq!(tau, sigma(2, 1, &int(3), RSign::Minus).unwrap());
    assert_eq!(rank(&tau), 4);
}

#[test]
fn sigma_intertwines_spin_pairs() {
    for (a1, a2) in [(ratio(7, 2), ratio(-1, 3)), (int(2), int(1)), (int(1), int(2))] {
        let source = Representation::new(
            Module::new(vec![FactorSpec::irrep(a1.clone(), &a1 - int(1)), FactorSpec::irrep(a2.clone(), &a2 - int(1))]).unwrap(),
        );
        let target = Representation::new(
            Module::new(vec![FactorSpec::irrep(a2.clone(), &a2 - int(1)), FactorSpec::irrep(a1.clone(), &a1 - int(1))]).unwrap(),
        );
        let s = sigma_chain(&[a1.clone(), a2.clone()], RSign::Minus).unwrap();
        assert!(intertwiner_check(&s, &source, &target), "a1={a1} a2={a2}");
        let wrong = sigma_chain(&[a1.clone(), a2.clone()], RSign::Plus).unwrap();
        assert!(!intertwiner_check(&wrong, &source, &target));
    }
    let r = rep_of(&[(1, 0), (3, 2)]);
    assert!(intertwiner_check(&ScalarMatrix::identity(4), &r, &r));
}

#[test]
fn block_projection_intertwines_up_to_twist() {
    // N_<(3,0) = L(1,0) ⊗ L(2,1) ⊗ L(3,2) → L(3,0) twisted by (u+1)(u+2)/u²
    let blocks = StringBlocks::from_ints(&[(3, 0)]).unwrap();
    let chain = Representation::new(chain_module(&blocks).unwrap());
    let l = rep_of(&[(3, 0)]);
    let (_, p) = block_embedding(&int(3), &int(0)).unwrap();
    for u in [int(5), ratio(-7, 3), ratio(11, 2)] {
        let f = (&u + int(1)) * (&u + int(2)) / (&u * &u);
        for i in 1..=2 {
            for j in 1..=2 {
                let lhs = p.mul(&chain.t(i, j).eval(&u));
                let rhs = l.t(i, j).eval(&u).mul(&p).scale(&f);
                assert_eq!(lhs, rhs, "u={u} t{i}{j}");
            }
        }
    }
}

#[test]
fn gram_examples() {
    let one = StringBlocks::from_ints(&[(1, 0)]).unwrap();
    assert_eq!(induced_gram(&one).unwrap(), ScalarMatrix::identity(2));
    let two = StringBlocks::from_ints(&[(2, 0)]).unwrap();
    let g = induced_gram(&two).unwrap();
    assert_eq!(g, gl2_gram(&int(2), &int(0)).unwrap());
    let pair = StringBlocks::from_ints(&[(3, 2), (1, 0)]).unwrap();
    let g = induced_gram(&pair).unwrap();
    assert_eq!(g.rows(), 4);
    assert!(g.is_symmetric());
    assert!(principal_minors_positive(&g).unwrap());
    let bad = StringBlocks::from_ints(&[(1, 0), (3, 2)]).unwrap();
    assert!(matches!(induced_gram(&bad), Err(UnitaryError::Hypothesis(_))));
}

#[test]
fn gl2_forms_are_contravariant() {
    for (a, b) in [(1, 0), (2, 0), (5, 1), (-1, -4)] {
        let r = rep_of(&[(a, b)]);
        let g = gl2_gram(&int(a), &int(b)).unwrap();
        assert!(unitarity_check(&r, &g), "L({a},{b})");
    }
}

#[test]
fn certificates() {
    for b in [vec![(3, 2), (1, 0)], vec![(5, 3), (2, 0)], vec![(1, 0)], vec![(4, 2), (1, 0), (-1, -2)]] {
        let blocks = StringBlocks::from_ints(&b).unwrap();
        let c = unitary_certificate(&blocks).unwrap();
        eprintln!("{}", serde_json::to_string(&c).unwrap());
        assert!(c.self_adjoint && c.positive && c.unitary, "{}", blocks.label());
        assert_eq!(c.tau_rank, c.expected_rank);
    }
}

#[test]
fn spin_chain_positivity() {
    let good = StringBlocks::spin_chain(&[int(0), int(2), int(4)]).unwrap();
    let c = positivity_certificate(&good).unwrap();
    assert!(c.self_adjoint);
    assert_eq!(c.r_chain_positive, Some(true));
    assert!(c.positive);
    let edge = StringBlocks::spin_chain(&[int(0), int(1)]).unwrap();
    let c = positivity_certificate(&edge).unwrap();
    assert_eq!(c.r_chain_positive, Some(false));
    assert!(!c.positive);
}

#[test]
fn chain_form_is_the_r_chain() {
    let conv = selected_convention().unwrap();
    let a = [int(0), int(2), int(4)];
    let blocks = StringBlocks::spin_chain(&a).unwrap();
    let h = chain_form(&blocks, conv).unwrap();
    assert_eq!(h, r_chain(&a, conv.r_sign, conv.arg_order).unwrap());
}

#[test]
fn module_gram_any_order() {
    for (factors, blocks) in [
        (vec![(1, 0), (3, 2)], vec![(3, 2), (1, 0)]),
        (vec![(2, 0), (5, 3)], vec![(5, 3), (2, 0)]),
    ] {
        let r = rep_of(&factors);
        let g = module_gram(r.module()).unwrap();
        assert!(g.is_symmetric());
        assert!(principal_minors_positive(&g).unwrap());
        assert!(unitarity_check(&r, &g));
        assert!(!unitarity_check(&r, &ScalarMatrix::identity(r.dim())));
        let ordered = StringBlocks::from_ints(&blocks).unwrap();
        assert_eq!(module_gram(&block_module(&ordered).unwrap()).unwrap(), induced_gram(&ordered).unwrap());
    }
}

#[test]
fn bethe_generators_are_self_adjoint() {
    let r = rep_of(&[(1, 0), (3, 2)]);
    let g = module_gram(r.module()).unwrap();
    for (c1, c2) in [(int(1), int(2)), (ratio(-3, 5), int(7)), (int(0), int(1))] {
        let p = BlowupPoint::diagonal(c1, c2).unwrap();
        assert!(self_adjoint_check(&bethe_generator_matrices(&r, &p), &g));
    }
}
