use std::sync::Arc;

use hopf_core::amenability::kronecker_codiagonal;
use hopf_core::cochain::*;
use hopf_core::comodule::*;
use hopf_core::hopf::monoid::{cyclic, symmetric3};
use hopf_core::hopf::{catalog_algebras, function_algebra, group_algebra, haar_state, HopfStarAlgebra};
use hopf_core::linalg::{kernel_basis, Matrix, Scalar};

fn regular(h: &Arc<HopfStarAlgebra>) -> Bicomodule {
    Bicomodule::new("regular", RightCoaction::regular(h.clone()).unwrap(), LeftCoaction::regular(h.clone()).unwrap()).unwrap()
}

fn sum(vs: &[Vec<Scalar>]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); vs[0].len()];
    for v in vs {
        for (o, x) in out.iter_mut().zip(v) {
            *o += x;
        }
    }
    out
}

#[test]
fn chain_property_on_z3_regular() {
    let h = Arc::new(group_algebra(&cyclic(3)));
    let b = regular(&h);
    for kind in [ComplexKind::Natural, ComplexKind::Dual, ComplexKind::Bar] {
        let cx = CochainComplex::build(&b, kind, 2, 3).unwrap();
        assert!(cx.chain_property().iter().all(|(_, ok)| *ok), "{}", kind.name());
    }
}

#[test]
fn identity_is_killed_by_first_dual_coboundary_when_one_sided() {
    for h in catalog_algebras().into_iter().map(Arc::new) {
        let b = Bicomodule::one_sided("right-regular", RightCoaction::regular(h.clone()).unwrap());
        let d1 = dual_coboundary(&b, 1, 3).unwrap();
        let id: Vec<Scalar> = Matrix::identity(h.dim()).to_dense().into_iter().flatten().collect();
        assert!(d1.apply(&id).unwrap().iter().all(Scalar::is_zero), "{}", h.name());
    }
}

#[test]
fn degree_zero_vanishes_for_right_nondegenerate_one_sided() {
    for h in catalog_algebras().into_iter().map(Arc::new) {
        for b in catalog_bicomodules(&h) {
            if !b.right().check_nondegenerate().right {
                continue;
            }
            let one = Bicomodule::one_sided("x", b.right().clone());
            let cx = CochainComplex::build(&one, ComplexKind::Dual, 0, 3).unwrap();
            assert_eq!(cohomology_dim(&cx, 0), 0, "{} {}", h.name(), b.label());
        }
    }
}

#[test]
fn natural_degree_zero_detects_injectivity() {
    let h = Arc::new(group_algebra(&cyclic(2)));
    let zero = Bicomodule::one_sided("zero", RightCoaction::zero(h.clone(), 2));
    let cx = CochainComplex::build(&zero, ComplexKind::Natural, 0, 3).unwrap();
    assert_eq!(cohomology_dim(&cx, 0), 2);
    let triv = Bicomodule::one_sided("triv", RightCoaction::trivial(h, 2).unwrap());
    let cx = CochainComplex::build(&triv, ComplexKind::Natural, 0, 3).unwrap();
    assert_eq!(cohomology_dim(&cx, 0), 0);
}

#[test]
fn pair_graded_first_cohomology_vanishes_on_s3() {
    let h = Arc::new(group_algebra(&symmetric3()));
    let b = pair_graded(h).unwrap();
    let cx = CochainComplex::build(&b, ComplexKind::Dual, 1, 3).unwrap();
    assert_eq!(cohomology_dim(&cx, 1), 0);
}

#[test]
fn haar_homotopy_on_z2_functions() {
    let h = Arc::new(function_algebra(cyclic(2).monoid()));
    let phi = haar_state(&h).state().unwrap().clone();
    let b = Bicomodule::left_trivial("restricted", RightCoaction::regular(h.clone()).unwrap()).unwrap();
    let cx = CochainComplex::build(&b, ComplexKind::Restricted, 1, 3).unwrap();
    let cocycles = kernel_basis(cx.boundary(1));
    assert!(!cocycles.is_empty());
    for t in cocycles.iter().chain([&sum(&cocycles)]) {
        let hom = homotopy_from_haar(&b, 1, t, &phi, 3).unwrap();
        assert!(hom.sign_matches());
    }
}

#[test]
fn codiagonal_homotopy_on_z2_pair_graded() {
    let g = cyclic(2);
    let h = Arc::new(group_algebra(&g));
    let f = kronecker_codiagonal(&g).unwrap().certificate.functional;
    let b = pair_graded(h).unwrap();
    for n in 1..=2 {
        let cx = CochainComplex::build(&b, ComplexKind::Dual, n, 3).unwrap();
        let cocycles = kernel_basis(cx.boundary(n));
        for t in cocycles.iter().chain([&sum(&cocycles)]) {
            for side in [CodiagonalSide::Right, CodiagonalSide::Left] {
                let hom = homotopy_from_codiagonal(&b, n, t, &f, side, 3).unwrap();
                assert!(hom.sign_matches(), "n={n} {side:?}");
            }
        }
    }
}

#[test]
fn homotopy_rejects_non_cocycles() {
    let h = Arc::new(group_algebra(&cyclic(2)));
    let b = Bicomodule::one_sided("right-regular", RightCoaction::regular(h.clone()).unwrap());
    let cx = CochainComplex::build(&b, ComplexKind::Dual, 1, 3).unwrap();
    let t = (0..4)
        .map(|i| {
            let mut e = vec![Scalar::zero(); 4];
            e[i] = Scalar::one();
            e
        })
        .find(|e| !is_cocycle(&cx, 1, e))
        .expect("some basis vector is not a cocycle");
    assert!(matches!(homotopy_from_counit(&b, 1, &t, 3), Err(hopf_core::Error::NotCocycle { .. })));
}

#[test]
fn counit_homotopies_on_catalog() {
    for h in catalog_algebras().into_iter().map(Arc::new).filter(|h| h.counit().is_some()) {
        for b in catalog_bicomodules(&h) {
            let one = Bicomodule::one_sided("x", b.right().clone());
            for n in 1..=2 {
                let cx = CochainComplex::build(&one, ComplexKind::Dual, n, 3).unwrap();
                assert_eq!(cohomology_dim(&cx, n), 0, "{} {}", h.name(), b.label());
                for t in kernel_basis(cx.boundary(n)).iter().take(4) {
                    assert!(homotopy_from_counit(&one, n, t, 3).unwrap().sign_matches());
                }
                let nat = CochainComplex::build(&one, ComplexKind::Natural, n, 3).unwrap();
                assert_eq!(cohomology_dim(&nat, n), 0);
                for m in kernel_basis(nat.boundary(n)).iter().take(4) {
                    assert!(natural_homotopy_from_counit(&one, n, m, 3).unwrap().sign_matches());
                }
            }
        }
    }
}

#[test]
fn dual_matches_natural_on_dual_bicomodule() {
    for n in [2, 3] {
        let h = Arc::new(group_algebra(&cyclic(n)));
        let rows = identify_dual_natural(&regular(&h), 2, 3).unwrap();
        for r in rows {
            assert!(r.sign_identity, "Z{n} degree {}", r.degree);
            assert_eq!(r.dual_dim, r.natural_dim);
        }
    }
}

#[test]
fn operator_cohomology_agrees_with_bar() {
    let h = Arc::new(group_algebra(&cyclic(2)));
    let f = Arc::new(function_algebra(cyclic(3).monoid()));
    for b in [regular(&h), pair_graded(h.clone()).unwrap(), regular(&f)] {
        for r in identify_operator_cohomology(&b, 2, 3).unwrap() {
            assert!(r.identical, "{} degree {}", b.label(), r.degree);
        }
    }
}

#[test]
fn degree_cap_is_respected() {
    let h = Arc::new(group_algebra(&cyclic(2)));
    let b = regular(&h);
    assert!(matches!(dual_coboundary(&b, 3, 3), Err(hopf_core::Error::DegreeCapExceeded { .. })));
    assert!(dual_coboundary(&b, 3, 4).is_ok());
}
