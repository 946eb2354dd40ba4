use hopf_core::hopf::catalog::{catalog_algebras, group_by_name, monoid_by_name};
use hopf_core::hopf::monoid::{cyclic, left_zero_semigroup, right_zero_with_identity, symmetric3, trivial_group};
use hopf_core::hopf::*;
use hopf_core::linalg::{rat, Matrix, Scalar};

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::int(x)).collect()
}

fn basis(d: usize, i: usize) -> Vec<Scalar> {
    let mut e = vec![Scalar::zero(); d];
    e[i] = Scalar::one();
    e
}

#[test]
fn function_algebra_of_z2_passes_every_axiom() {
    let h = function_algebra(cyclic(2).monoid());
    let report = h.check_axioms();
    assert!(report.all_hold(), "{:?}", report.failures().collect::<Vec<_>>());
}

#[test]
fn corrupted_comult_breaks_coassociativity_with_witness() {
    let h = function_algebra(cyclic(2).monoid());
    let mut entries = Vec::new();
    for (r, row) in h.comult().sparse_rows().iter().enumerate() {
        for (c, v) in row {
            entries.push((r, *c, v.clone()));
        }
    }
    // δ(δ_e) gains a stray δ_e⊗δ_a term.
    entries.push((1, 0, Scalar::one()));
    let bad = h.with_comult(Matrix::from_triplets(4, 2, entries)).unwrap();
    let check = bad.check_axioms().get("coassociativity").cloned().unwrap();
    assert!(!check.holds);
    assert!(check.witness.is_some());
}

#[test]
fn left_zero_semigroup_fails_saturation_on_one_side() {
    let h = function_algebra(&left_zero_semigroup());
    let report = h.check_axioms();
    for axiom in ["associativity", "coassociativity", "comultiplicative", "left unit", "right unit"] {
        assert!(report.get(axiom).unwrap().holds, "{axiom}");
    }
    let s = h.check_saturated();
    assert!(s.left);
    assert!(!s.right);
    assert_eq!(s.right_rank, 2);
}

#[test]
fn saturation_of_group_and_function_algebras() {
    let s = group_algebra(&cyclic(3)).check_saturated();
    assert!(s.left && s.right);
    let s = function_algebra(symmetric3().monoid()).check_saturated();
    assert!(s.left && s.right);
    assert_eq!(s.left_rank, 36);
}

#[test]
fn trivial_monoid_gives_one_dimensional_algebra() {
    let h = function_algebra(trivial_group().monoid());
    assert_eq!(h.dim(), 1);
    assert_eq!(h.comult().get(0, 0), Scalar::one());
}

#[test]
fn comult_on_z2_delta_functions() {
    let h = function_algebra(cyclic(2).monoid());
    // δ(δ_a) = δ_e⊗δ_a + δ_a⊗δ_e, index i·2+j.
    assert_eq!(h.comult().column(1), ints(&[0, 1, 1, 0]));
    assert_eq!(h.comult().column(0), ints(&[1, 0, 0, 1]));
}

#[test]
fn right_zero_with_identity_is_counital() {
    let h = function_algebra(&right_zero_with_identity());
    assert!(h.check_axioms().all_hold());
    assert_eq!(h.counit().unwrap(), &ints(&[1, 0, 0]));
    let c = counit_find(&h);
    assert_eq!(c.counit.as_ref(), h.counit());
}

#[test]
fn group_algebra_of_z2() {
    let h = group_algebra(&cyclic(2));
    assert_eq!(h.comult().nnz(), 2);
    assert!(h.comult().sparse_rows().iter().flatten().all(|(_, v)| v.is_one()));
    // ε(λ_r λ_s) = ε(λ_r) ε(λ_s)
    let eps = h.counit().unwrap();
    for r in 0..2 {
        for s in 0..2 {
            let prod = h.product(&basis(2, r), &basis(2, s));
            assert_eq!(h.pair(eps, &prod), &eps[r] * &eps[s]);
        }
    }
}

#[test]
fn s3_group_algebra_passes_axioms_and_saturation() {
    let h = group_algebra(&symmetric3());
    assert!(h.check_axioms().all_hold());
    let s = h.check_saturated();
    assert!(s.left && s.right);
}

#[test]
fn dual_of_z2_functions_is_z2_group_algebra() {
    let dual = dual_hopf(&function_algebra(cyclic(2).monoid())).unwrap();
    let group = group_algebra(&cyclic(2));
    // The dual basis of the delta functions is the change of basis.
    assert_eq!(dual.mult(), group.mult());
    assert_eq!(dual.comult(), group.comult());
    assert_eq!(dual.unit(), group.unit());
    assert_eq!(dual.counit(), group.counit());
}

#[test]
fn double_dual_is_identity() {
    for h in catalog_algebras().into_iter().filter(|h| h.counit().is_some()) {
        let back = dual_hopf(&dual_hopf(&h).unwrap()).unwrap();
        assert_eq!(back.mult(), h.mult(), "{}", h.name());
        assert_eq!(back.comult(), h.comult(), "{}", h.name());
        assert_eq!(back.unit(), h.unit());
        assert_eq!(back.counit(), h.counit());
    }
}

#[test]
fn dual_product_of_delta_functionals_on_z3_group_algebra() {
    let h = group_algebra(&cyclic(3));
    let dual = dual_hopf(&h).unwrap();
    for r in 0..3 {
        for s in 0..3 {
            let prod = dual.product(&basis(3, r), &basis(3, s));
            for t in 0..3 {
                let expected = if r == t && s == t { Scalar::one() } else { Scalar::zero() };
                assert_eq!(prod[t], expected);
            }
        }
    }
}

#[test]
fn counits_by_family() {
    let c = counit_find(&function_algebra(cyclic(3).monoid()));
    assert_eq!(c.counit.unwrap(), ints(&[1, 0, 0]));
    let c = counit_find(&group_algebra(&symmetric3()));
    assert_eq!(c.counit.unwrap(), ints(&[1; 6]));
    assert!(c.two_sided);
    let c = counit_find(&function_algebra(&left_zero_semigroup()));
    assert!(c.counit.is_none());
    let y = c.certificate.unwrap();
    let (a, b) = &c.system;
    assert!(hopf_core::linalg::verify_inconsistency(a, b, &y));
}

#[test]
fn haar_states() {
    let h = function_algebra(cyclic(3).monoid());
    assert_eq!(haar_state(&h).state().unwrap(), &vec![Scalar::real(rat(1, 3)); 3]);
    for name in ["Z2", "Z3", "S3"] {
        let g = group_by_name(name).unwrap();
        let h = group_algebra(&g);
        assert_eq!(haar_state(&h).state().unwrap(), &basis(g.order(), 0));
    }
}

#[test]
fn corrupted_comult_has_no_haar_state() {
    let h = group_algebra(&cyclic(2));
    // δ(λ_a) = λ_e⊗λ_a forces φ(λ_e) = 0, against φ(1) = 1.
    let bad = h
        .with_comult(Matrix::from_triplets(4, 2, [(0, 0, Scalar::one()), (1, 1, Scalar::one())]))
        .unwrap();
    match haar_state(&bad) {
        HaarSearch::Absent { certificate } => assert!(!certificate.is_empty()),
        found => panic!("{found:?}"),
    }
}

#[test]
fn every_builder_output_passes_axioms() {
    for h in catalog_algebras() {
        let r = h.check_axioms();
        assert!(r.all_hold(), "{}: {:?}", h.name(), r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn groups_saturated_left_zero_one_sided() {
    for h in catalog_algebras() {
        let s = h.check_saturated();
        match h.family() {
            Family::Group(_) => assert!(s.left && s.right),
            Family::Function(m) if m.name() == "left-zero" => assert!(s.left != s.right),
            Family::Function(m) if group_by_name(m.name()).is_ok() => assert!(s.left && s.right),
            _ => {}
        }
    }
}

#[test]
fn left_counit_is_two_sided_on_saturated_algebras() {
    for h in catalog_algebras() {
        let s = h.check_saturated();
        if !(s.left && s.right) {
            continue;
        }
        let c = counit_find(&h);
        if c.counit.is_some() {
            assert!(c.two_sided, "{}", h.name());
        }
    }
}

#[test]
fn monoid_lookup_rejects_unknown_names() {
    assert!(monoid_by_name("no-such-monoid").is_err());
    assert!(group_by_name("Z7").is_err());
}
