use std::sync::Arc;

use hopf_core::comodule::*;
use hopf_core::hopf::monoid::cyclic;
use hopf_core::hopf::{catalog_algebras, function_algebra, group_algebra, HopfStarAlgebra};
use hopf_core::linalg::{solve, Matrix, Scalar, Solution};
use proptest::prelude::*;

fn group(n: usize) -> Arc<HopfStarAlgebra> {
    Arc::new(group_algebra(&cyclic(n)))
}

/// `β(x_i) = x_i⊗λ_{g_i}` on the group algebra.
fn graded(h: &Arc<HopfStarAlgebra>, grades: &[usize]) -> RightCoaction {
    let d = h.dim();
    let beta = Matrix::from_triplets(grades.len() * d, grades.len(), grades.iter().enumerate().map(|(i, &g)| (i * d + g, i, Scalar::one())));
    RightCoaction::new(h.clone(), grades.len(), beta).unwrap()
}

fn inverse(p: &Matrix) -> Matrix {
    let n = p.rows();
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|j| {
            let mut e = vec![Scalar::zero(); n];
            e[j] = Scalar::one();
            match solve(p, &e).unwrap() {
                Solution::Solved(x) => x,
                Solution::Inconsistent(_) => panic!("singular"),
            }
        })
        .collect();
    Matrix::from_triplets(n, n, cols.iter().enumerate().flat_map(|(j, c)| c.iter().enumerate().map(move |(i, v)| (i, j, v.clone()))))
}

#[test]
fn nondegeneracy_examples() {
    let h = group(2);
    let n = RightCoaction::trivial(h.clone(), 2).unwrap().check_nondegenerate();
    assert!(n.left && n.right);
    let n = RightCoaction::zero(h.clone(), 2).check_nondegenerate();
    assert!(!n.left && !n.right);
    let n = graded(&h, &[0, 1]).check_nondegenerate();
    assert!(n.left && n.right);
}

#[test]
fn coaction_identity_is_enforced() {
    let h = group(2);
    // x ↦ x⊗(λ_e + λ_a) is not coassociative.
    let beta = Matrix::from_int_rows(&[&[1], &[1]]);
    assert!(RightCoaction::new(h, 1, beta).is_err());
}

#[test]
fn trivial_left_coaction_is_compatible_with_any_right_coaction() {
    for h in catalog_algebras().into_iter().map(Arc::new) {
        for b in catalog_bicomodules(&h) {
            let r = b.right().clone();
            assert!(Bicomodule::left_trivial("t", r).is_ok(), "{} {}", h.name(), b.label());
        }
    }
}

#[test]
fn quotient_by_zero_and_by_everything() {
    let h = group(3);
    let reg = RightCoaction::regular(h.clone()).unwrap();
    let q = quotient_comodule(&reg, &[]).unwrap();
    assert_eq!(q.coaction.matrix(), reg.matrix());
    let all: Vec<Vec<Scalar>> = (0..3)
        .map(|i| {
            let mut e = vec![Scalar::zero(); 3];
            e[i] = Scalar::one();
            e
        })
        .collect();
    let q = quotient_comodule(&reg, &all).unwrap();
    assert_eq!(q.coaction.space_dim(), 0);
}

#[test]
fn unit_quotient_of_z3_functions() {
    let h = Arc::new(function_algebra(cyclic(3).monoid()));
    let q = unit_quotient(h).unwrap();
    assert_eq!(q.coaction.space_dim(), 2);
    assert_eq!(q.projection.checked_mul(&q.section).unwrap(), Matrix::identity(2));
}

#[test]
fn non_subcomodule_is_rejected() {
    let h = group(2);
    let reg = RightCoaction::regular(h).unwrap();
    // δ(λ_e) = λ_e⊗λ_e, so span(λ_e) is a subcomodule.
    assert!(quotient_comodule(&reg, &[vec![Scalar::one(), Scalar::zero()]]).is_ok());
    // span(λ_e + λ_a) is not.
    assert!(matches!(
        quotient_comodule(&reg, &[vec![Scalar::one(), Scalar::one()]]),
        Err(hopf_core::Error::NotSubcomodule { .. })
    ));
}

#[test]
fn grading_examples() {
    let h = group(2);
    let g = grade_decomposition(&RightCoaction::trivial(h.clone(), 2).unwrap()).unwrap();
    assert_eq!(g.components[0].1.len(), 2);
    assert!(g.components[1].1.is_empty());
    let g = grade_decomposition(&graded(&h, &[1, 0])).unwrap();
    assert_eq!(g.components[0].1, vec![vec![Scalar::zero(), Scalar::one()]]);
    assert_eq!(g.components[1].1, vec![vec![Scalar::one(), Scalar::zero()]]);
    assert_eq!(g.total_dim, 2);
    assert!(g.projections_orthogonal);
    let f = Arc::new(function_algebra(cyclic(2).monoid()));
    assert!(grade_decomposition(&RightCoaction::regular(f).unwrap()).is_err());
}

#[test]
fn dual_coaction_examples() {
    let h = group(3);
    // β(x) = x⊗1 dualizes to β̌(f) = 1⊗f.
    let t = RightCoaction::trivial(h.clone(), 2).unwrap();
    assert_eq!(dual_coaction(&t).unwrap().matrix(), LeftCoaction::trivial(h.clone(), 2).unwrap().matrix());
    // Grades pair with the same group element on the dual side.
    let c = graded(&h, &[1, 2]);
    let dual = dual_coaction(&c).unwrap();
    assert_eq!(dual.matrix().get(2, 0), Scalar::one());
    assert_eq!(dual.matrix().get(2 * 2 + 1, 1), Scalar::one());
    let back = dual_left_coaction(&dual).unwrap();
    assert_eq!(back.matrix(), c.matrix());
}

#[test]
fn dual_bicomodule_twice_is_identity() {
    for h in catalog_algebras().into_iter().map(Arc::new) {
        for b in catalog_bicomodules(&h) {
            let back = dual_bicomodule(&dual_bicomodule(&b).unwrap()).unwrap();
            assert_eq!(back.beta(), b.beta());
            assert_eq!(back.gamma(), b.gamma());
        }
    }
}

#[test]
fn module_action_is_associative_and_unital() {
    let h = group(3);
    let c = graded(&h, &[0, 1, 2, 1]);
    let act = module_from_coaction(&c).unwrap();
    let dx = 4;
    let d = 3;
    let eps = h.counit().unwrap().clone();
    // ε·x = x
    let eps_act = act.checked_mul(&Matrix::column_vector(&eps).kron(&Matrix::identity(dx))).unwrap();
    assert_eq!(eps_act, Matrix::identity(dx));
    // (ωη)·x = ω·(η·x) with the dual product ⟨ωη, s⟩ = ⟨ω⊗η, δ(s)⟩.
    let dual = hopf_core::hopf::dual_hopf(&h).unwrap();
    for w in 0..d {
        for e in 0..d {
            let mut wv = vec![Scalar::zero(); d];
            wv[w] = Scalar::one();
            let mut ev = vec![Scalar::zero(); d];
            ev[e] = Scalar::one();
            let prod = dual.product(&wv, &ev);
            let op = |f: &Vec<Scalar>| act.checked_mul(&Matrix::column_vector(f).kron(&Matrix::identity(dx))).unwrap();
            assert_eq!(op(&prod), op(&wv).checked_mul(&op(&ev)).unwrap());
        }
    }
}

#[test]
fn catalog_bicomodules_satisfy_every_identity() {
    for h in catalog_algebras().into_iter().map(Arc::new) {
        for b in catalog_bicomodules(&h) {
            assert!(b.right().identity_witness().is_none());
            assert!(b.left().identity_witness().is_none());
            assert!(b.compatibility_witness().is_none(), "{} {}", h.name(), b.label());
        }
    }
}

#[test]
fn pair_graded_has_square_dimension() {
    for n in [2, 3] {
        let b = pair_graded(group(n)).unwrap();
        assert_eq!(b.space_dim(), n * n);
        assert!(b.has_nondegenerate_side());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn module_round_trip(grades in prop::collection::vec(0usize..3, 1..5), shear in prop::collection::vec(-3i64..=3, 10)) {
        let h = group(3);
        let base = graded(&h, &grades);
        let n = grades.len();
        // Conjugate by a unipotent upper-triangular change of basis.
        let mut k = 0;
        let mut entries = Vec::new();
        for i in 0..n {
            entries.push((i, i, Scalar::one()));
            for j in i + 1..n {
                entries.push((i, j, Scalar::int(shear[k % shear.len()])));
                k += 1;
            }
        }
        let p = Matrix::from_triplets(n, n, entries);
        let beta = p.kron_identity_right(3).checked_mul(base.matrix()).unwrap().checked_mul(&inverse(&p)).unwrap();
        let c = RightCoaction::new(h.clone(), n, beta).unwrap();
        let act = module_from_coaction(&c).unwrap();
        let back = coaction_from_module(h, n, &act).unwrap();
        prop_assert_eq!(back.matrix(), c.matrix());
        let g = grade_decomposition(&c).unwrap();
        prop_assert_eq!(g.total_dim, n);
    }
}
