use yb_core::algebras::*;
use yb_core::coalgebra::*;
use yb_core::linalg::basis_vector;
use yb_core::racks::{
    conjugation_3rack, dihedral_rack, s3, trivial_3rack, trivial_rack, z4_module_3rack,
};
use yb_core::{Error, Mat, Scalar};

fn corpus_3leibniz() -> Vec<(&'static str, ThreeLeibnizAlgebra)> {
    vec![
        ("octonions", octonion_3leibniz()),
        ("nilpotent", nilpotent3()),
        ("omni-Lie m=1", omni_lie(1)),
        ("omni-Lie m=2", omni_lie(2)),
        ("final 2d", final_3leibniz_2d()),
    ]
}

/// The matrix coalgebra on `M_2`: `Δ(e_ij) = Σ_k e_ik ⊗ e_kj`, not cocommutative.
fn matrix_coalgebra() -> Coalgebra {
    let idx = |i: usize, j: usize| i * 2 + j;
    let mut delta = Mat::zeros(16, 4);
    let mut counit = Mat::zeros(1, 4);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                delta.set(idx(i, k) * 4 + idx(k, j), idx(i, j), Scalar::one());
            }
        }
        counit.set(0, idx(i, i), Scalar::one());
    }
    Coalgebra::new(4, delta, counit).unwrap()
}

#[test]
fn three_leibniz_algebras_give_trilinear_racks() {
    for (name, l) in corpus_3leibniz() {
        let tr = threeleibniz_trilinear_rack(&l);
        assert_eq!(tr.dim(), l.dim() + 1);
        let rep = verify_trilinear_rack(&tr);
        assert!(rep.passed(), "{name}: {rep}");
    }
}

#[test]
fn trilinear_rack_formula() {
    // T((0,x),(1,0),(1,0)) = (0,x) and T((0,e2),(0,e3),(0,e3)) = (0,e1).
    let tr = threeleibniz_trilinear_rack(&nilpotent3());
    let e = |i| basis_vector(4, i);
    assert_eq!(tr.apply(&e(2), &e(0), &e(0)), e(2));
    assert_eq!(tr.apply(&e(2), &e(3), &e(3)), e(1));
    assert_eq!(tr.apply(&e(0), &e(3), &e(3)), vec![Scalar::zero(); 4]);
}

#[test]
fn induced_linear_racks_on_tensor_squares() {
    for (name, l) in [
        ("nilpotent", nilpotent3()),
        ("omni-Lie m=1", omni_lie(1)),
        ("final 2d", final_3leibniz_2d()),
    ] {
        let lr = trilinear_to_linear(&threeleibniz_trilinear_rack(&l)).unwrap();
        assert_eq!(lr.dim(), (l.dim() + 1).pow(2));
        let rep = verify_linear_rack(&lr);
        assert!(rep.passed(), "{name}: {rep}");
    }
}

#[test]
fn finite_3racks_linearize() {
    for (name, t) in [
        ("trivial 2", trivial_3rack(2)),
        ("Z4", z4_module_3rack()),
        ("S3 conjugation", conjugation_3rack(&s3())),
    ] {
        let tr = linearize_3rack(&t).unwrap();
        assert_eq!(tr.coalgebra(), &grouplike_coalgebra(t.size()));
        assert!(verify_trilinear_rack(&tr).passed(), "{name}");
        let lr = trilinear_to_linear(&tr).unwrap();
        assert_eq!(lr.coalgebra(), &grouplike_coalgebra(t.size().pow(2)));
        assert!(verify_linear_rack(&lr).passed(), "{name}");
        let rep = varphi_check(&t).unwrap();
        assert!(rep.passed(), "{name}: {rep}");
    }
}

#[test]
fn finite_racks_linearize() {
    for r in [trivial_rack(3), dihedral_rack(3), dihedral_rack(4)] {
        let lr = linearize_rack(&r).unwrap();
        assert!(verify_linear_rack(&lr).passed());
        let (x, y) = (1, 2);
        assert_eq!(
            lr.apply(&basis_vector(r.size(), x), &basis_vector(r.size(), y)),
            basis_vector(r.size(), r.op(x, y))
        );
    }
}

#[test]
fn leibniz_linear_racks() {
    let mut algs: Vec<LeibnizAlgebra> = (1..=4).map(|v| two_dim_leibniz(v).unwrap()).collect();
    algs.push(fundamental_leibniz(&nilpotent3()));
    algs.push(omni_lie_leibniz(1));
    for (i, e) in algs.iter().enumerate() {
        let lr = leibniz_linear_rack(e);
        let rep = verify_linear_rack(&lr);
        assert!(rep.passed(), "algebra {i}: {rep}");
    }
    // On K⊕E3: e2◁e2 = [e2,e2] = e1 and e2◁1 = e2.
    let lr = leibniz_linear_rack(&two_dim_leibniz(3).unwrap());
    let e = |i| basis_vector(3, i);
    assert_eq!(lr.apply(&e(2), &e(2)), e(1));
    assert_eq!(lr.apply(&e(2), &e(0)), e(2));
    assert_eq!(lr.apply(&e(0), &e(2)), vec![Scalar::zero(); 3]);
}

#[test]
fn non_leibniz_bracket_is_not_a_linear_shelf() {
    let bad = LeibnizAlgebra::from_constants(1, &[(0, 0, 0, Scalar::one())]).unwrap();
    assert!(!verify_linear_shelf(&leibniz_linear_rack(&bad)).passed());
}

#[test]
fn matrix_coalgebra_is_not_cocommutative() {
    let c = matrix_coalgebra();
    assert!(verify_coalgebra(&c).passed());
    assert!(!is_cocommutative(&c));
    // T(x,y,z) = ε(y)ε(z)x is a trilinear rack, but the induced operation
    // on C⊗C needs cocommutativity.
    let n = 4;
    let mut t = Mat::zeros(n, n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let c_yz = c.counit_of(y) * c.counit_of(z);
                if !c_yz.is_zero() {
                    t.set(x, (x * n + y) * n + z, c_yz);
                }
            }
        }
    }
    let tr = TrilinearRackStruct::new(c, t.clone(), t).unwrap();
    assert!(verify_trilinear_rack(&tr).passed());
    match trilinear_to_linear(&tr) {
        Err(Error::NotCocommutative(rep)) => assert!(rep.first_failure().is_some()),
        other => panic!("expected NotCocommutative, got {:?}", other.map(|_| ())),
    }
}

#[test]
fn tensor_coalgebra_laws() {
    let c = unital_primitive_coalgebra(2);
    let g = grouplike_coalgebra(2);
    for d in [
        tensor_coalgebra(&c, &g),
        tensor_coalgebra(&g, &c),
        tensor_coalgebra(&c, &c),
    ] {
        assert!(verify_coalgebra(&d).passed());
        assert!(is_cocommutative(&d));
    }
    let m = matrix_coalgebra();
    assert!(verify_coalgebra(&tensor_coalgebra(&m, &g)).passed());
}

#[test]
fn grouplike_morphisms() {
    // Any map sending basis to basis is a morphism of grouplike coalgebras.
    let f = Mat::from_i64_rows(&[&[1, 0, 1], &[0, 1, 0]]);
    let rep =
        coalgebra_morphism_check(&f, &grouplike_coalgebra(3), &grouplike_coalgebra(2)).unwrap();
    assert!(rep.passed());
    let twice = Mat::from_i64_rows(&[&[2, 0], &[0, 1]]);
    let rep =
        coalgebra_morphism_check(&twice, &grouplike_coalgebra(2), &grouplike_coalgebra(2)).unwrap();
    assert!(!rep.passed());
}

#[test]
fn corrupted_coproduct_breaks_coassociativity() {
    let c = grouplike_coalgebra(2);
    let mut delta = c.delta().clone();
    delta.set(1, 0, Scalar::one());
    let bad = Coalgebra::new(2, delta, c.counit().clone()).unwrap();
    let rep = verify_coalgebra(&bad);
    assert!(!rep.passed());
    assert_eq!(rep.first_failure().unwrap().tuple, vec![0]);
}
