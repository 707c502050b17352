use proptest::prelude::*;

use yb_core::algebras::*;
use yb_core::linalg::{basis_vector, exp_nilpotent, invert, rank};
use yb_core::samples::Sampler;
use yb_core::{Error, Mat, Scalar, Vector};

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn corpus_3leibniz() -> Vec<(&'static str, ThreeLeibnizAlgebra)> {
    vec![
        ("nilpotent", nilpotent3()),
        ("omni-Lie m=1", omni_lie(1)),
        ("omni-Lie m=2", omni_lie(2)),
        ("final 2d", final_3leibniz_2d()),
    ]
}

fn two_dim() -> Vec<LeibnizAlgebra> {
    (1..=4).map(|v| two_dim_leibniz(v).unwrap()).collect()
}

#[test]
fn corpus_satisfies_the_3_leibniz_identity() {
    for (name, l) in corpus_3leibniz() {
        let r = verify_3_leibniz(&l);
        assert!(r.passed(), "{name}: {r}");
        assert_eq!(r.checked, l.dim().pow(5), "{name}");
    }
}

#[test]
fn octonions_are_3_leibniz_but_not_skew() {
    let o = octonion_3leibniz();
    let r = verify_3_leibniz(&o);
    assert!(r.passed(), "{r}");
    assert_eq!(r.checked, 8usize.pow(5));
    assert!(!verify_skew_symmetry(&o).passed());
}

#[test]
fn octonion_table_is_alternative_and_normed() {
    // Independent sanity check on the hard-coded table: Artin's theorem and
    // multiplicativity of the norm, on seeded samples.
    let norm = |x: &[Scalar]| -> Scalar { x.iter().map(|c| c * c).sum() };
    let mut smp = Sampler::new(7);
    for _ in 0..20 {
        let x = smp.vector(8);
        let y = smp.vector(8);
        assert_eq!(
            octonion_mul(&x, &octonion_mul(&x, &y)),
            octonion_mul(&octonion_mul(&x, &x), &y)
        );
        assert_eq!(
            octonion_mul(&octonion_mul(&y, &x), &x),
            octonion_mul(&y, &octonion_mul(&x, &x))
        );
        assert_eq!(norm(&octonion_mul(&x, &y)), &norm(&x) * &norm(&y));
    }
}

#[test]
fn octonion_constants_match_the_defining_formula() {
    let o = octonion_3leibniz();
    for (i, j, k) in [(1, 2, 3), (0, 5, 7), (4, 4, 6), (7, 1, 2)] {
        let (x, y, z) = (basis_vector(8, i), basis_vector(8, j), basis_vector(8, k));
        assert_eq!(o.bracket(&x, &y, &z), octonion_bracket(&x, &y, &z));
    }
}

#[test]
fn nilpotent_constants() {
    let l = nilpotent3();
    assert_eq!(l.basis(1, 2, 2), vec![s(1), s(0), s(0)]);
    assert_eq!(l.basis(2, 2, 2), vec![s(0), s(1), s(0)]);
    assert_eq!(l.basis(2, 1, 2), vec![s(0); 3]);
}

#[test]
fn fundamental_algebras_are_leibniz() {
    for (name, l) in corpus_3leibniz() {
        let f = fundamental_leibniz(&l);
        assert_eq!(f.dim(), l.dim() * l.dim());
        assert!(verify_leibniz(&f).passed(), "{name}");
    }
}

#[test]
fn fundamental_bracket_examples() {
    // {e2⊗e3, e3⊗e3} = e1⊗e3 + e2⊗e2
    let f = fundamental_leibniz(&nilpotent3());
    let mut expect = vec![s(0); 9];
    expect[2] = s(1);
    expect[4] = s(1);
    assert_eq!(f.basis(5, 8), expect);

    // On the final 2d example, with 𝔢1..𝔢4 = e1⊗e1, e1⊗e2, e2⊗e1, e2⊗e2:
    // {𝔢2, 𝔢3} = -𝔢4.
    let f = fundamental_leibniz(&final_3leibniz_2d());
    assert_eq!(f.basis(1, 2), vec![s(0), s(0), s(0), s(-1)]);
}

#[test]
fn leibniz_algebras_induce_3_leibniz() {
    let mut algs = two_dim();
    algs.push(omni_lie_leibniz(1));
    algs.push(omni_lie_leibniz(2));
    for (i, e) in algs.iter().enumerate() {
        assert!(verify_leibniz(e).passed(), "algebra {i}");
        let l = leibniz_to_3leibniz(e);
        assert!(verify_3_leibniz(&l).passed(), "algebra {i}");
    }
    // [x,y,z] = [x,[y,z]] on E4: [e2,e2,e2] = [e2,e1] = 0, [e1,e2,e2] = [e1,e1] = 0,
    // so the induced bracket vanishes although E4 does not.
    let l = leibniz_to_3leibniz(&two_dim_leibniz(4).unwrap());
    assert_eq!(l.structure().nnz(), 0);
}

#[test]
fn omni_lie_has_expected_dimension() {
    assert_eq!(omni_lie_leibniz(2).dim(), 6);
    // {(0,e_1),(E_11,0)} = (0,e_1)
    let o = omni_lie_leibniz(2);
    assert_eq!(o.basis(4, 0), basis_vector(6, 4));
}

#[test]
fn cocycle_examples_on_e3() {
    let e3 = two_dim_leibniz(3).unwrap();
    let good = Mat::from_i64_rows(&[&[0, 1], &[0, 0]]);
    assert!(check_2cocycle(&e3, &good).passed());

    let bad = Mat::from_i64_rows(&[&[0, 0], &[1, 0]]);
    let r = check_2cocycle(&e3, &bad);
    assert_eq!(r.failures.len(), 1);
    assert_eq!(r.failures[0].tuple, vec![1, 1, 1]);

    match central_extension_checked(&e3, &bad) {
        Err(Error::NotACocycle(rep)) => assert_eq!(rep.failures[0].tuple, vec![1, 1, 1]),
        other => panic!("expected NotACocycle, got {other:?}"),
    }
}

#[test]
fn extension_formula_on_e2() {
    let e2 = two_dim_leibniz(2).unwrap();
    let omega = Mat::from_i64_rows(&[&[2, 3], &[0, 0]]);
    let ext = extension_by_form(&e2, &omega);
    // [(0,e1),(0,e2)] = (ω(e1,e2), [e1,e2]) = (3, e2)
    assert_eq!(ext.basis(1, 2), vec![s(3), s(0), s(1)]);
    assert_eq!(ext.basis(2, 1), vec![s(0), s(0), s(-1)]);
    assert_eq!(ext.basis(1, 1), vec![s(2), s(0), s(0)]);
    // This ω is not a cocycle on E2, so the extension is not Leibniz.
    assert!(!check_2cocycle(&e2, &omega).passed());
    assert!(!verify_leibniz(&ext).passed());
}

#[test]
fn cocycle_extensions_are_leibniz_with_central_unit() {
    let e3 = two_dim_leibniz(3).unwrap();
    let c = Cocycle2::new(&e3, Mat::from_i64_rows(&[&[0, 1], &[0, 1]])).unwrap();
    let ext = central_extension(&e3, &c);
    assert!(verify_leibniz(&ext.algebra).passed());
    assert!(is_central(&ext.algebra, &ext.one.element));
    assert!(!is_central(&ext.algebra, &basis_vector(3, 2)));
}

#[test]
fn centrality_in_small_algebras() {
    let e3 = two_dim_leibniz(3).unwrap();
    assert!(is_central(&e3, &basis_vector(2, 0)));
    let r = centrality_report(&e3, &basis_vector(2, 1));
    assert!(!r.passed());
    assert_eq!(r.failures[0].tuple, vec![1]);
    let ext = trivial_central_extension_3(&nilpotent3());
    assert!(verify_3_leibniz(&ext.algebra).passed());
    assert!(is_central(&ext.algebra, &ext.one.element));
}

#[test]
fn right_multiplications_are_derivations() {
    for e in two_dim() {
        for y in 0..2 {
            let d = ad_right(&e, &basis_vector(2, y));
            assert!(verify_derivation(&e, &d).passed());
        }
    }
    for (name, l) in corpus_3leibniz() {
        let n = l.dim();
        for y in 0..n {
            for z in 0..n {
                let d = ad_right3(&l, &basis_vector(n, y), &basis_vector(n, z));
                assert!(verify_derivation(&l, &d).passed(), "{name} ({y},{z})");
            }
        }
    }
}

#[test]
fn a_non_derivation_is_caught() {
    let l = nilpotent3();
    let r = verify_derivation(&l, &Mat::identity(3));
    assert!(!r.passed());
}

#[test]
fn exp_of_derivation_is_automorphism_and_conjugates_ad() {
    let l = nilpotent3();
    let mut smp = Sampler::new(3);
    for _ in 0..10 {
        let (a, b, y, z) = (smp.vector(3), smp.vector(3), smp.vector(3), smp.vector(3));
        let m = exp_nilpotent(&ad_right3(&l, &a, &b)).unwrap();
        assert!(verify_hom(&m, &l, &l).unwrap().passed());
        let lhs = &(&m * &ad_right3(&l, &y, &z)) * &invert(&m).unwrap();
        let rhs = ad_right3(&l, &m.apply(&y), &m.apply(&z));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn hom_rejects_arity_mismatch() {
    let e = two_dim_leibniz(1).unwrap();
    let l = final_3leibniz_2d();
    assert!(matches!(
        verify_hom(&Mat::identity(2), &e, &l),
        Err(Error::ShapeMismatch(_))
    ));
}

#[test]
fn embedding_s_is_injective() {
    for (name, l) in corpus_3leibniz() {
        let n = l.dim();
        let m = embedding_s(&l);
        assert_eq!(
            (m.rows(), m.cols()),
            ((n + 1) * (n + 1), 1 + n * n),
            "{name}"
        );
        assert_eq!(rank(&m), 1 + n * n, "{name}");
    }
}

#[test]
fn corrupted_constants_give_witness() {
    let mut m = nilpotent3().structure().clone();
    m.set(0, 0, s(1)); // [e1,e1,e1] = e1
    let bad = ThreeLeibnizAlgebra::new(3, m).unwrap();
    let r = verify_3_leibniz(&bad);
    assert!(!r.passed());
    assert!(r.failures.iter().any(|w| w.tuple == vec![0, 0, 0, 0, 0]));

    let one = LeibnizAlgebra::from_constants(1, &[(0, 0, 0, s(1))]).unwrap();
    assert_eq!(verify_leibniz(&one).failures[0].tuple, vec![0, 0, 0]);
}

#[test]
fn bad_shapes_are_rejected() {
    assert!(matches!(
        LeibnizAlgebra::new(2, Mat::zeros(2, 3)),
        Err(Error::ShapeMismatch(_))
    ));
    assert!(ThreeLeibnizAlgebra::from_constants(2, &[(0, 0, 2, 0, s(1))]).is_err());
}

fn vec3() -> impl Strategy<Value = Vector> {
    proptest::collection::vec(
        (-3i64..=3, 1i64..=2).prop_map(|(p, q)| Scalar::new(p, q)),
        2,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn coboundaries_are_cocycles(v in 1usize..=4, f in vec3()) {
        let e = two_dim_leibniz(v).unwrap();
        prop_assert!(check_2cocycle(&e, &coboundary(&e, &f)).passed());
    }

    #[test]
    fn bracket_is_bilinear(v in 1usize..=4, x in vec3(), y in vec3(), z in vec3(), c in -3i64..=3) {
        let e = two_dim_leibniz(v).unwrap();
        let c = s(c);
        let xz: Vector = x.iter().zip(&z).map(|(a, b)| a + &(&c * b)).collect();
        let lhs = e.bracket(&xz, &y);
        let rhs: Vector = e.bracket(&x, &y).iter().zip(e.bracket(&z, &y)).map(|(a, b)| a + &(&c * &b)).collect();
        prop_assert_eq!(lhs, rhs);
    }
}
