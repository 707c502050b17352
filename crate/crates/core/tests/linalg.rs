use proptest::prelude::*;

use yb_core::linalg::{
    exp_nilpotent, invert, kron, nilpotency_index, swap_operator, Mat, TensorShape,
};
use yb_core::{Error, Scalar};

fn s(p: i64, q: i64) -> Scalar {
    Scalar::new(p, q)
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=3).prop_map(|(p, q)| Scalar::new(p, q))
}

fn mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    proptest::collection::vec(small_scalar(), rows * cols)
        .prop_map(move |v| Mat::from_entries(rows, cols, v).unwrap())
}

/// Strictly upper-triangular, hence nilpotent.
fn strictly_upper(n: usize) -> impl Strategy<Value = Mat> {
    mat(n, n).prop_map(move |mut m| {
        for i in 0..n {
            for j in 0..=i {
                m.set(i, j, Scalar::zero());
            }
        }
        m
    })
}

#[test]
fn kron_small_cases() {
    assert_eq!(kron(&Mat::identity(2), &Mat::identity(3)), Mat::identity(6));
    assert_eq!(
        kron(&Mat::from_i64_rows(&[&[2]]), &Mat::from_i64_rows(&[&[3]])),
        Mat::from_i64_rows(&[&[6]])
    );
    let a = Mat::from_i64_rows(&[&[1, 2], &[3, 4]]);
    let b = Mat::from_i64_rows(&[&[0, 5], &[6, 7]]);
    let k = kron(&a, &b);
    // (a⊗b)[(i·2+k),(j·2+l)] = a[i,j]·b[k,l], so (3,1) is a[1,0]·b[1,1].
    assert_eq!(k.get(3, 1), &Scalar::from_int(3 * 7));
    assert_eq!(k.get(2, 3), &Scalar::from_int(4 * 5));
}

#[test]
fn flip_braid_relation_by_dense_products() {
    let sw = swap_operator(2);
    let id = Mat::identity(2);
    let a = kron(&sw, &id);
    let b = kron(&id, &sw);
    assert_eq!(&(&a * &b) * &a, &(&b * &a) * &b);
}

#[test]
fn swap_operator_cases() {
    assert_eq!(swap_operator(1), Mat::identity(1));
    let expect = Mat::from_i64_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
    assert_eq!(swap_operator(2), expect);
    let s3 = swap_operator(3);
    assert_eq!(&s3 * &s3, Mat::identity(9));
}

#[test]
fn tensor_shape_is_lexicographic() {
    let sh = TensorShape::new(vec![2, 3, 4]);
    assert_eq!(sh.flat(&[1, 2, 3]), 12 + 8 + 3);
    assert_eq!(sh.multi(23), vec![1, 2, 3]);
}

#[test]
fn exp_small_cases() {
    assert_eq!(exp_nilpotent(&Mat::zeros(3, 3)).unwrap(), Mat::identity(3));
    let j = Mat::from_i64_rows(&[&[0, 1], &[0, 0]]);
    assert_eq!(
        exp_nilpotent(&j).unwrap(),
        Mat::from_i64_rows(&[&[1, 1], &[0, 1]])
    );
    // e3 ↦ e2 ↦ e1 ↦ 0
    let m = Mat::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
    let e = exp_nilpotent(&m).unwrap();
    assert_eq!(e.column(2), vec![s(1, 2), s(1, 1), s(1, 1)]);
    assert_eq!(nilpotency_index(&m).unwrap(), 3);
}

#[test]
fn non_nilpotent_exp_is_a_typed_error() {
    let m = Mat::from_i64_rows(&[&[1, 0], &[0, 0]]);
    match exp_nilpotent(&m) {
        Err(Error::NotNilpotent { row, col, .. }) => assert_eq!((row, col), (0, 0)),
        other => panic!("expected NotNilpotent, got {other:?}"),
    }
}

#[test]
fn invert_small_cases() {
    assert_eq!(invert(&Mat::identity(4)).unwrap(), Mat::identity(4));
    let p = Mat::from_i64_rows(&[&[0, 1], &[1, 0]]);
    assert_eq!(invert(&p).unwrap(), p);
    let r = Mat::from_i64_rows(&[&[1, 0, 0, 1], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
    let inv = invert(&r).unwrap();
    assert_eq!(&inv * &r, Mat::identity(4));
    assert!(matches!(
        invert(&Mat::from_i64_rows(&[&[1, 2], &[2, 4]])),
        Err(Error::Singular { .. })
    ));
}

#[test]
fn rationals_stay_reduced() {
    let a = s(2, 4);
    assert_eq!(a.to_string(), "1/2");
    assert_eq!((s(1, 3) + s(1, 6)).to_string(), "1/2");
    assert_eq!(s(3, -6).to_string(), "-1/2");
    assert_eq!(Scalar::inv_factorial(3), s(1, 6));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mixed_product(a in mat(2, 2), a2 in mat(2, 2), b in mat(2, 3), b2 in mat(3, 2)) {
        let lhs = kron(&(&a * &a2), &(&b * &b2));
        let rhs = &kron(&a, &b) * &kron(&a2, &b2);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_inverse(m in strictly_upper(4)) {
        let e = exp_nilpotent(&m).unwrap();
        let f = exp_nilpotent(&m.neg()).unwrap();
        prop_assert_eq!(&e * &f, Mat::identity(4));
    }

    #[test]
    fn invert_is_two_sided(m in mat(3, 3)) {
        if let Ok(inv) = invert(&m) {
            prop_assert_eq!(&inv * &m, Mat::identity(3));
            prop_assert_eq!(&m * &inv, Mat::identity(3));
        } else {
            prop_assert!(yb_core::linalg::rank(&m) < 3);
        }
    }

    #[test]
    fn field_arithmetic_is_exact(a in small_scalar(), b in small_scalar(), c in small_scalar()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if let Some(r) = b.recip() {
            prop_assert_eq!(&(&a * &b) * &r, a);
        }
    }
}
