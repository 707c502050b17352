use std::path::PathBuf;

use proptest::prelude::*;

use yb_core::algebras::*;
use yb_core::coalgebra::*;
use yb_core::io::*;
use yb_core::racks::{conjugation_3rack, dihedral_rack, s3, z4_module_3rack};
use yb_core::repro;
use yb_core::{Error, Mat, Scalar};

fn inputs_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../inputs")
}

fn read_input(name: &str) -> String {
    std::fs::read_to_string(inputs_dir().join(name)).unwrap()
}

#[test]
fn algebras_round_trip() {
    let algs: Vec<Box<dyn Algebra>> = vec![
        Box::new(nilpotent3()),
        Box::new(final_3leibniz_2d()),
        Box::new(omni_lie(2)),
        Box::new(octonion_3leibniz()),
        Box::new(two_dim_leibniz(2).unwrap()),
        Box::new(omni_lie_leibniz(2)),
    ];
    for a in algs {
        let text = algebra_to_json(a.as_ref());
        let back = algebra_from_json(&text).unwrap();
        assert_eq!(back.as_dyn().arity(), a.arity());
        assert_eq!(back.as_dyn().structure(), a.structure());
        assert_eq!(algebra_to_json(back.as_dyn()), text);
    }
}

#[test]
fn racks_round_trip() {
    for r in [
        AnyRack::Binary(dihedral_rack(5)),
        AnyRack::Ternary(z4_module_3rack()),
        AnyRack::Ternary(conjugation_3rack(&s3())),
    ] {
        let text = rack_to_json(&r);
        assert_eq!(rack_to_json(&rack_from_json(&text).unwrap()), text);
    }
}

#[test]
fn coalgebras_round_trip() {
    let inputs = [
        CoalgebraInput::Plain(unital_primitive_coalgebra(3)),
        CoalgebraInput::Linear(leibniz_linear_rack(&two_dim_leibniz(3).unwrap())),
        CoalgebraInput::Trilinear(threeleibniz_trilinear_rack(&nilpotent3())),
    ];
    for c in inputs {
        let text = coalgebra_to_json(&c);
        let back = coalgebra_from_json(&text).unwrap();
        assert_eq!(back.coalgebra(), c.coalgebra());
        assert_eq!(coalgebra_to_json(&back), text);
    }
}

#[test]
fn operator_export_has_625_entries_and_round_trips() {
    let r = repro::build_25x25();
    let text = operator_to_json(&r, b"source");
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let rows = v["matrix"]["entries"].as_array().unwrap();
    assert_eq!(
        rows.iter()
            .map(|row| row.as_array().unwrap().len())
            .sum::<usize>(),
        625
    );
    assert_eq!(v["provenance"]["source_sha256"], sha256_hex(b"source"));
    assert_eq!(v["provenance"]["basis_order"], BASIS_ORDER);
    assert_eq!(operator_from_json(&text).unwrap(), r);
}

#[test]
fn csv_round_trip_and_shape() {
    let m = repro::build_4x4().unwrap().into_matrix();
    let csv = mat_to_csv(&m);
    assert_eq!(csv.lines().count(), 4);
    assert_eq!(csv.lines().next().unwrap(), "1,0,0,1");
    assert_eq!(mat_from_csv(&csv).unwrap(), m);
    let half = Mat::from_rows(vec![vec![Scalar::new(-1, 2), Scalar::new(3, 1)]]).unwrap();
    assert_eq!(mat_to_csv(&half), "-1/2,3\n");
}

#[test]
fn diff_export_is_a_list() {
    let diff = repro::diff_25x25(&repro::build_25x25()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&diff_to_json(&diff)).unwrap();
    let cells = v.as_array().unwrap();
    assert_eq!(cells.len(), diff.cells.len());
    assert!(cells.iter().all(|c| c["col"] == 13));
}

#[test]
fn sha256_known_value() {
    assert_eq!(
        sha256_hex(b"abc"),
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
    );
}

#[test]
fn input_corpus_loads() {
    for name in [
        "nil3.json",
        "final2d.json",
        "e2.json",
        "e3.json",
        "not-leibniz.json",
    ] {
        algebra_from_json(&read_input(name)).unwrap();
    }
    for name in ["dihedral3.json", "z4.json", "not-a-rack.json"] {
        rack_from_json(&read_input(name)).unwrap();
    }
    let c = coalgebra_from_json(&read_input("e3-linear-rack.json")).unwrap();
    match c {
        CoalgebraInput::Linear(lr) => assert!(verify_linear_rack(&lr).passed()),
        _ => panic!("expected a linear rack"),
    }
    match algebra_from_json(&read_input("nil3.json")).unwrap() {
        AnyAlgebra::ThreeLeibniz(l) => assert_eq!(l.structure(), nilpotent3().structure()),
        _ => panic!("expected a 3-Leibniz algebra"),
    }
}

#[test]
fn malformed_inputs_are_parse_errors() {
    match algebra_from_json(&read_input("malformed.json")) {
        Err(Error::Parse(msg)) => assert!(msg.starts_with("line "), "{msg}"),
        other => panic!("expected a parse error, got {:?}", other.map(|_| ())),
    }
    assert!(mat_from_csv("1,2\n3\n").is_err());
    assert!(matches!(mat_from_csv("1,x\n"), Err(Error::Parse(_))));
    let bad = r#"{"rows": 2, "cols": 2, "entries": [["1","0"]]}"#;
    assert!(matches!(mat_from_json(bad), Err(Error::ShapeMismatch(_))));
    let bad_op = r#"{"provenance": {"builder": "b", "source": "s", "source_sha256": "", "basis_order": ""},
        "base_dim": 3, "matrix": {"rows": 1, "cols": 1, "entries": [["1"]]}}"#;
    assert!(matches!(
        operator_from_json(bad_op),
        Err(Error::ShapeMismatch(_))
    ));
}

fn rational_mat() -> impl Strategy<Value = Mat> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        proptest::collection::vec(
            (-50i64..=50, 1i64..=12).prop_map(|(p, q)| Scalar::new(p, q)),
            r * c,
        )
        .prop_map(move |v| Mat::from_entries(r, c, v).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matrices_round_trip_exactly(m in rational_mat()) {
        prop_assert_eq!(mat_from_csv(&mat_to_csv(&m)).unwrap(), m.clone());
        prop_assert_eq!(mat_from_json(&mat_to_json(&m)).unwrap(), m);
    }
}
