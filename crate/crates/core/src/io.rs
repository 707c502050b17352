//! File formats: matrices, algebras, racks, coalgebras and exported operators.
//!
//! Scalars are written as decimal fraction strings (`"3"`, `"-1/2"`).
//! Algebra files use 1-based basis labels like `e_1`; rack tables are
//! 0-based. Everything is 0-based once loaded.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebras::{Algebra, LeibnizAlgebra, ThreeLeibnizAlgebra};
use crate::coalgebra::{Coalgebra, LinearRackStruct, TrilinearRackStruct};
use crate::error::{Error, Result};
use crate::linalg::{Mat, TensorShape};
use crate::racks::{Finite3Rack, FiniteRack};
use crate::scalar::Scalar;
use crate::ybe::{DiffReport, Provenance, YbeOperator};

pub const BASIS_ORDER: &str =
    "lexicographic, left factor most significant; column j is the image of basis vector j";

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Scalar>>,
}

impl From<&Mat> for MatFile {
    fn from(m: &Mat) -> Self {
        MatFile {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.row_vecs(),
        }
    }
}

impl TryFrom<MatFile> for Mat {
    type Error = Error;

    fn try_from(f: MatFile) -> Result<Mat> {
        if f.entries.len() != f.rows || f.entries.iter().any(|r| r.len() != f.cols) {
            return Err(Error::ShapeMismatch(format!(
                "declared {}x{} but entries do not match",
                f.rows, f.cols
            )));
        }
        if f.rows == 0 {
            return Ok(Mat::zeros(0, f.cols));
        }
        Mat::from_rows(f.entries)
    }
}

pub fn mat_to_json(m: &Mat) -> String {
    to_json(&MatFile::from(m))
}

pub fn mat_from_json(text: &str) -> Result<Mat> {
    parse_json::<MatFile>(text)?.try_into()
}

/// One row per line, comma separated.
pub fn mat_to_csv(m: &Mat) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|c| c.to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn mat_from_csv(text: &str) -> Result<Mat> {
    let rows = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, l)| {
            l.split(',')
                .map(|c| {
                    c.parse::<Scalar>()
                        .map_err(|e| Error::Parse(format!("CSV line {}: {e}", i + 1)))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Mat::from_rows(rows)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Term {
    basis: usize,
    coeff: Scalar,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Bracket {
    #[serde(rename = "in")]
    inputs: Vec<usize>,
    out: Vec<Term>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct AlgebraFile {
    dim: usize,
    arity: usize,
    brackets: Vec<Bracket>,
}

/// A loaded algebra of either arity.
#[derive(Debug, Clone)]
pub enum AnyAlgebra {
    Leibniz(LeibnizAlgebra),
    ThreeLeibniz(ThreeLeibnizAlgebra),
}

impl AnyAlgebra {
    pub fn as_dyn(&self) -> &dyn Algebra {
        match self {
            AnyAlgebra::Leibniz(a) => a,
            AnyAlgebra::ThreeLeibniz(a) => a,
        }
    }
}

pub fn algebra_from_json(text: &str) -> Result<AnyAlgebra> {
    let f: AlgebraFile = parse_json(text)?;
    let shape = TensorShape::power(f.dim, f.arity);
    let mut m = Mat::zeros(f.dim, shape.size());
    for (k, b) in f.brackets.iter().enumerate() {
        let label = |i: usize| {
            i.checked_sub(1).filter(|&z| z < f.dim).ok_or_else(|| {
                Error::Parse(format!(
                    "bracket {k}: basis label {i} outside 1..={}",
                    f.dim
                ))
            })
        };
        if b.inputs.len() != f.arity {
            return Err(Error::Parse(format!(
                "bracket {k} has {} inputs, arity is {}",
                b.inputs.len(),
                f.arity
            )));
        }
        let inputs = b
            .inputs
            .iter()
            .map(|&i| label(i))
            .collect::<Result<Vec<_>>>()?;
        let col = shape.flat(&inputs);
        for t in &b.out {
            m.add_at(label(t.basis)?, col, &t.coeff);
        }
    }
    match f.arity {
        2 => Ok(AnyAlgebra::Leibniz(LeibnizAlgebra::new(f.dim, m)?)),
        3 => Ok(AnyAlgebra::ThreeLeibniz(ThreeLeibnizAlgebra::new(
            f.dim, m,
        )?)),
        a => Err(Error::Parse(format!("arity must be 2 or 3, got {a}"))),
    }
}

pub fn algebra_to_json(alg: &dyn Algebra) -> String {
    let n = alg.dim();
    let shape = TensorShape::power(n, alg.arity());
    let brackets = (0..shape.size())
        .filter(|&c| !alg.basis_bracket(c).is_empty())
        .map(|c| Bracket {
            inputs: shape.multi(c).iter().map(|i| i + 1).collect(),
            out: alg
                .basis_bracket(c)
                .iter()
                .map(|(l, s)| Term {
                    basis: l + 1,
                    coeff: s.clone(),
                })
                .collect(),
        })
        .collect();
    to_json(&AlgebraFile {
        dim: n,
        arity: alg.arity(),
        brackets,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum Table {
    Binary(Vec<Vec<usize>>),
    Ternary(Vec<Vec<Vec<usize>>>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RackFile {
    size: usize,
    arity: usize,
    table: Table,
}

#[derive(Debug, Clone)]
pub enum AnyRack {
    Binary(FiniteRack),
    Ternary(Finite3Rack),
}

fn check_len<T>(v: &[T], n: usize, what: &str) -> Result<()> {
    if v.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "{what} has length {}, expected {n}",
            v.len()
        )));
    }
    Ok(())
}

pub fn rack_from_json(text: &str) -> Result<AnyRack> {
    let f: RackFile = parse_json(text)?;
    let n = f.size;
    match (f.arity, f.table) {
        (2, Table::Binary(rows)) => {
            check_len(&rows, n, "table")?;
            for r in &rows {
                check_len(r, n, "table row")?;
            }
            Ok(AnyRack::Binary(FiniteRack::new(n, rows.concat())?))
        }
        (3, Table::Ternary(t)) => {
            check_len(&t, n, "table")?;
            let mut flat = Vec::with_capacity(n * n * n);
            for plane in &t {
                check_len(plane, n, "table plane")?;
                for r in plane {
                    check_len(r, n, "table row")?;
                    flat.extend_from_slice(r);
                }
            }
            Ok(AnyRack::Ternary(Finite3Rack::new(n, flat)?))
        }
        (a, _) => Err(Error::Parse(format!(
            "table nesting does not match arity {a}"
        ))),
    }
}

pub fn rack_to_json(r: &AnyRack) -> String {
    let file = match r {
        AnyRack::Binary(r) => {
            let n = r.size();
            RackFile {
                size: n,
                arity: 2,
                table: Table::Binary(r.table().chunks(n.max(1)).map(|c| c.to_vec()).collect()),
            }
        }
        AnyRack::Ternary(t) => {
            let n = t.size();
            RackFile {
                size: n,
                arity: 3,
                table: Table::Ternary(
                    t.table()
                        .chunks((n * n).max(1))
                        .map(|p| p.chunks(n.max(1)).map(|c| c.to_vec()).collect())
                        .collect(),
                ),
            }
        }
    };
    to_json(&file)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CoalgebraFile {
    delta: MatFile,
    counit: MatFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    op: Option<MatFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tilde: Option<MatFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    t: Option<MatFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ttilde: Option<MatFile>,
}

/// A coalgebra file, optionally carrying a linear or trilinear operation.
#[derive(Debug, Clone)]
pub enum CoalgebraInput {
    Plain(Coalgebra),
    Linear(LinearRackStruct),
    Trilinear(TrilinearRackStruct),
}

impl CoalgebraInput {
    pub fn coalgebra(&self) -> &Coalgebra {
        match self {
            CoalgebraInput::Plain(c) => c,
            CoalgebraInput::Linear(l) => l.coalgebra(),
            CoalgebraInput::Trilinear(t) => t.coalgebra(),
        }
    }
}

pub fn coalgebra_from_json(text: &str) -> Result<CoalgebraInput> {
    let f: CoalgebraFile = parse_json(text)?;
    let delta: Mat = f.delta.try_into()?;
    let counit: Mat = f.counit.try_into()?;
    let c = Coalgebra::new(delta.cols(), delta, counit)?;
    match (f.op, f.tilde, f.t, f.ttilde) {
        (None, None, None, None) => Ok(CoalgebraInput::Plain(c)),
        (Some(op), Some(tilde), None, None) => Ok(CoalgebraInput::Linear(LinearRackStruct::new(
            c,
            op.try_into()?,
            tilde.try_into()?,
        )?)),
        (None, None, Some(t), Some(tt)) => Ok(CoalgebraInput::Trilinear(TrilinearRackStruct::new(
            c,
            t.try_into()?,
            tt.try_into()?,
        )?)),
        _ => Err(Error::Parse(
            "expected either op+tilde or t+ttilde alongside delta/counit".into(),
        )),
    }
}

pub fn coalgebra_to_json(c: &CoalgebraInput) -> String {
    let base = c.coalgebra();
    let mut f = CoalgebraFile {
        delta: base.delta().into(),
        counit: base.counit().into(),
        op: None,
        tilde: None,
        t: None,
        ttilde: None,
    };
    match c {
        CoalgebraInput::Plain(_) => {}
        CoalgebraInput::Linear(l) => {
            f.op = Some(l.op().into());
            f.tilde = Some(l.tilde().into());
        }
        CoalgebraInput::Trilinear(t) => {
            f.t = Some(t.t().into());
            f.ttilde = Some(t.ttilde().into());
        }
    }
    to_json(&f)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProvenanceHeader {
    pub builder: String,
    pub source: String,
    pub source_sha256: String,
    pub basis_order: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OperatorFile {
    pub provenance: ProvenanceHeader,
    pub base_dim: usize,
    pub matrix: MatFile,
}

/// `source_bytes` is the serialized input the operator was built from.
pub fn operator_to_json(r: &YbeOperator, source_bytes: &[u8]) -> String {
    let p = r.provenance();
    to_json(&OperatorFile {
        provenance: ProvenanceHeader {
            builder: p.builder.clone(),
            source: p.source.clone(),
            source_sha256: sha256_hex(source_bytes),
            basis_order: BASIS_ORDER.into(),
        },
        base_dim: r.base_dim(),
        matrix: r.matrix().into(),
    })
}

pub fn operator_from_json(text: &str) -> Result<YbeOperator> {
    let f: OperatorFile = parse_json(text)?;
    YbeOperator::new(
        f.base_dim,
        f.matrix.try_into()?,
        Provenance::new(f.provenance.builder, f.provenance.source),
    )
}

/// The cell list only, as `[{row, col, computed, reference}, ...]`.
pub fn diff_to_json(d: &DiffReport) -> String {
    to_json(&d.cells)
}

pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    to_json(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::nilpotent3;

    #[test]
    fn mat_round_trips() {
        let m = Mat::from_rows(vec![
            vec![Scalar::new(1, 2), Scalar::from_int(-3)],
            vec![Scalar::zero(), Scalar::new(-7, 9)],
        ])
        .unwrap();
        assert_eq!(mat_from_json(&mat_to_json(&m)).unwrap(), m);
        assert_eq!(mat_from_csv(&mat_to_csv(&m)).unwrap(), m);
        assert_eq!(mat_to_csv(&m), "1/2,-3\n0,-7/9\n");
    }

    #[test]
    fn algebra_labels_are_one_based() {
        let text = r#"{"dim":3,"arity":3,"brackets":[
            {"in":[3,3,3],"out":[{"basis":2,"coeff":"1"}]},
            {"in":[2,3,3],"out":[{"basis":1,"coeff":"1"}]}]}"#;
        let AnyAlgebra::ThreeLeibniz(l) = algebra_from_json(text).unwrap() else {
            panic!("expected arity 3");
        };
        assert_eq!(l, nilpotent3());
        let again = algebra_from_json(&algebra_to_json(&l)).unwrap();
        assert!(matches!(again, AnyAlgebra::ThreeLeibniz(a) if a == l));
    }

    #[test]
    fn malformed_json_reports_location() {
        let err = mat_from_json("{\"rows\": 1,\n \"cols\": }").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn rack_round_trip() {
        let r = AnyRack::Binary(crate::racks::dihedral_rack(3));
        let back = rack_from_json(&rack_to_json(&r)).unwrap();
        assert!(matches!((back, r), (AnyRack::Binary(a), AnyRack::Binary(b)) if a == b));
    }
}
