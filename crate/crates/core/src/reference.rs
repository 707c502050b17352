//! Printed reference matrices, transcribed once with symbolic slots.
//!
//! Each table is stored as whitespace-separated rows. A cell is either a
//! rational literal or a parameter name (`a1`, `b2`, ...) that must be bound
//! by a substitution before use.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::scalar::Scalar;

pub const MATRIX_4X4: &str = include_str!("../data/matrix-4x4.txt");
pub const MATRIX_9X9: [&str; 4] = [
    include_str!("../data/matrix-9x9-E1.txt"),
    include_str!("../data/matrix-9x9-E2.txt"),
    include_str!("../data/matrix-9x9-E3.txt"),
    include_str!("../data/matrix-9x9-E4.txt"),
];
pub const MATRIX_25X25: &str = include_str!("../data/matrix-25x25.txt");

/// Parameter bindings, e.g. `b1 = 2`.
pub type Substitution = BTreeMap<String, Scalar>;

/// Parses `name=value` pairs such as `b1=2` or `c2=-1/3`.
pub fn parse_subst<'a>(pairs: impl IntoIterator<Item = &'a str>) -> Result<Substitution> {
    let mut out = Substitution::new();
    for p in pairs {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("substitution {p:?} is not name=value")))?;
        out.insert(k.trim().to_string(), v.parse()?);
    }
    Ok(out)
}

/// Parameter names of the 9×9 table for `E_variant`, in the order
/// `(e1,e1), (e1,e2), (e2,e1), (e2,e2)` of the form they fill.
pub fn parameter_slots(variant: usize) -> Result<[Option<&'static str>; 4]> {
    Ok(match variant {
        1 => [Some("a1"), Some("a2"), Some("a3"), Some("a4")],
        2 => [Some("b1"), Some("b2"), None, None],
        3 => [None, None, Some("c1"), Some("c2")],
        4 => [None, None, Some("d1"), Some("d2")],
        v => return Err(Error::UnknownVariant(format!("E{v} (expected 1..4)"))),
    })
}

/// Distinct small primes in the listed parameter order.
pub fn default_substitution(variant: usize) -> Result<Substitution> {
    let primes = [2, 3, 5, 7];
    let names = parameter_slots(variant)?;
    Ok(names
        .iter()
        .flatten()
        .zip(primes)
        .map(|(n, p)| (n.to_string(), Scalar::from_int(p)))
        .collect())
}

/// The bilinear form `ω` on the 2-dimensional `E_variant` that the
/// parameters of its 9×9 table encode. Unbound parameters default to 0.
pub fn omega_from_subst(variant: usize, subst: &Substitution) -> Result<Mat> {
    let names = parameter_slots(variant)?;
    let mut m = Mat::zeros(2, 2);
    for (k, name) in names.iter().enumerate() {
        if let Some(v) = name.and_then(|n| subst.get(n)) {
            m.set(k / 2, k % 2, v.clone());
        }
    }
    Ok(m)
}

/// Parses a table, resolving parameter cells through `subst`.
pub fn parse_table(text: &str, subst: &Substitution) -> Result<Mat> {
    let rows = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|cell| {
                    if cell.starts_with(|c: char| c.is_ascii_alphabetic()) {
                        subst
                            .get(cell)
                            .cloned()
                            .ok_or_else(|| Error::Parse(format!("unbound parameter {cell}")))
                    } else {
                        cell.parse()
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Mat::from_rows(rows)
}

pub fn matrix_4x4() -> Mat {
    parse_table(MATRIX_4X4, &Substitution::new()).expect("embedded table parses")
}

pub fn matrix_9x9(variant: usize, subst: &Substitution) -> Result<Mat> {
    parameter_slots(variant)?;
    parse_table(MATRIX_9X9[variant - 1], subst)
}

pub fn matrix_25x25() -> Mat {
    parse_table(MATRIX_25X25, &Substitution::new()).expect("embedded table parses")
}
