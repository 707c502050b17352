//! Yang–Baxter operators: the builders, the braid-relation verifier,
//! equivalence checks and cell-level comparison with reference tables.

use serde::Serialize;

use crate::algebras::{
    centrality_report, Algebra, CentralWitness, LeibnizAlgebra, ThreeLeibnizAlgebra,
};
use crate::coalgebra::{cocommutativity_report, LinearRackStruct, TrilinearRackStruct};
use crate::error::{Error, Result};
use crate::linalg::{invert, kron, Mat, TensorShape};
use crate::racks::FiniteRack;
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::tensor::{check_tuples, matrix_from_basis_images, LinearMap, Tensor};

/// Where an operator came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub builder: String,
    pub source: String,
}

impl Provenance {
    pub fn new(builder: impl Into<String>, source: impl Into<String>) -> Self {
        Provenance {
            builder: builder.into(),
            source: source.into(),
        }
    }
}

/// An endomorphism of `V⊗V` with `dim V = base_dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YbeOperator {
    base_dim: usize,
    matrix: Mat,
    provenance: Provenance,
}

impl YbeOperator {
    pub fn new(base_dim: usize, matrix: Mat, provenance: Provenance) -> Result<Self> {
        let m = base_dim * base_dim;
        if matrix.rows() != m || matrix.cols() != m {
            return Err(Error::ShapeMismatch(format!(
                "operator on V⊗V with dim V = {base_dim} must be {m}x{m}, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(YbeOperator {
            base_dim,
            matrix,
            provenance,
        })
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn into_matrix(self) -> Mat {
        self.matrix
    }

    pub fn verify(&self) -> VerificationReport {
        verify_ybe(&self.matrix, self.base_dim)
    }
}

/// `(R⊗I)(I⊗R)(R⊗I) = (I⊗R)(R⊗I)(I⊗R)` on every basis vector of `V^{⊗3}`,
/// plus invertibility of `R`.
pub fn verify_ybe(r: &Mat, n: usize) -> VerificationReport {
    let map = match LinearMap::new(r, &[n, n], &[n, n]) {
        Ok(m) => m,
        Err(e) => {
            let mut report = VerificationReport::new("YBE");
            report.fail(vec![], e.to_string());
            return report;
        }
    };
    let braid = check_tuples("braid relation", &[n, n, n], |idx| {
        let x = Tensor::basis(&[n, n, n], idx);
        let lhs = x.apply(0, &map).apply(1, &map).apply(0, &map);
        let rhs = x.apply(1, &map).apply(0, &map).apply(1, &map);
        lhs.first_difference(&rhs)
            .map(|(row, a, b)| format!("first differing entry: row {row}, lhs {a}, rhs {b}"))
    });
    let mut inv = VerificationReport::new("invertible");
    inv.checked = 1;
    if let Err(e) = invert(r) {
        inv.fail(vec![], e.to_string());
    }
    VerificationReport::combine("YBE", [braid, inv])
}

/// Dense cross-check of [`verify_ybe`] through explicit Kronecker products.
/// Only practical for small `n`.
pub fn verify_ybe_dense(r: &Mat, n: usize) -> VerificationReport {
    let id = Mat::identity(n);
    let r12 = kron(r, &id);
    let r23 = kron(&id, r);
    let lhs = &(&r12 * &r23) * &r12;
    let rhs = &(&r23 * &r12) * &r23;
    let mut report = VerificationReport::new("YBE (dense)");
    report.checked = n * n * n;
    if let Some((i, j)) = lhs.first_difference(&rhs) {
        report.fail(
            vec![i, j],
            format!("lhs {} vs rhs {}", lhs.get(i, j), rhs.get(i, j)),
        );
    }
    report
}

/// `R(x⊗y) = y⊗x + 𝟏⊗[x,y]`.
pub fn solution_from_central_leibniz(
    e: &LeibnizAlgebra,
    one: &CentralWitness,
) -> Result<YbeOperator> {
    let report = centrality_report(e, &one.element);
    if !report.passed() {
        return Err(Error::NotCentral(report));
    }
    Ok(central_leibniz_formula(
        e,
        &one.element,
        "central Leibniz algebra",
    ))
}

fn central_leibniz_formula(e: &LeibnizAlgebra, one: &[Scalar], builder: &str) -> YbeOperator {
    let n = e.dim();
    let one_t = Tensor::from_dense(&[n], one);
    let m = matrix_from_basis_images(&[n, n], n * n, |idx| {
        let swap = Tensor::basis(&[n, n], &[idx[1], idx[0]]);
        let br = Tensor::from_dense(&[n], &e.basis(idx[0], idx[1]));
        let mut extra = Tensor::zero(&[n, n]);
        for (i, c) in one_t.iter() {
            for (j, d) in br.iter() {
                extra = extra.plus(&Tensor::basis(&[n, n], &[i, j]).scale(&(c * d)));
            }
        }
        swap.plus(&extra)
    });
    YbeOperator::new(n, m, Provenance::new(builder, format!("dim {n}"))).expect("square")
}

/// `R((a,x)⊗(b,y)) = (b,y)⊗(a,x) + (1,0)⊗(ω(x,y),[x,y])` on `K⊕E`, for any
/// bilinear form `ω`. This is a braid solution exactly when `ω` is a
/// 2-cocycle; no check is made here.
pub fn solution_from_extension(e: &LeibnizAlgebra, omega: &Mat) -> YbeOperator {
    let ext = crate::algebras::extension_by_form(e, omega);
    let one = crate::linalg::basis_vector(ext.dim(), 0);
    central_leibniz_formula(&ext, &one, "central extension")
}

/// `R(u⊗v) = v_(1)⊗(u◁v_(2))`.
pub fn solution_from_linear_rack(lr: &LinearRackStruct) -> Result<YbeOperator> {
    let c = lr.coalgebra();
    let report = cocommutativity_report(c);
    if !report.passed() {
        return Err(Error::NotCocommutative(report));
    }
    let n = lr.dim();
    let m = matrix_from_basis_images(&[n, n], n * n, |idx| {
        let t = c.split(&Tensor::basis(&[n, n], idx), 1);
        t.permute(&[1, 0, 2]).apply(1, lr.op_map())
    });
    YbeOperator::new(n, m, Provenance::new("linear rack", format!("dim {n}")))
}

/// The inverse given by the twisted operation, `(u⊗v) ↦ (v◁̃u_(2))⊗u_(1)`.
pub fn linear_rack_inverse(lr: &LinearRackStruct) -> Mat {
    let c = lr.coalgebra();
    let n = lr.dim();
    matrix_from_basis_images(&[n, n], n * n, |idx| {
        let t = c.split(&Tensor::basis(&[n, n], idx), 0);
        t.permute(&[2, 1, 0]).apply(0, lr.tilde_map())
    })
}

/// `R((u⊗v)⊗(m⊗n)) = (m1⊗n1)⊗(T(u,m2,n2)⊗T(v,m3,n3))` on `C⊗C`.
pub fn solution_from_trilinear_rack(tr: &TrilinearRackStruct) -> Result<YbeOperator> {
    let c = tr.coalgebra();
    let report = cocommutativity_report(c);
    if !report.passed() {
        return Err(Error::NotCocommutative(report));
    }
    let n = tr.dim();
    let big = n * n;
    let m = matrix_from_basis_images(&[n; 4], big * big, |idx| {
        // u v m1 m2 m3 n1 n2 n3
        let t = c.split3(&c.split3(&Tensor::basis(&[n; 4], idx), 3), 2);
        t.permute(&[2, 5, 0, 3, 6, 1, 4, 7])
            .apply(2, tr.t_map())
            .apply(3, tr.t_map())
    });
    YbeOperator::new(
        big,
        m,
        Provenance::new("trilinear rack", format!("dim {n}")),
    )
}

/// Closed form on `(K⊕L)⊗(K⊕L)`:
/// `R((a1,x1)⊗(a2,x2)⊗(b1,y1)⊗(b2,y2)) = (b1,y1)⊗(b2,y2)⊗(a1,x1)⊗(a2,x2)
///  + (1,0)⊗(1,0)⊗((0,[x1,y1,y2])⊗(a2,x2) + (a1,x1)⊗(0,[x2,y1,y2]))`.
pub fn solution_3lei_tensor_square(l: &ThreeLeibnizAlgebra) -> YbeOperator {
    let d = l.dim();
    let n = d + 1;
    let dims = [n; 4];
    let m = matrix_from_basis_images(&dims, n.pow(4), |idx| {
        let (p, q, r, s) = (idx[0], idx[1], idx[2], idx[3]);
        let mut out = Tensor::basis(&dims, &[r, s, p, q]);
        if r > 0 && s > 0 {
            if p > 0 {
                for (o, c) in l.basis_bracket(((p - 1) * d + r - 1) * d + s - 1) {
                    out = out.plus(&Tensor::basis(&dims, &[0, 0, o + 1, q]).scale(c));
                }
            }
            if q > 0 {
                for (o, c) in l.basis_bracket(((q - 1) * d + r - 1) * d + s - 1) {
                    out = out.plus(&Tensor::basis(&dims, &[0, 0, p, o + 1]).scale(c));
                }
            }
        }
        out
    });
    YbeOperator::new(
        n * n,
        m,
        Provenance::new("3-Leibniz tensor square", format!("dim {d}")),
    )
    .expect("square")
}

/// Closed form on `K⊕(L⊗L)`: `R = τ + (1,0)⊗(0,{X,Y})` with
/// `{x1⊗x2, y1⊗y2} = [x1,y1,y2]⊗x2 + x1⊗[x2,y1,y2]`.
pub fn solution_3lei_fundamental(l: &ThreeLeibnizAlgebra) -> YbeOperator {
    let d = l.dim();
    let n = 1 + d * d;
    let m = matrix_from_basis_images(&[n, n], n * n, |idx| {
        let (i, j) = (idx[0], idx[1]);
        let mut out = Tensor::basis(&[n, n], &[j, i]);
        if i > 0 && j > 0 {
            let (x1, x2) = ((i - 1) / d, (i - 1) % d);
            let (y1, y2) = ((j - 1) / d, (j - 1) % d);
            for (o, c) in l.basis_bracket((x1 * d + y1) * d + y2) {
                out = out.plus(&Tensor::basis(&[n, n], &[0, 1 + o * d + x2]).scale(c));
            }
            for (o, c) in l.basis_bracket((x2 * d + y1) * d + y2) {
                out = out.plus(&Tensor::basis(&[n, n], &[0, 1 + x1 * d + o]).scale(c));
            }
        }
        out
    });
    YbeOperator::new(
        n,
        m,
        Provenance::new("3-Leibniz fundamental objects", format!("dim {d}")),
    )
    .expect("square")
}

/// Linearization of the set solution `R(x,y) = (y, x◁y)`.
pub fn solution_from_set_rack(r: &FiniteRack) -> YbeOperator {
    let sol = crate::racks::set_ybe_solution(r);
    YbeOperator::new(
        r.size(),
        sol.matrix(),
        Provenance::new("set rack", format!("size {}", r.size())),
    )
    .expect("square")
}

/// `(θ⊗θ)R₁ = R₂(θ⊗θ)` for `θ : V₁ → V₂`.
pub fn equivalence_check(
    r1: &YbeOperator,
    r2: &YbeOperator,
    theta: &Mat,
) -> Result<VerificationReport> {
    let (n1, n2) = (r1.base_dim, r2.base_dim);
    if theta.cols() != n1 || theta.rows() != n2 {
        return Err(Error::ShapeMismatch(format!(
            "θ is {}x{} but the carriers have dims {n1} -> {n2}",
            theta.rows(),
            theta.cols()
        )));
    }
    let t = LinearMap::new(theta, &[n1], &[n2])?;
    let a = LinearMap::new(&r1.matrix, &[n1, n1], &[n1, n1])?;
    let b = LinearMap::new(&r2.matrix, &[n2, n2], &[n2, n2])?;
    Ok(check_tuples("equivalence", &[n1, n1], |idx| {
        let x = Tensor::basis(&[n1, n1], idx);
        let lhs = x.apply(0, &a).apply(0, &t).apply(1, &t);
        let rhs = x.apply(0, &t).apply(1, &t).apply(0, &b);
        crate::tensor::diff_detail(&lhs, &rhs)
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellDiff {
    pub row: usize,
    pub col: usize,
    pub computed: Scalar,
    pub reference: Scalar,
}

/// Formula-side explanation of a mismatching column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColumnJustification {
    pub col: usize,
    pub basis_tuple: Vec<usize>,
    pub computed: String,
    pub reference: String,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffReport {
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<CellDiff>,
    pub matching_columns: usize,
    pub justifications: Vec<ColumnJustification>,
}

impl DiffReport {
    pub fn is_match(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn mismatched_columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.cells.iter().map(|c| c.col).collect();
        cols.dedup();
        cols
    }

    /// Attaches a free-text explanation to the justification of `col`.
    pub fn annotate(&mut self, col: usize, note: impl Into<String>) {
        if let Some(j) = self.justifications.iter_mut().find(|j| j.col == col) {
            j.note = note.into();
        }
    }
}

fn describe_column(m: &Mat, col: usize, n: usize) -> String {
    let t = Tensor::from_dense(&[n, n], &m.column(col));
    t.describe()
}

/// Cell-by-cell comparison of an operator with a reference matrix. Each
/// mismatching column gets the formula-built image of its basis tensor.
pub fn compare_to_reference(r: &YbeOperator, reference: &Mat) -> Result<DiffReport> {
    let m = &r.matrix;
    if m.rows() != reference.rows() || m.cols() != reference.cols() {
        return Err(Error::ShapeMismatch(format!(
            "computed {}x{} vs reference {}x{}",
            m.rows(),
            m.cols(),
            reference.rows(),
            reference.cols()
        )));
    }
    let n = r.base_dim;
    let shape = TensorShape::new(vec![n, n]);
    let mut cells = Vec::new();
    let mut justifications = Vec::new();
    for col in 0..m.cols() {
        let before = cells.len();
        for row in 0..m.rows() {
            if m.get(row, col) != reference.get(row, col) {
                cells.push(CellDiff {
                    row,
                    col,
                    computed: m.get(row, col).clone(),
                    reference: reference.get(row, col).clone(),
                });
            }
        }
        if cells.len() > before {
            justifications.push(ColumnJustification {
                col,
                basis_tuple: shape.multi(col),
                computed: describe_column(m, col, n),
                reference: describe_column(reference, col, n),
                note: String::new(),
            });
        }
    }
    Ok(DiffReport {
        rows: m.rows(),
        cols: m.cols(),
        matching_columns: m.cols() - justifications.len(),
        cells,
        justifications,
    })
}

/// True when both matrices have the same shape and `R` is invertible with
/// `inverse` as its inverse.
pub fn is_inverse(r: &Mat, inverse: &Mat) -> bool {
    r.try_mul(inverse)
        .map(|p| p == Mat::identity(r.rows()))
        .unwrap_or(false)
}
