//! Leibniz and 3-Leibniz algebras given by structure constants, the
//! constructions between them, central elements and central extensions.
//!
//! A bracket of arity `k` on an `n`-dimensional space is stored as an
//! `n × n^k` matrix whose column `(i_1,…,i_k)` (lexicographic) is the
//! bracket of the corresponding basis vectors.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{fmt_vec, is_zero_vec, vec_sub, Mat, TensorShape, Vector};
use crate::report::VerificationReport;
use crate::scalar::Scalar;

type SparseCol = Vec<(usize, Scalar)>;

/// Common view of Leibniz (arity 2) and 3-Leibniz (arity 3) algebras.
pub trait Algebra: Sync {
    fn dim(&self) -> usize;
    fn arity(&self) -> usize;
    /// The `n × n^arity` structure matrix.
    fn structure(&self) -> &Mat;
    /// Sparse bracket of basis vectors, indexed by the flat tuple index.
    fn basis_bracket(&self, flat: usize) -> &[(usize, Scalar)];

    /// Multilinear bracket of arbitrary vectors.
    fn bracket_of(&self, args: &[&[Scalar]]) -> Vector {
        assert_eq!(
            args.len(),
            self.arity(),
            "wrong number of bracket arguments"
        );
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        let support: Vec<Vec<(usize, &Scalar)>> = args
            .iter()
            .map(|a| {
                assert_eq!(a.len(), n, "argument has wrong length");
                a.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        let mut stack: Vec<(usize, usize, Scalar)> = vec![(0, 0, Scalar::one())];
        while let Some((depth, flat, coef)) = stack.pop() {
            if depth == args.len() {
                for (l, c) in self.basis_bracket(flat) {
                    out[*l] += &coef * c;
                }
                continue;
            }
            for (i, c) in &support[depth] {
                stack.push((depth + 1, flat * n + i, &coef * *c));
            }
        }
        out
    }
}

fn check_structure(dim: usize, arity: usize, m: &Mat) -> Result<()> {
    let cols = dim.pow(arity as u32);
    if m.rows() != dim || m.cols() != cols {
        return Err(Error::ShapeMismatch(format!(
            "bracket of arity {arity} on dim {dim} needs a {dim}x{cols} matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// Builds a structure matrix from sparse `(inputs, output, coefficient)`
/// triples with 0-based indices.
fn structure_from_constants(
    dim: usize,
    arity: usize,
    constants: &[(&[usize], usize, Scalar)],
) -> Result<Mat> {
    let shape = TensorShape::power(dim, arity);
    let mut m = Mat::zeros(dim, shape.size());
    for (inputs, out, c) in constants {
        if inputs.len() != arity || inputs.iter().chain([out]).any(|&i| i >= dim) {
            return Err(Error::Invalid(format!(
                "structure constant {inputs:?} -> {out} out of range for dim {dim}, arity {arity}"
            )));
        }
        m.add_at(*out, shape.flat(inputs), c);
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    dim: usize,
    bracket: Mat,
    cols: Vec<SparseCol>,
}

impl LeibnizAlgebra {
    pub fn new(dim: usize, bracket: Mat) -> Result<Self> {
        check_structure(dim, 2, &bracket)?;
        let cols = bracket.sparse_columns();
        Ok(LeibnizAlgebra { dim, bracket, cols })
    }

    /// `[e_i, e_j] = Σ c e_k` from 0-based `(i, j, k, c)`.
    pub fn from_constants(dim: usize, constants: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let triples: Vec<([usize; 2], usize, Scalar)> = constants
            .iter()
            .map(|(i, j, k, c)| ([*i, *j], *k, c.clone()))
            .collect();
        let refs: Vec<(&[usize], usize, Scalar)> = triples
            .iter()
            .map(|(a, k, c)| (&a[..], *k, c.clone()))
            .collect();
        Self::new(dim, structure_from_constants(dim, 2, &refs)?)
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new(dim, Mat::zeros(dim, dim * dim)).expect("shape is consistent")
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.bracket_of(&[x, y])
    }

    pub fn basis(&self, i: usize, j: usize) -> Vector {
        self.bracket.column(i * self.dim + j)
    }
}

impl Algebra for LeibnizAlgebra {
    fn dim(&self) -> usize {
        self.dim
    }
    fn arity(&self) -> usize {
        2
    }
    fn structure(&self) -> &Mat {
        &self.bracket
    }
    fn basis_bracket(&self, flat: usize) -> &[(usize, Scalar)] {
        &self.cols[flat]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeLeibnizAlgebra {
    dim: usize,
    bracket: Mat,
    cols: Vec<SparseCol>,
}

impl ThreeLeibnizAlgebra {
    pub fn new(dim: usize, bracket: Mat) -> Result<Self> {
        check_structure(dim, 3, &bracket)?;
        let cols = bracket.sparse_columns();
        Ok(ThreeLeibnizAlgebra { dim, bracket, cols })
    }

    /// `[e_i, e_j, e_k] = Σ c e_l` from 0-based `(i, j, k, l, c)`.
    pub fn from_constants(
        dim: usize,
        constants: &[(usize, usize, usize, usize, Scalar)],
    ) -> Result<Self> {
        let quads: Vec<([usize; 3], usize, Scalar)> = constants
            .iter()
            .map(|(i, j, k, l, c)| ([*i, *j, *k], *l, c.clone()))
            .collect();
        let refs: Vec<(&[usize], usize, Scalar)> = quads
            .iter()
            .map(|(a, l, c)| (&a[..], *l, c.clone()))
            .collect();
        Self::new(dim, structure_from_constants(dim, 3, &refs)?)
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(dim, Mat::zeros(dim, dim * dim * dim)).expect("shape is consistent")
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        self.bracket_of(&[x, y, z])
    }

    pub fn basis(&self, i: usize, j: usize, k: usize) -> Vector {
        self.bracket.column((i * self.dim + j) * self.dim + k)
    }
}

impl Algebra for ThreeLeibnizAlgebra {
    fn dim(&self) -> usize {
        self.dim
    }
    fn arity(&self) -> usize {
        3
    }
    fn structure(&self) -> &Mat {
        &self.bracket
    }
    fn basis_bracket(&self, flat: usize) -> &[(usize, Scalar)] {
        &self.cols[flat]
    }
}

fn e(n: usize, i: usize) -> Vector {
    crate::linalg::basis_vector(n, i)
}

fn sum3(a: Vector, b: &[Scalar], c: &[Scalar]) -> Vector {
    a.into_iter()
        .zip(b)
        .zip(c)
        .map(|((x, y), z)| x + y + z)
        .collect()
}

/// Right Leibniz identity `[[x,y],z] = [[x,z],y] + [x,[y,z]]` on all basis triples.
pub fn verify_leibniz(alg: &LeibnizAlgebra) -> VerificationReport {
    let n = alg.dim;
    let mut report = VerificationReport::new("Leibniz");
    for i in 0..n {
        for j in 0..n {
            let xy = alg.basis(i, j);
            for k in 0..n {
                let (x, y, z) = (e(n, i), e(n, j), e(n, k));
                let lhs = alg.bracket(&xy, &z);
                let rhs = crate::linalg::vec_add(
                    &alg.bracket(&alg.basis(i, k), &y),
                    &alg.bracket(&x, &alg.basis(j, k)),
                );
                report.checked += 1;
                let r = vec_sub(&lhs, &rhs);
                if !is_zero_vec(&r) {
                    report.fail(vec![i, j, k], format!("residual {}", fmt_vec(&r)));
                }
            }
        }
    }
    report
}

/// The fundamental identity
/// `[[x1,x2,x3],y1,y2] = [[x1,y1,y2],x2,x3] + [x1,[x2,y1,y2],x3] + [x1,x2,[x3,y1,y2]]`
/// on all `n^5` basis tuples.
pub fn verify_3_leibniz(alg: &ThreeLeibnizAlgebra) -> VerificationReport {
    let n = alg.dim;
    let parts: Vec<VerificationReport> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut report = VerificationReport::new("3-Leibniz");
            let x1 = e(n, a);
            for b in 0..n {
                let x2 = e(n, b);
                for c in 0..n {
                    let x3 = e(n, c);
                    let inner = alg.basis(a, b, c);
                    for d in 0..n {
                        let y1 = e(n, d);
                        for f in 0..n {
                            let y2 = e(n, f);
                            let lhs = alg.bracket(&inner, &y1, &y2);
                            let rhs = sum3(
                                alg.bracket(&alg.basis(a, d, f), &x2, &x3),
                                &alg.bracket(&x1, &alg.basis(b, d, f), &x3),
                                &alg.bracket(&x1, &x2, &alg.basis(c, d, f)),
                            );
                            report.checked += 1;
                            let r = vec_sub(&lhs, &rhs);
                            if !is_zero_vec(&r) {
                                report
                                    .fail(vec![a, b, c, d, f], format!("residual {}", fmt_vec(&r)));
                            }
                        }
                    }
                }
            }
            report
        })
        .collect();
    let mut out = VerificationReport::new("3-Leibniz");
    for p in parts {
        out.absorb(p);
    }
    out
}

/// Skew-symmetry of a ternary bracket (the extra condition for a 3-Lie
/// algebra): `[x,y,z] = -[y,x,z] = -[x,z,y]` on basis triples.
pub fn verify_skew_symmetry(alg: &ThreeLeibnizAlgebra) -> VerificationReport {
    let n = alg.dim;
    let mut report = VerificationReport::new("skew-symmetry");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = alg.basis(i, j, k);
                report.checked += 1;
                let s1 = crate::linalg::vec_add(&v, &alg.basis(j, i, k));
                let s2 = crate::linalg::vec_add(&v, &alg.basis(i, k, j));
                if !is_zero_vec(&s1) {
                    report.fail(vec![i, j, k], format!("[x,y,z]+[y,x,z] = {}", fmt_vec(&s1)));
                } else if !is_zero_vec(&s2) {
                    report.fail(vec![i, j, k], format!("[x,y,z]+[x,z,y] = {}", fmt_vec(&s2)));
                }
            }
        }
    }
    report
}

/// Leibniz algebra on `L⊗L`:
/// `{x1⊗x2, y1⊗y2} = [x1,y1,y2]⊗x2 + x1⊗[x2,y1,y2]`.
pub fn fundamental_leibniz(alg: &ThreeLeibnizAlgebra) -> LeibnizAlgebra {
    let n = alg.dim;
    let big = n * n;
    let mut m = Mat::zeros(big, big * big);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let col = (a * n + b) * big + (c * n + d);
                    for (l, v) in alg.basis_bracket((a * n + c) * n + d) {
                        m.add_at(l * n + b, col, v);
                    }
                    for (l, v) in alg.basis_bracket((b * n + c) * n + d) {
                        m.add_at(a * n + l, col, v);
                    }
                }
            }
        }
    }
    LeibnizAlgebra::new(big, m).expect("shape is consistent")
}

/// `[x,y,z] = [x,[y,z]]`.
pub fn leibniz_to_3leibniz(alg: &LeibnizAlgebra) -> ThreeLeibnizAlgebra {
    let n = alg.dim;
    let mut m = Mat::zeros(n, n * n * n);
    for i in 0..n {
        let x = e(n, i);
        for j in 0..n {
            for k in 0..n {
                let v = alg.bracket(&x, &alg.basis(j, k));
                for (l, c) in v.into_iter().enumerate() {
                    if !c.is_zero() {
                        m.set(l, (i * n + j) * n + k, c);
                    }
                }
            }
        }
    }
    ThreeLeibnizAlgebra::new(n, m).expect("shape is consistent")
}

// Octonion multiplication table: row i lists e_i e_j for j = 0..7 as
// signed basis indices.
const OCTONION_TABLE: [[(i8, u8); 8]; 8] = [
    [
        (1, 0),
        (1, 1),
        (1, 2),
        (1, 3),
        (1, 4),
        (1, 5),
        (1, 6),
        (1, 7),
    ],
    [
        (1, 1),
        (-1, 0),
        (1, 4),
        (1, 7),
        (-1, 2),
        (1, 6),
        (-1, 5),
        (-1, 3),
    ],
    [
        (1, 2),
        (-1, 4),
        (-1, 0),
        (1, 5),
        (1, 1),
        (-1, 3),
        (1, 7),
        (-1, 6),
    ],
    [
        (1, 3),
        (-1, 7),
        (-1, 5),
        (-1, 0),
        (1, 6),
        (1, 2),
        (-1, 4),
        (1, 1),
    ],
    [
        (1, 4),
        (1, 2),
        (-1, 1),
        (-1, 6),
        (-1, 0),
        (1, 7),
        (1, 3),
        (-1, 5),
    ],
    [
        (1, 5),
        (-1, 6),
        (1, 3),
        (-1, 2),
        (-1, 7),
        (-1, 0),
        (1, 1),
        (1, 4),
    ],
    [
        (1, 6),
        (1, 5),
        (-1, 7),
        (1, 4),
        (-1, 3),
        (-1, 1),
        (-1, 0),
        (1, 2),
    ],
    [
        (1, 7),
        (1, 3),
        (1, 6),
        (-1, 1),
        (1, 5),
        (-1, 4),
        (-1, 2),
        (-1, 0),
    ],
];

/// Octonion product of two coordinate vectors (basis `e_0 = 1, e_1..e_7`).
pub fn octonion_mul(x: &[Scalar], y: &[Scalar]) -> Vector {
    let mut out = vec![Scalar::zero(); 8];
    for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            let (sign, k) = OCTONION_TABLE[i][j];
            let p = a * b;
            if sign > 0 {
                out[k as usize] += p;
            } else {
                out[k as usize] -= &p;
            }
        }
    }
    out
}

/// Ternary bracket on the octonions,
/// `[x,y,z] = z(yx) - y(zx) + (xy)z - (xz)y + (yx)z - y(xz)`.
pub fn octonion_bracket(x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
    let m = octonion_mul;
    let terms = [
        (1, m(z, &m(y, x))),
        (-1, m(y, &m(z, x))),
        (1, m(&m(x, y), z)),
        (-1, m(&m(x, z), y)),
        (1, m(&m(y, x), z)),
        (-1, m(y, &m(x, z))),
    ];
    let mut out = vec![Scalar::zero(); 8];
    for (s, v) in terms {
        for (o, c) in out.iter_mut().zip(v) {
            if s > 0 {
                *o += c;
            } else {
                *o -= &c;
            }
        }
    }
    out
}

/// The octonions with the ternary bracket above; constants are computed
/// from the multiplication table.
pub fn octonion_3leibniz() -> ThreeLeibnizAlgebra {
    let n = 8;
    let mut m = Mat::zeros(n, n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = octonion_bracket(&e(n, i), &e(n, j), &e(n, k));
                for (l, c) in v.into_iter().enumerate() {
                    if !c.is_zero() {
                        m.set(l, (i * n + j) * n + k, c);
                    }
                }
            }
        }
    }
    ThreeLeibnizAlgebra::new(n, m).expect("shape is consistent")
}

/// Three-dimensional nilpotent algebra: `[e2,e3,e3] = e1`, `[e3,e3,e3] = e2`.
pub fn nilpotent3() -> ThreeLeibnizAlgebra {
    ThreeLeibnizAlgebra::from_constants(
        3,
        &[(1, 2, 2, 0, Scalar::one()), (2, 2, 2, 1, Scalar::one())],
    )
    .expect("constants in range")
}

/// Leibniz bracket `{(A,u),(B,v)} = (-[A,B], Bu)` on `gl(V) ⊕ V`, `dim V = m`.
/// Basis: `E_ij` at index `i*m + j`, then `e_k` of `V` at `m*m + k`.
pub fn omni_lie_leibniz(m: usize) -> LeibnizAlgebra {
    let gl = m * m;
    let n = gl + m;
    let mut consts = Vec::new();
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                for l in 0..m {
                    // -[E_ij, E_kl] = -δ_jk E_il + δ_li E_kj
                    if j == k {
                        consts.push((i * m + j, k * m + l, i * m + l, Scalar::from_int(-1)));
                    }
                    if l == i {
                        consts.push((i * m + j, k * m + l, k * m + j, Scalar::one()));
                    }
                }
            }
            // {(0,e_k),(E_ij,0)} = (0, E_ij e_k) = δ_jk e_i
            consts.push((gl + j, i * m + j, gl + i, Scalar::one()));
        }
    }
    LeibnizAlgebra::from_constants(n, &consts).expect("constants in range")
}

/// 3-Leibniz algebra induced on the omni-Lie algebra by `[x,y,z] = [x,[y,z]]`.
pub fn omni_lie(m: usize) -> ThreeLeibnizAlgebra {
    leibniz_to_3leibniz(&omni_lie_leibniz(m))
}

/// The four two-dimensional Leibniz algebras `E_1 .. E_4`:
/// abelian; `[e1,e2] = e2 = -[e2,e1]`; `[e2,e2] = e1`; `[e1,e2] = [e2,e2] = e1`.
pub fn two_dim_leibniz(variant: usize) -> Result<LeibnizAlgebra> {
    let one = Scalar::one;
    let consts = match variant {
        1 => vec![],
        2 => vec![(0, 1, 1, one()), (1, 0, 1, Scalar::from_int(-1))],
        3 => vec![(1, 1, 0, one())],
        4 => vec![(0, 1, 0, one()), (1, 1, 0, one())],
        v => return Err(Error::UnknownVariant(format!("E{v} (expected 1..4)"))),
    };
    LeibnizAlgebra::from_constants(2, &consts)
}

/// Two-dimensional 3-Leibniz algebra `[e1,e1,e2] = e2 = -[e1,e2,e1]`.
pub fn final_3leibniz_2d() -> ThreeLeibnizAlgebra {
    ThreeLeibnizAlgebra::from_constants(
        2,
        &[
            (0, 0, 1, 1, Scalar::one()),
            (0, 1, 0, 1, Scalar::from_int(-1)),
        ],
    )
    .expect("constants in range")
}

/// A claimed central element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralWitness {
    pub element: Vector,
}

impl CentralWitness {
    /// `(1, 0, …, 0)`, the unit of the `K` summand of an extension.
    pub fn unit(dim: usize) -> Self {
        CentralWitness { element: e(dim, 0) }
    }
}

/// Checks that `v` annihilates the bracket in every slot against all basis vectors.
pub fn centrality_report<A: Algebra + ?Sized>(alg: &A, v: &[Scalar]) -> VerificationReport {
    let n = alg.dim();
    let k = alg.arity();
    let mut report = VerificationReport::new("central");
    let others = TensorShape::power(n, k - 1);
    for slot in 0..k {
        for f in 0..others.size() {
            let idx = others.multi(f);
            let basis: Vec<Vector> = idx.iter().map(|&i| e(n, i)).collect();
            let mut args: Vec<&[Scalar]> = basis.iter().map(|b| &b[..]).collect();
            args.insert(slot, v);
            let r = alg.bracket_of(&args);
            report.checked += 1;
            if !is_zero_vec(&r) {
                report.fail(
                    idx,
                    format!(
                        "bracket with the element in slot {} is {}",
                        slot + 1,
                        fmt_vec(&r)
                    ),
                );
            }
        }
    }
    report
}

pub fn is_central<A: Algebra + ?Sized>(alg: &A, v: &[Scalar]) -> bool {
    centrality_report(alg, v).passed()
}

/// Bilinear form `ω(x,y) = xᵀ Ω y` on `E`.
fn form(omega: &Mat, x: &[Scalar], y: &[Scalar]) -> Scalar {
    let oy = omega.apply(y);
    x.iter().zip(&oy).map(|(a, b)| a * b).sum()
}

/// `ω([x,y],z) - ω([x,z],y) - ω(x,[y,z]) = 0` on basis triples.
pub fn check_2cocycle(alg: &LeibnizAlgebra, omega: &Mat) -> VerificationReport {
    let n = alg.dim;
    let mut report = VerificationReport::new("2-cocycle");
    assert!(
        omega.rows() == n && omega.cols() == n,
        "omega must be {n}x{n}"
    );
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = form(omega, &alg.basis(i, j), &e(n, k))
                    - form(omega, &alg.basis(i, k), &e(n, j))
                    - form(omega, &e(n, i), &alg.basis(j, k));
                report.checked += 1;
                if !v.is_zero() {
                    report.fail(vec![i, j, k], format!("residual {v}"));
                }
            }
        }
    }
    report
}

/// A bilinear form certified to satisfy the 2-cocycle condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle2 {
    omega: Mat,
}

impl Cocycle2 {
    pub fn new(alg: &LeibnizAlgebra, omega: Mat) -> Result<Self> {
        if omega.rows() != alg.dim || omega.cols() != alg.dim {
            return Err(Error::ShapeMismatch(format!(
                "cocycle on dim {} needs a square matrix, got {}x{}",
                alg.dim,
                omega.rows(),
                omega.cols()
            )));
        }
        let report = check_2cocycle(alg, &omega);
        if !report.passed() {
            return Err(Error::NotACocycle(report));
        }
        Ok(Cocycle2 { omega })
    }

    pub fn zero(alg: &LeibnizAlgebra) -> Self {
        Cocycle2 {
            omega: Mat::zeros(alg.dim, alg.dim),
        }
    }

    pub fn omega(&self) -> &Mat {
        &self.omega
    }
}

/// `(∂f)(x,y) = -f([x,y])` as an `n×n` matrix.
pub fn coboundary(alg: &LeibnizAlgebra, f: &[Scalar]) -> Mat {
    let n = alg.dim;
    assert_eq!(f.len(), n);
    let mut m = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v: Scalar = alg.basis(i, j).iter().zip(f).map(|(a, b)| a * b).sum();
            m.set(i, j, -v);
        }
    }
    m
}

/// A Leibniz algebra together with a distinguished central element.
#[derive(Debug, Clone)]
pub struct CentralLeibniz {
    pub algebra: LeibnizAlgebra,
    pub one: CentralWitness,
}

#[derive(Debug, Clone)]
pub struct CentralThreeLeibniz {
    pub algebra: ThreeLeibnizAlgebra,
    pub one: CentralWitness,
}

/// Bracket `[(a,x),(b,y)] = (ω(x,y), [x,y])` on `K⊕E` with no cocycle check.
/// The result is a Leibniz algebra exactly when `ω` is a 2-cocycle.
pub fn extension_by_form(alg: &LeibnizAlgebra, omega: &Mat) -> LeibnizAlgebra {
    let n = alg.dim;
    let big = n + 1;
    let mut m = Mat::zeros(big, big * big);
    for i in 0..n {
        for j in 0..n {
            let col = (i + 1) * big + (j + 1);
            m.set(0, col, omega.get(i, j).clone());
            for (l, c) in alg.basis_bracket(i * n + j) {
                m.set(l + 1, col, c.clone());
            }
        }
    }
    LeibnizAlgebra::new(big, m).expect("shape is consistent")
}

/// Central extension `K ⊕_ω E`; index 0 is the `K` summand.
pub fn central_extension(alg: &LeibnizAlgebra, omega: &Cocycle2) -> CentralLeibniz {
    CentralLeibniz {
        algebra: extension_by_form(alg, &omega.omega),
        one: CentralWitness::unit(alg.dim + 1),
    }
}

/// Unchecked variant of [`central_extension`] that reports a non-cocycle
/// as `NotACocycle` instead of requiring a certified [`Cocycle2`].
pub fn central_extension_checked(alg: &LeibnizAlgebra, omega: &Mat) -> Result<CentralLeibniz> {
    let c = Cocycle2::new(alg, omega.clone())?;
    Ok(central_extension(alg, &c))
}

/// `[(a,x),(b,y),(c,z)] = (0, [x,y,z])` on `K⊕L`.
pub fn trivial_central_extension_3(alg: &ThreeLeibnizAlgebra) -> CentralThreeLeibniz {
    let n = alg.dim;
    let big = n + 1;
    let mut m = Mat::zeros(big, big * big * big);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let col = ((i + 1) * big + (j + 1)) * big + (k + 1);
                for (l, c) in alg.basis_bracket((i * n + j) * n + k) {
                    m.set(l + 1, col, c.clone());
                }
            }
        }
    }
    CentralThreeLeibniz {
        algebra: ThreeLeibnizAlgebra::new(big, m).expect("shape is consistent"),
        one: CentralWitness::unit(big),
    }
}

/// Matrix of `ad^R_y : x ↦ [x, y]`.
pub fn ad_right(alg: &LeibnizAlgebra, y: &[Scalar]) -> Mat {
    let n = alg.dim;
    let cols: Vec<Vector> = (0..n).map(|i| alg.bracket(&e(n, i), y)).collect();
    Mat::from_columns(n, &cols).expect("columns have length n")
}

/// Matrix of `ad^R_{y,z} : x ↦ [x, y, z]`.
pub fn ad_right3(alg: &ThreeLeibnizAlgebra, y: &[Scalar], z: &[Scalar]) -> Mat {
    let n = alg.dim;
    let cols: Vec<Vector> = (0..n).map(|i| alg.bracket(&e(n, i), y, z)).collect();
    Mat::from_columns(n, &cols).expect("columns have length n")
}

/// `D[x_1,…,x_k] = Σ_s [x_1,…,D x_s,…,x_k]` on basis tuples.
pub fn verify_derivation<A: Algebra + ?Sized>(alg: &A, d: &Mat) -> VerificationReport {
    let n = alg.dim();
    let k = alg.arity();
    assert!(d.rows() == n && d.cols() == n, "derivation must be {n}x{n}");
    let shape = TensorShape::power(n, k);
    let mut report = VerificationReport::new("derivation");
    for f in 0..shape.size() {
        let idx = shape.multi(f);
        let basis: Vec<Vector> = idx.iter().map(|&i| e(n, i)).collect();
        let images: Vec<Vector> = idx.iter().map(|&i| d.column(i)).collect();
        let lhs = d.apply(&alg.structure().column(f));
        let mut rhs = vec![Scalar::zero(); n];
        for s in 0..k {
            let args: Vec<&[Scalar]> = (0..k)
                .map(|t| {
                    if t == s {
                        &images[t][..]
                    } else {
                        &basis[t][..]
                    }
                })
                .collect();
            rhs = crate::linalg::vec_add(&rhs, &alg.bracket_of(&args));
        }
        report.checked += 1;
        let r = vec_sub(&lhs, &rhs);
        if !is_zero_vec(&r) {
            report.fail(idx, format!("residual {}", fmt_vec(&r)));
        }
    }
    report
}

/// `f[x_1,…,x_k] = [f x_1,…,f x_k]` on basis tuples of `src`.
pub fn verify_hom<A, B>(f: &Mat, src: &A, dst: &B) -> Result<VerificationReport>
where
    A: Algebra + ?Sized,
    B: Algebra + ?Sized,
{
    if src.arity() != dst.arity() {
        return Err(Error::ShapeMismatch(format!(
            "arity {} vs {}",
            src.arity(),
            dst.arity()
        )));
    }
    if f.cols() != src.dim() || f.rows() != dst.dim() {
        return Err(Error::ShapeMismatch(format!(
            "map is {}x{}, algebras have dims {} -> {}",
            f.rows(),
            f.cols(),
            src.dim(),
            dst.dim()
        )));
    }
    let k = src.arity();
    let shape = TensorShape::power(src.dim(), k);
    let fcols: Vec<Vector> = (0..src.dim()).map(|i| f.column(i)).collect();
    let rows: Vec<(Vec<usize>, Option<Vector>)> = (0..shape.size())
        .into_par_iter()
        .map(|flat| {
            let idx = shape.multi(flat);
            let lhs = f.apply(&src.structure().column(flat));
            let args: Vec<&[Scalar]> = idx.iter().map(|&i| &fcols[i][..]).collect();
            let rhs = dst.bracket_of(&args);
            let r = vec_sub(&lhs, &rhs);
            (idx, (!is_zero_vec(&r)).then_some(r))
        })
        .collect();
    let mut report = VerificationReport::new("homomorphism");
    for (idx, r) in rows {
        report.checked += 1;
        if let Some(r) = r {
            report.fail(idx, format!("residual {}", fmt_vec(&r)));
        }
    }
    Ok(report)
}

/// `𝔰 : K⊕(L⊗L) → (K⊕L)⊗(K⊕L)`,
/// `𝔰(a, x⊗y) = a (1,0)⊗(1,0) + (0,x)⊗(0,y)`.
pub fn embedding_s(alg: &ThreeLeibnizAlgebra) -> Mat {
    let n = alg.dim;
    let big = n + 1;
    let mut m = Mat::zeros(big * big, 1 + n * n);
    m.set(0, 0, Scalar::one());
    for i in 0..n {
        for j in 0..n {
            m.set((i + 1) * big + (j + 1), 1 + i * n + j, Scalar::one());
        }
    }
    m
}
