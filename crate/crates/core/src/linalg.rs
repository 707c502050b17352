//! Dense exact matrices, Kronecker products, tensor-factor permutations,
//! nilpotent exponentials and exact inversion.
//!
//! Operator convention: column `j` of a matrix is the image of basis vector
//! `j`. Tensor bases are lexicographic with the left factor most significant,
//! so `e_i ⊗ e_j` in `V ⊗ W` has index `i * dim(W) + j`.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Vector = Vec<Scalar>;

/// Factor dimensions of an iterated tensor product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorShape {
    pub factor_dims: Vec<usize>,
}

impl TensorShape {
    pub fn new(factor_dims: impl Into<Vec<usize>>) -> Self {
        TensorShape {
            factor_dims: factor_dims.into(),
        }
    }

    /// `k` copies of a `dim`-dimensional factor.
    pub fn power(dim: usize, k: usize) -> Self {
        TensorShape::new(vec![dim; k])
    }

    pub fn size(&self) -> usize {
        self.factor_dims.iter().product()
    }

    pub fn flat(&self, multi: &[usize]) -> usize {
        debug_assert_eq!(multi.len(), self.factor_dims.len());
        multi
            .iter()
            .zip(&self.factor_dims)
            .fold(0, |acc, (&i, &d)| {
                debug_assert!(i < d);
                acc * d + i
            })
    }

    pub fn multi(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.factor_dims.len()];
        for (k, &d) in self.factor_dims.iter().enumerate().rev() {
            out[k] = flat % d;
            flat /= d;
        }
        out
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Mat {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != c) {
            return Err(Error::ShapeMismatch(format!(
                "row {i} has {} entries, expected {c}",
                row.len()
            )));
        }
        Mat::from_entries(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
        .expect("ragged literal matrix")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Mat::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::ShapeMismatch(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &Scalar) {
        self.entries[r * self.cols + c] += v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Nonzero entries of each column as `(row, value)` pairs.
    pub fn sparse_columns(&self) -> Vec<Vec<(usize, Scalar)>> {
        let mut cols = vec![Vec::new(); self.cols];
        for r in 0..self.rows {
            for (c, v) in self.row(r).iter().enumerate() {
                if !v.is_zero() {
                    cols[c].push((r, v.clone()));
                }
            }
        }
        cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|v| v * s).collect(),
        }
    }

    pub fn neg(&self) -> Mat {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn try_add(&self, other: &Mat) -> Result<Mat> {
        self.same_shape(other)?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Mat) -> Result<Mat> {
        self.same_shape(other)?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    fn same_shape(&self, other: &Mat) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.row(k).iter().enumerate() {
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn pow(&self, k: usize) -> Mat {
        assert!(self.is_square());
        let mut acc = Mat::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// First `(row, col)` where the two matrices differ.
    pub fn first_difference(&self, other: &Mat) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        (0..self.entries.len())
            .find(|&i| self.entries[i] != other.entries[i])
            .map(|i| (i / self.cols, i % self.cols))
    }
}

impl Mul for &Mat {
    type Output = Mat;

    fn mul(self, rhs: &Mat) -> Mat {
        self.try_mul(rhs).expect("matrix shape mismatch")
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            write!(f, "\n  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|v| v.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "{}", padded.join(" "))?;
        }
        Ok(())
    }
}

pub fn basis_vector(n: usize, i: usize) -> Vector {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn kron_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vector {
    a.iter().map(|x| x * s).collect()
}

pub fn is_zero_vec(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

/// Renders a coordinate vector as `c·e_i + ...` with 1-based labels.
pub fn fmt_vec(v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            if c.is_one() {
                format!("e{}", i + 1)
            } else {
                format!("{c}·e{}", i + 1)
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// `(a ⊗ b)[(i·rb + k), (j·cb + l)] = a[i,j] · b[k,l]`
pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (rb, cb) = (b.rows(), b.cols());
    let mut out = Mat::zeros(a.rows() * rb, a.cols() * cb);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        out.set(i * rb + k, j * cb + l, x * y);
                    }
                }
            }
        }
    }
    out
}

/// Operator reordering tensor factors: output factor `p` is input factor
/// `perm[p]`.
pub fn permutation_operator(shape: &TensorShape, perm: &[usize]) -> Mat {
    let n = shape.size();
    let out_shape = TensorShape::new(
        perm.iter()
            .map(|&p| shape.factor_dims[p])
            .collect::<Vec<_>>(),
    );
    let mut m = Mat::zeros(n, n);
    for col in 0..n {
        let idx = shape.multi(col);
        let out: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
        m.set(out_shape.flat(&out), col, Scalar::one());
    }
    m
}

/// The flip `e_i ⊗ e_j ↦ e_j ⊗ e_i` on `K^n ⊗ K^n`.
pub fn swap_operator(n: usize) -> Mat {
    permutation_operator(&TensorShape::power(n, 2), &[1, 0])
}

/// Least `k ≥ 0` with `m^k = 0`, or the first nonzero entry of `m^dim`.
pub fn nilpotency_index(m: &Mat) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "nilpotency needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut p = Mat::identity(n);
    for k in 0..=n {
        if p.is_zero() {
            return Ok(k);
        }
        if k < n {
            p = &p * m;
        }
    }
    let (row, col) = (0..n * n)
        .map(|i| (i / n, i % n))
        .find(|&(r, c)| !p.get(r, c).is_zero())
        .expect("nonzero power has a nonzero entry");
    Err(Error::NotNilpotent {
        power: n,
        row,
        col,
        value: p.get(row, col).to_string(),
    })
}

/// `Σ_{k < index} m^k / k!` for nilpotent `m`.
pub fn exp_nilpotent(m: &Mat) -> Result<Mat> {
    let index = nilpotency_index(m)?;
    let n = m.rows();
    let mut acc = Mat::identity(n);
    let mut power = Mat::identity(n);
    for k in 1..index {
        power = &power * m;
        acc = acc.try_add(&power.scale(&Scalar::inv_factorial(k)))?;
    }
    Ok(acc)
}

fn lcm_of_denominators(row: &[Scalar]) -> BigInt {
    row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Exact inverse by fraction-free Gauss–Jordan elimination on the integer
/// augmented matrix `[d·M | d·I]` (each row cleared of denominators first).
#[allow(clippy::needless_range_loop)]
pub fn invert(m: &Mat) -> Result<Mat> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "cannot invert a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let w = 2 * n;
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|r| {
            let row = m.row(r);
            let d = lcm_of_denominators(row);
            let mut out: Vec<BigInt> = row.iter().map(|v| v.numer() * (&d / v.denom())).collect();
            out.extend((0..n).map(|c| if c == r { d.clone() } else { BigInt::zero() }));
            out
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot_row = (k..n)
            .find(|&r| !a[r][k].is_zero())
            .ok_or(Error::Singular { col: k })?;
        a.swap(k, pivot_row);
        let p = a[k][k].clone();
        for i in 0..n {
            if i == k {
                continue;
            }
            let f = a[i][k].clone();
            for j in 0..w {
                if j == k {
                    continue;
                }
                let v = &p * &a[i][j] - &f * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = p;
    }
    let mut out = Mat::zeros(n, n);
    for i in 0..n {
        let d = &a[i][i];
        for j in 0..n {
            let v = &a[i][n + j];
            if !v.is_zero() {
                out.set(i, j, Scalar::from(BigRational::new(v.clone(), d.clone())));
            }
        }
    }
    Ok(out)
}

/// Rank by rational row reduction.
pub fn rank(m: &Mat) -> usize {
    let mut a = m.row_vecs();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip().expect("nonzero pivot");
        let pivot_row: Vector = a[r].iter().map(|v| v * &inv).collect();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &(&f * y);
                }
            }
        }
        a[r] = pivot_row;
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

pub fn sign_of(v: &Scalar) -> i8 {
    if v.is_zero() {
        0
    } else if v.as_rational().is_negative() {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Scalar {
        Scalar::new(p, d)
    }

    #[test]
    fn kron_identity_and_scalars() {
        assert_eq!(kron(&Mat::identity(2), &Mat::identity(3)), Mat::identity(6));
        let six = kron(&Mat::from_i64_rows(&[&[2]]), &Mat::from_i64_rows(&[&[3]]));
        assert_eq!(six, Mat::from_i64_rows(&[&[6]]));
    }

    #[test]
    fn swap_operator_small_cases() {
        assert_eq!(swap_operator(1), Mat::identity(1));
        let s = swap_operator(2);
        let mut expected = Mat::zeros(4, 4);
        for (r, c) in [(0, 0), (2, 1), (1, 2), (3, 3)] {
            expected.set(r, c, Scalar::one());
        }
        assert_eq!(s, expected);
        let s3 = swap_operator(3);
        assert_eq!(&s3 * &s3, Mat::identity(9));
    }

    #[test]
    fn flip_solves_braid_relation_via_kron() {
        let s = swap_operator(2);
        let i = Mat::identity(2);
        let a = kron(&s, &i);
        let b = kron(&i, &s);
        assert_eq!(&(&a * &b) * &a, &(&b * &a) * &b);
    }

    #[test]
    fn tensor_shape_roundtrip() {
        let shape = TensorShape::new(vec![2, 3, 4]);
        for f in 0..shape.size() {
            assert_eq!(shape.flat(&shape.multi(f)), f);
        }
        // flat = i0*12 + i1*4 + i2
        assert_eq!(shape.flat(&[1, 2, 3]), 23);
    }

    #[test]
    fn exp_of_zero_and_jordan_block() {
        assert_eq!(exp_nilpotent(&Mat::zeros(3, 3)).unwrap(), Mat::identity(3));
        let j = Mat::from_i64_rows(&[&[0, 1], &[0, 0]]);
        assert_eq!(
            exp_nilpotent(&j).unwrap(),
            Mat::from_i64_rows(&[&[1, 1], &[0, 1]])
        );
    }

    #[test]
    fn exp_of_three_step_shift() {
        // e3 -> e2 -> e1 -> 0
        let m = Mat::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let e = exp_nilpotent(&m).unwrap();
        assert_eq!(e.column(2), vec![q(1, 2), q(1, 1), q(1, 1)]);
    }

    #[test]
    fn exp_rejects_non_nilpotent() {
        let m = Mat::from_i64_rows(&[&[1, 0], &[0, 0]]);
        match exp_nilpotent(&m) {
            Err(Error::NotNilpotent {
                power, row, col, ..
            }) => {
                assert_eq!((power, row, col), (2, 0, 0));
            }
            other => panic!("expected NotNilpotent, got {other:?}"),
        }
    }

    #[test]
    fn invert_small_cases() {
        assert_eq!(invert(&Mat::identity(4)).unwrap(), Mat::identity(4));
        let flip = Mat::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(invert(&flip).unwrap(), flip);
        let m = Mat::from_rows(vec![
            vec![q(1, 2), q(2, 3), q(0, 1)],
            vec![q(-1, 1), q(1, 5), q(3, 1)],
            vec![q(4, 1), q(0, 1), q(1, 7)],
        ])
        .unwrap();
        let inv = invert(&m).unwrap();
        assert_eq!(&inv * &m, Mat::identity(3));
        assert_eq!(&m * &inv, Mat::identity(3));
    }

    #[test]
    fn invert_rejects_singular() {
        let m = Mat::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert!(matches!(invert(&m), Err(Error::Singular { .. })));
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn permutation_operator_cycles_factors() {
        let shape = TensorShape::new(vec![2, 3, 2]);
        let p = permutation_operator(&shape, &[2, 0, 1]);
        // e_a ⊗ e_b ⊗ e_c  ->  e_c ⊗ e_a ⊗ e_b
        let col = shape.flat(&[1, 2, 0]);
        let out = TensorShape::new(vec![2, 2, 3]).flat(&[0, 1, 2]);
        assert!(p.get(out, col).is_one());
    }
}
