//! Sparse evaluation of tensor expressions on basis tuples.
//!
//! Every axiom in this crate (coassociativity, self-distributivity, the
//! braid relation, ...) is a composition of linear maps acting on blocks of
//! adjacent tensor factors, interleaved with factor permutations. [`Tensor`]
//! carries a sparse element of `V_1 ⊗ ... ⊗ V_k` and [`LinearMap`] a matrix
//! annotated with the factor dimensions it consumes and produces.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{Mat, TensorShape, Vector};
use crate::report::VerificationReport;
use crate::scalar::Scalar;

/// A matrix viewed as a map `V_1⊗...⊗V_p → W_1⊗...⊗W_q`. An empty
/// `out_dims` means the target is the ground field.
#[derive(Debug, Clone)]
pub struct LinearMap {
    in_dims: Vec<usize>,
    out_dims: Vec<usize>,
    cols: Vec<Vec<(usize, Scalar)>>,
}

impl LinearMap {
    pub fn new(m: &Mat, in_dims: &[usize], out_dims: &[usize]) -> Result<Self> {
        let in_size: usize = in_dims.iter().product();
        let out_size: usize = out_dims.iter().product();
        if m.cols() != in_size || m.rows() != out_size {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix used as map {:?} -> {:?}",
                m.rows(),
                m.cols(),
                in_dims,
                out_dims
            )));
        }
        Ok(LinearMap {
            in_dims: in_dims.to_vec(),
            out_dims: out_dims.to_vec(),
            cols: m.sparse_columns(),
        })
    }

    pub fn in_size(&self) -> usize {
        self.in_dims.iter().product()
    }

    pub fn out_size(&self) -> usize {
        self.out_dims.iter().product()
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.cols[j]
    }
}

/// Sparse element of a tensor product, keyed by lexicographic flat index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    dims: Vec<usize>,
    coeffs: BTreeMap<usize, Scalar>,
}

impl Tensor {
    pub fn zero(dims: &[usize]) -> Self {
        Tensor {
            dims: dims.to_vec(),
            coeffs: BTreeMap::new(),
        }
    }

    /// The pure tensor `e_{idx[0]} ⊗ ... ⊗ e_{idx[k-1]}`.
    pub fn basis(dims: &[usize], idx: &[usize]) -> Self {
        let flat = TensorShape::new(dims.to_vec()).flat(idx);
        let mut coeffs = BTreeMap::new();
        coeffs.insert(flat, Scalar::one());
        Tensor {
            dims: dims.to_vec(),
            coeffs,
        }
    }

    pub fn from_dense(dims: &[usize], v: &[Scalar]) -> Self {
        assert_eq!(v.len(), dims.iter().product::<usize>());
        Tensor {
            dims: dims.to_vec(),
            coeffs: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    /// `v_1 ⊗ ... ⊗ v_k` for dense factor vectors.
    pub fn product(factors: &[&[Scalar]]) -> Self {
        let dims: Vec<usize> = factors.iter().map(|f| f.len()).collect();
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        acc.insert(0, Scalar::one());
        for f in factors {
            let d = f.len();
            let mut next = BTreeMap::new();
            for (i, c) in &acc {
                for (j, x) in f.iter().enumerate() {
                    if !x.is_zero() {
                        next.insert(i * d + j, c * x);
                    }
                }
            }
            acc = next;
        }
        Tensor { dims, coeffs: acc }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn to_dense(&self) -> Vector {
        let n: usize = self.dims.iter().product();
        let mut v = vec![Scalar::zero(); n];
        for (i, c) in &self.coeffs {
            v[*i] = c.clone();
        }
        v
    }

    pub fn scale(mut self, s: &Scalar) -> Self {
        if s.is_zero() {
            self.coeffs.clear();
        } else {
            for c in self.coeffs.values_mut() {
                *c *= s;
            }
        }
        self
    }

    pub fn plus(mut self, other: &Tensor) -> Self {
        assert_eq!(self.dims, other.dims, "adding tensors of different shapes");
        for (i, c) in &other.coeffs {
            accumulate(&mut self.coeffs, *i, c.clone());
        }
        self
    }

    pub fn minus(self, other: &Tensor) -> Self {
        self.plus(&other.clone().scale(&Scalar::from_int(-1)))
    }

    /// Applies `map` to the factors `start .. start + map.in_dims.len()`,
    /// replacing them with `map`'s output factors.
    pub fn apply(&self, start: usize, map: &LinearMap) -> Tensor {
        let k = map.in_dims.len();
        assert!(start + k <= self.dims.len(), "block out of range");
        assert_eq!(
            &self.dims[start..start + k],
            &map.in_dims[..],
            "map applied to factors of the wrong dimension"
        );
        let suffix: usize = self.dims[start + k..].iter().product();
        let in_size = map.in_size();
        let out_size = map.out_size();
        let mut dims = self.dims[..start].to_vec();
        dims.extend_from_slice(&map.out_dims);
        dims.extend_from_slice(&self.dims[start + k..]);

        let mut out = BTreeMap::new();
        for (&flat, c) in &self.coeffs {
            let s = flat % suffix;
            let rest = flat / suffix;
            let mid = rest % in_size;
            let prefix = rest / in_size;
            for (o, m) in &map.cols[mid] {
                let idx = (prefix * out_size + o) * suffix + s;
                accumulate(&mut out, idx, c * m);
            }
        }
        Tensor { dims, coeffs: out }
    }

    /// Reorders factors: output factor `p` is input factor `perm[p]`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.dims.len());
        let shape = TensorShape::new(self.dims.clone());
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let out_shape = TensorShape::new(dims.clone());
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&flat, c)| {
                let idx = shape.multi(flat);
                let new: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
                (out_shape.flat(&new), c.clone())
            })
            .collect();
        Tensor { dims, coeffs }
    }

    /// First flat index where the two tensors differ, with both coefficients.
    pub fn first_difference(&self, other: &Tensor) -> Option<(usize, Scalar, Scalar)> {
        if self.coeffs == other.coeffs {
            return None;
        }
        let keys: std::collections::BTreeSet<usize> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .collect();
        keys.into_iter().find_map(|k| {
            let a = self.coeffs.get(&k).cloned().unwrap_or_else(Scalar::zero);
            let b = other.coeffs.get(&k).cloned().unwrap_or_else(Scalar::zero);
            (a != b).then_some((k, a, b))
        })
    }

    /// Compact `coef·[i,j,..]` rendering with 0-based multi-indices.
    pub fn describe(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let shape = TensorShape::new(self.dims.clone());
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&f, c)| {
                let idx: Vec<String> = shape.multi(f).iter().map(|i| i.to_string()).collect();
                format!("{c}·[{}]", idx.join(","))
            })
            .collect();
        terms.join(" + ")
    }
}

fn accumulate(map: &mut BTreeMap<usize, Scalar>, idx: usize, v: Scalar) {
    if v.is_zero() {
        return;
    }
    match map.entry(idx) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(v);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += v;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Iterates all multi-indices of a shape in lexicographic order.
pub fn basis_tuples(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let shape = TensorShape::new(dims.to_vec());
    (0..shape.size()).map(move |f| shape.multi(f))
}

/// Matrix of a map given by its action on basis tuples of `in_dims`.
pub fn matrix_from_basis_images(
    in_dims: &[usize],
    out_size: usize,
    mut image: impl FnMut(&[usize]) -> Tensor,
) -> Mat {
    let shape = TensorShape::new(in_dims.to_vec());
    let mut m = Mat::zeros(out_size, shape.size());
    for col in 0..shape.size() {
        let t = image(&shape.multi(col));
        for (row, c) in t.iter() {
            m.set(row, col, c.clone());
        }
    }
    m
}

/// Runs `check` on every basis tuple of `dims` in parallel; a `Some(detail)`
/// result marks the tuple as failing. Failures keep lexicographic order.
pub fn check_tuples<F>(name: &str, dims: &[usize], check: F) -> VerificationReport
where
    F: Fn(&[usize]) -> Option<String> + Sync,
{
    let shape = TensorShape::new(dims.to_vec());
    let failures: Vec<(Vec<usize>, String)> = (0..shape.size())
        .into_par_iter()
        .filter_map(|flat| {
            let idx = shape.multi(flat);
            check(&idx).map(|d| (idx, d))
        })
        .collect();
    let mut report = VerificationReport::new(name);
    report.checked = shape.size();
    for (idx, d) in failures {
        report.fail(idx, d);
    }
    report
}

/// `None` when equal, otherwise a description of `lhs - rhs`.
pub fn diff_detail(lhs: &Tensor, rhs: &Tensor) -> Option<String> {
    if lhs == rhs {
        None
    } else {
        Some(format!("lhs - rhs = {}", lhs.clone().minus(rhs).describe()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{kron, swap_operator};

    #[test]
    fn block_application_matches_kron() {
        let a = Mat::from_i64_rows(&[&[1, 2], &[0, 3]]);
        let id = Mat::identity(3);
        let dense = kron(&id, &a);
        let map = LinearMap::new(&a, &[2], &[2]).unwrap();
        for col in 0..6 {
            let t = Tensor::basis(&[3, 2], &TensorShape::new(vec![3, 2]).multi(col));
            assert_eq!(t.apply(1, &map).to_dense(), dense.column(col));
        }
    }

    #[test]
    fn permute_is_the_flip() {
        let s = swap_operator(3);
        for col in 0..9 {
            let t = Tensor::basis(&[3, 3], &[col / 3, col % 3]);
            assert_eq!(t.permute(&[1, 0]).to_dense(), s.column(col));
        }
    }

    #[test]
    fn map_to_ground_field_drops_factor() {
        let eps = Mat::from_i64_rows(&[&[1, 0]]);
        let map = LinearMap::new(&eps, &[2], &[]).unwrap();
        let t = Tensor::basis(&[2, 2], &[0, 1]).apply(0, &map);
        assert_eq!(t.dims(), &[2]);
        assert_eq!(t.to_dense(), vec![Scalar::zero(), Scalar::one()]);
    }
}
