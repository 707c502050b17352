//! Coassociative counital coalgebras and the linear and trilinear
//! shelf/rack structures on them.
//!
//! Sweedler sums are evaluated by applying `Δ` to a factor of a sparse
//! basis tensor; iterated coproducts nest on the left,
//! `Δ₃ = (Δ⊗id)∘Δ`.

use crate::algebras::{Algebra, LeibnizAlgebra, ThreeLeibnizAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Vector};
use crate::racks::{Finite3Rack, FiniteRack};
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::tensor::{check_tuples, diff_detail, matrix_from_basis_images, LinearMap, Tensor};

/// A coalgebra on `K^n`: `delta` is `n²×n` (column `j` is `Δ(e_j)`),
/// `counit` is `1×n`.
#[derive(Debug, Clone)]
pub struct Coalgebra {
    dim: usize,
    delta: Mat,
    counit: Mat,
    delta_map: LinearMap,
    counit_map: LinearMap,
}

impl PartialEq for Coalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.delta == other.delta && self.counit == other.counit
    }
}

impl Coalgebra {
    pub fn new(dim: usize, delta: Mat, counit: Mat) -> Result<Self> {
        let delta_map = LinearMap::new(&delta, &[dim], &[dim, dim])?;
        let counit_map = LinearMap::new(&counit, &[dim], &[])?;
        Ok(Coalgebra {
            dim,
            delta,
            counit,
            delta_map,
            counit_map,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn delta(&self) -> &Mat {
        &self.delta
    }

    pub fn counit(&self) -> &Mat {
        &self.counit
    }

    pub fn delta_map(&self) -> &LinearMap {
        &self.delta_map
    }

    pub fn counit_map(&self) -> &LinearMap {
        &self.counit_map
    }

    /// `ε(e_j)`.
    pub fn counit_of(&self, j: usize) -> &Scalar {
        self.counit.get(0, j)
    }

    /// Applies `Δ` to factor `pos`, splitting it into two adjacent factors.
    pub fn split(&self, t: &Tensor, pos: usize) -> Tensor {
        t.apply(pos, &self.delta_map)
    }

    /// Applies `Δ₃ = (Δ⊗id)Δ` to factor `pos`.
    pub fn split3(&self, t: &Tensor, pos: usize) -> Tensor {
        self.split(&self.split(t, pos), pos)
    }

    /// Coproduct on `C^{⊗k}`: each of the `k` factors is split and the
    /// halves regrouped as `(x1_(1)⊗…⊗xk_(1))⊗(x1_(2)⊗…⊗xk_(2))`.
    pub fn split_tensor_power(&self, t: &Tensor, k: usize) -> Tensor {
        let mut s = t.clone();
        for pos in (0..k).rev() {
            s = self.split(&s, pos);
        }
        let perm: Vec<usize> = (0..k)
            .map(|i| 2 * i)
            .chain((0..k).map(|i| 2 * i + 1))
            .collect();
        s.permute(&perm)
    }
}

/// Coassociativity and both counit laws on every basis vector.
pub fn verify_coalgebra(c: &Coalgebra) -> VerificationReport {
    let n = c.dim;
    let coassoc = check_tuples("coassociativity", &[n], |idx| {
        let d = c.split(&Tensor::basis(&[n], idx), 0);
        diff_detail(&c.split(&d, 0), &c.split(&d, 1))
    });
    let counit = check_tuples("counit", &[n], |idx| {
        let x = Tensor::basis(&[n], idx);
        let d = c.split(&x, 0);
        diff_detail(&d.apply(0, &c.counit_map), &x)
            .map(|s| format!("(ε⊗id)Δ: {s}"))
            .or_else(|| {
                diff_detail(&d.apply(1, &c.counit_map), &x).map(|s| format!("(id⊗ε)Δ: {s}"))
            })
    });
    VerificationReport::combine("coalgebra", [coassoc, counit])
}

/// `τ∘Δ = Δ` on every basis vector.
pub fn cocommutativity_report(c: &Coalgebra) -> VerificationReport {
    let n = c.dim;
    check_tuples("cocommutativity", &[n], |idx| {
        let d = c.split(&Tensor::basis(&[n], idx), 0);
        diff_detail(&d.permute(&[1, 0]), &d)
    })
}

pub fn is_cocommutative(c: &Coalgebra) -> bool {
    cocommutativity_report(c).passed()
}

/// `C⊗D` with `Δ(x⊗y) = (x_(1)⊗y_(1))⊗(x_(2)⊗y_(2))` and `ε(x⊗y) = ε(x)ε(y)`.
pub fn tensor_coalgebra(c: &Coalgebra, d: &Coalgebra) -> Coalgebra {
    let (nc, nd) = (c.dim, d.dim);
    let n = nc * nd;
    let delta = matrix_from_basis_images(&[nc, nd], n * n, |idx| {
        let t = Tensor::basis(&[nc, nd], idx);
        let t = t.apply(1, &d.delta_map).apply(0, &c.delta_map);
        t.permute(&[0, 2, 1, 3])
    });
    let mut counit = Mat::zeros(1, n);
    for i in 0..nc {
        for j in 0..nd {
            counit.set(0, i * nd + j, c.counit_of(i) * d.counit_of(j));
        }
    }
    Coalgebra::new(n, delta, counit).expect("shapes are consistent")
}

/// `K[X]` with `Δ(x) = x⊗x`, `ε(x) = 1`.
pub fn grouplike_coalgebra(n: usize) -> Coalgebra {
    let mut delta = Mat::zeros(n * n, n);
    for i in 0..n {
        delta.set(i * n + i, i, Scalar::one());
    }
    let counit = Mat::from_rows(vec![vec![Scalar::one(); n]]).expect("one row");
    Coalgebra::new(n, delta, counit).expect("shapes are consistent")
}

/// `K⊕L` with `Δ(1) = 1⊗1`, `Δ(x) = x⊗1 + 1⊗x`, `ε(1) = 1`, `ε(x) = 0`;
/// index 0 is `1_K`.
pub fn unital_primitive_coalgebra(dim_l: usize) -> Coalgebra {
    let n = dim_l + 1;
    let mut delta = Mat::zeros(n * n, n);
    delta.set(0, 0, Scalar::one());
    for i in 1..n {
        delta.set(i * n, i, Scalar::one());
        delta.set(i, i, Scalar::one());
    }
    let mut counit = Mat::zeros(1, n);
    counit.set(0, 0, Scalar::one());
    Coalgebra::new(n, delta, counit).expect("shapes are consistent")
}

/// `Δ'∘f = (f⊗f)∘Δ` and `ε'∘f = ε`, on basis vectors.
pub fn coalgebra_morphism_check(
    f: &Mat,
    src: &Coalgebra,
    dst: &Coalgebra,
) -> Result<VerificationReport> {
    let fmap = LinearMap::new(f, &[src.dim], &[dst.dim])?;
    let n = src.dim;
    Ok(check_tuples("coalgebra morphism", &[n], |idx| {
        let x = Tensor::basis(&[n], idx);
        let fx = x.apply(0, &fmap);
        let lhs = dst.split(&fx, 0);
        let rhs = src.split(&x, 0).apply(0, &fmap).apply(1, &fmap);
        diff_detail(&lhs, &rhs)
            .map(|s| format!("Δ∘f: {s}"))
            .or_else(|| {
                diff_detail(&fx.apply(0, &dst.counit_map), &x.apply(0, &src.counit_map))
                    .map(|s| format!("ε∘f: {s}"))
            })
    }))
}

/// Checks that `op : C^{⊗k} → C` is a coalgebra morphism.
fn operation_morphism_report(
    name: &str,
    c: &Coalgebra,
    op: &LinearMap,
    k: usize,
) -> VerificationReport {
    let n = c.dim;
    let dims = vec![n; k];
    check_tuples(name, &dims, |idx| {
        let x = Tensor::basis(&dims, idx);
        let out = x.apply(0, op);
        let lhs = c.split(&out, 0);
        let rhs = c.split_tensor_power(&x, k).apply(0, op).apply(1, op);
        if let Some(s) = diff_detail(&lhs, &rhs) {
            return Some(format!("Δ∘op: {s}"));
        }
        let mut eps = x;
        for _ in 0..k {
            eps = eps.apply(0, &c.counit_map);
        }
        diff_detail(&out.apply(0, &c.counit_map), &eps).map(|s| format!("ε∘op: {s}"))
    })
}

/// A coalgebra with binary operations `◁`, `◁̃ : C⊗C → C` (each `n×n²`).
#[derive(Debug, Clone)]
pub struct LinearRackStruct {
    coalg: Coalgebra,
    op: Mat,
    tilde: Mat,
    op_map: LinearMap,
    tilde_map: LinearMap,
}

impl LinearRackStruct {
    pub fn new(coalg: Coalgebra, op: Mat, tilde: Mat) -> Result<Self> {
        let n = coalg.dim;
        let op_map = LinearMap::new(&op, &[n, n], &[n])?;
        let tilde_map = LinearMap::new(&tilde, &[n, n], &[n])?;
        Ok(LinearRackStruct {
            coalg,
            op,
            tilde,
            op_map,
            tilde_map,
        })
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalg
    }

    pub fn dim(&self) -> usize {
        self.coalg.dim
    }

    pub fn op(&self) -> &Mat {
        &self.op
    }

    pub fn tilde(&self) -> &Mat {
        &self.tilde
    }

    pub fn op_map(&self) -> &LinearMap {
        &self.op_map
    }

    pub fn tilde_map(&self) -> &LinearMap {
        &self.tilde_map
    }

    /// `u ◁ v` for coordinate vectors.
    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        Tensor::product(&[u, v]).apply(0, &self.op_map).to_dense()
    }
}

/// `(u◁v)◁w = (u◁w_(1))◁(v◁w_(2))` on basis triples.
fn self_distributivity_report(name: &str, c: &Coalgebra, op: &LinearMap) -> VerificationReport {
    let n = c.dim;
    check_tuples(name, &[n, n, n], |idx| {
        let x = Tensor::basis(&[n, n, n], idx);
        let lhs = x.apply(0, op).apply(0, op);
        let rhs = c
            .split(&x, 2)
            .permute(&[0, 2, 1, 3])
            .apply(0, op)
            .apply(1, op)
            .apply(0, op);
        diff_detail(&lhs, &rhs)
    })
}

/// `(u◁v_(2))◁̃v_(1) = ε(v)u = (u◁̃v_(2))◁v_(1)` on basis pairs.
fn twist_inverse_report(lr: &LinearRackStruct) -> VerificationReport {
    let c = &lr.coalg;
    let n = c.dim;
    check_tuples("twist inverse", &[n, n], |idx| {
        let x = Tensor::basis(&[n, n], idx);
        let expect = Tensor::basis(&[n], &idx[..1]).scale(c.counit_of(idx[1]));
        let swapped = c.split(&x, 1).permute(&[0, 2, 1]);
        let first = swapped.apply(0, &lr.op_map).apply(0, &lr.tilde_map);
        let second = swapped.apply(0, &lr.tilde_map).apply(0, &lr.op_map);
        diff_detail(&first, &expect)
            .map(|s| format!("(u◁v(2))◁̃v(1): {s}"))
            .or_else(|| diff_detail(&second, &expect).map(|s| format!("(u◁̃v(2))◁v(1): {s}")))
    })
}

/// Every linear rack axiom: the coalgebra laws, both operations coalgebra
/// morphisms and self-distributive, and the twist-inverse condition.
pub fn verify_linear_rack(lr: &LinearRackStruct) -> VerificationReport {
    let c = &lr.coalg;
    VerificationReport::combine(
        "linear rack",
        [
            verify_coalgebra(c),
            operation_morphism_report("◁ coalgebra morphism", c, &lr.op_map, 2),
            operation_morphism_report("◁̃ coalgebra morphism", c, &lr.tilde_map, 2),
            self_distributivity_report("◁ self-distributivity", c, &lr.op_map),
            self_distributivity_report("◁̃ self-distributivity", c, &lr.tilde_map),
            twist_inverse_report(lr),
        ],
    )
}

/// Only the shelf part: coalgebra, `◁` a morphism, self-distributivity.
pub fn verify_linear_shelf(lr: &LinearRackStruct) -> VerificationReport {
    let c = &lr.coalg;
    VerificationReport::combine(
        "linear shelf",
        [
            verify_coalgebra(c),
            operation_morphism_report("◁ coalgebra morphism", c, &lr.op_map, 2),
            self_distributivity_report("◁ self-distributivity", c, &lr.op_map),
        ],
    )
}

/// A coalgebra with ternary operations `T`, `T̃ : C⊗C⊗C → C` (each `n×n³`).
#[derive(Debug, Clone)]
pub struct TrilinearRackStruct {
    coalg: Coalgebra,
    t: Mat,
    ttilde: Mat,
    t_map: LinearMap,
    ttilde_map: LinearMap,
}

impl TrilinearRackStruct {
    pub fn new(coalg: Coalgebra, t: Mat, ttilde: Mat) -> Result<Self> {
        let n = coalg.dim;
        let t_map = LinearMap::new(&t, &[n, n, n], &[n])?;
        let ttilde_map = LinearMap::new(&ttilde, &[n, n, n], &[n])?;
        Ok(TrilinearRackStruct {
            coalg,
            t,
            ttilde,
            t_map,
            ttilde_map,
        })
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalg
    }

    pub fn dim(&self) -> usize {
        self.coalg.dim
    }

    pub fn t(&self) -> &Mat {
        &self.t
    }

    pub fn ttilde(&self) -> &Mat {
        &self.ttilde
    }

    pub fn t_map(&self) -> &LinearMap {
        &self.t_map
    }

    pub fn ttilde_map(&self) -> &LinearMap {
        &self.ttilde_map
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        Tensor::product(&[x, y, z]).apply(0, &self.t_map).to_dense()
    }
}

/// `T(T(x,y,z),u,v) = T(T(x,u1,v1),T(y,u2,v2),T(z,u3,v3))` on basis 5-tuples.
fn tsd_report(name: &str, c: &Coalgebra, t: &LinearMap) -> VerificationReport {
    let n = c.dim;
    check_tuples(name, &[n; 5], |idx| {
        let x = Tensor::basis(&[n; 5], idx);
        let lhs = x.apply(0, t).apply(0, t);
        // x y z u1 u2 u3 v1 v2 v3
        let split = c.split3(&c.split3(&x, 4), 3);
        let rhs = split
            .permute(&[0, 3, 6, 1, 4, 7, 2, 5, 8])
            .apply(0, t)
            .apply(1, t)
            .apply(2, t)
            .apply(0, t);
        diff_detail(&lhs, &rhs)
    })
}

/// `T̃(T(x,y2,z2),z1,y1) = ε(y)ε(z)x = T(T̃(x,y2,z2),z1,y1)` on basis triples.
fn reversibility_report(tr: &TrilinearRackStruct) -> VerificationReport {
    let c = &tr.coalg;
    let n = c.dim;
    check_tuples("reversibility", &[n, n, n], |idx| {
        let x = Tensor::basis(&[n, n, n], idx);
        let scale = c.counit_of(idx[1]) * c.counit_of(idx[2]);
        let expect = Tensor::basis(&[n], &idx[..1]).scale(&scale);
        // x y1 y2 z1 z2 -> x y2 z2 z1 y1
        let arranged = c.split(&c.split(&x, 2), 1).permute(&[0, 2, 4, 3, 1]);
        let first = arranged.apply(0, &tr.t_map).apply(0, &tr.ttilde_map);
        let second = arranged.apply(0, &tr.ttilde_map).apply(0, &tr.t_map);
        diff_detail(&first, &expect)
            .map(|s| format!("T̃(T(x,y2,z2),z1,y1): {s}"))
            .or_else(|| diff_detail(&second, &expect).map(|s| format!("T(T̃(x,y2,z2),z1,y1): {s}")))
    })
}

/// Every trilinear rack axiom.
pub fn verify_trilinear_rack(tr: &TrilinearRackStruct) -> VerificationReport {
    let c = &tr.coalg;
    VerificationReport::combine(
        "trilinear rack",
        [
            verify_coalgebra(c),
            operation_morphism_report("T coalgebra morphism", c, &tr.t_map, 3),
            operation_morphism_report("T̃ coalgebra morphism", c, &tr.ttilde_map, 3),
            tsd_report("T self-distributivity", c, &tr.t_map),
            tsd_report("T̃ self-distributivity", c, &tr.ttilde_map),
            reversibility_report(tr),
        ],
    )
}

/// Linear rack on `K⊕E`: `1◁1 = 1`, `1◁x = 0`, `x◁1 = x`, `x◁y = [x,y]`,
/// and `◁̃` the same with `x◁̃y = -[x,y]`.
pub fn leibniz_linear_rack(e: &LeibnizAlgebra) -> LinearRackStruct {
    let n = e.dim() + 1;
    let build = |sign: i64| {
        let mut m = Mat::zeros(n, n * n);
        m.set(0, 0, Scalar::one());
        for i in 1..n {
            m.set(i, i * n, Scalar::one());
            for j in 1..n {
                for (l, c) in e.basis_bracket((i - 1) * e.dim() + (j - 1)) {
                    m.set(l + 1, i * n + j, c * &Scalar::from_int(sign));
                }
            }
        }
        m
    };
    LinearRackStruct::new(unital_primitive_coalgebra(e.dim()), build(1), build(-1))
        .expect("shapes are consistent")
}

/// Linear extension of a finite rack to `K[X]`; `◁̃` is the inverse of each
/// right translation.
pub fn linearize_rack(r: &FiniteRack) -> Result<LinearRackStruct> {
    let n = r.size();
    let mut op = Mat::zeros(n, n * n);
    let mut tilde = Mat::zeros(n, n * n);
    for x in 0..n {
        for y in 0..n {
            op.set(r.op(x, y), x * n + y, Scalar::one());
            let inv = r
                .inverse_op(x, y)
                .ok_or_else(|| Error::Invalid(format!("· ◁ {y} is not bijective")))?;
            tilde.set(inv, x * n + y, Scalar::one());
        }
    }
    LinearRackStruct::new(grouplike_coalgebra(n), op, tilde)
}

/// Linear extension of a finite 3-rack to `K[X]`, with
/// `T̃(w, a, b) = T(·, b, a)⁻¹(w)` so that `T̃(T(x,b,a),a,b) = x`.
pub fn linearize_3rack(t: &Finite3Rack) -> Result<TrilinearRackStruct> {
    let n = t.size();
    let mut m = Mat::zeros(n, n * n * n);
    let mut tilde = Mat::zeros(n, n * n * n);
    for x in 0..n {
        for a in 0..n {
            for b in 0..n {
                let col = (x * n + a) * n + b;
                m.set(t.op(x, a, b), col, Scalar::one());
                let inv = t
                    .inverse_op(x, b, a)
                    .ok_or_else(|| Error::Invalid(format!("T(·,{b},{a}) is not bijective")))?;
                tilde.set(inv, col, Scalar::one());
            }
        }
    }
    TrilinearRackStruct::new(grouplike_coalgebra(n), m, tilde)
}

/// Trilinear rack on `K⊕L`: `T((a,x),(b,y),(c,z)) = (abc, bcx + [x,y,z])`
/// and `T̃((a,x),(b,y),(c,z)) = (abc, bcx - [x,z,y])`.
pub fn threeleibniz_trilinear_rack(l: &ThreeLeibnizAlgebra) -> TrilinearRackStruct {
    let d = l.dim();
    let n = d + 1;
    let build = |tilde: bool| {
        let mut m = Mat::zeros(n, n * n * n);
        m.set(0, 0, Scalar::one());
        for i in 1..n {
            m.set(i, i * n * n, Scalar::one());
            for j in 1..n {
                for k in 1..n {
                    let col = (i * n + j) * n + k;
                    let (x, y, z) = (i - 1, j - 1, k - 1);
                    let (flat, sign) = if tilde {
                        ((x * d + z) * d + y, -1)
                    } else {
                        ((x * d + y) * d + z, 1)
                    };
                    for (o, c) in l.basis_bracket(flat) {
                        m.set(o + 1, col, c * &Scalar::from_int(sign));
                    }
                }
            }
        }
        m
    };
    TrilinearRackStruct::new(unital_primitive_coalgebra(d), build(false), build(true))
        .expect("shapes are consistent")
}

/// Linear rack on `C⊗C`:
/// `(u⊗v)◁(m⊗n) = T(u,m1,n1)⊗T(v,m2,n2)` and
/// `(u⊗v)◁̃(m⊗n) = T̃(u,n1,m1)⊗T̃(v,n2,m2)`.
pub fn trilinear_to_linear(tr: &TrilinearRackStruct) -> Result<LinearRackStruct> {
    let c = &tr.coalg;
    let report = cocommutativity_report(c);
    if !report.passed() {
        return Err(Error::NotCocommutative(report));
    }
    let n = c.dim;
    let build = |map: &LinearMap, perm: &[usize]| {
        matrix_from_basis_images(&[n, n, n, n], n * n, |idx| {
            // u v m1 m2 n1 n2
            let t = c.split(&c.split(&Tensor::basis(&[n; 4], idx), 3), 2);
            t.permute(perm).apply(0, map).apply(1, map)
        })
    };
    let op = build(&tr.t_map, &[0, 2, 4, 1, 3, 5]);
    let tilde = build(&tr.ttilde_map, &[0, 4, 2, 1, 5, 3]);
    LinearRackStruct::new(tensor_coalgebra(c, c), op, tilde)
}

/// Coalgebra morphism plus `f(x◁y) = f(x)◁'f(y)` and the same for `◁̃`.
pub fn linear_rack_morphism_check(
    f: &Mat,
    src: &LinearRackStruct,
    dst: &LinearRackStruct,
) -> Result<VerificationReport> {
    let coalg = coalgebra_morphism_check(f, &src.coalg, &dst.coalg)?;
    let fmap = LinearMap::new(f, &[src.dim()], &[dst.dim()])?;
    let n = src.dim();
    let compat = |name: &str, a: &LinearMap, b: &LinearMap| {
        check_tuples(name, &[n, n], |idx| {
            let x = Tensor::basis(&[n, n], idx);
            let lhs = x.apply(0, a).apply(0, &fmap);
            let rhs = x.apply(0, &fmap).apply(1, &fmap).apply(0, b);
            diff_detail(&lhs, &rhs)
        })
    };
    Ok(VerificationReport::combine(
        "linear rack morphism",
        [
            coalg,
            compat("f(x◁y)", &src.op_map, &dst.op_map),
            compat("f(x◁̃y)", &src.tilde_map, &dst.tilde_map),
        ],
    ))
}

/// The matrix of `φ : K[X×X] → K[X]⊗K[X]`, `φ(x1,x2) = x1⊗x2`. With pairs
/// indexed as `x1*n + x2` this is the identity.
pub fn varphi_matrix(n: usize) -> Mat {
    Mat::identity(n * n)
}

/// `φ` is a linear rack morphism from the linearized pair rack of `t` to
/// the linear rack induced on `K[X]⊗K[X]` by the linearized 3-rack.
pub fn varphi_check(t: &Finite3Rack) -> Result<VerificationReport> {
    let src = linearize_rack(&crate::racks::threerack_to_rack(t))?;
    let dst = trilinear_to_linear(&linearize_3rack(t)?)?;
    linear_rack_morphism_check(&varphi_matrix(t.size()), &src, &dst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{nilpotent3, two_dim_leibniz};
    use crate::racks::{dihedral_rack, trivial_3rack, z4_module_3rack};

    #[test]
    fn builtin_coalgebras() {
        for c in [
            grouplike_coalgebra(1),
            grouplike_coalgebra(3),
            unital_primitive_coalgebra(2),
        ] {
            assert!(verify_coalgebra(&c).passed());
            assert!(is_cocommutative(&c));
        }
        let sq = tensor_coalgebra(
            &unital_primitive_coalgebra(2),
            &unital_primitive_coalgebra(2),
        );
        assert_eq!(sq.dim(), 9);
        assert!(verify_coalgebra(&sq).passed());
        assert_eq!(
            tensor_coalgebra(&grouplike_coalgebra(2), &grouplike_coalgebra(3)),
            grouplike_coalgebra(6)
        );
    }

    #[test]
    fn corrupted_coproduct_fails() {
        let c = unital_primitive_coalgebra(2);
        let mut delta = c.delta().clone();
        delta.set(0, 1, Scalar::one());
        let bad = Coalgebra::new(3, delta, c.counit().clone()).unwrap();
        assert!(!verify_coalgebra(&bad).passed());
    }

    #[test]
    fn leibniz_linear_racks() {
        for v in 1..=4 {
            let lr = leibniz_linear_rack(&two_dim_leibniz(v).unwrap());
            let r = verify_linear_rack(&lr);
            assert!(r.passed(), "E{v}: {r}");
        }
        let lr = leibniz_linear_rack(&two_dim_leibniz(3).unwrap());
        // (0,e2)◁(0,e2) = (0,e1)
        let e = |i| crate::linalg::basis_vector(3, i);
        assert_eq!(lr.apply(&e(2), &e(2)), e(1));
        assert_eq!(lr.apply(&e(0), &e(1)), crate::linalg::zero_vector(3));
    }

    #[test]
    fn linearized_racks() {
        assert!(verify_linear_rack(&linearize_rack(&dihedral_rack(3)).unwrap()).passed());
        assert!(verify_trilinear_rack(&linearize_3rack(&z4_module_3rack()).unwrap()).passed());
    }

    #[test]
    fn three_leibniz_trilinear_rack() {
        let tr = threeleibniz_trilinear_rack(&nilpotent3());
        let r = verify_trilinear_rack(&tr);
        assert!(r.passed(), "{r}");
        let e = |i| crate::linalg::basis_vector(4, i);
        assert_eq!(tr.apply(&e(3), &e(3), &e(3)), e(2));
        assert_eq!(tr.apply(&e(0), &e(0), &e(0)), e(0));
    }

    #[test]
    fn trilinear_to_linear_on_trivial() {
        let lr = trilinear_to_linear(&linearize_3rack(&trivial_3rack(2)).unwrap()).unwrap();
        assert!(verify_linear_rack(&lr).passed());
        // left projection: (u⊗v)◁(m⊗n) = u⊗v
        let u = crate::linalg::basis_vector(4, 1);
        let m = crate::linalg::basis_vector(4, 2);
        assert_eq!(lr.apply(&u, &m), u);
    }

    #[test]
    fn non_cocommutative_is_rejected() {
        // Δ(e0) = e0⊗e0, Δ(e1) = e0⊗e1 + e1⊗e1 is coassociative but not cocommutative
        let mut delta = Mat::zeros(4, 2);
        delta.set(0, 0, Scalar::one());
        delta.set(1, 1, Scalar::one());
        delta.set(3, 1, Scalar::one());
        let c = Coalgebra::new(2, delta, Mat::from_i64_rows(&[&[1, 0]])).unwrap();
        let t = Mat::zeros(2, 8);
        let tr = TrilinearRackStruct::new(c, t.clone(), t).unwrap();
        assert!(matches!(
            trilinear_to_linear(&tr),
            Err(Error::NotCocommutative(_))
        ));
    }

    #[test]
    fn varphi_square() {
        assert!(varphi_check(&trivial_3rack(2)).unwrap().passed());
        assert!(varphi_check(&z4_module_3rack()).unwrap().passed());
    }
}
