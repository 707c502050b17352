//! Finite racks and 3-racks given by operation tables, the exponential
//! racks of nilpotent (3-)Leibniz algebras, and set-theoretic braid
//! solutions.

use std::collections::HashMap;
use std::sync::Mutex;

use rayon::prelude::*;

use crate::algebras::{fundamental_leibniz, Algebra, LeibnizAlgebra, ThreeLeibnizAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{basis_vector, exp_nilpotent, fmt_vec, kron_vec, vec_sub, Mat, Vector};
use crate::report::VerificationReport;
use crate::scalar::Scalar;

/// Binary operation table on `{0..n-1}`, `table[x*n + y] = x ◁ y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteRack {
    size: usize,
    table: Vec<usize>,
}

impl FiniteRack {
    pub fn new(size: usize, table: Vec<usize>) -> Result<Self> {
        if table.len() != size * size {
            return Err(Error::ShapeMismatch(format!(
                "binary table on {size} points needs {} entries, got {}",
                size * size,
                table.len()
            )));
        }
        if let Some(v) = table.iter().find(|&&v| v >= size) {
            return Err(Error::Invalid(format!("table entry {v} outside 0..{size}")));
        }
        Ok(FiniteRack { size, table })
    }

    pub fn from_fn(size: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let table = (0..size * size).map(|f| op(f / size, f % size)).collect();
        Self::new(size, table)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Copy with a single entry replaced.
    pub fn with_entry(&self, x: usize, y: usize, v: usize) -> Self {
        let mut t = self.clone();
        t.table[x * self.size + y] = v;
        t
    }

    /// `x ◁̃ y`, the preimage of `x` under `· ◁ y`, when that map is bijective.
    pub fn inverse_op(&self, x: usize, y: usize) -> Option<usize> {
        let mut found = None;
        for z in 0..self.size {
            if self.op(z, y) == x {
                if found.is_some() {
                    return None;
                }
                found = Some(z);
            }
        }
        found
    }
}

/// Ternary operation table, `table[(x*n + y)*n + z] = T(x,y,z)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Finite3Rack {
    size: usize,
    table: Vec<usize>,
}

impl Finite3Rack {
    pub fn new(size: usize, table: Vec<usize>) -> Result<Self> {
        if table.len() != size * size * size {
            return Err(Error::ShapeMismatch(format!(
                "ternary table on {size} points needs {} entries, got {}",
                size * size * size,
                table.len()
            )));
        }
        if let Some(v) = table.iter().find(|&&v| v >= size) {
            return Err(Error::Invalid(format!("table entry {v} outside 0..{size}")));
        }
        Ok(Finite3Rack { size, table })
    }

    pub fn from_fn(size: usize, op: impl Fn(usize, usize, usize) -> usize) -> Result<Self> {
        let n = size;
        let table = (0..n * n * n)
            .map(|f| op(f / (n * n), (f / n) % n, f % n))
            .collect();
        Self::new(size, table)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn op(&self, x: usize, y: usize, z: usize) -> usize {
        self.table[(x * self.size + y) * self.size + z]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// The preimage of `w` under `T(·, y, z)`, when that map is bijective.
    pub fn inverse_op(&self, w: usize, y: usize, z: usize) -> Option<usize> {
        let mut found = None;
        for x in 0..self.size {
            if self.op(x, y, z) == w {
                if found.is_some() {
                    return None;
                }
                found = Some(x);
            }
        }
        found
    }
}

fn bijectivity_witness(n: usize, image: impl Fn(usize) -> usize) -> Option<String> {
    let mut seen = vec![None; n];
    for x in 0..n {
        let v = image(x);
        if let Some(prev) = seen[v] {
            return Some(format!("{prev} and {x} both map to {v}"));
        }
        seen[v] = Some(x);
    }
    None
}

/// Self-distributivity `(x◁y)◁z = (x◁z)◁(y◁z)` on all triples and bijectivity
/// of every right translation.
pub fn verify_finite_rack(r: &FiniteRack) -> VerificationReport {
    let n = r.size;
    let mut report = VerificationReport::new("rack");
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = r.op(r.op(x, y), z);
                let rhs = r.op(r.op(x, z), r.op(y, z));
                report.checked += 1;
                if lhs != rhs {
                    report.fail(
                        vec![x, y, z],
                        format!("self-distributivity: {lhs} != {rhs}"),
                    );
                }
            }
        }
    }
    for y in 0..n {
        report.checked += 1;
        if let Some(w) = bijectivity_witness(n, |x| r.op(x, y)) {
            report.fail(vec![y], format!("· ◁ {y} is not bijective: {w}"));
        }
    }
    report
}

/// Ternary self-distributivity on all 5-tuples and bijectivity of every `T(·,y,z)`.
pub fn verify_finite_3rack(t: &Finite3Rack) -> VerificationReport {
    let n = t.size;
    let parts: Vec<VerificationReport> = (0..n)
        .into_par_iter()
        .map(|x1| {
            let mut report = VerificationReport::new("3-rack");
            for x2 in 0..n {
                for x3 in 0..n {
                    let inner = t.op(x1, x2, x3);
                    for y1 in 0..n {
                        for y2 in 0..n {
                            let lhs = t.op(inner, y1, y2);
                            let rhs = t.op(t.op(x1, y1, y2), t.op(x2, y1, y2), t.op(x3, y1, y2));
                            report.checked += 1;
                            if lhs != rhs {
                                report.fail(
                                    vec![x1, x2, x3, y1, y2],
                                    format!("ternary self-distributivity: {lhs} != {rhs}"),
                                );
                            }
                        }
                    }
                }
            }
            report
        })
        .collect();
    let mut report = VerificationReport::new("3-rack");
    for p in parts {
        report.absorb(p);
    }
    for y in 0..n {
        for z in 0..n {
            report.checked += 1;
            if let Some(w) = bijectivity_witness(n, |x| t.op(x, y, z)) {
                report.fail(vec![y, z], format!("T(·,{y},{z}) is not bijective: {w}"));
            }
        }
    }
    report
}

/// `T(x,y,z) = x ◁ (y ◁ z)`.
pub fn rack_to_3rack(r: &FiniteRack) -> Finite3Rack {
    Finite3Rack::from_fn(r.size, |x, y, z| r.op(x, r.op(y, z))).expect("entries stay in range")
}

/// Rack on `X×X` (pair `(x1,x2)` at index `x1*n + x2`):
/// `(x1,x2) ◁ (y1,y2) = (T(x1,y1,y2), T(x2,y1,y2))`.
pub fn threerack_to_rack(t: &Finite3Rack) -> FiniteRack {
    let n = t.size;
    FiniteRack::from_fn(n * n, |a, b| {
        let (x1, x2, y1, y2) = (a / n, a % n, b / n, b % n);
        t.op(x1, y1, y2) * n + t.op(x2, y1, y2)
    })
    .expect("entries stay in range")
}

/// Set-theoretic solution `R(x,y) = (y, x◁y)` on `X×X`, stored as the image
/// of each pair index `x*n + y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSolution {
    size: usize,
    map: Vec<usize>,
}

impl SetSolution {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        let v = self.map[x * self.size + y];
        (v / self.size, v % self.size)
    }

    /// Permutation matrix of the linearized map on `K[X]⊗K[X]`.
    pub fn matrix(&self) -> Mat {
        let m = self.size * self.size;
        let mut out = Mat::zeros(m, m);
        for (c, &r) in self.map.iter().enumerate() {
            out.set(r, c, Scalar::one());
        }
        out
    }

    /// Braid relation `(R×id)(id×R)(R×id) = (id×R)(R×id)(id×R)` on `X³`
    /// and bijectivity of `R`.
    pub fn verify(&self) -> VerificationReport {
        let n = self.size;
        let r12 = |(a, b, c): (usize, usize, usize)| {
            let (p, q) = self.apply(a, b);
            (p, q, c)
        };
        let r23 = |(a, b, c): (usize, usize, usize)| {
            let (p, q) = self.apply(b, c);
            (a, p, q)
        };
        let mut report = VerificationReport::new("set braid relation");
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = r12(r23(r12((x, y, z))));
                    let rhs = r23(r12(r23((x, y, z))));
                    report.checked += 1;
                    if lhs != rhs {
                        report.fail(vec![x, y, z], format!("{lhs:?} != {rhs:?}"));
                    }
                }
            }
        }
        report.checked += 1;
        if let Some(w) = bijectivity_witness(n * n, |p| self.map[p]) {
            report.fail(vec![], format!("R is not bijective: {w}"));
        }
        report
    }
}

pub fn set_ybe_solution(r: &FiniteRack) -> SetSolution {
    let n = r.size;
    let map = (0..n * n)
        .map(|p| {
            let (x, y) = (p / n, p % n);
            y * n + r.op(x, y)
        })
        .collect();
    SetSolution { size: n, map }
}

/// A finite group given by its Cayley table, identity at index 0.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    size: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_cayley(size: usize, mul: Vec<usize>) -> Result<Self> {
        if mul.len() != size * size {
            return Err(Error::ShapeMismatch("Cayley table has wrong size".into()));
        }
        let inv = (0..size)
            .map(|g| {
                (0..size)
                    .find(|&h| mul[g * size + h] == 0)
                    .ok_or_else(|| Error::Invalid(format!("element {g} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup { size, mul, inv })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }
}

/// The symmetric group on three letters. Elements are the permutations of
/// `[0,1,2]` in lexicographic order (identity first); `(p·q)(i) = p(q(i))`.
pub fn s3() -> FiniteGroup {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
    let mut mul = Vec::with_capacity(36);
    for p in &perms {
        for q in &perms {
            mul.push(index([p[q[0]], p[q[1]], p[q[2]]]));
        }
    }
    FiniteGroup::from_cayley(6, mul).expect("S3 is a group")
}

pub fn trivial_rack(n: usize) -> FiniteRack {
    FiniteRack::from_fn(n, |x, _| x).expect("entries stay in range")
}

/// `x ◁ y = y⁻¹ x y`.
pub fn conjugation_rack(g: &FiniteGroup) -> FiniteRack {
    FiniteRack::from_fn(g.size, |x, y| g.mul(g.mul(g.inv(y), x), y)).expect("closed")
}

/// `x ◁ y = 2y - x (mod n)`.
pub fn dihedral_rack(n: usize) -> FiniteRack {
    FiniteRack::from_fn(n, |x, y| (2 * y + n - x) % n).expect("entries stay in range")
}

pub fn trivial_3rack(n: usize) -> Finite3Rack {
    Finite3Rack::from_fn(n, |x, _, _| x).expect("entries stay in range")
}

/// `T(g1,g2,g3) = g3⁻¹ g2⁻¹ g1 g2 g3`.
pub fn conjugation_3rack(g: &FiniteGroup) -> Finite3Rack {
    Finite3Rack::from_fn(g.size, |a, b, c| {
        let bc = g.mul(b, c);
        g.mul(g.mul(g.inv(bc), a), bc)
    })
    .expect("closed")
}

/// `T(m1,m2,m3) = m1 + 2m2 + 2m3` on `Z/4`.
pub fn z4_module_3rack() -> Finite3Rack {
    Finite3Rack::from_fn(4, |a, b, c| (a + 2 * b + 2 * c) % 4).expect("entries stay in range")
}

/// A single-entry change of a rack table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mutation {
    pub x: usize,
    pub y: usize,
    pub old: usize,
    pub new: usize,
    pub rack: FiniteRack,
}

/// The first `count` single-entry mutations of `r` (entries in lexicographic
/// order, replacement values ascending) that violate the rack axioms.
pub fn breaking_mutations(r: &FiniteRack, count: usize) -> Vec<Mutation> {
    let n = r.size;
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let old = r.op(x, y);
            for new in (0..n).filter(|&v| v != old) {
                let rack = r.with_entry(x, y, new);
                if !verify_finite_rack(&rack).passed() {
                    out.push(Mutation {
                        x,
                        y,
                        old,
                        new,
                        rack,
                    });
                    if out.len() == count {
                        return out;
                    }
                }
            }
        }
    }
    out
}

/// The exponential rack of an algebra whose right multiplications are
/// nilpotent: `x ◁ y = exp(ad^R_y)(x)` for Leibniz algebras and
/// `T(x,y,z) = exp(ad^R_{y,z})(x)` for 3-Leibniz algebras. Exponentials are
/// cached per argument tuple.
pub struct ExpRack<'a, A: Algebra> {
    algebra: &'a A,
    cache: Mutex<HashMap<Vec<Vector>, Mat>>,
}

impl<'a, A: Algebra> ExpRack<'a, A> {
    pub fn new(algebra: &'a A) -> Self {
        ExpRack {
            algebra,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &A {
        self.algebra
    }

    /// Matrix of `x ↦ [x, args…]`.
    pub fn ad(&self, args: &[&[Scalar]]) -> Mat {
        let n = self.algebra.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|i| {
                let e = basis_vector(n, i);
                let mut full: Vec<&[Scalar]> = vec![&e];
                full.extend_from_slice(args);
                self.algebra.bracket_of(&full)
            })
            .collect();
        Mat::from_columns(n, &cols).expect("columns have length n")
    }

    /// `exp(ad^R_{args})`, or `NotNilpotent` when the series does not terminate.
    pub fn operator(&self, args: &[&[Scalar]]) -> Result<Mat> {
        assert_eq!(
            args.len() + 1,
            self.algebra.arity(),
            "wrong number of arguments"
        );
        let key: Vec<Vector> = args.iter().map(|a| a.to_vec()).collect();
        if let Some(m) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(m.clone());
        }
        let m = exp_nilpotent(&self.ad(args))?;
        self.cache
            .lock()
            .expect("cache lock")
            .insert(key, m.clone());
        Ok(m)
    }

    /// `exp(-ad^R_{args})`, the inverse of [`ExpRack::operator`].
    pub fn inverse_operator(&self, args: &[&[Scalar]]) -> Result<Mat> {
        exp_nilpotent(&self.ad(args).neg())
    }
}

/// `x ◁ y = exp(ad^R_y)(x)`.
pub fn kinyon_apply(e: &ExpRack<'_, LeibnizAlgebra>, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
    Ok(e.operator(&[y])?.apply(x))
}

/// `T(x,y,z) = exp(ad^R_{y,z})(x)`.
pub fn exp3_apply(
    e: &ExpRack<'_, ThreeLeibnizAlgebra>,
    x: &[Scalar],
    y: &[Scalar],
    z: &[Scalar],
) -> Result<Vector> {
    Ok(e.operator(&[y, z])?.apply(x))
}

/// A sample `((x1,x2),(y1,y2))` for the intertwiner check.
pub type PairSample = [Vector; 4];

/// Checks `φ((x1,x2) ◁_T (y1,y2)) = φ(x1,x2) ◁ φ(y1,y2)` with `φ(a,b) = a⊗b`,
/// where `◁_T` is the pair rack of the exponential 3-rack and `◁` the
/// exponential rack of the fundamental Leibniz algebra. Since
/// `R(a,b) = (b, a◁b)`, this is exactly `(φ×φ)R^{◁_T} = R^{◁}(φ×φ)`.
pub fn phi_intertwine_check(
    alg: &ThreeLeibnizAlgebra,
    samples: &[PairSample],
) -> Result<VerificationReport> {
    phi_intertwine_check_with(alg, samples, kron_vec)
}

/// [`phi_intertwine_check`] with a caller-supplied `φ`.
pub fn phi_intertwine_check_with(
    alg: &ThreeLeibnizAlgebra,
    samples: &[PairSample],
    phi: impl Fn(&[Scalar], &[Scalar]) -> Vector,
) -> Result<VerificationReport> {
    let fund = fundamental_leibniz(alg);
    let t = ExpRack::new(alg);
    let k = ExpRack::new(&fund);
    let mut report = VerificationReport::new("phi intertwiner");
    for (s, [x1, x2, y1, y2]) in samples.iter().enumerate() {
        let a = exp3_apply(&t, x1, y1, y2)?;
        let b = exp3_apply(&t, x2, y1, y2)?;
        let lhs = phi(&a, &b);
        let py = phi(y1, y2);
        let rhs = kinyon_apply(&k, &phi(x1, x2), &py)?;
        report.checked += 1;
        let r = vec_sub(&lhs, &rhs);
        if !crate::linalg::is_zero_vec(&r) {
            report.fail(vec![s], format!("rack morphism residual {}", fmt_vec(&r)));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{nilpotent3, two_dim_leibniz};

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn example_racks_pass() {
        assert!(verify_finite_rack(&trivial_rack(3)).passed());
        assert!(verify_finite_rack(&conjugation_rack(&s3())).passed());
        assert!(verify_finite_rack(&dihedral_rack(3)).passed());
        assert!(verify_finite_3rack(&conjugation_3rack(&s3())).passed());
        assert!(verify_finite_3rack(&z4_module_3rack()).passed());
    }

    #[test]
    fn composed_3racks() {
        let d = rack_to_3rack(&dihedral_rack(3));
        for (x, y, z) in [(0, 1, 2), (2, 2, 0), (1, 0, 1)] {
            let expect = (2 * ((2 * z + 3 - y) % 3) + 3 - x) % 3;
            assert_eq!(d.op(x, y, z), expect);
        }
        let pairs = threerack_to_rack(&z4_module_3rack());
        // (x1,x2) ◁ (y1,y2) = (x1+2y1+2y2, x2+2y1+2y2)
        let (x1, x2, y1, y2) = (1, 3, 2, 1);
        let v = pairs.op(x1 * 4 + x2, y1 * 4 + y2);
        assert_eq!(v, ((x1 + 6) % 4) * 4 + (x2 + 6) % 4);
    }

    #[test]
    fn flip_from_trivial_rack() {
        let sol = set_ybe_solution(&trivial_rack(3));
        assert_eq!(sol.apply(0, 2), (2, 0));
        assert!(sol.verify().passed());
    }

    #[test]
    fn kinyon_on_e3() {
        let e3 = two_dim_leibniz(3).unwrap();
        let r = ExpRack::new(&e3);
        assert_eq!(
            kinyon_apply(&r, &[s(0), s(1)], &[s(0), s(1)]).unwrap(),
            vec![s(1), s(1)]
        );
        assert_eq!(
            kinyon_apply(&r, &[s(1), s(0)], &[s(0), s(1)]).unwrap(),
            vec![s(1), s(0)]
        );
    }

    #[test]
    fn e4_is_not_nilpotent() {
        let e4 = two_dim_leibniz(4).unwrap();
        let r = ExpRack::new(&e4);
        assert!(matches!(
            kinyon_apply(&r, &[s(1), s(0)], &[s(0), s(1)]),
            Err(Error::NotNilpotent { .. })
        ));
    }

    #[test]
    fn exp3_branches() {
        let l = nilpotent3();
        let r = ExpRack::new(&l);
        let e = |i| basis_vector(3, i);
        let half = Scalar::new(1, 2);
        assert_eq!(
            exp3_apply(&r, &e(2), &e(2), &e(2)).unwrap(),
            vec![half, s(1), s(1)]
        );
        assert_eq!(
            exp3_apply(&r, &e(1), &e(2), &e(2)).unwrap(),
            vec![s(1), s(1), s(0)]
        );
        assert_eq!(exp3_apply(&r, &e(0), &e(1), &e(2)).unwrap(), e(0));
    }
}
