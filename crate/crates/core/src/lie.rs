//! SU(2) and su(2) arithmetic.
//!
//! A group element is stored as a unit quaternion `(w, x, y, z)` whose matrix
//! form is
//!
//! ```text
//!   U = w·I + x·(iσ₁) + y·(iσ₂) + z·(iσ₃)
//! ```
//!
//! and a Lie algebra element is a real 3-vector `v` with matrix form
//! `ξ = v₁·(iσ₁) + v₂·(iσ₂) + v₃·(iσ₃)`. Every module shares this single basis
//! convention. In particular the torus generator `X = diag(i, −i) = iσ₃` is the
//! third basis vector, so `Tr(X²) = −2`.
//!
//! With this basis `(iσₐ)(iσ_b) = −δₐ_b·I − ε_abc·(iσ_c)`, which fixes the
//! product rule below and gives `[ξ, η] = −2 (v × w)` on vectors.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use nalgebra::Matrix2;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Distance `‖g + I‖` below which `g` counts as the antipode `−I`.
pub const BRANCH_POINT_TOL: f64 = 1e-9;

/// A traceless anti-Hermitian 2×2 matrix, stored in the `iσ` basis.
#[derive(Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Su2Vector(pub [f64; 3]);

impl Su2Vector {
    pub const ZERO: Su2Vector = Su2Vector([0.0, 0.0, 0.0]);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Su2Vector([x, y, z])
    }

    /// The torus generator `X = diag(i, −i)`.
    pub const fn torus_generator() -> Self {
        Su2Vector([0.0, 0.0, 1.0])
    }

    /// Basis vector `iσ_{k+1}`.
    pub fn basis(k: usize) -> Self {
        let mut v = [0.0; 3];
        v[k] = 1.0;
        Su2Vector(v)
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }

    pub fn dot(&self, other: &Su2Vector) -> f64 {
        self.0[0] * other.0[0] + self.0[1] * other.0[1] + self.0[2] * other.0[2]
    }

    pub fn cross(&self, other: &Su2Vector) -> Su2Vector {
        let (a, b) = (self.0, other.0);
        Su2Vector([
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ])
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |m, c| m.max(c.abs()))
    }

    pub fn to_matrix(&self) -> Matrix2<Complex64> {
        let [x, y, z] = self.0;
        Matrix2::new(
            Complex64::new(0.0, z),
            Complex64::new(y, x),
            Complex64::new(-y, x),
            Complex64::new(0.0, -z),
        )
    }

    /// Random vector with independent standard normal components.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Su2Vector([
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        ])
    }
}

impl fmt::Debug for Su2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "su2({:.6e}, {:.6e}, {:.6e})", self.0[0], self.0[1], self.0[2])
    }
}

impl Add for Su2Vector {
    type Output = Su2Vector;
    fn add(self, o: Su2Vector) -> Su2Vector {
        Su2Vector([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl AddAssign for Su2Vector {
    fn add_assign(&mut self, o: Su2Vector) {
        *self = *self + o;
    }
}

impl Sub for Su2Vector {
    type Output = Su2Vector;
    fn sub(self, o: Su2Vector) -> Su2Vector {
        Su2Vector([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl Neg for Su2Vector {
    type Output = Su2Vector;
    fn neg(self) -> Su2Vector {
        Su2Vector([-self.0[0], -self.0[1], -self.0[2]])
    }
}

impl Mul<Su2Vector> for f64 {
    type Output = Su2Vector;
    fn mul(self, v: Su2Vector) -> Su2Vector {
        Su2Vector([self * v.0[0], self * v.0[1], self * v.0[2]])
    }
}

/// An element of SU(2) as a unit quaternion.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Su2Element {
    w: f64,
    x: f64,
    y: f64,
    z: f64,
}

impl fmt::Debug for Su2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SU2({:.6e}, {:.6e}, {:.6e}, {:.6e})",
            self.w, self.x, self.y, self.z
        )
    }
}

impl Default for Su2Element {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl Su2Element {
    pub const IDENTITY: Su2Element = Su2Element {
        w: 1.0,
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    /// Builds an element from quaternion components, normalizing them.
    ///
    /// Panics if all four components vanish.
    pub fn from_quaternion(q: [f64; 4]) -> Self {
        Self::try_from_quaternion(q).expect("zero quaternion is not in SU(2)")
    }

    /// Like [`Su2Element::from_quaternion`] but rejects a (near) zero quaternion.
    pub fn try_from_quaternion(q: [f64; 4]) -> Option<Self> {
        let n = q.iter().map(|c| c * c).sum::<f64>().sqrt();
        if !n.is_finite() || n < 1e-300 {
            return None;
        }
        Some(Su2Element {
            w: q[0] / n,
            x: q[1] / n,
            y: q[2] / n,
            z: q[3] / n,
        })
    }

    /// Quaternion components without renormalizing. Only for trusted input
    /// (e.g. bit-exact dataset reload); the caller guarantees unit norm.
    pub(crate) fn from_raw(q: [f64; 4]) -> Self {
        Su2Element {
            w: q[0],
            x: q[1],
            y: q[2],
            z: q[3],
        }
    }

    /// `iσ_{k+1}` as a group element.
    pub fn pauli(k: usize) -> Self {
        let mut q = [0.0; 4];
        q[k + 1] = 1.0;
        Self::from_raw(q)
    }

    pub fn quaternion(&self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn scalar(&self) -> f64 {
        self.w
    }

    /// Imaginary part, i.e. the su(2) coordinates of `(U − U†)/2`.
    pub fn vector(&self) -> Su2Vector {
        Su2Vector([self.x, self.y, self.z])
    }

    pub fn norm_defect(&self) -> f64 {
        let n2: f64 = self.quaternion().iter().map(|c| c * c).sum();
        (n2 - 1.0).abs()
    }

    /// Trace of the matrix form (always real).
    pub fn trace(&self) -> f64 {
        2.0 * self.w
    }

    pub fn inverse(&self) -> Self {
        Su2Element {
            w: self.w,
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }

    /// Group product `self · other`, renormalized.
    pub fn multiply(&self, other: &Su2Element) -> Su2Element {
        let (w1, v1) = (self.w, self.vector());
        let (w2, v2) = (other.w, other.vector());
        let w = w1 * w2 - v1.dot(&v2);
        let v = w1 * v2 + w2 * v1 - v1.cross(&v2);
        Su2Element::from_quaternion([w, v.0[0], v.0[1], v.0[2]])
    }

    /// Operator norm of `self − other` as 2×2 matrices.
    ///
    /// A real linear combination of SU(2) matrices is a scalar multiple of a
    /// unitary, so this is the Euclidean norm of the quaternion difference.
    pub fn distance(&self, other: &Su2Element) -> f64 {
        let a = self.quaternion();
        let b = other.quaternion();
        a.iter()
            .zip(b.iter())
            .map(|(p, q)| (p - q) * (p - q))
            .sum::<f64>()
            .sqrt()
    }

    pub fn to_matrix(&self) -> Matrix2<Complex64> {
        let (w, x, y, z) = (self.w, self.x, self.y, self.z);
        Matrix2::new(
            Complex64::new(w, z),
            Complex64::new(y, x),
            Complex64::new(-y, x),
            Complex64::new(w, -z),
        )
    }

    /// Haar-random element (normalized Gaussian quaternion).
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let q: [f64; 4] = [
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
            ];
            if let Some(g) = Self::try_from_quaternion(q) {
                return g;
            }
        }
    }
}

impl Mul for Su2Element {
    type Output = Su2Element;
    fn mul(self, rhs: Su2Element) -> Su2Element {
        self.multiply(&rhs)
    }
}

pub fn multiply(g: &Su2Element, h: &Su2Element) -> Su2Element {
    g.multiply(h)
}

/// Closed-form exponential: `exp(ξ) = cos‖v‖·I + (sin‖v‖/‖v‖)·ξ`.
pub fn exp_map(xi: &Su2Vector) -> Su2Element {
    let theta = xi.norm();
    if theta < 1e-8 {
        // sin θ/θ to second order
        let s = 1.0 - theta * theta / 6.0;
        let [x, y, z] = xi.0;
        return Su2Element::from_quaternion([theta.cos(), s * x, s * y, s * z]);
    }
    let s = theta.sin() / theta;
    let [x, y, z] = xi.0;
    Su2Element::from_quaternion([theta.cos(), s * x, s * y, s * z])
}

/// Principal logarithm, `‖result‖ ≤ π`.
pub fn log_map(g: &Su2Element) -> Result<Su2Vector> {
    if g.distance(&Su2Element::from_raw([-1.0, 0.0, 0.0, 0.0])) < BRANCH_POINT_TOL {
        return Err(Error::BranchPoint);
    }
    let v = g.vector();
    let s = v.norm();
    if s < 1e-12 {
        // near the identity, θ/sin θ ≈ 1 + θ²/6
        return Ok((1.0 + s * s / 6.0) * v);
    }
    let theta = s.atan2(g.scalar());
    Ok((theta / s) * v)
}

/// `Ad_g ξ = g ξ g⁻¹`.
pub fn adjoint(g: &Su2Element, xi: &Su2Vector) -> Su2Vector {
    // Rodrigues form of q v q⁻¹ with the cross-product sign of this basis.
    let w = g.scalar();
    let u = g.vector();
    let v = *xi;
    let uxv = u.cross(&v);
    (w * w - u.dot(&u)) * v + (2.0 * u.dot(&v)) * u - (2.0 * w) * uxv
}

/// `Tr(ξη)` of the matrix forms, equal to `−2 v·w`.
pub fn trace_form(xi: &Su2Vector, eta: &Su2Vector) -> f64 {
    -2.0 * xi.dot(eta)
}

/// Matrix commutator `[ξ, η] = ξη − ηξ`.
pub fn bracket(xi: &Su2Vector, eta: &Su2Vector) -> Su2Vector {
    -2.0 * xi.cross(eta)
}

/// `a b a⁻¹ b⁻¹`.
pub fn group_commutator(a: &Su2Element, b: &Su2Element) -> Su2Element {
    a.multiply(b).multiply(&a.inverse()).multiply(&b.inverse())
}

/// An element `g` with `Ad_g(from) ∥ to`, both taken as directions.
///
/// Returns the identity if either vector vanishes.
pub(crate) fn rotation_between(from: &Su2Vector, to: &Su2Vector) -> Su2Element {
    let (nf, nt) = (from.norm(), to.norm());
    if nf < 1e-300 || nt < 1e-300 {
        return Su2Element::IDENTITY;
    }
    let u = (1.0 / nf) * *from;
    let v = (1.0 / nt) * *to;
    let c = u.dot(&v).clamp(-1.0, 1.0);
    let mut axis = u.cross(&v);
    let s = axis.norm();
    if s < 1e-12 {
        if c > 0.0 {
            return Su2Element::IDENTITY;
        }
        // antiparallel: any axis orthogonal to u
        let trial = if u.0[0].abs() < 0.9 {
            Su2Vector::basis(0)
        } else {
            Su2Vector::basis(1)
        };
        axis = u.cross(&trial);
    }
    let axis = (1.0 / axis.norm()) * axis;
    let phi = s.atan2(c);
    // Ad_{exp(θ n)} rotates by −2θ about n.
    exp_map(&((-0.5 * phi) * axis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn mat_dist(a: &Matrix2<Complex64>, b: &Matrix2<Complex64>) -> f64 {
        (a - b).iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    #[test]
    fn multiply_identity_and_pauli() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = Su2Element::random(&mut rng);
        assert!(Su2Element::IDENTITY.multiply(&g).distance(&g) < 1e-15);
        let s1 = Su2Element::pauli(0);
        let minus_one = Su2Element::from_quaternion([-1.0, 0.0, 0.0, 0.0]);
        assert!(s1.multiply(&s1).distance(&minus_one) < 1e-15);
        assert!(g.multiply(&g.inverse()).distance(&Su2Element::IDENTITY) < 1e-12);
    }

    #[test]
    fn product_matches_matrix_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..200 {
            let g = Su2Element::random(&mut rng);
            let h = Su2Element::random(&mut rng);
            let lhs = g.multiply(&h).to_matrix();
            let rhs = g.to_matrix() * h.to_matrix();
            assert!(mat_dist(&lhs, &rhs) < 1e-12);
        }
    }

    #[test]
    fn matrix_form_is_special_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let m = Su2Element::random(&mut rng).to_matrix();
            let id = Matrix2::<Complex64>::identity();
            assert!(mat_dist(&(m.adjoint() * m), &id) < 1e-12);
            assert!((m.determinant() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn exp_special_values() {
        assert_eq!(exp_map(&Su2Vector::ZERO), Su2Element::IDENTITY);
        let x = Su2Vector::torus_generator();
        let g = exp_map(&(PI * x));
        assert!(g.distance(&Su2Element::from_quaternion([-1.0, 0.0, 0.0, 0.0])) < 1e-15);
        // exp(tX) = diag(e^{it}, e^{-it})
        let t = 0.7;
        let m = exp_map(&(t * x)).to_matrix();
        assert!((m[(0, 0)] - Complex64::new(0.0, t).exp()).norm() < 1e-15);
        assert!((m[(1, 1)] - Complex64::new(0.0, -t).exp()).norm() < 1e-15);
    }

    #[test]
    fn log_roundtrip_and_branch_point() {
        assert_eq!(log_map(&Su2Element::IDENTITY).unwrap(), Su2Vector::ZERO);
        let x = Su2Vector::torus_generator();
        let v = log_map(&exp_map(&(0.3 * x))).unwrap();
        assert!((v - 0.3 * x).norm() < 1e-15);
        let near_antipode = exp_map(&((PI - 1e-11) * x));
        assert!(matches!(log_map(&near_antipode), Err(Error::BranchPoint)));
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let mut xi = Su2Vector::random(&mut rng);
            let n = xi.norm();
            if n > 3.0 {
                xi = (3.0 / n) * xi;
            }
            let back = log_map(&exp_map(&xi)).unwrap();
            assert!((back - xi).norm() < 1e-10);
        }
    }

    #[test]
    fn adjoint_matches_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let g = Su2Element::random(&mut rng);
            let xi = Su2Vector::random(&mut rng);
            let lhs = adjoint(&g, &xi).to_matrix();
            let rhs = g.to_matrix() * xi.to_matrix() * g.inverse().to_matrix();
            assert!(mat_dist(&lhs, &rhs) < 1e-12);
        }
        let xi = Su2Vector::new(0.1, -0.4, 2.0);
        assert!((adjoint(&Su2Element::IDENTITY, &xi) - xi).norm() < 1e-15);
        let x = Su2Vector::torus_generator();
        let torus = exp_map(&(1.234 * x));
        assert!((adjoint(&torus, &x) - x).norm() < 1e-15);
    }

    #[test]
    fn trace_form_values() {
        let x = Su2Vector::torus_generator();
        assert_eq!(trace_form(&x, &x), -2.0);
        assert_eq!(trace_form(&Su2Vector::new(1.0, 2.0, 3.0), &Su2Vector::ZERO), 0.0);
        assert_eq!(trace_form(&Su2Vector::basis(0), &Su2Vector::basis(1)), 0.0);
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..100 {
            let g = Su2Element::random(&mut rng);
            let a = Su2Vector::random(&mut rng);
            let b = Su2Vector::random(&mut rng);
            let direct = (a.to_matrix() * b.to_matrix()).trace().re;
            assert!((trace_form(&a, &b) - direct).abs() < 1e-12);
            let inv = trace_form(&adjoint(&g, &a), &adjoint(&g, &b));
            assert!((inv - trace_form(&a, &b)).abs() < 1e-12);
        }
    }

    #[test]
    fn bracket_matches_matrix_commutator() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let a = Su2Vector::random(&mut rng);
            let b = Su2Vector::random(&mut rng);
            let (ma, mb) = (a.to_matrix(), b.to_matrix());
            assert!(mat_dist(&bracket(&a, &b).to_matrix(), &(ma * mb - mb * ma)) < 1e-12);
        }
    }

    #[test]
    fn commutator_values() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let g = Su2Element::random(&mut rng);
        assert!(group_commutator(&g, &Su2Element::IDENTITY).distance(&Su2Element::IDENTITY) < 1e-12);
        let c = group_commutator(&Su2Element::pauli(0), &Su2Element::pauli(1));
        assert!(c.distance(&Su2Element::from_quaternion([-1.0, 0.0, 0.0, 0.0])) < 1e-15);
        let x = Su2Vector::torus_generator();
        let c = group_commutator(&exp_map(&(0.4 * x)), &exp_map(&(2.1 * x)));
        assert!(c.distance(&Su2Element::IDENTITY) < 1e-12);
    }

    #[test]
    fn rotation_between_aligns_directions() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let u = Su2Vector::random(&mut rng);
            let v = Su2Vector::random(&mut rng);
            let g = rotation_between(&u, &v);
            let r = adjoint(&g, &u);
            assert!((r - (u.norm() / v.norm()) * v).norm() < 1e-12);
        }
        let u = Su2Vector::basis(0);
        let g = rotation_between(&u, &(-u));
        assert!((adjoint(&g, &u) + u).norm() < 1e-12);
    }
}
