//! Quaternion arithmetic and the maps `A ↦ A i A*` used to build
//! Pythagorean hodographs from quaternion preimages.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{EphError, Result};

/// Below this norm `i + w` is treated as zero when solving `A i A* = d`.
pub const DEGENERATE_DIRECTION_TOL: f64 = 1e-9;

/// A real quaternion `w + x i + y j + z k`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// A vector of R³, identified with the pure quaternion `x i + y j + z k`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vector3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    pub const fn from_array(a: [f64; 4]) -> Self {
        Quaternion::new(a[0], a[1], a[2], a[3])
    }

    pub const fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    /// `cos(eta) + sin(eta) i`
    pub fn exp_i(eta: f64) -> Self {
        let (s, c) = eta.sin_cos();
        Quaternion::new(c, s, 0.0, 0.0)
    }

    pub fn conj(self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scalar(self) -> f64 {
        self.w
    }

    pub fn vector(self) -> Vector3 {
        Vector3::new(self.x, self.y, self.z)
    }

    pub fn is_finite(self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    /// The real number `½(A B* + B A*)`, i.e. the Euclidean inner product in R⁴.
    pub fn sym_dot(self, other: Quaternion) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    /// Hamilton product with `ij = k`, `jk = i`, `ki = j`.
    fn mul(self, q: Quaternion) -> Quaternion {
        let p = self;
        Quaternion::new(
            p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, q: Quaternion) -> Quaternion {
        Quaternion::new(self.w + q.w, self.x + q.x, self.y + q.y, self.z + q.z)
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, q: Quaternion) {
        *self = *self + q;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, q: Quaternion) -> Quaternion {
        Quaternion::new(self.w - q.w, self.x - q.x, self.y - q.y, self.z - q.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        self * -1.0
    }
}

impl From<Vector3> for Quaternion {
    fn from(v: Vector3) -> Quaternion {
        Quaternion::new(0.0, v.x, v.y, v.z)
    }
}

impl Vector3 {
    pub const ZERO: Vector3 = Vector3::new(0.0, 0.0, 0.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vector3 { x, y, z }
    }

    pub const fn from_array(a: [f64; 3]) -> Self {
        Vector3::new(a[0], a[1], a[2])
    }

    pub const fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(self, v: Vector3) -> f64 {
        self.x * v.x + self.y * v.y + self.z * v.z
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Add for Vector3 {
    type Output = Vector3;
    fn add(self, v: Vector3) -> Vector3 {
        Vector3::new(self.x + v.x, self.y + v.y, self.z + v.z)
    }
}

impl AddAssign for Vector3 {
    fn add_assign(&mut self, v: Vector3) {
        *self = *self + v;
    }
}

impl Sub for Vector3 {
    type Output = Vector3;
    fn sub(self, v: Vector3) -> Vector3 {
        Vector3::new(self.x - v.x, self.y - v.y, self.z - v.z)
    }
}

impl Mul<f64> for Vector3 {
    type Output = Vector3;
    fn mul(self, s: f64) -> Vector3 {
        Vector3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Neg for Vector3 {
    type Output = Vector3;
    fn neg(self) -> Vector3 {
        self * -1.0
    }
}

/// `A i A*`. Always a pure vector of norm `|A|²`.
pub fn sandwich_i(a: Quaternion) -> Vector3 {
    let Quaternion { w, x, y, z } = a;
    Vector3::new(
        w * w + x * x - y * y - z * z,
        2.0 * (x * y + w * z),
        2.0 * (x * z - w * y),
    )
}

/// `½(A i B* + B i A*)`, the symmetric bilinear form polarizing [`sandwich_i`].
pub fn sym_sandwich_i(a: Quaternion, b: Quaternion) -> Vector3 {
    Vector3::new(
        a.w * b.w + a.x * b.x - a.y * b.y - a.z * b.z,
        a.x * b.y + a.y * b.x + a.w * b.z + a.z * b.w,
        a.x * b.z + a.z * b.x - a.w * b.y - a.y * b.w,
    )
}

/// Solves `A i A* = d` as `A = √|d| (i + w)/|i + w| exp(eta i)` with `w = d/|d|`.
///
/// The solutions form a one-parameter family indexed by `eta`; no
/// normalization of `eta` is applied. Fails with `DegenerateDirection` when
/// `d` points along `-i`, where the formula is singular.
pub fn solve_sandwich(d: Vector3, eta: f64, what: &'static str) -> Result<Quaternion> {
    let len = d.norm();
    if len.is_nan() || len <= 0.0 {
        return Err(EphError::ZeroVector(what));
    }
    let w = d * (1.0 / len);
    let n = Vector3::new(1.0 + w.x, w.y, w.z);
    let n_len = n.norm();
    if n_len < DEGENERATE_DIRECTION_TOL {
        return Err(EphError::DegenerateDirection(what));
    }
    let root = Quaternion::from(n * (len.sqrt() / n_len));
    Ok(root * Quaternion::exp_i(eta))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Vector3, b: Vector3, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn hamilton_relations() {
        use Quaternion as Q;
        assert_eq!(Q::I * Q::J, Q::K);
        assert_eq!(Q::J * Q::K, Q::I);
        assert_eq!(Q::K * Q::I, Q::J);
        assert_eq!(Q::I * Q::I, -Q::ONE);
        let q = Q::new(0.3, -1.2, 2.0, 0.7);
        assert_eq!(Q::ONE * q, q);
        assert_eq!(q * Q::ONE, q);
    }

    #[test]
    fn sandwich_examples() {
        assert_eq!(sandwich_i(Quaternion::I), Vector3::new(1.0, 0.0, 0.0));
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let v = sandwich_i(Quaternion::new(0.0, s, s, 0.0));
        assert!(close(v, Vector3::new(0.0, 1.0, 0.0), 1e-15));
        assert_eq!(
            sandwich_i(Quaternion::new(2.0, 0.0, 0.0, 0.0)),
            Vector3::new(4.0, 0.0, 0.0)
        );
    }

    #[test]
    fn sandwich_matches_quaternion_products() {
        let a = Quaternion::new(0.4, -1.1, 0.25, 2.0);
        let b = Quaternion::new(-0.7, 0.3, 1.5, -0.2);
        let full = a * Quaternion::I * a.conj();
        assert!(full.w.abs() < 1e-14);
        assert!(close(sandwich_i(a), full.vector(), 1e-14));
        let sym = (a * Quaternion::I * b.conj() + b * Quaternion::I * a.conj()) * 0.5;
        assert!(sym.w.abs() < 1e-14);
        assert!(close(sym_sandwich_i(a, b), sym.vector(), 1e-14));
        assert!(close(sym_sandwich_i(a, b), sym_sandwich_i(b, a), 1e-15));
        let i = Quaternion::I;
        assert_eq!(sym_sandwich_i(i, i), Vector3::new(1.0, 0.0, 0.0));
        assert_eq!(sym_sandwich_i(i, -i), Vector3::new(-1.0, 0.0, 0.0));
        let q = (a * b.conj() + b * a.conj()) * 0.5;
        assert!((q.w - a.sym_dot(b)).abs() < 1e-14);
    }

    #[test]
    fn solve_examples() {
        let a = solve_sandwich(Vector3::new(1.0, 0.0, 0.0), 0.0, "d").unwrap();
        assert!((a - Quaternion::I).norm() < 1e-15);
        let a = solve_sandwich(Vector3::new(0.0, 1.0, 0.0), 0.0, "d").unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((a - Quaternion::new(0.0, s, s, 0.0)).norm() < 1e-15);
        let d = Vector3::new(-3.5, 10.0, 0.0);
        for eta in [0.0, 0.4, -2.0, std::f64::consts::PI] {
            let a = solve_sandwich(d, eta, "d").unwrap();
            assert!(close(sandwich_i(a), d, 1e-14));
        }
    }

    #[test]
    fn solve_errors() {
        assert_eq!(
            solve_sandwich(Vector3::ZERO, 0.0, "di"),
            Err(EphError::ZeroVector("di"))
        );
        assert_eq!(
            solve_sandwich(Vector3::new(-2.0, 0.0, 0.0), 0.0, "df"),
            Err(EphError::DegenerateDirection("df"))
        );
        assert!(solve_sandwich(Vector3::new(-2.0, 1e-3, 0.0), 0.0, "df").is_ok());
    }
}
