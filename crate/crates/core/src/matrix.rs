//! Fixed-size matrix types used throughout the crate.
//!
//! Everything here is small enough to be `Copy`; products are written out by
//! hand rather than going through a general linear-algebra backend.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Serialize, Serializer};

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);

/// Complex two-by-two matrix `[[a, b], [c, d]]`.
///
/// Group elements of SL(2,C) (Jones matrices, boundary/phase matrices) are
/// carried by this type, but so are non-unimodular objects such as the
/// four-vector matrix `V` and coherency matrices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2C {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl Mat2C {
    pub const fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Self { a, b, c, d }
    }

    pub const fn identity() -> Self {
        Self::new(ONE, ZERO, ZERO, ONE)
    }

    pub const fn zero() -> Self {
        Self::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn diag(a: Complex64, d: Complex64) -> Self {
        Self::new(a, ZERO, ZERO, d)
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    /// Hermitian conjugate.
    pub fn dagger(&self) -> Self {
        Self::new(self.a.conj(), self.c.conj(), self.b.conj(), self.d.conj())
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.a, self.c, self.b, self.d)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.conj(), self.b.conj(), self.c.conj(), self.d.conj())
    }

    /// Inverse via the adjugate. Singular input yields non-finite entries.
    pub fn inverse(&self) -> Self {
        let det = self.det();
        Self::new(self.d / det, -self.b / det, -self.c / det, self.a / det)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    pub fn scale_re(&self, s: f64) -> Self {
        Self::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    pub fn apply(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        [self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1]]
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn entries(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Max-norm of the entrywise difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    /// Distance from Hermiticity, `max |M - M†|`.
    pub fn hermitian_residual(&self) -> f64 {
        self.max_abs_diff(&self.dagger())
    }

    /// `M^n` by binary exponentiation.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = *self;
        let mut acc = Self::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }
}

impl Mul for Mat2C {
    type Output = Mat2C;
    fn mul(self, r: Mat2C) -> Mat2C {
        Mat2C::new(
            self.a * r.a + self.b * r.c,
            self.a * r.b + self.b * r.d,
            self.c * r.a + self.d * r.c,
            self.c * r.b + self.d * r.d,
        )
    }
}

impl Add for Mat2C {
    type Output = Mat2C;
    fn add(self, r: Mat2C) -> Mat2C {
        Mat2C::new(self.a + r.a, self.b + r.b, self.c + r.c, self.d + r.d)
    }
}

impl Sub for Mat2C {
    type Output = Mat2C;
    fn sub(self, r: Mat2C) -> Mat2C {
        Mat2C::new(self.a - r.a, self.b - r.b, self.c - r.c, self.d - r.d)
    }
}

impl Neg for Mat2C {
    type Output = Mat2C;
    fn neg(self) -> Mat2C {
        Mat2C::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl Serialize for Mat2C {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [[self.a, self.b], [self.c, self.d]].serialize(s)
    }
}

/// Real two-by-two matrix `[[a, b], [c, d]]`.
///
/// Used for ABCD ray-transfer matrices and, more generally, for elements of
/// the real subgroup Sp(2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RayMatrix {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl RayMatrix {
    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self { a, b, c, d }
    }

    pub const fn identity() -> Self {
        Self::new(1.0, 0.0, 0.0, 1.0)
    }

    pub fn diag(a: f64, d: f64) -> Self {
        Self::new(a, 0.0, 0.0, d)
    }

    /// Half-angle rotation `[[cos(θ/2), -sin(θ/2)], [sin(θ/2), cos(θ/2)]]`.
    pub fn rotation(theta: f64) -> Self {
        let (s, c) = (theta / 2.0).sin_cos();
        Self::new(c, -s, s, c)
    }

    /// `diag(e^{η/2}, e^{-η/2})`.
    pub fn squeeze(eta: f64) -> Self {
        Self::diag((eta / 2.0).exp(), (-eta / 2.0).exp())
    }

    /// `[[cosh(χ/2), sinh(χ/2)], [sinh(χ/2), cosh(χ/2)]]`.
    pub fn x_boost(chi: f64) -> Self {
        let (ch, sh) = ((chi / 2.0).cosh(), (chi / 2.0).sinh());
        Self::new(ch, sh, sh, ch)
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.a, self.c, self.b, self.d)
    }

    pub fn inverse(&self) -> Self {
        let det = self.det();
        Self::new(self.d / det, -self.b / det, -self.c / det, self.a / det)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    pub fn entries(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn max_abs(&self) -> f64 {
        self.entries().iter().map(|v| v.abs()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn to_complex(&self) -> Mat2C {
        Mat2C::from_real(self.a, self.b, self.c, self.d)
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = *self;
        let mut acc = Self::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }
}

impl Mul for RayMatrix {
    type Output = RayMatrix;
    fn mul(self, r: RayMatrix) -> RayMatrix {
        RayMatrix::new(
            self.a * r.a + self.b * r.c,
            self.a * r.b + self.b * r.d,
            self.c * r.a + self.d * r.c,
            self.c * r.b + self.d * r.d,
        )
    }
}

impl Add for RayMatrix {
    type Output = RayMatrix;
    fn add(self, r: RayMatrix) -> RayMatrix {
        RayMatrix::new(self.a + r.a, self.b + r.b, self.c + r.c, self.d + r.d)
    }
}

impl Sub for RayMatrix {
    type Output = RayMatrix;
    fn sub(self, r: RayMatrix) -> RayMatrix {
        RayMatrix::new(self.a - r.a, self.b - r.b, self.c - r.c, self.d - r.d)
    }
}

impl Neg for RayMatrix {
    type Output = RayMatrix;
    fn neg(self) -> RayMatrix {
        RayMatrix::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl Serialize for RayMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [[self.a, self.b], [self.c, self.d]].serialize(s)
    }
}

/// Space-time (or Stokes) four-vector ordered `(t, z, x, y)`, with `c = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FourVector {
    pub t: f64,
    pub z: f64,
    pub x: f64,
    pub y: f64,
}

impl FourVector {
    pub const fn new(t: f64, z: f64, x: f64, y: f64) -> Self {
        Self { t, z, x, y }
    }

    pub const fn from_array(v: [f64; 4]) -> Self {
        Self::new(v[0], v[1], v[2], v[3])
    }

    pub const fn to_array(self) -> [f64; 4] {
        [self.t, self.z, self.x, self.y]
    }

    /// Minkowski interval `t² − z² − x² − y²`.
    pub fn interval(&self) -> f64 {
        self.t * self.t - self.z * self.z - self.x * self.x - self.y * self.y
    }
}

/// Minkowski metric `diag(1, -1, -1, -1)`.
pub const MINKOWSKI: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Real four-by-four matrix, row-major, acting on `(t, z, x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Mat4R(pub [[f64; 4]; 4]);

impl Mat4R {
    pub fn identity() -> Self {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self(m)
    }

    pub fn from_columns(cols: [[f64; 4]; 4]) -> Self {
        let mut m = [[0.0; 4]; 4];
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m[i][j] = *v;
            }
        }
        Self(m)
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[i][j]
    }

    pub fn apply(&self, v: FourVector) -> FourVector {
        let x = v.to_array();
        let mut out = [0.0; 4];
        for (o, row) in out.iter_mut().zip(self.0.iter()) {
            *o = row.iter().zip(x.iter()).map(|(m, v)| m * v).sum();
        }
        FourVector::from_array(out)
    }

    pub fn transpose(&self) -> Self {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in self.0.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m[j][i] = *v;
            }
        }
        Self(m)
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> f64 {
        let mut m = self.0;
        let mut det = 1.0;
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
                .unwrap_or(col);
            if m[pivot][col] == 0.0 {
                return 0.0;
            }
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            det *= m[col][col];
            let pivot_row = m[col];
            for row in m.iter_mut().skip(col + 1) {
                let f = row[col] / pivot_row[col];
                for (x, p) in row.iter_mut().zip(pivot_row).skip(col) {
                    *x -= f * p;
                }
            }
        }
        det
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.0[i][j] - other.0[i][j]).abs());
            }
        }
        worst
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|v| v.abs()).fold(0.0, f64::max)
    }

    /// `max |Mᵀ g M − g|` for the Minkowski metric `g`.
    pub fn minkowski_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, gi) in MINKOWSKI.iter().enumerate() {
            for j in 0..4 {
                let v: f64 = (0..4)
                    .map(|k| self.0[k][i] * MINKOWSKI[k] * self.0[k][j])
                    .sum();
                let target = if i == j { *gi } else { 0.0 };
                worst = worst.max((v - target).abs());
            }
        }
        worst
    }
}

impl Mul for Mat4R {
    type Output = Mat4R;
    fn mul(self, r: Mat4R) -> Mat4R {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..4).map(|k| self.0[i][k] * r.0[k][j]).sum();
            }
        }
        Mat4R(m)
    }
}

/// Complex four-by-four matrix; the four-by-four Lie generators are purely
/// imaginary and live here.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Mat4C(pub [[Complex64; 4]; 4]);

impl Mat4C {
    pub fn zero() -> Self {
        Self([[ZERO; 4]; 4])
    }

    /// Builds `i·m` from a real pattern; convenient for generators.
    pub fn imaginary(m: [[f64; 4]; 4]) -> Self {
        let mut out = [[ZERO; 4]; 4];
        for (o, r) in out.iter_mut().zip(m.iter()) {
            for (z, v) in o.iter_mut().zip(r.iter()) {
                *z = Complex64::new(0.0, *v);
            }
        }
        Self(out)
    }

    pub fn from_real(m: &Mat4R) -> Self {
        let mut out = [[ZERO; 4]; 4];
        for (o, r) in out.iter_mut().zip(m.0.iter()) {
            for (z, v) in o.iter_mut().zip(r.iter()) {
                *z = Complex64::new(*v, 0.0);
            }
        }
        Self(out)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = self.0;
        out.iter_mut().flatten().for_each(|z| *z *= s);
        Self(out)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        worst
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }
}

impl Mul for Mat4C {
    type Output = Mat4C;
    fn mul(self, r: Mat4C) -> Mat4C {
        let mut m = [[ZERO; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..4).map(|k| self.0[i][k] * r.0[k][j]).sum();
            }
        }
        Mat4C(m)
    }
}

impl Add for Mat4C {
    type Output = Mat4C;
    fn add(self, r: Mat4C) -> Mat4C {
        let mut m = self.0;
        for (row, rr) in m.iter_mut().zip(r.0.iter()) {
            for (v, w) in row.iter_mut().zip(rr.iter()) {
                *v += *w;
            }
        }
        Mat4C(m)
    }
}

impl Sub for Mat4C {
    type Output = Mat4C;
    fn sub(self, r: Mat4C) -> Mat4C {
        self + r.scale(-ONE)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mat2_product_and_inverse() {
        let m = Mat2C::new(
            Complex64::new(1.0, 2.0),
            Complex64::new(3.0, 4.0),
            Complex64::new(5.0, 6.0),
            Complex64::new(7.0, 8.0),
        );
        let p = m * m.inverse();
        assert!(p.max_abs_diff(&Mat2C::identity()) < 1e-14);
        // (AB)† = B†A†
        let n = m.transpose();
        assert!((m * n).dagger().max_abs_diff(&(n.dagger() * m.dagger())) < 1e-12);
    }

    #[test]
    fn pow_matches_repeated_product() {
        let m = RayMatrix::new(0.3, -1.2, 0.7, 0.5);
        let mut acc = RayMatrix::identity();
        for _ in 0..7 {
            acc = acc * m;
        }
        assert!(m.pow(7).max_abs_diff(&acc) < 1e-13);
        assert_eq!(m.pow(0), RayMatrix::identity());
    }

    #[test]
    fn det4_of_permutation_and_scaling() {
        let mut p = Mat4R::identity();
        p.0.swap(0, 3);
        assert_eq!(p.det(), -1.0);
        let mut d = Mat4R::identity();
        d.0[2][2] = 3.0;
        d.0[0][1] = 5.0;
        assert!((d.det() - 3.0).abs() < 1e-15);
    }

    #[test]
    fn rotation_is_half_angle() {
        let r = RayMatrix::rotation(std::f64::consts::PI);
        assert!(r.max_abs_diff(&RayMatrix::new(0.0, -1.0, 1.0, 0.0)) < 1e-15);
    }
}
