//! Two-by-two (SL(2,C)) and four-by-four (Lorentz) representations.
//!
//! Conventions:
//! - Four-vectors are ordered `(t, z, x, y)`.
//! - The two-by-two Pauli set is `σ1 = diag(1, -1)`, `σ2 = [[0, 1], [1, 0]]`,
//!   `σ3 = [[0, -i], [i, 0]]` (σ3 is the imaginary one), with `Jᵢ = σᵢ/2` and
//!   `Kᵢ = iσᵢ/2`.
//! - A four-vector is encoded as the Hermitian matrix
//!   `V = [[t + z, x − iy], [x + iy, t − z]]`, and `L` acts as `V ↦ L V L†`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{ensure_finite, Error, Result};
use crate::matrix::{FourVector, Mat2C, Mat4C, Mat4R, I, ONE, ZERO};
use crate::tol;

/// The Lie generators of the Lorentz group plus Wigner's two null-plane
/// generators `N1 = K1 − J2` and `N2 = K2 + J1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Generator {
    J1,
    J2,
    J3,
    K1,
    K2,
    K3,
    N1,
    N2,
}

impl Generator {
    pub const ROTATIONS: [Generator; 3] = [Generator::J1, Generator::J2, Generator::J3];
    pub const BOOSTS: [Generator; 3] = [Generator::K1, Generator::K2, Generator::K3];
}

/// Paper-convention Pauli matrix `σ_{index}`, `index ∈ {1, 2, 3}`.
pub fn sigma(index: usize) -> Mat2C {
    match index {
        1 => Mat2C::new(ONE, ZERO, ZERO, -ONE),
        2 => Mat2C::new(ZERO, ONE, ONE, ZERO),
        3 => Mat2C::new(ZERO, -I, I, ZERO),
        _ => panic!("Pauli index must be 1, 2 or 3, got {index}"),
    }
}

/// Two-by-two generator.
pub fn generator2(kind: Generator) -> Mat2C {
    let half = Complex64::new(0.5, 0.0);
    let i_half = Complex64::new(0.0, 0.5);
    match kind {
        Generator::J1 => sigma(1).scale(half),
        Generator::J2 => sigma(2).scale(half),
        Generator::J3 => sigma(3).scale(half),
        Generator::K1 => sigma(1).scale(i_half),
        Generator::K2 => sigma(2).scale(i_half),
        Generator::K3 => sigma(3).scale(i_half),
        Generator::N1 => generator2(Generator::K1) - generator2(Generator::J2),
        Generator::N2 => generator2(Generator::K2) + generator2(Generator::J1),
    }
}

/// Four-by-four generator acting on `(t, z, x, y)`.
pub fn generator4(kind: Generator) -> Mat4C {
    #[rustfmt::skip]
    let pattern = match kind {
        Generator::J1 => [[0., 0., 0., 0.], [0., 0., 0., 1.], [0., 0., 0., 0.], [0., -1., 0., 0.]],
        Generator::J2 => [[0., 0., 0., 0.], [0., 0., -1., 0.], [0., 1., 0., 0.], [0., 0., 0., 0.]],
        Generator::J3 => [[0., 0., 0., 0.], [0., 0., 0., 0.], [0., 0., 0., -1.], [0., 0., 1., 0.]],
        Generator::K1 => [[0., 0., 1., 0.], [0., 0., 0., 0.], [1., 0., 0., 0.], [0., 0., 0., 0.]],
        Generator::K2 => [[0., 0., 0., 1.], [0., 0., 0., 0.], [0., 0., 0., 0.], [1., 0., 0., 0.]],
        Generator::K3 => [[0., 1., 0., 0.], [1., 0., 0., 0.], [0., 0., 0., 0.], [0., 0., 0., 0.]],
        Generator::N1 => [[0., 0., 1., 0.], [0., 0., 1., 0.], [1., -1., 0., 0.], [0., 0., 0., 0.]],
        Generator::N2 => [[0., 0., 0., 1.], [0., 0., 0., 1.], [0., 0., 0., 0.], [1., -1., 0., 0.]],
    };
    Mat4C::imaginary(pattern)
}

/// One-parameter two-by-two transformations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Elementary2 {
    /// Phase shift `diag(e^{-iφ/2}, e^{iφ/2})`.
    RotZ(f64),
    /// Half-angle rotation; the beam-splitter matrix.
    RotY(f64),
    /// Squeeze `diag(e^{η/2}, e^{-η/2})`.
    BoostZ(f64),
    /// `[[cosh(χ/2), sinh(χ/2)], [sinh(χ/2), cosh(χ/2)]]`.
    BoostX(f64),
}

impl Elementary2 {
    pub fn matrix(self) -> Mat2C {
        match self {
            Elementary2::RotZ(phi) => Mat2C::diag(
                Complex64::from_polar(1.0, -phi / 2.0),
                Complex64::from_polar(1.0, phi / 2.0),
            ),
            Elementary2::RotY(theta) => {
                let (s, c) = (theta / 2.0).sin_cos();
                Mat2C::from_real(c, -s, s, c)
            }
            Elementary2::BoostZ(eta) => {
                Mat2C::from_real((eta / 2.0).exp(), 0.0, 0.0, (-eta / 2.0).exp())
            }
            Elementary2::BoostX(chi) => {
                let (ch, sh) = ((chi / 2.0).cosh(), (chi / 2.0).sinh());
                Mat2C::from_real(ch, sh, sh, ch)
            }
        }
    }
}

/// One-parameter four-by-four transformations on Stokes/space-time vectors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Elementary4 {
    /// Rotation in the `(S1, S2)` plane, i.e. around `S3`.
    RotS3(f64),
    /// Rotation in the `(S2, S3)` plane, i.e. around `S1`.
    RotS1(f64),
    /// Boost along `S1` with `S0` as time.
    BoostS1(f64),
}

impl Elementary4 {
    pub fn matrix(self) -> Mat4R {
        let mut m = Mat4R::identity();
        match self {
            Elementary4::RotS3(theta) => {
                let (s, c) = theta.sin_cos();
                m.0[1][1] = c;
                m.0[1][2] = -s;
                m.0[2][1] = s;
                m.0[2][2] = c;
            }
            Elementary4::RotS1(phi) => {
                let (s, c) = phi.sin_cos();
                m.0[2][2] = c;
                m.0[2][3] = -s;
                m.0[3][2] = s;
                m.0[3][3] = c;
            }
            Elementary4::BoostS1(eta) => {
                let (ch, sh) = (eta.cosh(), eta.sinh());
                m.0[0][0] = ch;
                m.0[0][1] = sh;
                m.0[1][0] = sh;
                m.0[1][1] = ch;
            }
        }
        m
    }
}

fn ensure_unimodular(l: &Mat2C) -> Result<()> {
    let det = l.det();
    if (det - ONE).norm() > tol::UNIMODULAR {
        return Err(Error::NotUnimodular { det: det.re });
    }
    Ok(())
}

/// Dot conjugation `L ↦ (L†)⁻¹`: rotations are kept, boosts flip sign.
pub fn dot_conjugate(l: &Mat2C) -> Result<Mat2C> {
    ensure_unimodular(l)?;
    Ok(l.dagger().inverse())
}

/// Undotted `(u, v)` and dotted `(u̇, v̇)` spinors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorPair {
    pub u: Complex64,
    pub v: Complex64,
    pub u_dot: Complex64,
    pub v_dot: Complex64,
}

impl SpinorPair {
    pub fn new(u: Complex64, v: Complex64, u_dot: Complex64, v_dot: Complex64) -> Self {
        Self { u, v, u_dot, v_dot }
    }

    /// Transforms the undotted pair by `L` and the dotted pair by `dot_conjugate(L)`.
    pub fn transform(&self, l: &Mat2C) -> Result<Self> {
        let ld = dot_conjugate(l)?;
        let [u, v] = l.apply([self.u, self.v]);
        let [u_dot, v_dot] = ld.apply([self.u_dot, self.v_dot]);
        Ok(Self::new(u, v, u_dot, v_dot))
    }
}

/// Rank-one bilinear `(u, v)ᵀ (v̇, −u̇)`; always singular.
pub fn v_from_spinors(s: &SpinorPair) -> Mat2C {
    Mat2C::new(s.u * s.v_dot, -s.u * s.u_dot, s.v * s.v_dot, -s.v * s.u_dot)
}

/// `V = [[t + z, x − iy], [x + iy, t − z]]`.
pub fn v_from_coords(p: FourVector) -> Mat2C {
    Mat2C::new(
        Complex64::new(p.t + p.z, 0.0),
        Complex64::new(p.x, -p.y),
        Complex64::new(p.x, p.y),
        Complex64::new(p.t - p.z, 0.0),
    )
}

pub(crate) fn coords_unchecked(v: &Mat2C) -> FourVector {
    FourVector::new(
        (v.a.re + v.d.re) / 2.0,
        (v.a.re - v.d.re) / 2.0,
        (v.b.re + v.c.re) / 2.0,
        (v.c.im - v.b.im) / 2.0,
    )
}

/// Inverse of [`v_from_coords`]; rejects non-Hermitian input.
pub fn coords_from_v(v: &Mat2C) -> Result<FourVector> {
    let residual = v.hermitian_residual();
    if residual > tol::HERMITIAN * v.max_abs().max(1.0) {
        return Err(Error::NotHermitian { residual });
    }
    Ok(coords_unchecked(v))
}

/// `V' = L V L†`.
pub fn apply2(l: &Mat2C, v: &Mat2C) -> Mat2C {
    *l * *v * l.dagger()
}

/// The four-by-four Lorentz matrix induced by `L` through `V ↦ L V L†`.
///
/// `L` and `−L` map to the same matrix.
pub fn two_to_four(l: &Mat2C) -> Result<Mat4R> {
    ensure_unimodular(l)?;
    let basis = [
        FourVector::new(1.0, 0.0, 0.0, 0.0),
        FourVector::new(0.0, 1.0, 0.0, 0.0),
        FourVector::new(0.0, 0.0, 1.0, 0.0),
        FourVector::new(0.0, 0.0, 0.0, 1.0),
    ];
    let cols = basis.map(|e| coords_unchecked(&apply2(l, &v_from_coords(e))).to_array());
    Ok(Mat4R::from_columns(cols))
}

/// `F1(u)`: little-group transformation leaving `(1, 1, 0, 0)` fixed, mixing in `S2`.
pub fn little_group_f1(u: f64) -> Mat4R {
    let h = u * u / 2.0;
    Mat4R([
        [1.0 + h, -h, u, 0.0],
        [h, 1.0 - h, u, 0.0],
        [u, -u, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ])
}

/// `F2(v)`: the companion of [`little_group_f1`] mixing in `S3`.
pub fn little_group_f2(v: f64) -> Mat4R {
    let h = v * v / 2.0;
    Mat4R([
        [1.0 + h, -h, 0.0, v],
        [h, 1.0 - h, 0.0, v],
        [0.0, 0.0, 1.0, 0.0],
        [v, -v, 0.0, 1.0],
    ])
}

/// `F1(u)·F2(v)`; the two factors commute.
pub fn little_group_f(u: f64, v: f64) -> Result<Mat4R> {
    ensure_finite("u", u)?;
    ensure_finite("v", v)?;
    Ok(little_group_f1(u) * little_group_f2(v))
}

/// `B G B⁻¹` for a four-by-four generator `G` and real transformation `B`.
pub fn conjugate_generator(g: &Mat4C, b: &Mat4R, b_inv: &Mat4R) -> Mat4C {
    Mat4C::from_real(b) * *g * Mat4C::from_real(b_inv)
}

/// Which transverse rotation generator is contracted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Contraction {
    N1FromJ2,
    N2FromJ1,
}

/// Boost-contracted transverse rotation generator at rapidity `eta`.
///
/// Returns `−2e^{−η} B(η) J2 B(η)⁻¹` (or `2e^{−η} B(η) J1 B(η)⁻¹`), which
/// tends to `N1` (resp. `N2`) with error `O(e^{−2η})`. `B(η)` is the boost
/// along `z`.
pub fn contract_generator(which: Contraction, eta: f64) -> Result<Mat4C> {
    ensure_finite("eta", eta)?;
    if eta < 0.0 {
        return Err(Error::NegativeRapidity(eta));
    }
    let b = Elementary4::BoostS1(eta).matrix();
    let b_inv = Elementary4::BoostS1(-eta).matrix();
    let (g, sign) = match which {
        Contraction::N1FromJ2 => (generator4(Generator::J2), -2.0),
        Contraction::N2FromJ1 => (generator4(Generator::J1), 2.0),
    };
    let prefactor = Complex64::new(sign * (-eta).exp(), 0.0);
    Ok(conjugate_generator(&g, &b, &b_inv).scale(prefactor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn eps(i: usize, j: usize, k: usize) -> f64 {
        match (i, j, k) {
            (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
            (1, 0, 2) | (2, 1, 0) | (0, 2, 1) => -1.0,
            _ => 0.0,
        }
    }

    #[test]
    fn rotation_commutators_both_reps() {
        for i in 0..3 {
            for j in 0..3 {
                let mut rhs2 = Mat2C::zero();
                let mut rhs4 = Mat4C::zero();
                for k in 0..3 {
                    let e = Complex64::new(0.0, eps(i, j, k));
                    rhs2 = rhs2 + generator2(Generator::ROTATIONS[k]).scale(e);
                    rhs4 = rhs4 + generator4(Generator::ROTATIONS[k]).scale(e);
                }
                let (a, b) = (Generator::ROTATIONS[i], Generator::ROTATIONS[j]);
                assert_eq!(generator2(a).commutator(&generator2(b)), rhs2);
                assert_eq!(
                    generator4(a).commutator(&generator4(b)).max_abs_diff(&rhs4),
                    0.0
                );
            }
        }
    }

    #[test]
    fn e2_like_commutators() {
        for rep4 in [false, true] {
            let (n1, n2, j3) = if rep4 {
                (
                    generator4(Generator::N1),
                    generator4(Generator::N2),
                    generator4(Generator::J3),
                )
            } else {
                // Embed the 2x2 result in the first block to reuse one code path.
                let embed = |m: Mat2C| {
                    let mut out = Mat4C::zero();
                    out.0[0][0] = m.a;
                    out.0[0][1] = m.b;
                    out.0[1][0] = m.c;
                    out.0[1][1] = m.d;
                    out
                };
                (
                    embed(generator2(Generator::N1)),
                    embed(generator2(Generator::N2)),
                    embed(generator2(Generator::J3)),
                )
            };
            assert_eq!(n1.commutator(&n2).max_abs(), 0.0);
            assert_eq!(j3.commutator(&n1).max_abs_diff(&n2.scale(I)), 0.0);
            assert_eq!(j3.commutator(&n2).max_abs_diff(&n1.scale(-I)), 0.0);
        }
    }

    #[test]
    fn n_generators_are_combinations() {
        let n1 = generator4(Generator::K1) - generator4(Generator::J2);
        let n2 = generator4(Generator::K2) + generator4(Generator::J1);
        assert_eq!(n1, generator4(Generator::N1));
        assert_eq!(n2, generator4(Generator::N2));
    }

    #[test]
    fn elementary2_examples() {
        assert!(
            Elementary2::BoostZ(0.0)
                .matrix()
                .max_abs_diff(&Mat2C::identity())
                == 0.0
        );
        let r = Elementary2::RotY(PI).matrix();
        assert!(r.max_abs_diff(&Mat2C::from_real(0.0, -1.0, 1.0, 0.0)) < 1e-15);
        let (e1, e2) = (0.37, -1.21);
        let prod = Elementary2::BoostZ(e1).matrix() * Elementary2::BoostZ(e2).matrix();
        assert!(prod.max_abs_diff(&Elementary2::BoostZ(e1 + e2).matrix()) < 1e-14);
    }

    #[test]
    fn elementary4_examples() {
        let eta = 0.8;
        let out = Elementary4::BoostS1(eta)
            .matrix()
            .apply(FourVector::new(1.0, 0.0, 0.0, 0.0));
        assert_eq!(out, FourVector::new(eta.cosh(), eta.sinh(), 0.0, 0.0));
        let p = Elementary4::RotS1(1.1).matrix();
        let b = Elementary4::BoostS1(eta).matrix();
        assert!((p * b).max_abs_diff(&(b * p)) < 1e-15);
        assert_eq!(Elementary4::RotS3(0.0).matrix(), Mat4R::identity());
    }

    #[test]
    fn dot_conjugation_examples() {
        let r = Elementary2::RotY(0.9).matrix();
        assert!(dot_conjugate(&r).unwrap().max_abs_diff(&r) < 1e-15);
        let b = Elementary2::BoostZ(0.7).matrix();
        let bd = dot_conjugate(&b).unwrap();
        assert!(bd.max_abs_diff(&Elementary2::BoostZ(-0.7).matrix()) < 1e-15);
        let bad = Mat2C::from_real(2.0, 0.0, 0.0, 2.0);
        assert!(matches!(
            dot_conjugate(&bad),
            Err(Error::NotUnimodular { .. })
        ));
    }

    #[test]
    fn spinor_examples() {
        let up = SpinorPair::new(ONE, ZERO, ONE, ZERO);
        let v = v_from_spinors(&up);
        assert_eq!(v, Mat2C::from_real(0.0, -1.0, 0.0, 0.0));
        assert_eq!(v.det(), ZERO);
        let zero = SpinorPair::new(ZERO, ZERO, ZERO, ZERO);
        assert_eq!(v_from_spinors(&zero), Mat2C::zero());
    }

    #[test]
    fn coordinate_matrix_examples() {
        assert_eq!(
            v_from_coords(FourVector::new(1.0, 0.0, 0.0, 0.0)),
            Mat2C::identity()
        );
        let v = v_from_coords(FourVector::new(2.0, 1.0, 1.0, 0.0));
        assert_eq!(v, Mat2C::from_real(3.0, 1.0, 1.0, 1.0));
        assert_eq!(v.det().re, 2.0);
        let skew = Mat2C::new(ONE, I, I, ONE);
        assert!(matches!(
            coords_from_v(&skew),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn boost_of_identity_matrix() {
        let eta = 1.3;
        let out = apply2(&Elementary2::BoostZ(eta).matrix(), &Mat2C::identity());
        let p = coords_from_v(&out).unwrap();
        assert!((p.t - eta.cosh()).abs() < 1e-14);
        assert!((p.z - eta.sinh()).abs() < 1e-14);
    }

    #[test]
    fn two_to_four_reproduces_printed_matrices() {
        for &a in &[0.0, 0.4, -2.2, PI] {
            let cases = [
                (Elementary2::RotY(a), Elementary4::RotS3(a)),
                (Elementary2::RotZ(a), Elementary4::RotS1(a)),
                (Elementary2::BoostZ(a), Elementary4::BoostS1(a)),
            ];
            for (two, four) in cases {
                let m = two_to_four(&two.matrix()).unwrap();
                assert!(m.max_abs_diff(&four.matrix()) < 1e-12, "{two:?}");
            }
        }
    }

    #[test]
    fn little_group_examples() {
        assert_eq!(little_group_f(0.0, 0.0).unwrap(), Mat4R::identity());
        let k = FourVector::new(1.0, 1.0, 0.0, 0.0);
        let diff = |a: FourVector, b: FourVector| {
            a.to_array()
                .iter()
                .zip(b.to_array())
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max)
        };
        // `1 + u²/2 − u²/2` is one up to a rounding step.
        assert!(diff(little_group_f1(0.7).apply(k), k) <= f64::EPSILON);
        assert!(diff(little_group_f2(-1.3).apply(k), k) <= f64::EPSILON);
        let (u, v) = (0.3, -0.8);
        let fg = little_group_f1(u) * little_group_f2(v);
        let gf = little_group_f2(v) * little_group_f1(u);
        assert!(fg.max_abs_diff(&gf) < 1e-15);
        assert!(fg.minkowski_residual() < 1e-14);
    }

    #[test]
    fn contraction_limits() {
        let at_zero = contract_generator(Contraction::N1FromJ2, 0.0).unwrap();
        let expected = generator4(Generator::J2).scale(Complex64::new(-2.0, 0.0));
        assert_eq!(at_zero.max_abs_diff(&expected), 0.0);
        for (which, target) in [
            (Contraction::N1FromJ2, Generator::N1),
            (Contraction::N2FromJ1, Generator::N2),
        ] {
            let c = contract_generator(which, 10.0).unwrap();
            assert!(c.max_abs_diff(&generator4(target)) < 1e-7);
        }
    }

    #[test]
    fn printed_contraction_normalization_misses_n1() {
        // e^{-η} B⁻¹ J2 B tends to (J2 + K1)/2, not N1.
        let eta = 12.0;
        let b = Elementary4::BoostS1(eta).matrix();
        let b_inv = Elementary4::BoostS1(-eta).matrix();
        let lit = conjugate_generator(&generator4(Generator::J2), &b_inv, &b)
            .scale(Complex64::new((-eta).exp(), 0.0));
        let half = (generator4(Generator::J2) + generator4(Generator::K1)).scale(0.5.into());
        assert!(lit.max_abs_diff(&half) < 1e-9);
        assert!(lit.max_abs_diff(&generator4(Generator::N1)) > 0.5);
    }

    #[test]
    fn boosted_rotation_generators_keep_algebra() {
        let eta = 2.0;
        let b = Elementary4::BoostS1(eta).matrix();
        let b_inv = Elementary4::BoostS1(-eta).matrix();
        let j: Vec<Mat4C> = Generator::ROTATIONS
            .iter()
            .map(|&g| conjugate_generator(&generator4(g), &b, &b_inv))
            .collect();
        for i in 0..3 {
            for k in 0..3 {
                let rhs = j.iter().enumerate().fold(Mat4C::zero(), |acc, (l, jl)| {
                    acc + jl.scale(Complex64::new(0.0, eps(i, k, l)))
                });
                let scale = j[i].max_abs() * j[k].max_abs();
                assert!(j[i].commutator(&j[k]).max_abs_diff(&rhs) < 1e-12 * scale.max(1.0));
            }
        }
    }
}
