//! Factorizations of real unimodular (Sp(2)) matrices, the SU(1,1) ↔ Sp(2)
//! conjugation, and a constructive three-lens realization of any ABCD matrix.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{ensure_finite, Error, Result};
use crate::lens_cavity::{compose, OpticalElement};
use crate::matrix::{Mat2C, RayMatrix, I, ZERO};
use crate::tol;

/// Allowed imaginary residue when mapping an SU(1,1) matrix to a real one.
pub const REALITY_TOL: f64 = 1e-8;
/// Largest accepted residual for a synthesized lens system.
pub const SYNTHESIS_TOL: f64 = 1e-8;

fn ensure_unimodular(m: &RayMatrix) -> Result<()> {
    for v in m.entries() {
        ensure_finite("matrix entry", v)?;
    }
    let det = m.det();
    if (det - 1.0).abs() > tol::UNIMODULAR * m.max_abs().max(1.0).powi(2) {
        return Err(Error::NotUnimodular { det });
    }
    Ok(())
}

/// Maps an angle into `(−π, π]`.
pub fn wrap_angle(a: f64) -> f64 {
    let r = a.rem_euclid(2.0 * PI);
    if r > PI {
        r - 2.0 * PI
    } else {
        r
    }
}

/// Full-angle rotation `[[cos ψ, −sin ψ], [sin ψ, cos ψ]]`.
fn full_rotation(psi: f64) -> RayMatrix {
    RayMatrix::rotation(2.0 * psi)
}

/// `M = R(α) · diag(e^{γ/2}, e^{−γ/2}) · R(β)` with half-angle rotations.
///
/// `γ ≥ 0` and `β ∈ (−π, π]`; since `R(α + 2π) = −R(α)`, the remaining
/// sign is carried by `α ∈ (−2π, 2π]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BargmannFactors {
    pub alpha: f64,
    pub gamma: f64,
    pub beta: f64,
}

impl BargmannFactors {
    pub fn reconstruct(&self) -> RayMatrix {
        RayMatrix::rotation(self.alpha)
            * RayMatrix::squeeze(self.gamma)
            * RayMatrix::rotation(self.beta)
    }
}

/// Rotation–squeeze–rotation factorization from the closed-form 2×2 SVD.
pub fn bargmann(m: &RayMatrix) -> Result<BargmannFactors> {
    ensure_unimodular(m)?;
    let e = (m.a + m.d) / 2.0;
    let f = (m.a - m.d) / 2.0;
    let g = (m.c + m.b) / 2.0;
    let h = (m.c - m.b) / 2.0;
    let q = e.hypot(h);
    let r = f.hypot(g);
    if r <= 1e-14 * q {
        // Pure rotation: no squeeze axis, so β = 0.
        let alpha = 2.0 * m.c.atan2(m.a);
        return Ok(BargmannFactors {
            alpha: if alpha <= -2.0 * PI {
                alpha + 4.0 * PI
            } else {
                alpha
            },
            gamma: 0.0,
            beta: 0.0,
        });
    }
    let a1 = g.atan2(f);
    let a2 = h.atan2(e);
    // M = Rot(ψ1) diag(q + r, q − r) Rot(ψ2) with full-angle rotations.
    let psi2 = (a2 - a1) / 2.0;
    let psi1 = (a2 + a1) / 2.0;
    let (mut alpha, mut beta) = (2.0 * psi1, 2.0 * psi2);
    let wrapped = wrap_angle(beta);
    let shift = wrapped - beta;
    beta = wrapped;
    alpha -= shift;
    alpha = alpha.rem_euclid(4.0 * PI);
    if alpha > 2.0 * PI {
        alpha -= 4.0 * PI;
    }
    Ok(BargmannFactors {
        alpha,
        gamma: 2.0 * (q + r).ln(),
        beta,
    })
}

/// `M = S · O` with `S` symmetric positive definite and `O` a rotation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SymmetricOrthogonal {
    pub symmetric: RayMatrix,
    pub orthogonal: RayMatrix,
}

/// Polar decomposition: `S = √(M Mᵀ) = (M Mᵀ + I)/√(tr(M Mᵀ) + 2)`, `O = S⁻¹ M`.
pub fn symmetric_orthogonal(m: &RayMatrix) -> Result<SymmetricOrthogonal> {
    ensure_unimodular(m)?;
    let p = *m * m.transpose();
    let s = (p + RayMatrix::identity()).scale(1.0 / (p.trace() + 2.0).sqrt());
    // Average the off-diagonal pair so S is symmetric to the last bit.
    let off = (s.b + s.c) / 2.0;
    let symmetric = RayMatrix::new(s.a, off, off, s.d);
    let orthogonal = symmetric.inverse() * *m;
    Ok(SymmetricOrthogonal {
        symmetric,
        orthogonal,
    })
}

/// `M = K · A · N` with `K` a rotation by the full angle `k_angle ∈ (−π, π]`,
/// `A = diag(a, 1/a)` (`a > 0`) and `N = [[1, n], [0, 1]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IwasawaFactors {
    pub k_angle: f64,
    pub a: f64,
    pub n: f64,
}

impl IwasawaFactors {
    pub fn k(&self) -> RayMatrix {
        full_rotation(self.k_angle)
    }

    pub fn a_matrix(&self) -> RayMatrix {
        RayMatrix::diag(self.a, 1.0 / self.a)
    }

    pub fn n_matrix(&self) -> RayMatrix {
        RayMatrix::new(1.0, self.n, 0.0, 1.0)
    }

    pub fn reconstruct(&self) -> RayMatrix {
        self.k() * self.a_matrix() * self.n_matrix()
    }
}

/// Gram–Schmidt on the columns of `M`.
pub fn iwasawa(m: &RayMatrix) -> Result<IwasawaFactors> {
    ensure_unimodular(m)?;
    let a = m.a.hypot(m.c);
    let k_angle = m.c.atan2(m.a);
    let (s, c) = k_angle.sin_cos();
    // First row of Kᵀ M is (a, a n).
    let n = (c * m.b + s * m.d) / a;
    Ok(IwasawaFactors { k_angle, a, n })
}

/// The real form `R(2θ) · boost` at angles `φ = θ + π/4`, `ξ = θ − π/4`:
/// `[[cosh η cos 2θ, sinh η − cosh η sin 2θ], [sinh η + cosh η sin 2θ, cosh η cos 2θ]]`.
pub fn constrained_form(theta: f64, eta: f64) -> RayMatrix {
    let (s2, c2) = (2.0 * theta).sin_cos();
    let (ch, sh) = (eta.cosh(), eta.sinh());
    RayMatrix::new(ch * c2, sh - ch * s2, sh + ch * s2, ch * c2)
}

/// Solves `sinh η = cosh η · sin 2θ` and returns `η` with the resulting
/// lower-triangular matrix `[[1, 0], [2 sinh η, 1]]`.
///
/// Requires `cos 2θ > 0`; when `cos 2θ < 0` the same `η` yields a diagonal
/// of −1, which is not of the unit-triangular form.
pub fn iwasawa_constraint(theta: f64) -> Result<(f64, RayMatrix)> {
    ensure_finite("theta", theta)?;
    let (s2, c2) = (2.0 * theta).sin_cos();
    if s2.abs() >= 1.0 || c2 <= 0.0 {
        return Err(Error::ConstraintUnsolvable { theta });
    }
    let eta = s2.atanh();
    Ok((eta, constrained_form(theta, eta)))
}

fn conjugator() -> (Mat2C, Mat2C) {
    let p = Complex64::from_polar(FRAC_1_SQRT_2, FRAC_PI_4);
    let m = Complex64::from_polar(FRAC_1_SQRT_2, -FRAC_PI_4);
    let c = Mat2C::new(p, p, -m, m);
    let c_inv = Mat2C::new(m, -p, m, p);
    (c, c_inv)
}

/// `V = C W C⁻¹`; maps the phase shift `P(φ)` to `R(φ)` and the `x`-boost
/// `X(η)` to `diag(e^{η/2}, e^{−η/2})`.
pub fn conjugate_real(w: &Mat2C) -> Result<RayMatrix> {
    if w.entries().iter().any(|z| !z.is_finite()) {
        return Err(Error::NonFinite("matrix entry"));
    }
    let (c, c_inv) = conjugator();
    let v = c * *w * c_inv;
    let residue = v.entries().iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if residue > REALITY_TOL * v.max_abs().max(1.0) {
        return Err(Error::NotRealizable { residue });
    }
    Ok(RayMatrix::new(v.a.re, v.b.re, v.c.re, v.d.re))
}

/// `W = C⁻¹ V C`, the inverse of [`conjugate_real`].
pub fn conjugate_complex(v: &RayMatrix) -> Mat2C {
    let (c, c_inv) = conjugator();
    c_inv * v.to_complex() * c
}

/// Shear-type generators of Sp(2): `X1 = [[0, i], [0, 0]]`,
/// `X2 = [[0, 0], [i/2, 0]]`, `X3 = diag(i/2, −i/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShearGenSet {
    pub x1: Mat2C,
    pub x2: Mat2C,
    pub x3: Mat2C,
}

impl Default for ShearGenSet {
    fn default() -> Self {
        let half_i = Complex64::new(0.0, 0.5);
        Self {
            x1: Mat2C::new(ZERO, I, ZERO, ZERO),
            x2: Mat2C::new(ZERO, ZERO, half_i, ZERO),
            x3: Mat2C::diag(half_i, -half_i),
        }
    }
}

impl ShearGenSet {
    /// Residuals of `[X1,X2] = iX3`, `[X1,X3] = −iX1`, `[X2,X3] = iX2`.
    pub fn commutator_residuals(&self) -> [f64; 3] {
        [
            self.x1.commutator(&self.x2).max_abs_diff(&self.x3.scale(I)),
            self.x1
                .commutator(&self.x3)
                .max_abs_diff(&self.x1.scale(-I)),
            self.x2.commutator(&self.x3).max_abs_diff(&self.x2.scale(I)),
        ]
    }

    /// `exp(−i(c1 X1 + c2 X2 + c3 X3))`; real because `−iXₖ` is real.
    pub fn generate(&self, c: [f64; 3]) -> RayMatrix {
        let g =
            (self.x1.scale_re(c[0]) + self.x2.scale_re(c[1]) + self.x3.scale_re(c[2])).scale(-I);
        expm_traceless(&RayMatrix::new(g.a.re, g.b.re, g.c.re, g.d.re))
    }
}

/// Exponential of a real traceless 2×2 matrix `G`: `G² = −det(G) I`.
pub fn expm_traceless(g: &RayMatrix) -> RayMatrix {
    let s2 = -g.det();
    let (c, k) = if s2 > 0.0 {
        let s = s2.sqrt();
        (s.cosh(), s.sinh() / s)
    } else if s2 < 0.0 {
        let s = (-s2).sqrt();
        (s.cos(), s.sin() / s)
    } else {
        (1.0, 1.0)
    };
    RayMatrix::identity().scale(c) + g.scale(k)
}

fn lens(p: f64) -> Option<OpticalElement> {
    (p != 0.0).then(|| OpticalElement::Lens { f: 1.0 / p })
}

/// Drops zero-power lenses and zero gaps and merges adjacent gaps.
fn simplify(elements: Vec<Option<OpticalElement>>) -> Vec<OpticalElement> {
    let mut out: Vec<OpticalElement> = Vec::new();
    for e in elements.into_iter().flatten() {
        match (out.last_mut(), e) {
            (Some(OpticalElement::Gap { z }), OpticalElement::Gap { z: dz }) => *z += dz,
            _ => out.push(e),
        }
    }
    out.retain(|e| !matches!(e, OpticalElement::Gap { z } if *z == 0.0));
    if out.is_empty() {
        out.push(OpticalElement::Gap { z: 0.0 });
    }
    out
}

/// `L(p3) T(b) L(p2) T(a) L(p1)` realizing `m`; requires `m.b ≠ 0`.
fn three_lens_candidate(m: &RayMatrix, a: f64, b: f64) -> Vec<Option<OpticalElement>> {
    let p2 = (a + b - m.b) / (a * b);
    let x11 = 1.0 - p2 * b;
    let x22 = 1.0 - p2 * a;
    let p1 = (x11 - m.a) / m.b;
    let p3 = (x22 - m.d) / m.b;
    vec![
        lens(p1),
        Some(OpticalElement::Gap { z: a }),
        lens(p2),
        Some(OpticalElement::Gap { z: b }),
        lens(p3),
    ]
}

fn residual(system: &[OpticalElement], m: &RayMatrix) -> f64 {
    compose(system).map_or(f64::INFINITY, |r| r.max_abs_diff(m))
}

/// Thin lenses and non-negative gaps composing to `m` (first element acts
/// first), using at most three lenses.
///
/// Tries, in order: a single element, gap–lens–gap, and lens–gap–lens–gap–lens
/// (with a leading gap when the `B` entry vanishes). Each candidate is checked
/// with [`compose`] and the best one within [`SYNTHESIS_TOL`] is returned.
pub fn three_lens_synthesis(m: &RayMatrix) -> Result<Vec<OpticalElement>> {
    ensure_unimodular(m)?;
    let eps = 1e-14 * m.max_abs().max(1.0);
    let mut candidates: Vec<Vec<OpticalElement>> = Vec::new();

    if (m.a - 1.0).abs() <= eps && (m.d - 1.0).abs() <= eps {
        if m.c.abs() <= eps && m.b >= 0.0 {
            candidates.push(vec![OpticalElement::Gap { z: m.b }]);
        }
        if m.b.abs() <= eps && m.c != 0.0 {
            candidates.push(vec![OpticalElement::Lens { f: -1.0 / m.c }]);
        }
    }

    if m.c != 0.0 {
        let z1 = (m.d - 1.0) / m.c;
        let z2 = (m.a - 1.0) / m.c;
        if z1 >= 0.0 && z2 >= 0.0 {
            candidates.push(simplify(vec![
                Some(OpticalElement::Gap { z: z1 }),
                lens(-m.c),
                Some(OpticalElement::Gap { z: z2 }),
            ]));
        }
    }

    // With B = 0, peel off a leading gap s so that Y = M·T(−s) has Y12 ≠ 0.
    let leading: Vec<f64> = if m.b.abs() > eps {
        vec![0.0]
    } else {
        vec![1.0, 1.0 / m.a.abs(), 0.5]
    };
    for s in leading {
        let y = *m * RayMatrix::new(1.0, -s, 0.0, 1.0);
        if y.b == 0.0 {
            continue;
        }
        let scale = y.b.abs();
        for t in [scale, 1.0, 0.5 * (scale + 1.0), 2.0 * scale, scale.sqrt()] {
            let mut parts = vec![Some(OpticalElement::Gap { z: s })];
            parts.extend(three_lens_candidate(&y, t, t));
            candidates.push(simplify(parts));
        }
    }

    let mut best: Option<(f64, Vec<OpticalElement>)> = None;
    for c in candidates {
        let lenses = c.iter().filter(|e| e.is_lens()).count();
        if lenses > 3 || c.iter().any(|e| e.validate().is_err()) {
            continue;
        }
        let r = residual(&c, m);
        if best.as_ref().is_none_or(|(br, _)| r < *br) {
            best = Some((r, c));
        }
    }
    match best {
        Some((r, system)) if r <= SYNTHESIS_TOL => Ok(system),
        Some((r, _)) => Err(Error::SynthesisFailed { residual: r }),
        None => Err(Error::SynthesisFailed {
            residual: f64::INFINITY,
        }),
    }
}
