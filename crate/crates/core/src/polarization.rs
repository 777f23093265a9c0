//! Jones vectors, coherency matrices, Stokes four-vectors and Mueller matrices
//! for a two-beam system.
//!
//! The coherency matrix is stored as `C = Σ w ψψ†`, so `C12 = ⟨ψ1 ψ2*⟩`.
//! Stokes parameters follow the ordering `(S0, S1, S2, S3) ↔ (t, z, x, y)`
//! used by [`crate::sl2::v_from_coords`], i.e. `C = V(S)/2`.

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::error::{ensure_finite, Error, Result};
use crate::matrix::{FourVector, Mat2C, Mat4R};
use crate::sl2::{coords_unchecked, two_to_four, v_from_coords, Elementary2};
use crate::tol;

/// Field amplitudes of the two beams.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JonesVector {
    pub psi1: Complex64,
    pub psi2: Complex64,
}

impl JonesVector {
    pub fn new(psi1: Complex64, psi2: Complex64) -> Self {
        Self { psi1, psi2 }
    }

    pub fn from_real(psi1: f64, psi2: f64) -> Self {
        Self::new(psi1.into(), psi2.into())
    }

    pub fn intensity(&self) -> f64 {
        self.psi1.norm_sqr() + self.psi2.norm_sqr()
    }

    pub fn transform(&self, m: &Mat2C) -> Self {
        let [psi1, psi2] = m.apply([self.psi1, self.psi2]);
        Self { psi1, psi2 }
    }

    fn is_finite(&self) -> bool {
        self.psi1.is_finite() && self.psi2.is_finite()
    }
}

/// Hermitian positive-semidefinite two-by-two density matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(transparent)]
pub struct CoherencyMatrix(Mat2C);

impl CoherencyMatrix {
    /// Validates Hermiticity and positive semidefiniteness.
    pub fn new(m: Mat2C) -> Result<Self> {
        if m.entries().iter().any(|z| !z.is_finite()) {
            return Err(Error::NonFinite("coherency matrix"));
        }
        let scale = m.max_abs().max(1.0);
        let residual = m.hermitian_residual();
        if residual > tol::HERMITIAN * scale {
            return Err(Error::NotHermitian { residual });
        }
        let det = m.det().re;
        let psd_tol = tol::PSD * scale * scale;
        if det < -psd_tol || m.a.re < -psd_tol || m.d.re < -psd_tol {
            return Err(Error::NotPositiveSemidefinite { det });
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> Mat2C {
        self.0
    }

    pub fn det(&self) -> f64 {
        self.0.det().re
    }

    pub fn trace(&self) -> f64 {
        self.0.trace().re
    }

    /// `C ↦ G C G†` for unimodular `G`; preserves `det C`.
    pub fn transform(&self, g: &Mat2C) -> Result<Self> {
        let det = g.det();
        if (det - Complex64::new(1.0, 0.0)).norm() > tol::UNIMODULAR {
            return Err(Error::NotUnimodular { det: det.re });
        }
        let m = *g * self.0 * g.dagger();
        // Re-symmetrize to remove rounding drift.
        let c = (m.c + m.b.conj()) * 0.5;
        Ok(Self(Mat2C::new(m.a.re.into(), c.conj(), c, m.d.re.into())))
    }
}

/// `C = Σ wᵢ ψᵢψᵢ†` for a finite ensemble with weights summing to one.
pub fn coherency_from_jones(ensemble: &[(f64, JonesVector)]) -> Result<CoherencyMatrix> {
    if ensemble.is_empty() {
        return Err(Error::EmptyEnsemble);
    }
    let mut total = 0.0;
    let mut c = Mat2C::zero();
    for &(w, psi) in ensemble {
        ensure_finite("weight", w)?;
        if !psi.is_finite() {
            return Err(Error::NonFinite("jones vector"));
        }
        if w < 0.0 {
            return Err(Error::NegativeWeight(w));
        }
        total += w;
        let outer = Mat2C::new(
            psi.psi1 * psi.psi1.conj(),
            psi.psi1 * psi.psi2.conj(),
            psi.psi2 * psi.psi1.conj(),
            psi.psi2 * psi.psi2.conj(),
        );
        c = c + outer.scale_re(w);
    }
    if (total - 1.0).abs() > tol::WEIGHT_SUM {
        return Err(Error::WeightsNotNormalized(total));
    }
    CoherencyMatrix::new(c)
}

/// Stokes four-vector `(S0, S1, S2, S3)`; serializes as a flat array.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StokesVector {
    pub s0: f64,
    pub s1: f64,
    pub s2: f64,
    pub s3: f64,
}

impl StokesVector {
    pub const fn new(s0: f64, s1: f64, s2: f64, s3: f64) -> Self {
        Self { s0, s1, s2, s3 }
    }

    pub const fn to_array(self) -> [f64; 4] {
        [self.s0, self.s1, self.s2, self.s3]
    }

    pub fn as_four_vector(self) -> FourVector {
        FourVector::new(self.s0, self.s1, self.s2, self.s3)
    }

    pub fn from_four_vector(p: FourVector) -> Self {
        Self::new(p.t, p.z, p.x, p.y)
    }

    /// Radius of the inner Poincaré sphere, `√(S1² + S2² + S3²)`.
    pub fn polarized_radius(&self) -> f64 {
        (self.s1 * self.s1 + self.s2 * self.s2 + self.s3 * self.s3).sqrt()
    }

    pub fn transform(&self, mueller: &Mat4R) -> Self {
        Self::from_four_vector(mueller.apply(self.as_four_vector()))
    }
}

impl Serialize for StokesVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_array().serialize(serializer)
    }
}

pub fn stokes_from_coherency(c: &CoherencyMatrix) -> StokesVector {
    // C = V/2, so the Stokes vector is twice the coordinates of C.
    let p = coords_unchecked(&c.0);
    StokesVector::new(2.0 * p.t, 2.0 * p.z, 2.0 * p.x, 2.0 * p.y)
}

/// `C = ½[[S0 + S1, S2 − iS3], [S2 + iS3, S0 − S1]]`.
pub fn coherency_from_stokes(s: &StokesVector) -> Result<CoherencyMatrix> {
    for (name, v) in [("S0", s.s0), ("S1", s.s1), ("S2", s.s2), ("S3", s.s3)] {
        ensure_finite(name, v)?;
    }
    CoherencyMatrix::new(v_from_coords(s.as_four_vector()).scale_re(0.5))
}

/// `M² = S0² − S1² − S2² − S3²`, equal to `4 det C`.
pub fn invariant_mass_sq(s: &StokesVector) -> f64 {
    s.as_four_vector().interval()
}

/// Degree-of-coherence class of a Stokes vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PolarizationClass {
    Pure,
    /// `cos χ = S/S0`; `eta = ½ ln((1 + cos χ)/(1 − cos χ))`, infinite when `cos χ` rounds to 1.
    Partial {
        cos_chi: f64,
        eta: f64,
    },
    Random,
}

/// Classification together with the two Poincaré-sphere radii.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Classification {
    pub class: PolarizationClass,
    /// Outer radius `S0`.
    pub outer_radius: f64,
    /// Inner radius `S = √(S1² + S2² + S3²)`.
    pub inner_radius: f64,
}

pub fn classify(s: &StokesVector) -> Result<Classification> {
    for (name, v) in [("S0", s.s0), ("S1", s.s1), ("S2", s.s2), ("S3", s.s3)] {
        ensure_finite(name, v)?;
    }
    if s.s0 <= 0.0 {
        return Err(Error::NonPositiveIntensity(s.s0));
    }
    let radius = s.polarized_radius();
    let m2 = invariant_mass_sq(s);
    let class = if m2 < tol::CLASSIFY * s.s0 * s.s0 {
        PolarizationClass::Pure
    } else if radius < tol::CLASSIFY * s.s0 {
        PolarizationClass::Random
    } else {
        let cos_chi = radius / s.s0;
        let eta = if cos_chi >= 1.0 {
            f64::INFINITY
        } else {
            cos_chi.atanh()
        };
        PolarizationClass::Partial { cos_chi, eta }
    };
    Ok(Classification {
        class,
        outer_radius: s.s0,
        inner_radius: radius,
    })
}

/// Two-beam optical elements.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum BeamElement {
    BeamSplit(f64),
    PhaseShift(f64),
    /// Amplitude attenuation `diag(e^{−η1}, e^{−η2})`.
    Attenuate(f64, f64),
}

/// Jones matrix, its Mueller image, and a scalar amplitude factor.
///
/// The physical Jones matrix is `factor · jones`; the physical Mueller
/// matrix is `factor² · mueller`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MuellerPair {
    pub jones: Mat2C,
    pub mueller: Mat4R,
    pub factor: f64,
}

pub fn mueller_of(element: BeamElement) -> Result<MuellerPair> {
    let (jones, factor) = match element {
        BeamElement::BeamSplit(theta) => {
            ensure_finite("theta", theta)?;
            (Elementary2::RotY(theta).matrix(), 1.0)
        }
        BeamElement::PhaseShift(phi) => {
            ensure_finite("phi", phi)?;
            (Elementary2::RotZ(phi).matrix(), 1.0)
        }
        BeamElement::Attenuate(eta1, eta2) => {
            ensure_finite("eta1", eta1)?;
            ensure_finite("eta2", eta2)?;
            (
                Elementary2::BoostZ(eta2 - eta1).matrix(),
                (-(eta1 + eta2) / 2.0).exp(),
            )
        }
    };
    Ok(MuellerPair {
        jones,
        mueller: two_to_four(&jones)?,
        factor,
    })
}

/// Rotation angle `θ` and decoherence parameter `α = tanh η ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DecoherenceParams {
    pub theta: f64,
    pub alpha: f64,
}

impl DecoherenceParams {
    pub fn new(theta: f64, alpha: f64) -> Result<Self> {
        ensure_finite("theta", theta)?;
        ensure_finite("alpha", alpha)?;
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        Ok(Self { theta, alpha })
    }

    pub fn from_rapidity(theta: f64, eta: f64) -> Result<Self> {
        ensure_finite("eta", eta)?;
        if eta < 0.0 {
            return Err(Error::NegativeRapidity(eta));
        }
        Self::new(theta, eta.tanh())
    }

    /// `u = −2 tan(θ/2)`.
    pub fn u(&self) -> f64 {
        -2.0 * (self.theta / 2.0).tan()
    }

    /// `w = 1 / (1 + (1 − α²) tan²(θ/2))`.
    pub fn w(&self) -> f64 {
        let t = (self.theta / 2.0).tan();
        1.0 / (1.0 + (1.0 - self.alpha * self.alpha) * t * t)
    }

    /// Angle `θ'` with `decohered_rotation = B(η) R(θ') B(−η)`, where
    /// `tan(θ'/2) = sech η · tan(θ/2)`.
    pub fn conjugated_angle(&self) -> f64 {
        let sech = (1.0 - self.alpha * self.alpha).sqrt();
        let half = self.theta / 2.0;
        // Keep θ' on the same branch as θ.
        let turns = (half / std::f64::consts::PI).round();
        let reduced = half - turns * std::f64::consts::PI;
        2.0 * ((sech * reduced.tan()).atan() + turns * std::f64::consts::PI)
    }
}

/// Boost-conjugated `S3` rotation interpolating between a rotation (`α = 0`)
/// and the pure-state little-group element `F1(u)` (`α = 1`).
pub fn decohered_rotation(p: &DecoherenceParams) -> Result<Mat4R> {
    let p = DecoherenceParams::new(p.theta, p.alpha)?;
    let (a, u, w) = (p.alpha, p.u(), p.w());
    let h = u * u * w / 2.0;
    let uw = u * w;
    Ok(Mat4R([
        [1.0 + a * a * h, -a * h, a * uw, 0.0],
        [a * h, 1.0 - h, uw, 0.0],
        [a * uw, -uw, 1.0 - (1.0 - a * a) * h, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]))
}

/// `tr(ρ²)` with `ρ = C / tr C`; 1 for pure states, 1/2 for random ones.
pub fn purity(c: &CoherencyMatrix) -> Result<f64> {
    let tr = c.trace();
    if tr <= 0.0 {
        return Err(Error::ZeroTrace);
    }
    let rho = c.0.scale_re(1.0 / tr);
    let sq = rho * rho;
    Ok(sq.trace().re)
}
