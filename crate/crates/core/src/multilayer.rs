//! Periodic two-medium stacks in the S-matrix formalism.
//!
//! One cycle is `W = X(η) P(φ1) X(−η) P(φ2)` where `X` is the boundary matrix
//! and `P` the propagation phase. `W` lies in SU(1,1); its real conjugate
//! `V = C W C⁻¹` is classified and powered in closed form.

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::decompositions::{conjugate_complex, conjugate_real};
use crate::error::{ensure_finite, Error, Result};
use crate::lens_cavity::PARABOLIC_TOL;
use crate::matrix::{Mat2C, RayMatrix};
use crate::sl2::Elementary2;

/// Boundary parameter `η` and the phase thicknesses of the two media.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LayerCycle {
    pub eta: f64,
    pub phi1: f64,
    pub phi2: f64,
}

impl LayerCycle {
    pub fn new(eta: f64, phi1: f64, phi2: f64) -> Result<Self> {
        ensure_finite("eta", eta)?;
        ensure_finite("phi1", phi1)?;
        ensure_finite("phi2", phi2)?;
        Ok(Self { eta, phi1, phi2 })
    }

    /// Phases wrapped to `(−2π, 2π]` for display.
    pub fn wrapped_phases(&self) -> (f64, f64) {
        let wrap = |p: f64| {
            let r = p % (4.0 * std::f64::consts::PI);
            if r <= -2.0 * std::f64::consts::PI {
                r + 4.0 * std::f64::consts::PI
            } else if r > 2.0 * std::f64::consts::PI {
                r - 4.0 * std::f64::consts::PI
            } else {
                r
            }
        };
        (wrap(self.phi1), wrap(self.phi2))
    }
}

/// Boundary parameter from an amplitude reflectance `ρ ∈ (−1, 1)`:
/// `η = ln((1 + ρ)/(1 − ρ))`. This is a convention of this crate; the
/// S-matrix model itself takes `η` as given.
pub fn eta_from_reflectance(rho: f64) -> Result<f64> {
    ensure_finite("rho", rho)?;
    if rho.abs() >= 1.0 {
        return Err(Error::ReflectanceOutOfRange(rho));
    }
    Ok(2.0 * rho.atanh())
}

/// `W = X(η) P(φ1) X(−η) P(φ2)`.
pub fn cycle_matrix(c: &LayerCycle) -> Result<Mat2C> {
    let c = LayerCycle::new(c.eta, c.phi1, c.phi2)?;
    Ok(Elementary2::BoostX(c.eta).matrix()
        * Elementary2::RotZ(c.phi1).matrix()
        * Elementary2::BoostX(-c.eta).matrix()
        * Elementary2::RotZ(c.phi2).matrix())
}

/// Conjugacy class of the real cycle matrix `V`, written as
/// `V = S R(α) S⁻¹` or `V = ±S X(ξ) S⁻¹` with `S = R(ζ) B(μ)`.
///
/// `ζ` orients the squeeze axis; it vanishes only when `V` has equal diagonal
/// entries.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StackForm {
    Elliptic {
        mu: f64,
        zeta: f64,
        alpha: f64,
    },
    Hyperbolic {
        mu: f64,
        zeta: f64,
        xi: f64,
        negated: bool,
    },
    Parabolic,
}

impl StackForm {
    fn conjugator(mu: f64, zeta: f64) -> RayMatrix {
        RayMatrix::rotation(zeta) * RayMatrix::squeeze(mu)
    }

    /// `V^n` from the form; `None` for parabolic cycles.
    pub fn power(&self, n: u32) -> Option<RayMatrix> {
        let n = f64::from(n);
        match *self {
            Self::Elliptic { mu, zeta, alpha } => {
                let s = Self::conjugator(mu, zeta);
                Some(s * RayMatrix::rotation(n * alpha) * s.inverse())
            }
            Self::Hyperbolic {
                mu,
                zeta,
                xi,
                negated,
            } => {
                let s = Self::conjugator(mu, zeta);
                let m = s * RayMatrix::x_boost(n * xi) * s.inverse();
                Some(if negated && n % 2.0 == 1.0 { -m } else { m })
            }
            Self::Parabolic => None,
        }
    }

    /// Largest-magnitude eigenvalue of the one-cycle matrix, i.e. the
    /// asymptotic growth factor per cycle (1 unless hyperbolic).
    pub fn growth_per_cycle(&self) -> f64 {
        match *self {
            Self::Hyperbolic { xi, .. } => (xi / 2.0).exp(),
            _ => 1.0,
        }
    }

    pub fn is_bounded(&self) -> bool {
        matches!(self, Self::Elliptic { .. })
    }
}

/// Eigenvector angle `ζ` with `(cos(ζ/2), sin(ζ/2))` spanning the eigenspace
/// of the larger eigenvalue of the symmetric matrix `q`, and that eigenvalue.
fn symmetric_top_eigen(q: &RayMatrix) -> (f64, f64) {
    let off = (q.b + q.c) / 2.0;
    let mean = (q.a + q.d) / 2.0;
    let half_diff = (q.a - q.d) / 2.0;
    let radius = half_diff.hypot(off);
    // The top eigenvector of [[m + h, o], [o, m − h]] sits at half the angle atan2(o, h).
    let zeta = off.atan2(half_diff);
    (zeta, mean + radius)
}

/// Classifies a real unimodular matrix by its trace.
pub fn classify_cycle(v: &RayMatrix) -> StackForm {
    let c = (v.a + v.d) / 2.0;
    let h = (v.a - v.d) / 2.0;
    // det(V − cI) = −h² − bc.
    let disc = -h * h - v.b * v.c;
    if (c.abs() - 1.0).abs() <= PARABOLIC_TOL / 2.0 {
        return StackForm::Parabolic;
    }
    let j = RayMatrix::new(0.0, -1.0, 1.0, 0.0);
    if c.abs() < 1.0 {
        let s = disc.max(0.0).sqrt();
        let mut alpha = 2.0 * s.atan2(c);
        let mut k = (*v - RayMatrix::identity().scale(c)).scale(1.0 / s);
        // P = −KJ = S Sᵀ must be positive definite; otherwise flip the rotation sense.
        let mut p = -(k * j);
        if p.trace() < 0.0 {
            alpha = -alpha;
            k = k.scale(-1.0);
            p = -(k * j);
        }
        let (zeta, top) = symmetric_top_eigen(&p);
        StackForm::Elliptic {
            mu: top.ln(),
            zeta,
            alpha,
        }
    } else {
        let negated = c < 0.0;
        let sv = if negated { -*v } else { *v };
        let ch = c.abs();
        let sh = (-disc).max(0.0).sqrt();
        let xi = 2.0 * sh.asinh();
        let k = (sv - RayMatrix::identity().scale(ch)).scale(1.0 / sh);
        // Q = KJ = S σz Sᵀ; its positive eigenvalue is e^{μ}.
        let q = k * j;
        let (zeta, top) = symmetric_top_eigen(&q);
        StackForm::Hyperbolic {
            mu: top.ln(),
            zeta,
            xi,
            negated,
        }
    }
}

/// Result of composing `N` identical cycles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StackResult {
    /// `W^N`.
    pub matrix: Mat2C,
    pub form: StackForm,
    /// Set when the cycle is parabolic and `W^N` was formed by repeated squaring.
    pub brute_force: bool,
}

/// `W^N` through the real conjugate form.
pub fn stack_closed_form(c: &LayerCycle, n: u32) -> Result<StackResult> {
    if n == 0 {
        return Err(Error::ZeroCycles);
    }
    let w = cycle_matrix(c)?;
    let v = conjugate_real(&w)?;
    let form = classify_cycle(&v);
    Ok(match form.power(n) {
        Some(vn) => StackResult {
            matrix: conjugate_complex(&vn),
            form,
            brute_force: false,
        },
        None => StackResult {
            matrix: w.pow(n),
            form,
            brute_force: true,
        },
    })
}

/// Incoming, reflected and transmitted amplitudes for a transmitted `ψ3`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SResponse {
    pub psi1: Complex64,
    pub psi2: Complex64,
    /// `r = ψ2/ψ1 = C/A`.
    pub r: Complex64,
    /// `t = ψ3/ψ1 = 1/A`.
    pub t: Complex64,
}

/// `(ψ1, ψ2) = W (ψ3, 0)`.
pub fn s_matrix_apply(w: &Mat2C, psi3: Complex64) -> Result<SResponse> {
    if w.a.norm() == 0.0 {
        return Err(Error::Resonance);
    }
    let [psi1, psi2] = w.apply([psi3, Complex64::new(0.0, 0.0)]);
    Ok(SResponse {
        psi1,
        psi2,
        r: w.c / w.a,
        t: w.a.inv(),
    })
}

/// One line of a layer-spec file: `eta phi1 phi2 N`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LayerSpec {
    pub cycle: LayerCycle,
    pub cycles: u32,
}

impl fmt::Display for LayerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {}",
            self.cycle.eta, self.cycle.phi1, self.cycle.phi2, self.cycles
        )
    }
}

/// Parses whitespace-separated `eta phi1 phi2 N` lines; blank lines and
/// lines starting with `#` are skipped.
pub fn parse_layer_spec(text: &str) -> Result<Vec<LayerSpec>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::LayerSpec {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(err(format!("expected 4 fields, found {}", fields.len())));
        }
        let mut nums = [0.0; 3];
        for (slot, field) in nums.iter_mut().zip(&fields[..3]) {
            *slot = field
                .parse::<f64>()
                .map_err(|e| err(format!("`{field}`: {e}")))?;
            if !slot.is_finite() {
                return Err(err(format!("`{field}` is not finite")));
            }
        }
        let cycles: u32 = fields[3]
            .parse()
            .map_err(|e| err(format!("`{}`: {e}", fields[3])))?;
        if cycles == 0 {
            return Err(err("cycle count must be at least 1".into()));
        }
        out.push(LayerSpec {
            cycle: LayerCycle::new(nums[0], nums[1], nums[2])?,
            cycles,
        });
    }
    Ok(out)
}
