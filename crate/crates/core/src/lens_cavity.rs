//! Paraxial ABCD optics: thin lenses, free propagation, the one-lens core
//! matrix and laser-cavity round trips.

use serde::Serialize;

use crate::error::{ensure_finite, Error, Result};
use crate::matrix::RayMatrix;
use crate::tol;

/// Tolerance on `|tr| − 2` below which a core matrix is treated as parabolic.
pub const PARABOLIC_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OpticalElement {
    /// Thin lens of focal length `f`.
    Lens { f: f64 },
    /// Free propagation over distance `z`.
    Gap { z: f64 },
}

impl OpticalElement {
    /// Thin lens of optical power `p = 1/f`.
    pub fn lens_with_power(p: f64) -> Result<Self> {
        if !p.is_finite() || p == 0.0 {
            return Err(Error::InvalidFocalLength(1.0 / p));
        }
        Ok(Self::Lens { f: 1.0 / p })
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::Lens { f } if f == 0.0 || !f.is_finite() => Err(Error::InvalidFocalLength(f)),
            Self::Gap { z } if z < 0.0 || !z.is_finite() => Err(Error::InvalidDistance(z)),
            _ => Ok(()),
        }
    }

    pub fn is_lens(&self) -> bool {
        matches!(self, Self::Lens { .. })
    }
}

/// `Lens(f) → [[1, 0], [−1/f, 1]]`, `Gap(z) → [[1, z], [0, 1]]`.
pub fn element_matrix(e: &OpticalElement) -> Result<RayMatrix> {
    e.validate()?;
    Ok(match *e {
        OpticalElement::Lens { f } => RayMatrix::new(1.0, 0.0, -1.0 / f, 1.0),
        OpticalElement::Gap { z } => RayMatrix::new(1.0, z, 0.0, 1.0),
    })
}

/// System matrix of an ordered element list; the first element acts first,
/// so `[e1, e2, e3]` gives `M3 · M2 · M1`.
pub fn compose(system: &[OpticalElement]) -> Result<RayMatrix> {
    if system.is_empty() {
        return Err(Error::EmptySystem);
    }
    system
        .iter()
        .try_fold(RayMatrix::identity(), |acc, e| Ok(element_matrix(e)? * acc))
}

/// Dimensionless one-lens core `[[x − 1, x − 2], [x, x − 1]]` with `x = z/f`.
pub fn one_lens_core(x: f64) -> Result<RayMatrix> {
    ensure_finite("x", x)?;
    Ok(RayMatrix::new(x - 1.0, x - 2.0, x, x - 1.0))
}

/// Conjugacy class of an equal-diagonal unimodular matrix.
///
/// The elliptic form is `[[cos(φ/2), −e^{−η} sin(φ/2)], [e^{η} sin(φ/2), cos(φ/2)]]`
/// with `φ ∈ (−2π, 2π)`; the hyperbolic form replaces the rotation by an
/// `x`-boost of rapidity `χ`, with an overall sign when the trace is below −2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoreClassification {
    Elliptic { eta: f64, phi: f64 },
    Hyperbolic { eta: f64, chi: f64, negated: bool },
    Parabolic { lower_triangular: bool },
}

/// `diag(e^{−η/2}, e^{η/2}) · inner · diag(e^{η/2}, e^{−η/2})`: scales the
/// upper-right entry by `e^{−η}` and the lower-left by `e^{η}`.
pub fn boosted(eta: f64, inner: &RayMatrix) -> RayMatrix {
    RayMatrix::squeeze(-eta) * *inner * RayMatrix::squeeze(eta)
}

impl CoreClassification {
    pub fn is_stable(&self) -> bool {
        matches!(self, Self::Elliptic { .. })
    }

    /// Rebuilds the matrix from its parameters; parabolic matrices are not
    /// determined by the class alone.
    pub fn reconstruct(&self) -> Option<RayMatrix> {
        match *self {
            Self::Elliptic { eta, phi } => Some(boosted(eta, &RayMatrix::rotation(phi))),
            Self::Hyperbolic { eta, chi, negated } => {
                let m = boosted(eta, &RayMatrix::x_boost(chi));
                Some(if negated { -m } else { m })
            }
            Self::Parabolic { .. } => None,
        }
    }
}

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

pub fn classify_core(m: &RayMatrix) -> Result<CoreClassification> {
    ensure_unimodular(m)?;
    if (m.a - m.d).abs() > PARABOLIC_TOL * m.max_abs().max(1.0) {
        return Err(Error::UnequalDiagonal { a: m.a, d: m.d });
    }
    let a = (m.a + m.d) / 2.0;
    if (a.abs() - 1.0).abs() <= PARABOLIC_TOL / 2.0 || m.b == 0.0 || m.c == 0.0 {
        return Ok(CoreClassification::Parabolic {
            lower_triangular: m.b.abs() <= m.c.abs(),
        });
    }
    if a.abs() < 1.0 {
        let eta = 0.5 * (-m.c / m.b).ln();
        let phi = 2.0 * a.acos() * m.c.signum();
        Ok(CoreClassification::Elliptic { eta, phi })
    } else {
        let negated = a < 0.0;
        let s = if negated { -1.0 } else { 1.0 };
        let eta = 0.5 * (m.c / m.b).ln();
        let chi = 2.0 * (s * a).acosh() * (s * m.c).signum();
        Ok(CoreClassification::Hyperbolic { eta, chi, negated })
    }
}

/// `core^{2n}` for an equal-diagonal unimodular matrix, from its class.
pub fn core_cycle_power(core: &RayMatrix, n: u32) -> Result<RayMatrix> {
    if n == 0 {
        return Err(Error::ZeroCycles);
    }
    let twice_n = 2.0 * f64::from(n);
    Ok(match classify_core(core)? {
        CoreClassification::Elliptic { eta, phi } => {
            boosted(eta, &RayMatrix::rotation(twice_n * phi))
        }
        CoreClassification::Hyperbolic { eta, chi, .. } => {
            boosted(eta, &RayMatrix::x_boost(twice_n * chi))
        }
        CoreClassification::Parabolic { .. } => {
            // core = s(I + K) with K nilpotent, so core^{2n} = I + 2nK.
            let s = core.a.signum();
            let k = core.scale(s) - RayMatrix::identity();
            RayMatrix::identity() + k.scale(twice_n)
        }
    })
}

/// `n` round trips of a symmetric two-mirror cavity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CavityCycles {
    pub x: f64,
    pub cycles: u32,
    pub class: CoreClassification,
    pub stable: bool,
    /// Trace of the one-lens core matrix.
    pub core_trace: f64,
    /// `C^{2n}`, one cycle being `C²` from the midpoint between mirrors.
    pub matrix: RayMatrix,
}

impl CavityCycles {
    pub fn entry_max(&self) -> f64 {
        self.matrix.max_abs()
    }
}

/// Closed-form `C^{2N}` for the core `C = one_lens_core(x)`; stable iff elliptic.
pub fn cavity_cycles(x: f64, n: u32) -> Result<CavityCycles> {
    let core = one_lens_core(x)?;
    let class = classify_core(&core)?;
    let matrix = core_cycle_power(&core, n)?;
    Ok(CavityCycles {
        x,
        cycles: n,
        class,
        stable: class.is_stable(),
        core_trace: core.trace(),
        matrix,
    })
}
