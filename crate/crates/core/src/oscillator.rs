//! Lorentz-squeezed ground state of the two-dimensional harmonic oscillator
//! and its two-mode Hermite expansion.
//!
//! The squeezed ground state is
//! `ψ_η(z, t) = π^{−1/2} exp(−(e^{−2η}u² + e^{2η}v²)/2)` with light-cone
//! variables `u = (z + t)/√2`, `v = (z − t)/√2`, and it expands as
//! `Σ_k c_k φ_k(z) φ_k(t)` with `c_k = tanh^k(η)/cosh η`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use serde::Serialize;

use crate::error::{ensure_finite, Error, Result};

/// Quadrature order used by the verification helpers.
pub const QUADRATURE_ORDER: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SqueezedState {
    pub eta: f64,
}

impl SqueezedState {
    pub fn new(eta: f64) -> Result<Self> {
        ensure_finite("eta", eta)?;
        Ok(Self { eta })
    }

    pub fn psi(&self, z: f64, t: f64) -> f64 {
        let (u, v) = to_lightcone(z, t);
        self.psi_lightcone(u, v)
    }

    fn psi_lightcone(&self, u: f64, v: f64) -> f64 {
        let e2 = (2.0 * self.eta).exp();
        PI.sqrt().recip() * (-(u * u / e2 + e2 * v * v) / 2.0).exp()
    }
}

/// `ψ_η(z, t)`.
pub fn psi(state: &SqueezedState, z: f64, t: f64) -> f64 {
    state.psi(z, t)
}

/// `(u, v) = ((z + t)/√2, (z − t)/√2)`.
pub fn to_lightcone(z: f64, t: f64) -> (f64, f64) {
    ((z + t) * FRAC_1_SQRT_2, (z - t) * FRAC_1_SQRT_2)
}

/// Inverse of [`to_lightcone`].
pub fn from_lightcone(u: f64, v: f64) -> (f64, f64) {
    ((u + v) * FRAC_1_SQRT_2, (u - v) * FRAC_1_SQRT_2)
}

/// `(u, v) ↦ (e^η u, e^{−η} v)`.
pub fn lightcone_boost(eta: f64, u: f64, v: f64) -> (f64, f64) {
    (eta.exp() * u, (-eta).exp() * v)
}

/// Normalized Hermite functions `φ_0 … φ_kmax` at `x`.
pub fn hermite_functions(kmax: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(kmax + 1);
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25) * (-x * x / 2.0).exp();
    out.push(cur);
    for k in 0..kmax {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        out.push(cur);
    }
    out
}

/// Normalized Hermite function `φ_k(x)`.
pub fn hermite_function(k: usize, x: f64) -> f64 {
    hermite_functions(k, x)[k]
}

/// `c_k(η) = tanh^k(η) / cosh η`.
pub fn expansion_coeff(eta: f64, k: u32) -> Result<f64> {
    ensure_finite("eta", eta)?;
    if eta < 0.0 {
        return Err(Error::NegativeRapidity(eta));
    }
    Ok(eta.tanh().powi(k as i32) / eta.cosh())
}

/// Partial sum `Σ_{k ≤ kmax} c_k φ_k(z) φ_k(t)`.
pub fn reconstruct(eta: f64, kmax: usize, z: f64, t: f64) -> Result<f64> {
    expansion_coeff(eta, 0)?;
    let (hz, ht) = (hermite_functions(kmax, z), hermite_functions(kmax, t));
    let (th, ch) = (eta.tanh(), eta.cosh());
    let mut ck = 1.0 / ch;
    let mut sum = 0.0;
    for k in 0..=kmax {
        sum += ck * hz[k] * ht[k];
        ck *= th;
    }
    Ok(sum)
}

/// Exact L2 norm of the truncated tail, `tanh^{kmax+1}(η)`.
pub fn truncation_residual(eta: f64, kmax: usize) -> f64 {
    eta.abs().tanh().powi(kmax as i32 + 1)
}

/// Gauss–Hermite rule for `∫ g(x) dx`, with weights stored as
/// `ln(wᵢ) + xᵢ²` so that unweighted integrands can be summed directly.
#[derive(Debug, Clone)]
pub struct GaussHermite {
    nodes: Vec<f64>,
    log_scaled_weights: Vec<f64>,
}

impl GaussHermite {
    /// Nodes by Newton iteration on the normalized Hermite recurrence.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "quadrature order must be positive");
        let nf = n as f64;
        let mut x = vec![0.0; n];
        let mut logw = vec![0.0; n];
        let m = n.div_ceil(2);
        let mut z: f64 = 0.0;
        for i in 0..m {
            z = match i {
                0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-1.0 / 6.0),
                1 => z - 1.14 * nf.powf(0.426) / z,
                2 => 1.86 * z - 0.86 * x[0],
                3 => 1.91 * z - 0.91 * x[1],
                _ => 2.0 * z - x[i - 2],
            };
            let mut pp = 0.0;
            for _ in 0..100 {
                let mut p1 = PI.powf(-0.25);
                let mut p2 = 0.0;
                for j in 1..=n {
                    let jf = j as f64;
                    let p3 = p2;
                    p2 = p1;
                    p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
                }
                pp = (2.0 * nf).sqrt() * p2;
                let step = p1 / pp;
                z -= step;
                if step.abs() <= 1e-15 * z.abs().max(1.0) {
                    break;
                }
            }
            x[i] = z;
            x[n - 1 - i] = -z;
            let lw = 2f64.ln() - 2.0 * pp.abs().ln() + z * z;
            logw[i] = lw;
            logw[n - 1 - i] = lw;
        }
        Self {
            nodes: x,
            log_scaled_weights: logw,
        }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// `∫ g(x) dx ≈ s Σ wᵢ e^{yᵢ²} g(s yᵢ)`, exact when `g(s y) e^{y²}` is a
    /// polynomial of degree below `2n`.
    pub fn integrate(&self, scale: f64, g: impl Fn(f64) -> f64) -> f64 {
        scale
            * self
                .nodes
                .iter()
                .zip(&self.log_scaled_weights)
                .map(|(&y, &lw)| lw.exp() * g(scale * y))
                .sum::<f64>()
    }

    /// Tensor-product rule for `∫∫ g(x, y) dx dy`.
    pub fn integrate_2d(&self, sx: f64, sy: f64, g: impl Fn(f64, f64) -> f64) -> f64 {
        self.integrate(sx, |x| self.integrate(sy, |y| g(x, y)))
    }
}

/// `∫∫ ψ_η² dz dt`, evaluated in light-cone coordinates (unit Jacobian).
pub fn norm_sq_quadrature(state: &SqueezedState, rule: &GaussHermite) -> f64 {
    let (su, sv) = (state.eta.exp(), (-state.eta).exp());
    rule.integrate_2d(su, sv, |u, v| state.psi_lightcone(u, v).powi(2))
}

/// `⟨φ_k(z) φ_k(t), ψ_η⟩` by quadrature.
pub fn overlap_quadrature(state: &SqueezedState, k: usize, rule: &GaussHermite) -> f64 {
    let e2 = (2.0 * state.eta).exp();
    let su = (2.0 / (1.0 + 1.0 / e2)).sqrt();
    let sv = (2.0 / (1.0 + e2)).sqrt();
    rule.integrate_2d(su, sv, |u, v| {
        let (z, t) = from_lightcone(u, v);
        hermite_function(k, z) * hermite_function(k, t) * state.psi_lightcone(u, v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_examples() {
        let s = SqueezedState::new(0.0).unwrap();
        assert!((psi(&s, 0.0, 0.0) - 0.564_189_583_547_756_3).abs() < 1e-15);
        for i in -10..=10 {
            for j in -10..=10 {
                let (z, t) = (0.3 * i as f64, 0.3 * j as f64);
                let ground = (-(z * z + t * t) / 2.0).exp() / PI.sqrt();
                assert!((psi(&s, z, t) - ground).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn level_sets_are_lightcone_ellipses() {
        let s = SqueezedState::new(1.0).unwrap();
        let a = 0.7;
        let (z1, t1) = from_lightcone(a * s.eta.exp(), 0.0);
        let (z2, t2) = from_lightcone(0.0, a * (-s.eta).exp());
        assert!((psi(&s, z1, t1) - psi(&s, z2, t2)).abs() < 1e-15);
    }

    #[test]
    fn boost_examples() {
        assert_eq!(lightcone_boost(0.0, 0.4, -1.2), (0.4, -1.2));
        let (u, v) = lightcone_boost(2f64.ln(), 1.0, 1.0);
        assert!((u - 2.0).abs() < 1e-15 && (v - 0.5).abs() < 1e-15);
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(expansion_coeff(0.0, 0).unwrap(), 1.0);
        assert_eq!(expansion_coeff(0.0, 3).unwrap(), 0.0);
        let total: f64 = (0..=40)
            .map(|k| expansion_coeff(1.0, k).unwrap().powi(2))
            .sum();
        // The tail beyond k = 40 is tanh(1)^82 ≈ 1e-10, so add it back analytically.
        assert!((total + truncation_residual(1.0, 40).powi(2) - 1.0).abs() < 1e-12);
        assert_eq!(expansion_coeff(-0.1, 1), Err(Error::NegativeRapidity(-0.1)));
    }

    #[test]
    fn quadrature_overlap_matches_coefficient() {
        let rule = GaussHermite::new(QUADRATURE_ORDER);
        let s = SqueezedState::new(0.8).unwrap();
        let q = overlap_quadrature(&s, 3, &rule);
        assert!((q - expansion_coeff(0.8, 3).unwrap()).abs() < 1e-6);
    }

    #[test]
    fn reconstruct_examples() {
        for (z, t) in [(0.0, 0.0), (1.2, -0.4), (-2.0, 2.5)] {
            let s = SqueezedState::new(0.0).unwrap();
            assert!((reconstruct(0.0, 5, z, t).unwrap() - psi(&s, z, t)).abs() < 1e-15);
        }
        let s = SqueezedState::new(0.5).unwrap();
        let mut worst: f64 = 0.0;
        for i in -12..=12 {
            for j in -12..=12 {
                let (z, t) = (0.25 * i as f64, 0.25 * j as f64);
                worst = worst.max((reconstruct(0.5, 12, z, t).unwrap() - psi(&s, z, t)).abs());
            }
        }
        assert!(worst < 1e-4, "{worst}");
    }

    #[test]
    fn gauss_hermite_integrates_gaussian_moments() {
        let rule = GaussHermite::new(QUADRATURE_ORDER);
        let m0 = rule.integrate(1.0, |x| (-x * x).exp());
        let m2 = rule.integrate(1.0, |x| x * x * (-x * x).exp());
        assert!((m0 - PI.sqrt()).abs() < 1e-13);
        assert!((m2 - PI.sqrt() / 2.0).abs() < 1e-13);
    }
}
