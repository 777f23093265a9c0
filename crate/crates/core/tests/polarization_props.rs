mod common;

use common::sl2c_strategy;
use lorentz_optics::polarization::{
    classify, coherency_from_jones, coherency_from_stokes, decohered_rotation, invariant_mass_sq,
    mueller_of, purity, stokes_from_coherency, BeamElement, CoherencyMatrix, DecoherenceParams,
    JonesVector, PolarizationClass, StokesVector,
};
use lorentz_optics::sl2::{two_to_four, Elementary4};
use lorentz_optics::Mat2C;
use num_complex::Complex64;
use proptest::prelude::*;

fn jones() -> impl Strategy<Value = JonesVector> {
    proptest::array::uniform4(-1.0f64..1.0)
        .prop_map(|v| JonesVector::new(Complex64::new(v[0], v[1]), Complex64::new(v[2], v[3])))
}

/// Mixed states as a two-member ensemble.
fn coherency() -> impl Strategy<Value = CoherencyMatrix> {
    (0.0f64..1.0, jones(), jones())
        .prop_map(|(w, a, b)| coherency_from_jones(&[(w, a), (1.0 - w, b)]).unwrap())
}

proptest! {
    #[test]
    fn stokes_coherency_round_trip(c in coherency()) {
        let s = stokes_from_coherency(&c);
        let back = coherency_from_stokes(&s).unwrap();
        prop_assert!(back.matrix().max_abs_diff(&c.matrix()) < 1e-14);
        let s2 = stokes_from_coherency(&back);
        for (a, b) in s.to_array().iter().zip(s2.to_array()) {
            prop_assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn mass_is_four_det(c in coherency()) {
        let s = stokes_from_coherency(&c);
        prop_assert!((invariant_mass_sq(&s) - 4.0 * c.det()).abs() < 1e-14);
        prop_assert!(invariant_mass_sq(&s) >= -1e-10);
    }

    #[test]
    fn unimodular_transformations_keep_mass(c in coherency(), g in sl2c_strategy()) {
        let s = stokes_from_coherency(&c);
        let moved = c.transform(&g).unwrap();
        let m2 = invariant_mass_sq(&stokes_from_coherency(&moved));
        let scale = g.max_abs().max(1.0).powi(4);
        prop_assert!((m2 - invariant_mass_sq(&s)).abs() < 1e-10 * scale);
        // The Mueller image acts on the Stokes vector the same way.
        let via = s.transform(&two_to_four(&g).unwrap());
        let direct = stokes_from_coherency(&moved);
        for (a, b) in via.to_array().iter().zip(direct.to_array()) {
            prop_assert!((a - b).abs() < 1e-10 * scale);
        }
    }

    #[test]
    fn pure_states_stay_pure(psi in jones(), g in sl2c_strategy()) {
        prop_assume!(psi.intensity() > 1e-3);
        let n = psi.intensity().sqrt().recip();
        let psi = JonesVector::new(psi.psi1 * n, psi.psi2 * n);
        let c = coherency_from_jones(&[(1.0, psi)]).unwrap();
        let moved = c.transform(&g).unwrap();
        prop_assert!(moved.det().abs() < 1e-12 * g.max_abs().max(1.0).powi(4));
    }

    #[test]
    fn purity_range_and_rotation_invariance(c in coherency(), theta in -6.0f64..6.0) {
        prop_assume!(c.trace() > 1e-6);
        let p = purity(&c).unwrap();
        prop_assert!((0.5 - 1e-12..=1.0 + 1e-12).contains(&p));
        let r = mueller_of(BeamElement::BeamSplit(theta)).unwrap().jones;
        let q = purity(&c.transform(&r).unwrap()).unwrap();
        prop_assert!((p - q).abs() < 1e-12);
    }

    #[test]
    fn classification_is_scale_invariant(c in coherency(), k in 0.01f64..100.0) {
        let s = stokes_from_coherency(&c);
        prop_assume!(s.s0 > 1e-6);
        let scaled = StokesVector::new(k * s.s0, k * s.s1, k * s.s2, k * s.s3);
        let a = classify(&s).unwrap().class;
        let b = classify(&scaled).unwrap().class;
        prop_assert_eq!(std::mem::discriminant(&a), std::mem::discriminant(&b));
    }

    #[test]
    fn beam_splitter_group_law(a in -6.0f64..6.0, b in -6.0f64..6.0) {
        let m = |t| mueller_of(BeamElement::BeamSplit(t)).unwrap();
        prop_assert!((m(a).jones * m(b).jones).max_abs_diff(&m(a + b).jones) < 1e-14);
        prop_assert!((m(a).mueller * m(b).mueller).max_abs_diff(&m(a + b).mueller) < 1e-13);
        prop_assert!(m(a).mueller.max_abs_diff(&Elementary4::RotS3(a).matrix()) < 1e-14);
    }

    #[test]
    fn decohered_rotation_is_a_conjugated_rotation(theta in -3.0f64..3.0, alpha in 0.0f64..0.999) {
        let p = DecoherenceParams::new(theta, alpha).unwrap();
        let eta = alpha.atanh();
        let triple = Elementary4::BoostS1(eta).matrix()
            * Elementary4::RotS3(p.conjugated_angle()).matrix()
            * Elementary4::BoostS1(-eta).matrix();
        let closed = decohered_rotation(&p).unwrap();
        let scale = triple.max_abs();
        prop_assert!(closed.max_abs_diff(&triple) < 1e-12 * scale.max(1.0));
        prop_assert!(closed.minkowski_residual() < 1e-10 * scale * scale);
    }
}

#[test]
fn boosted_random_state_approaches_pure_state() {
    let eta = 8.0;
    let s = StokesVector::new(1.0, 0.0, 0.0, 0.0).transform(&Elementary4::BoostS1(eta).matrix());
    let normalized = StokesVector::new(1.0, s.s1 / s.s0, s.s2 / s.s0, s.s3 / s.s0);
    let gap = (normalized.s1 - 1.0).abs();
    assert!(gap <= 2.0 * (-2.0 * eta).exp());
    // The state is still partial: the determinant obstruction survives any finite boost.
    assert!(matches!(
        classify(&s).unwrap().class,
        PolarizationClass::Partial { .. }
    ));
}

#[test]
fn random_state_is_fixed_by_all_rotations() {
    let random = CoherencyMatrix::new(Mat2C::from_real(0.5, 0.0, 0.0, 0.5)).unwrap();
    for theta in [0.3, 1.7, -2.9] {
        let r = mueller_of(BeamElement::BeamSplit(theta)).unwrap().jones;
        let moved = random.transform(&r).unwrap();
        assert!(moved.matrix().max_abs_diff(&random.matrix()) < 1e-15);
    }
}
