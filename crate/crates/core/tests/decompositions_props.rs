mod common;

use common::{random_sp2, rng, sp2_strategy};
use lorentz_optics::decompositions::{
    bargmann, conjugate_complex, conjugate_real, iwasawa, symmetric_orthogonal,
    three_lens_synthesis, ShearGenSet, SYNTHESIS_TOL,
};
use lorentz_optics::lens_cavity::{compose, OpticalElement};
use lorentz_optics::sl2::Elementary2;
use lorentz_optics::RayMatrix;
use proptest::prelude::*;
use std::f64::consts::PI;

fn tol(m: &RayMatrix) -> f64 {
    1e-10 * m.max_abs().max(1.0)
}

proptest! {
    #[test]
    fn bargmann_reconstructs(m in sp2_strategy()) {
        let f = bargmann(&m).unwrap();
        prop_assert!(f.reconstruct().max_abs_diff(&m) < tol(&m));
        prop_assert!(f.gamma >= 0.0);
        prop_assert!(f.beta > -PI && f.beta <= PI);
        prop_assert!(f.alpha > -2.0 * PI && f.alpha <= 2.0 * PI);
    }

    #[test]
    fn polar_split_agrees_with_bargmann(m in sp2_strategy()) {
        let so = symmetric_orthogonal(&m).unwrap();
        let s = so.symmetric;
        let o = so.orthogonal;
        prop_assert_eq!(s.b, s.c);
        prop_assert!(s.a > 0.0 && s.det() > 0.0);
        prop_assert!((o * o.transpose()).max_abs_diff(&RayMatrix::identity()) < 1e-12 * m.max_abs());
        prop_assert!((s * o).max_abs_diff(&m) < tol(&m));
        // Second route: S = R(α) D(γ) R(−α), O = R(α + β).
        let f = bargmann(&m).unwrap();
        let s2 = RayMatrix::rotation(f.alpha) * RayMatrix::squeeze(f.gamma) * RayMatrix::rotation(-f.alpha);
        let o2 = RayMatrix::rotation(f.alpha + f.beta);
        prop_assert!(s.max_abs_diff(&s2) < tol(&m));
        prop_assert!(o.max_abs_diff(&o2) < tol(&m));
    }

    #[test]
    fn iwasawa_factors_have_canonical_shape(m in sp2_strategy()) {
        let f = iwasawa(&m).unwrap();
        prop_assert!(f.a > 0.0);
        prop_assert!(f.k_angle > -PI && f.k_angle <= PI);
        let k = f.k();
        prop_assert!((k * k.transpose()).max_abs_diff(&RayMatrix::identity()) < 1e-12);
        let n = f.n_matrix();
        prop_assert_eq!((n.a, n.c, n.d), (1.0, 0.0, 1.0));
        prop_assert!(f.reconstruct().max_abs_diff(&m) < tol(&m));
    }

    #[test]
    fn conjugation_round_trips(m in sp2_strategy()) {
        let w = conjugate_complex(&m);
        let back = conjugate_real(&w).unwrap();
        prop_assert!(back.max_abs_diff(&m) < 1e-12 * m.max_abs().max(1.0));
        // W is in SU(1,1): [[a, b], [b*, a*]].
        prop_assert!((w.d - w.a.conj()).norm() < 1e-12 * m.max_abs());
        prop_assert!((w.c - w.b.conj()).norm() < 1e-12 * m.max_abs());
    }

    #[test]
    fn su11_chains_conjugate_to_real(phi in -7.0f64..7.0, eta in -3.0f64..3.0, xi in -7.0f64..7.0) {
        let w = Elementary2::RotZ(phi).matrix() * Elementary2::BoostX(eta).matrix() * Elementary2::RotZ(xi).matrix();
        let v = conjugate_real(&w).unwrap();
        let expected = RayMatrix::rotation(phi) * RayMatrix::squeeze(eta) * RayMatrix::rotation(xi);
        prop_assert!(v.max_abs_diff(&expected) < 1e-12 * expected.max_abs());
    }

    #[test]
    fn shear_generators_make_real_unimodular_matrices(c in proptest::array::uniform3(-2.0f64..2.0)) {
        let m = ShearGenSet::default().generate(c);
        prop_assert!((m.det() - 1.0).abs() < 1e-12 * m.max_abs().max(1.0).powi(2));
    }

    #[test]
    fn synthesis_reproduces_target(m in sp2_strategy()) {
        let system = three_lens_synthesis(&m).unwrap();
        prop_assert!(system.iter().filter(|e| e.is_lens()).count() <= 3);
        prop_assert!(system.len() <= 6);
        for e in &system {
            if let OpticalElement::Gap { z } = e {
                prop_assert!(*z >= 0.0);
            }
        }
        prop_assert!(compose(&system).unwrap().max_abs_diff(&m) <= SYNTHESIS_TOL);
    }
}

#[test]
fn decompositions_over_two_hundred_random_elements() {
    let mut r = rng(11);
    for _ in 0..200 {
        let m = random_sp2(&mut r);
        assert!(bargmann(&m).unwrap().reconstruct().max_abs_diff(&m) < tol(&m));
        let so = symmetric_orthogonal(&m).unwrap();
        assert!((so.symmetric * so.orthogonal).max_abs_diff(&m) < tol(&m));
        assert!(iwasawa(&m).unwrap().reconstruct().max_abs_diff(&m) < tol(&m));
    }
}

#[test]
fn shear_products_are_additive() {
    let set = ShearGenSet::default();
    for (u1, u2) in [(0.3, 1.1), (-2.0, 0.7)] {
        let a = set.generate([u1, 0.0, 0.0]) * set.generate([u2, 0.0, 0.0]);
        assert_eq!(a, set.generate([u1 + u2, 0.0, 0.0]));
    }
}
