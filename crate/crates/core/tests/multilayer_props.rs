mod common;

use common::naive_power_c;
use lorentz_optics::decompositions::conjugate_real;
use lorentz_optics::multilayer::{
    cycle_matrix, s_matrix_apply, stack_closed_form, LayerCycle, StackForm,
};
use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::PI;

fn cycle() -> impl Strategy<Value = LayerCycle> {
    (-2.0f64..2.0, -7.0f64..7.0, -7.0f64..7.0)
        .prop_map(|(e, a, b)| LayerCycle::new(e, a, b).unwrap())
}

proptest! {
    #[test]
    fn cycle_is_unimodular(c in cycle()) {
        let w = cycle_matrix(&c).unwrap();
        prop_assert!((w.det() - Complex64::new(1.0, 0.0)).norm() < 1e-13 * w.max_abs().max(1.0).powi(2));
    }

    #[test]
    fn closed_form_matches_power(c in cycle(), k in 0u32..=6) {
        let n = 1u32 << k;
        let r = stack_closed_form(&c, n).unwrap();
        let brute = naive_power_c(&cycle_matrix(&c).unwrap(), n);
        let scale = brute.max_abs().max(1.0);
        prop_assert!(r.matrix.max_abs_diff(&brute) < 1e-9 * scale, "{:?}", r.form);
    }

    #[test]
    fn energy_is_conserved(c in cycle(), n in 1u32..20) {
        let w = stack_closed_form(&c, n).unwrap().matrix;
        let resp = s_matrix_apply(&w, Complex64::new(1.0, 0.0)).unwrap();
        prop_assert!((resp.r.norm_sqr() + resp.t.norm_sqr() - 1.0).abs() < 1e-9);
    }
}

#[test]
fn conjugated_cycle_is_real_on_grid() {
    for i in 0..10 {
        for j in 0..10 {
            for k in 0..10 {
                let c = LayerCycle::new(
                    -2.0 + 0.4 * i as f64,
                    2.0 * PI * j as f64 / 10.0,
                    2.0 * PI * k as f64 / 10.0,
                )
                .unwrap();
                assert!(conjugate_real(&cycle_matrix(&c).unwrap()).is_ok());
            }
        }
    }
}

#[test]
fn elliptic_stacks_stay_bounded() {
    for (eta, p1, p2) in [(0.3, PI / 4.0, PI / 4.0), (1.0, 0.5, 0.2), (-0.7, 2.0, 1.0)] {
        let c = LayerCycle::new(eta, p1, p2).unwrap();
        let r = stack_closed_form(&c, 1).unwrap();
        let StackForm::Elliptic { mu, .. } = r.form else {
            panic!("{:?}", r.form);
        };
        let bound = (2.0 * mu).cosh() + 1.0;
        let w = cycle_matrix(&c).unwrap();
        let mut power = w;
        for n in 1..=1024u32 {
            let closed = stack_closed_form(&c, n).unwrap().matrix;
            assert!(closed.max_abs() <= bound);
            assert!(closed.max_abs() <= mu.abs().exp() * (1.0 + 1e-9));
            if n.is_power_of_two() {
                assert!(closed.max_abs_diff(&power) < 1e-9 * n as f64);
            }
            power = power * w;
        }
    }
}
