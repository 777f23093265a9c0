#![allow(dead_code)]

use lorentz_optics::{Mat2C, RayMatrix};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random SL(2,C) element: a complex matrix rescaled by √det.
pub fn random_sl2c(rng: &mut StdRng) -> Mat2C {
    loop {
        let mut z = || Complex64::new(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
        let m = Mat2C::new(z(), z(), z(), z());
        let det = m.det();
        if det.norm() > 0.2 {
            return m.scale(det.sqrt().inv());
        }
    }
}

/// Random real unimodular matrix as rotation · squeeze · rotation.
pub fn random_sp2(rng: &mut StdRng) -> RayMatrix {
    let a = rng.gen_range(-6.0..6.0);
    let g = rng.gen_range(-2.5..2.5);
    let b = rng.gen_range(-6.0..6.0);
    RayMatrix::rotation(a) * RayMatrix::squeeze(g) * RayMatrix::rotation(b)
}

pub fn sl2c_strategy() -> impl Strategy<Value = Mat2C> {
    proptest::array::uniform8(-1.5f64..1.5).prop_filter_map("near-singular", |v| {
        let m = Mat2C::new(
            Complex64::new(v[0], v[1]),
            Complex64::new(v[2], v[3]),
            Complex64::new(v[4], v[5]),
            Complex64::new(v[6], v[7]),
        );
        let det = m.det();
        (det.norm() > 0.2).then(|| m.scale(det.sqrt().inv()))
    })
}

pub fn sp2_strategy() -> impl Strategy<Value = RayMatrix> {
    (-6.0f64..6.0, -2.5f64..2.5, -6.0f64..6.0).prop_map(|(a, g, b)| {
        RayMatrix::rotation(a) * RayMatrix::squeeze(g) * RayMatrix::rotation(b)
    })
}

/// Repeated multiplication, the oracle for every closed-form power.
pub fn naive_power_ray(m: &RayMatrix, n: u32) -> RayMatrix {
    (0..n).fold(RayMatrix::identity(), |acc, _| acc * *m)
}

pub fn naive_power_c(m: &Mat2C, n: u32) -> Mat2C {
    (0..n).fold(Mat2C::identity(), |acc, _| acc * *m)
}
