use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lorentz_optics::decompositions::{bargmann, iwasawa, three_lens_synthesis};
use lorentz_optics::lens_cavity::{cavity_cycles, compose, OpticalElement};
use lorentz_optics::multilayer::{cycle_matrix, stack_closed_form, LayerCycle};
use lorentz_optics::oscillator::{
    overlap_quadrature, GaussHermite, SqueezedState, QUADRATURE_ORDER,
};
use lorentz_optics::sl2::{two_to_four, Elementary2};
use lorentz_optics_bench::sample_ray_matrices;

fn homomorphism(c: &mut Criterion) {
    let l = Elementary2::BoostX(0.7).matrix() * Elementary2::RotZ(1.1).matrix();
    c.bench_function("two_to_four", |b| b.iter(|| two_to_four(black_box(&l))));
}

fn optics(c: &mut Criterion) {
    let system: Vec<OpticalElement> = (0..100)
        .map(|i| {
            if i % 2 == 0 {
                OpticalElement::Gap {
                    z: 0.1 * f64::from(i % 7),
                }
            } else {
                OpticalElement::Lens {
                    f: 1.0 + f64::from(i % 5),
                }
            }
        })
        .collect();
    c.bench_function("compose_100", |b| b.iter(|| compose(black_box(&system))));
    c.bench_function("cavity_cycles_1e6", |b| {
        b.iter(|| cavity_cycles(black_box(1.3), black_box(1_000_000)))
    });
}

fn stacks(c: &mut Criterion) {
    let cycle = LayerCycle::new(0.4, 0.9, 0.3).unwrap();
    let w = cycle_matrix(&cycle).unwrap();
    let mut group = c.benchmark_group("stack");
    for n in [16u32, 256, 4096] {
        group.bench_with_input(BenchmarkId::new("closed_form", n), &n, |b, &n| {
            b.iter(|| stack_closed_form(black_box(&cycle), n))
        });
        group.bench_with_input(BenchmarkId::new("repeated_product", n), &n, |b, &n| {
            b.iter(|| {
                (0..n).fold(lorentz_optics::Mat2C::identity(), |acc, _| {
                    acc * black_box(w)
                })
            })
        });
    }
    group.finish();
}

fn decompositions(c: &mut Criterion) {
    let ms = sample_ray_matrices(256);
    c.bench_function("bargmann_256", |b| {
        b.iter(|| {
            ms.iter()
                .map(|m| bargmann(black_box(m)).unwrap().gamma)
                .sum::<f64>()
        })
    });
    c.bench_function("iwasawa_256", |b| {
        b.iter(|| {
            ms.iter()
                .map(|m| iwasawa(black_box(m)).unwrap().a)
                .sum::<f64>()
        })
    });
    c.bench_function("three_lens_synthesis_256", |b| {
        b.iter(|| {
            ms.iter()
                .map(|m| three_lens_synthesis(black_box(m)).unwrap().len())
                .sum::<usize>()
        })
    });
}

fn oscillator(c: &mut Criterion) {
    c.bench_function("gauss_hermite_64", |b| {
        b.iter(|| GaussHermite::new(black_box(QUADRATURE_ORDER)))
    });
    let rule = GaussHermite::new(QUADRATURE_ORDER);
    let state = SqueezedState::new(0.8).unwrap();
    c.bench_function("overlap_k10", |b| {
        b.iter(|| overlap_quadrature(&state, black_box(10), &rule))
    });
}

criterion_group!(
    benches,
    homomorphism,
    optics,
    stacks,
    decompositions,
    oscillator
);
criterion_main!(benches);
