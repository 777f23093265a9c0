//! Invariant suite: each check reports its worst error against a tolerance.

use clap::Args;
use lorentz_optics::decompositions::{
    bargmann, iwasawa, symmetric_orthogonal, three_lens_synthesis,
};
use lorentz_optics::lens_cavity::{cavity_cycles, compose, one_lens_core};
use lorentz_optics::multilayer::{cycle_matrix, stack_closed_form, LayerCycle};
use lorentz_optics::oscillator::{
    expansion_coeff, norm_sq_quadrature, overlap_quadrature, GaussHermite, SqueezedState,
    QUADRATURE_ORDER,
};
use lorentz_optics::polarization::{
    coherency_from_jones, coherency_from_stokes, decohered_rotation, invariant_mass_sq,
    stokes_from_coherency, DecoherenceParams, JonesVector,
};
use lorentz_optics::sl2::{
    contract_generator, generator2, generator4, little_group_f1, little_group_f2, two_to_four,
    Contraction, Elementary4, Generator,
};
use lorentz_optics::{FourVector, Mat2C, Mat4C, RayMatrix};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::output::{Format, Output, Table};
use crate::CliError;

pub const CHECK_NAMES: [&str; 11] = [
    "commutators",
    "homomorphism",
    "stokes",
    "little-group",
    "contraction",
    "cavity",
    "decompositions",
    "multilayer",
    "oscillator-norm",
    "oscillator-overlaps",
    "synthesis",
];

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    /// Run every check.
    #[arg(long, conflicts_with = "names")]
    pub all: bool,
    /// Checks to run.
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(CHECK_NAMES))]
    pub names: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub max_error: f64,
    pub tolerance: f64,
}

impl CheckResult {
    pub fn pass(&self) -> bool {
        self.max_error <= self.tolerance
    }
}

pub struct Report {
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn failed(&self) -> usize {
        self.results.iter().filter(|r| !r.pass()).count()
    }

    pub fn output(&self) -> Output {
        let mut table = Table::new(vec!["name", "max_error", "tolerance", "pass"]);
        for r in &self.results {
            table.rows.push(vec![
                r.name.into(),
                r.max_error.into(),
                r.tolerance.into(),
                r.pass().into(),
            ]);
        }
        Output::Table {
            table,
            default: Format::Json,
        }
    }
}

pub fn run(a: &CheckArgs) -> Result<Report, CliError> {
    let names: Vec<&'static str> = if a.all {
        CHECK_NAMES.to_vec()
    } else if a.names.is_empty() {
        return Err(CliError::Usage(
            "name at least one check, or pass --all".into(),
        ));
    } else {
        CHECK_NAMES
            .iter()
            .copied()
            .filter(|n| a.names.iter().any(|m| m == n))
            .collect()
    };
    let results = names.into_par_iter().map(run_one).collect();
    Ok(Report { results })
}

pub fn run_one(name: &'static str) -> CheckResult {
    let (max_error, tolerance) = match name {
        "commutators" => (commutators(), 0.0),
        "homomorphism" => (homomorphism(), 1e-10),
        "stokes" => (stokes(), 1e-10),
        "little-group" => (little_group(), 1e-12),
        "contraction" => (contraction(), 1e-7),
        "cavity" => (cavity(), 1e-9),
        "decompositions" => (decompositions(), 1e-10),
        "multilayer" => (multilayer(), 1e-9),
        "oscillator-norm" => (oscillator_norm(), 1e-8),
        "oscillator-overlaps" => (oscillator_overlaps(), 1e-6),
        "synthesis" => (synthesis(), 1e-8),
        other => unreachable!("unknown check {other}"),
    };
    CheckResult {
        name,
        max_error,
        tolerance,
    }
}

fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn random_sl2c(r: &mut StdRng) -> Mat2C {
    loop {
        let mut z = || Complex64::new(r.gen_range(-1.5..1.5), r.gen_range(-1.5..1.5));
        let m = Mat2C::new(z(), z(), z(), z());
        let det = m.det();
        if det.norm() > 0.2 {
            return m.scale(det.sqrt().inv());
        }
    }
}

fn random_sp2(r: &mut StdRng) -> RayMatrix {
    RayMatrix::rotation(r.gen_range(-6.0..6.0))
        * RayMatrix::squeeze(r.gen_range(-2.5..2.5))
        * RayMatrix::rotation(r.gen_range(-6.0..6.0))
}

fn embed(m: Mat2C) -> Mat4C {
    let mut out = Mat4C::zero();
    out.0[0][0] = m.a;
    out.0[0][1] = m.b;
    out.0[1][0] = m.c;
    out.0[1][1] = m.d;
    out
}

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    ((j as f64 - i as f64) * (k as f64 - i as f64) * (k as f64 - j as f64)) / 2.0
}

fn commutators() -> f64 {
    let mut worst: f64 = 0.0;
    let reps: [fn(Generator) -> Mat4C; 2] = [|g| embed(generator2(g)), generator4];
    let i = Complex64::new(0.0, 1.0);
    for gen in reps {
        let j = Generator::ROTATIONS.map(gen);
        let k = Generator::BOOSTS.map(gen);
        for a in 0..3 {
            for b in 0..3 {
                let combo = |set: &[Mat4C; 3], sign: f64| {
                    (0..3).fold(Mat4C::zero(), |acc, c| {
                        acc + set[c].scale(i * sign * levi_civita(a, b, c))
                    })
                };
                worst = worst.max(j[a].commutator(&j[b]).max_abs_diff(&combo(&j, 1.0)));
                worst = worst.max(j[a].commutator(&k[b]).max_abs_diff(&combo(&k, 1.0)));
                worst = worst.max(k[a].commutator(&k[b]).max_abs_diff(&combo(&j, -1.0)));
            }
        }
        let (n1, n2, j3) = (gen(Generator::N1), gen(Generator::N2), gen(Generator::J3));
        worst = worst.max(n1.commutator(&n2).max_abs());
        worst = worst.max(j3.commutator(&n1).max_abs_diff(&n2.scale(i)));
        worst = worst.max(j3.commutator(&n2).max_abs_diff(&n1.scale(-i)));
    }
    let shear = lorentz_optics::decompositions::ShearGenSet::default().commutator_residuals();
    shear.into_iter().fold(worst, f64::max)
}

fn homomorphism() -> f64 {
    let mut r = rng(2);
    (0..200)
        .map(|_| {
            let (a, b) = (random_sl2c(&mut r), random_sl2c(&mut r));
            match (two_to_four(&(a * b)), two_to_four(&a), two_to_four(&b)) {
                (Ok(ab), Ok(ma), Ok(mb)) => ab.max_abs_diff(&(ma * mb)),
                _ => f64::INFINITY,
            }
        })
        .fold(0.0, f64::max)
}

fn stokes() -> f64 {
    let mut r = rng(3);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let mut c = || Complex64::new(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0));
        let (a, b) = (JonesVector::new(c(), c()), JonesVector::new(c(), c()));
        let w = r.gen_range(0.0..1.0);
        let g = random_sl2c(&mut r);
        let err = (|| -> lorentz_optics::Result<f64> {
            let coh = coherency_from_jones(&[(w, a), (1.0 - w, b)])?;
            let s = stokes_from_coherency(&coh);
            let round = coherency_from_stokes(&s)?
                .matrix()
                .max_abs_diff(&coh.matrix());
            let m2 = invariant_mass_sq(&s);
            let moved = invariant_mass_sq(&stokes_from_coherency(&coh.transform(&g)?));
            Ok(round
                .max((m2 - 4.0 * coh.det()).abs())
                .max((moved - m2).abs()))
        })();
        worst = worst.max(err.unwrap_or(f64::INFINITY));
    }
    worst
}

fn little_group() -> f64 {
    let k = FourVector::new(1.0, 1.0, 0.0, 0.0);
    let off = |p: FourVector| {
        let (a, b) = (p.to_array(), k.to_array());
        (0..4).map(|i| (a[i] - b[i]).abs()).fold(0.0, f64::max)
    };
    let mut worst: f64 = 0.0;
    for u in [-1.3, 0.4, 2.0] {
        worst = worst
            .max(off(little_group_f1(u).apply(k)))
            .max(off(little_group_f2(u).apply(k)))
            .max(off(Elementary4::RotS1(u).matrix().apply(k)));
    }
    for i in 0..13 {
        let theta = -3.0 + 0.5 * f64::from(i);
        for j in 0..10 {
            let p = DecoherenceParams::new(theta, 0.1 * f64::from(j)).expect("alpha in range");
            let eta = p.alpha.atanh();
            let triple = Elementary4::BoostS1(eta).matrix()
                * Elementary4::RotS3(p.conjugated_angle()).matrix()
                * Elementary4::BoostS1(-eta).matrix();
            let closed = decohered_rotation(&p).map_or(f64::INFINITY, |m| m.max_abs_diff(&triple));
            worst = worst.max(closed);
        }
    }
    worst
}

fn contraction() -> f64 {
    let pairs = [
        (Contraction::N1FromJ2, Generator::N1),
        (Contraction::N2FromJ1, Generator::N2),
    ];
    pairs
        .iter()
        .map(|&(c, g)| {
            contract_generator(c, 10.0).map_or(f64::INFINITY, |m| m.max_abs_diff(&generator4(g)))
        })
        .fold(0.0, f64::max)
}

fn cavity() -> f64 {
    let mut worst: f64 = 0.0;
    for i in 1..40 {
        let x = 0.05 * f64::from(i);
        let core = one_lens_core(x).expect("finite x");
        let mut brute = RayMatrix::identity();
        for n in 1..=64 {
            brute = core * core * brute;
            let closed =
                cavity_cycles(x, n).map_or(f64::INFINITY, |c| c.matrix.max_abs_diff(&brute));
            worst = worst.max(closed);
        }
    }
    worst
}

fn decompositions() -> f64 {
    let mut r = rng(7);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let m = random_sp2(&mut r);
        let scale = m.max_abs().max(1.0);
        let errs = [
            bargmann(&m).map(|f| f.reconstruct()),
            symmetric_orthogonal(&m).map(|f| f.symmetric * f.orthogonal),
            iwasawa(&m).map(|f| f.reconstruct()),
        ];
        for e in errs {
            worst = worst.max(e.map_or(f64::INFINITY, |p| p.max_abs_diff(&m) / scale));
        }
    }
    worst
}

fn multilayer() -> f64 {
    let mut r = rng(8);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let cyc = LayerCycle::new(
            r.gen_range(-2.0..2.0),
            r.gen_range(-7.0..7.0),
            r.gen_range(-7.0..7.0),
        )
        .expect("finite parameters");
        let w = cycle_matrix(&cyc).expect("valid cycle");
        let mut brute = Mat2C::identity();
        for n in 1..=64 {
            brute = brute * w;
            let err = stack_closed_form(&cyc, n).map_or(f64::INFINITY, |s| {
                s.matrix.max_abs_diff(&brute) / brute.max_abs().max(1.0)
            });
            worst = worst.max(err);
        }
    }
    worst
}

fn oscillator_norm() -> f64 {
    let rule = GaussHermite::new(QUADRATURE_ORDER);
    let mut worst: f64 = 0.0;
    for i in 0..=6 {
        let eta = 0.25 * f64::from(i);
        let state = SqueezedState::new(eta).expect("finite eta");
        worst = worst.max((norm_sq_quadrature(&state, &rule) - 1.0).abs());
        let total: f64 = (0..2000)
            .map(|k| expansion_coeff(eta, k).map_or(f64::NAN, |c| c * c))
            .sum();
        worst = worst.max((total - 1.0).abs());
    }
    worst
}

fn oscillator_overlaps() -> f64 {
    let rule = GaussHermite::new(QUADRATURE_ORDER);
    let mut worst: f64 = 0.0;
    for eta in [0.3, 0.8, 1.5] {
        let state = SqueezedState::new(eta).expect("finite eta");
        for k in 0..=10u32 {
            let q = overlap_quadrature(&state, k as usize, &rule);
            let c = expansion_coeff(eta, k).unwrap_or(f64::NAN);
            worst = worst.max((q - c).abs());
        }
    }
    worst
}

fn synthesis() -> f64 {
    let mut r = rng(10);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let m = random_sp2(&mut r);
        let err = three_lens_synthesis(&m).and_then(|sys| {
            let lenses = sys.iter().filter(|e| e.is_lens()).count();
            let residual = compose(&sys)?.max_abs_diff(&m);
            Ok(if lenses <= 3 { residual } else { f64::INFINITY })
        });
        worst = worst.max(err.unwrap_or(f64::INFINITY));
    }
    worst
}
