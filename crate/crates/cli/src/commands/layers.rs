use std::path::PathBuf;

use clap::{Args, Subcommand};
use lorentz_optics::multilayer::{
    eta_from_reflectance, parse_layer_spec, s_matrix_apply, stack_closed_form, LayerCycle,
    SResponse, StackForm,
};
use lorentz_optics::Mat2C;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{self, Grid};
use crate::output::{Cell, Output, Table};
use crate::CliError;

#[derive(Debug, Clone, Subcommand)]
pub enum LayersCmd {
    /// W^N for N identical cycles.
    Stack {
        #[command(flatten)]
        cycle: CycleArgs,
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        phi1: f64,
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        phi2: f64,
        #[arg(long, default_value_t = 1)]
        cycles: u32,
    },
    /// Sweep the phases of an N-cycle stack.
    Sweep {
        #[command(flatten)]
        cycle: CycleArgs,
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true, required_unless_present = "phi1_grid")]
        phi1: Option<f64>,
        #[arg(long, value_parser = args::grid, allow_hyphen_values = true, conflicts_with = "phi1")]
        phi1_grid: Option<Grid>,
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true, required_unless_present = "phi2_grid")]
        phi2: Option<f64>,
        #[arg(long, value_parser = args::grid, allow_hyphen_values = true, conflicts_with = "phi2")]
        phi2_grid: Option<Grid>,
        #[arg(long, default_value_t = 1)]
        cycles: u32,
    },
    /// Evaluate every line of a layer-spec file (`eta phi1 phi2 N`).
    File { path: PathBuf },
    /// Incoming and reflected amplitudes for a transmitted amplitude.
    Smatrix {
        #[command(flatten)]
        cycle: CycleArgs,
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        phi1: f64,
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        phi2: f64,
        #[arg(long, default_value_t = 1)]
        cycles: u32,
        /// Transmitted amplitude re,im.
        #[arg(long, value_parser = args::complex, allow_hyphen_values = true, default_value = "1,0")]
        psi3: Complex64,
    },
}

/// Boundary parameter, given directly or through an amplitude reflectance.
#[derive(Debug, Clone, Args)]
pub struct CycleArgs {
    #[arg(long, value_parser = args::finite, allow_hyphen_values = true, required_unless_present = "reflectance")]
    eta: Option<f64>,
    /// Amplitude reflectance rho in (-1, 1); eta = ln((1 + rho)/(1 - rho)).
    #[arg(long, value_parser = args::finite, allow_hyphen_values = true, conflicts_with = "eta")]
    reflectance: Option<f64>,
}

impl CycleArgs {
    fn eta(&self) -> Result<f64, CliError> {
        match (self.eta, self.reflectance) {
            (Some(e), _) => Ok(e),
            (None, Some(r)) => Ok(eta_from_reflectance(r)?),
            (None, None) => unreachable!("clap requires --eta or --reflectance"),
        }
    }
}

fn form_name(f: &StackForm) -> &'static str {
    match f {
        StackForm::Elliptic { .. } => "elliptic",
        StackForm::Hyperbolic { negated: false, .. } => "hyperbolic",
        StackForm::Hyperbolic { negated: true, .. } => "hyperbolic_negated",
        StackForm::Parabolic => "parabolic",
    }
}

/// `|t|² = 1/|A|²` and `|r|² = |C/A|²`.
fn intensities(w: &Mat2C) -> (f64, f64) {
    let a2 = w.a.norm_sqr();
    (1.0 / a2, w.c.norm_sqr() / a2)
}

#[derive(Serialize)]
struct StackReport {
    cycle: LayerCycle,
    cycles: u32,
    form: StackForm,
    growth_per_cycle: f64,
    bounded: bool,
    brute_force: bool,
    transmittance: f64,
    reflectance: f64,
    matrix: Mat2C,
}

#[derive(Serialize)]
struct SReport {
    cycle: LayerCycle,
    cycles: u32,
    response: SResponse,
}

const SWEEP_HEADER: [&str; 7] = [
    "phi1",
    "phi2",
    "form",
    "growth_per_cycle",
    "abs_a",
    "transmittance",
    "reflectance",
];

fn sweep_row(c: &LayerCycle, n: u32) -> Result<Vec<Cell>, CliError> {
    let s = stack_closed_form(c, n)?;
    let (t, r) = intensities(&s.matrix);
    Ok(vec![
        c.phi1.into(),
        c.phi2.into(),
        form_name(&s.form).into(),
        s.form.growth_per_cycle().into(),
        s.matrix.a.norm().into(),
        t.into(),
        r.into(),
    ])
}

fn axis(value: Option<f64>, grid: Option<Grid>) -> Vec<f64> {
    grid.unwrap_or_else(|| Grid::single(value.expect("clap requires a value or a grid")))
        .points()
}

pub fn run(cmd: &LayersCmd) -> Result<Output, CliError> {
    Ok(match cmd {
        LayersCmd::Stack {
            cycle,
            phi1,
            phi2,
            cycles,
        } => {
            let c = LayerCycle::new(cycle.eta()?, *phi1, *phi2)?;
            let s = stack_closed_form(&c, *cycles)?;
            let (transmittance, reflectance) = intensities(&s.matrix);
            Output::json(&StackReport {
                cycle: c,
                cycles: *cycles,
                form: s.form,
                growth_per_cycle: s.form.growth_per_cycle(),
                bounded: s.form.is_bounded(),
                brute_force: s.brute_force,
                transmittance,
                reflectance,
                matrix: s.matrix,
            })
        }
        LayersCmd::Sweep {
            cycle,
            phi1,
            phi1_grid,
            phi2,
            phi2_grid,
            cycles,
        } => {
            let eta = cycle.eta()?;
            let p2 = axis(*phi2, *phi2_grid);
            let points: Vec<(f64, f64)> = axis(*phi1, *phi1_grid)
                .into_iter()
                .flat_map(|a| p2.iter().map(move |&b| (a, b)))
                .collect();
            let mut table = Table::new(SWEEP_HEADER.to_vec());
            table.rows = points
                .into_par_iter()
                .map(|(a, b)| sweep_row(&LayerCycle::new(eta, a, b)?, *cycles))
                .collect::<Result<_, _>>()?;
            Output::csv(table)
        }
        LayersCmd::File { path } => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
                path: path.clone(),
                source: e,
            })?;
            let specs = parse_layer_spec(&text)?;
            let mut header = vec!["eta", "cycles"];
            header.extend(SWEEP_HEADER);
            let mut table = Table::new(header);
            table.rows = specs
                .par_iter()
                .map(|s| {
                    let mut row = vec![s.cycle.eta.into(), s.cycles.into()];
                    row.extend(sweep_row(&s.cycle, s.cycles)?);
                    Ok(row)
                })
                .collect::<Result<_, CliError>>()?;
            Output::csv(table)
        }
        LayersCmd::Smatrix {
            cycle,
            phi1,
            phi2,
            cycles,
            psi3,
        } => {
            let c = LayerCycle::new(cycle.eta()?, *phi1, *phi2)?;
            let s = stack_closed_form(&c, *cycles)?;
            Output::json(&SReport {
                cycle: c,
                cycles: *cycles,
                response: s_matrix_apply(&s.matrix, *psi3)?,
            })
        }
    })
}
