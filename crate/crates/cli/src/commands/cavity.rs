use clap::Args;
use lorentz_optics::lens_cavity::{cavity_cycles, CavityCycles, CoreClassification};
use rayon::prelude::*;

use crate::args::{self, Grid};
use crate::output::{Cell, Output, Table};
use crate::CliError;

#[derive(Debug, Clone, Args)]
pub struct CavityArgs {
    /// Mirror spacing over focal length, z/f.
    #[arg(long, value_parser = args::finite, allow_hyphen_values = true, required_unless_present = "x_grid")]
    pub x: Option<f64>,
    /// Sweep x over start:stop:count.
    #[arg(long, value_parser = args::grid, allow_hyphen_values = true, conflicts_with = "x")]
    pub x_grid: Option<Grid>,
    /// Number of round trips.
    #[arg(long, default_value_t = 1)]
    pub cycles: u32,
}

fn row(c: &CavityCycles) -> Vec<Cell> {
    let (kind, eta, angle) = match c.class {
        CoreClassification::Elliptic { eta, phi } => ("elliptic", eta, phi),
        CoreClassification::Hyperbolic { eta, chi, negated } => (
            if negated {
                "hyperbolic_negated"
            } else {
                "hyperbolic"
            },
            eta,
            chi,
        ),
        CoreClassification::Parabolic { .. } => ("parabolic", f64::NAN, f64::NAN),
    };
    let m = c.matrix;
    vec![
        c.x.into(),
        c.cycles.into(),
        kind.into(),
        c.stable.into(),
        c.core_trace.into(),
        eta.into(),
        angle.into(),
        m.a.into(),
        m.b.into(),
        m.c.into(),
        m.d.into(),
    ]
}

pub fn run(a: &CavityArgs) -> Result<Output, CliError> {
    if let Some(x) = a.x {
        return Ok(Output::json(&cavity_cycles(x, a.cycles)?));
    }
    let grid = a.x_grid.expect("clap requires --x or --x-grid");
    let rows = grid
        .points()
        .into_par_iter()
        .map(|x| cavity_cycles(x, a.cycles).map(|c| row(&c)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut table = Table::new(vec![
        "x",
        "cycles",
        "class",
        "stable",
        "core_trace",
        "eta",
        "angle",
        "a",
        "b",
        "c",
        "d",
    ]);
    table.rows = rows;
    Ok(Output::csv(table))
}
