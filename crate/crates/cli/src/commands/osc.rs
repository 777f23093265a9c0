use clap::Subcommand;
use lorentz_optics::oscillator::{
    expansion_coeff, norm_sq_quadrature, overlap_quadrature, reconstruct, truncation_residual,
    GaussHermite, SqueezedState, QUADRATURE_ORDER,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{self, Grid};
use crate::output::{Cell, Output, Table};
use crate::CliError;

#[derive(Debug, Clone, Subcommand)]
pub enum OscCmd {
    /// Squeezed ground state at one point, optionally with a truncated expansion.
    Psi {
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        eta: f64,
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        z: f64,
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        t: f64,
        /// Also sum the expansion through this order.
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Expansion coefficients c_k = tanh^k(eta)/cosh(eta).
    Coeffs {
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        eta: f64,
        #[arg(long, default_value_t = 20)]
        kmax: u32,
    },
    /// Quadrature overlaps against the closed-form coefficients.
    Overlaps {
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        eta: f64,
        #[arg(long, default_value_t = 10)]
        kmax: u32,
        /// Gauss-Hermite order.
        #[arg(long, default_value_t = QUADRATURE_ORDER)]
        order: usize,
    },
    /// L2 norm squared by quadrature.
    Norm {
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        eta: f64,
        #[arg(long, default_value_t = QUADRATURE_ORDER)]
        order: usize,
    },
    /// The state on a z-by-t grid.
    Grid {
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        eta: f64,
        #[arg(long, value_parser = args::grid, allow_hyphen_values = true)]
        z_grid: Grid,
        #[arg(long, value_parser = args::grid, allow_hyphen_values = true)]
        t_grid: Grid,
        #[arg(long)]
        kmax: Option<usize>,
    },
}

#[derive(Serialize)]
struct PsiReport {
    eta: f64,
    z: f64,
    t: f64,
    psi: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    partial_sum: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    truncation_residual: Option<f64>,
}

#[derive(Serialize)]
struct NormReport {
    eta: f64,
    order: usize,
    norm_sq: f64,
}

fn rule(order: usize) -> Result<GaussHermite, CliError> {
    if order == 0 {
        return Err(CliError::Usage("--order must be positive".into()));
    }
    Ok(GaussHermite::new(order))
}

pub fn run(cmd: &OscCmd) -> Result<Output, CliError> {
    Ok(match *cmd {
        OscCmd::Psi { eta, z, t, kmax } => {
            let state = SqueezedState::new(eta)?;
            let partial_sum = kmax.map(|k| reconstruct(eta, k, z, t)).transpose()?;
            Output::json(&PsiReport {
                eta,
                z,
                t,
                psi: state.psi(z, t),
                partial_sum,
                truncation_residual: kmax.map(|k| truncation_residual(eta, k)),
            })
        }
        OscCmd::Coeffs { eta, kmax } => {
            let mut table = Table::new(vec!["k", "c_k", "c_k_sq", "cumulative", "tail"]);
            let mut cumulative = 0.0;
            for k in 0..=kmax {
                let c = expansion_coeff(eta, k)?;
                cumulative += c * c;
                let tail = truncation_residual(eta, k as usize).powi(2);
                table.rows.push(vec![
                    k.into(),
                    c.into(),
                    (c * c).into(),
                    cumulative.into(),
                    tail.into(),
                ]);
            }
            Output::csv(table)
        }
        OscCmd::Overlaps { eta, kmax, order } => {
            let state = SqueezedState::new(eta)?;
            let rule = rule(order)?;
            let mut table = Table::new(vec!["k", "quadrature", "closed_form", "abs_diff"]);
            table.rows = (0..=kmax)
                .into_par_iter()
                .map(|k| {
                    let q = overlap_quadrature(&state, k as usize, &rule);
                    let c = expansion_coeff(eta, k)?;
                    Ok(vec![k.into(), q.into(), c.into(), (q - c).abs().into()])
                })
                .collect::<Result<_, CliError>>()?;
            Output::csv(table)
        }
        OscCmd::Norm { eta, order } => {
            let state = SqueezedState::new(eta)?;
            Output::json(&NormReport {
                eta,
                order,
                norm_sq: norm_sq_quadrature(&state, &rule(order)?),
            })
        }
        OscCmd::Grid {
            eta,
            z_grid,
            t_grid,
            kmax,
        } => {
            let state = SqueezedState::new(eta)?;
            let ts = t_grid.points();
            let points: Vec<(f64, f64)> = z_grid
                .points()
                .into_iter()
                .flat_map(|z| ts.iter().map(move |&t| (z, t)))
                .collect();
            let mut header = vec!["z", "t", "psi"];
            if kmax.is_some() {
                header.push("partial_sum");
            }
            let mut table = Table::new(header);
            table.rows = points
                .into_par_iter()
                .map(|(z, t)| {
                    let mut row: Vec<Cell> = vec![z.into(), t.into(), state.psi(z, t).into()];
                    if let Some(k) = kmax {
                        row.push(reconstruct(eta, k, z, t)?.into());
                    }
                    Ok(row)
                })
                .collect::<Result<_, CliError>>()?;
            Output::csv(table)
        }
    })
}
