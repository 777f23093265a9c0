use clap::Subcommand;
use lorentz_optics::decompositions::{
    bargmann, conjugate_real, iwasawa, iwasawa_constraint, symmetric_orthogonal, BargmannFactors,
    IwasawaFactors, SymmetricOrthogonal,
};
use lorentz_optics::multilayer::{cycle_matrix, LayerCycle};
use lorentz_optics::{Mat2C, RayMatrix};
use serde::Serialize;

use super::ray;
use crate::args;
use crate::output::Output;
use crate::CliError;

#[derive(Debug, Clone, Subcommand)]
pub enum DecompCmd {
    /// Rotation, squeeze, rotation.
    Bargmann(MatrixArg),
    /// Symmetric positive definite times rotation.
    Polar(MatrixArg),
    /// Rotation, diagonal, unit upper triangular.
    Iwasawa(MatrixArg),
    /// Boost making the Iwasawa form lower triangular at angle theta.
    Constraint {
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        theta: f64,
    },
    /// Real conjugate of a multilayer cycle matrix.
    Real {
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        eta: f64,
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        phi1: f64,
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        phi2: f64,
    },
}

#[derive(Debug, Clone, clap::Args)]
pub struct MatrixArg {
    /// Row-major a,b,c,d with ad - bc = 1.
    #[arg(long, value_parser = args::matrix2, allow_hyphen_values = true)]
    m: [f64; 4],
}

#[derive(Serialize)]
struct Factored<T: Serialize> {
    input: RayMatrix,
    factors: T,
    residual: f64,
}

#[derive(Serialize)]
struct ConstraintReport {
    theta: f64,
    eta: f64,
    matrix: RayMatrix,
}

#[derive(Serialize)]
struct RealReport {
    cycle: LayerCycle,
    complex: Mat2C,
    real: RayMatrix,
}

fn factored<T: Serialize>(input: RayMatrix, factors: T, product: RayMatrix) -> Output {
    Output::json(&Factored {
        input,
        factors,
        residual: product.max_abs_diff(&input),
    })
}

pub fn run(cmd: &DecompCmd) -> Result<Output, CliError> {
    Ok(match cmd {
        DecompCmd::Bargmann(a) => {
            let m = ray(a.m);
            let f: BargmannFactors = bargmann(&m)?;
            factored(m, f, f.reconstruct())
        }
        DecompCmd::Polar(a) => {
            let m = ray(a.m);
            let f: SymmetricOrthogonal = symmetric_orthogonal(&m)?;
            factored(m, f, f.symmetric * f.orthogonal)
        }
        DecompCmd::Iwasawa(a) => {
            let m = ray(a.m);
            let f: IwasawaFactors = iwasawa(&m)?;
            factored(m, f, f.reconstruct())
        }
        DecompCmd::Constraint { theta } => {
            let (eta, matrix) = iwasawa_constraint(*theta)?;
            Output::json(&ConstraintReport {
                theta: *theta,
                eta,
                matrix,
            })
        }
        DecompCmd::Real { eta, phi1, phi2 } => {
            let cycle = LayerCycle::new(*eta, *phi1, *phi2)?;
            let complex = cycle_matrix(&cycle)?;
            Output::json(&RealReport {
                cycle,
                complex,
                real: conjugate_real(&complex)?,
            })
        }
    })
}
