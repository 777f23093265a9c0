use clap::Subcommand;
use lorentz_optics::decompositions::three_lens_synthesis;
use lorentz_optics::lens_cavity::{compose, OpticalElement};
use lorentz_optics::RayMatrix;
use serde::Serialize;

use super::ray;
use crate::args;
use crate::output::Output;
use crate::CliError;

#[derive(Debug, Clone, Subcommand)]
pub enum LensCmd {
    /// System matrix of an element list, first element acting first.
    Compose {
        /// Comma-separated elements, e.g. gap:1,lens:0.5,gap:1
        #[arg(long, value_delimiter = ',', value_parser = args::element, required = true, allow_hyphen_values = true)]
        system: Vec<OpticalElement>,
    },
    /// Lens-and-gap system realizing a real unimodular matrix.
    Synth {
        /// Row-major a,b,c,d
        #[arg(long, value_parser = args::matrix2, allow_hyphen_values = true)]
        m: [f64; 4],
    },
}

#[derive(Serialize)]
struct ComposeReport {
    matrix: RayMatrix,
    det: f64,
    trace: f64,
}

#[derive(Serialize)]
struct SynthReport<'a> {
    elements: &'a [OpticalElement],
    lens_count: usize,
    matrix: RayMatrix,
    residual: f64,
}

pub fn run(cmd: &LensCmd) -> Result<Output, CliError> {
    Ok(match cmd {
        LensCmd::Compose { system } => {
            let m = compose(system)?;
            Output::json(&ComposeReport {
                matrix: m,
                det: m.det(),
                trace: m.trace(),
            })
        }
        LensCmd::Synth { m } => {
            let target = ray(*m);
            let elements = three_lens_synthesis(&target)?;
            let matrix = compose(&elements)?;
            Output::json(&SynthReport {
                elements: &elements,
                lens_count: elements.iter().filter(|e| e.is_lens()).count(),
                matrix,
                residual: matrix.max_abs_diff(&target),
            })
        }
    })
}
