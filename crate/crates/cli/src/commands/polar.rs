use clap::{Args, Subcommand};
use lorentz_optics::polarization::{
    classify, coherency_from_jones, decohered_rotation, invariant_mass_sq, mueller_of, purity,
    stokes_from_coherency, BeamElement, Classification, CoherencyMatrix, DecoherenceParams,
    JonesVector, StokesVector,
};
use lorentz_optics::{Mat2C, Mat4R};
use num_complex::Complex64;
use serde::Serialize;

use crate::args;
use crate::output::Output;
use crate::CliError;

#[derive(Debug, Clone, Subcommand)]
pub enum PolarCmd {
    /// Stokes vector of a Jones ensemble.
    Stokes(Ensemble),
    /// Coherency matrix of a Jones ensemble.
    Coherency(Ensemble),
    /// Classify a Stokes vector as pure, partial or random.
    Classify {
        /// S0,S1,S2,S3
        #[arg(long, value_parser = args::quad, allow_hyphen_values = true)]
        stokes: [f64; 4],
    },
    /// Jones and Mueller matrices of a two-beam element.
    Mueller {
        #[command(subcommand)]
        element: ElementArg,
    },
    /// Mueller matrix of a rotation seen through a decoherence boost.
    Decohere {
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        theta: f64,
        /// Decoherence parameter in [0, 1].
        #[arg(long, value_parser = args::finite, conflicts_with = "eta", required_unless_present = "eta")]
        alpha: Option<f64>,
        /// Rapidity, alpha = tanh(eta).
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        eta: Option<f64>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Ensemble {
    /// Jones vector re1,im1,re2,im2; repeat for a mixture.
    #[arg(long, value_parser = args::quad, required = true, allow_hyphen_values = true)]
    jones: Vec<[f64; 4]>,
    /// Mixture weight, one per --jones; equal weights by default.
    #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
    weight: Vec<f64>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum ElementArg {
    /// Rotation of the beam-split angle theta.
    BeamSplit {
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        theta: f64,
    },
    /// Relative phase shift phi.
    PhaseShift {
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        phi: f64,
    },
    /// Amplitude attenuation diag(e^-eta1, e^-eta2).
    Attenuate {
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        eta1: f64,
        #[arg(long, value_parser = args::finite, allow_hyphen_values = true)]
        eta2: f64,
    },
}

impl Ensemble {
    fn coherency(&self) -> Result<CoherencyMatrix, CliError> {
        let n = self.jones.len();
        let weights = if self.weight.is_empty() {
            vec![1.0 / n as f64; n]
        } else if self.weight.len() == n {
            self.weight.clone()
        } else {
            return Err(CliError::Usage(format!(
                "--weight given {} times for {n} Jones vectors",
                self.weight.len()
            )));
        };
        let members: Vec<(f64, JonesVector)> = weights
            .into_iter()
            .zip(&self.jones)
            .map(|(w, j)| {
                let v = JonesVector::new(Complex64::new(j[0], j[1]), Complex64::new(j[2], j[3]));
                (w, v)
            })
            .collect();
        Ok(coherency_from_jones(&members)?)
    }
}

#[derive(Serialize)]
struct CoherencyReport {
    matrix: Mat2C,
    trace: f64,
    det: f64,
    purity: f64,
    stokes: StokesVector,
}

#[derive(Serialize)]
struct ClassifyReport {
    stokes: StokesVector,
    invariant_mass_sq: f64,
    classification: Classification,
}

#[derive(Serialize)]
struct DecohereReport {
    theta: f64,
    alpha: f64,
    conjugated_angle: f64,
    mueller: Mat4R,
}

pub fn run(cmd: &PolarCmd) -> Result<Output, CliError> {
    Ok(match cmd {
        PolarCmd::Stokes(e) => Output::json(&stokes_from_coherency(&e.coherency()?)),
        PolarCmd::Coherency(e) => {
            let c = e.coherency()?;
            Output::json(&CoherencyReport {
                matrix: c.matrix(),
                trace: c.trace(),
                det: c.det(),
                purity: purity(&c)?,
                stokes: stokes_from_coherency(&c),
            })
        }
        PolarCmd::Classify { stokes } => {
            let s = StokesVector::new(stokes[0], stokes[1], stokes[2], stokes[3]);
            Output::json(&ClassifyReport {
                stokes: s,
                invariant_mass_sq: invariant_mass_sq(&s),
                classification: classify(&s)?,
            })
        }
        PolarCmd::Mueller { element } => {
            let e = match *element {
                ElementArg::BeamSplit { theta } => BeamElement::BeamSplit(theta),
                ElementArg::PhaseShift { phi } => BeamElement::PhaseShift(phi),
                ElementArg::Attenuate { eta1, eta2 } => BeamElement::Attenuate(eta1, eta2),
            };
            Output::json(&mueller_of(e)?)
        }
        PolarCmd::Decohere { theta, alpha, eta } => {
            let p = match (alpha, eta) {
                (Some(a), _) => DecoherenceParams::new(*theta, *a)?,
                (None, Some(e)) => DecoherenceParams::from_rapidity(*theta, *e)?,
                (None, None) => unreachable!("clap requires one of --alpha, --eta"),
            };
            Output::json(&DecohereReport {
                theta: p.theta,
                alpha: p.alpha,
                conjugated_angle: p.conjugated_angle(),
                mueller: decohered_rotation(&p)?,
            })
        }
    })
}
