pub mod cavity;
pub mod check;
pub mod decomp;
pub mod layers;
pub mod lens;
pub mod osc;
pub mod polar;

use lorentz_optics::RayMatrix;

pub(crate) fn ray(m: [f64; 4]) -> RayMatrix {
    RayMatrix::new(m[0], m[1], m[2], m[3])
}
