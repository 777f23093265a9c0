//! Deterministic inputs shared by the benchmarks.

use lorentz_optics::RayMatrix;

/// A fixed set of unimodular ABCD matrices spread over all three conjugacy classes.
pub fn sample_ray_matrices(n: usize) -> Vec<RayMatrix> {
    (0..n)
        .map(|k| {
            let t = k as f64 / n.max(1) as f64;
            let (a, b, c) = (0.5 + 1.5 * t, 1.0 - 2.0 * t, -0.7 + t);
            // Solve for d so that ad − bc = 1.
            RayMatrix::new(a, b, c, (1.0 + b * c) / a)
        })
        .collect()
}
