//! Value parsers for numeric flags. Every float is checked finite here, so a
//! NaN or infinity on the command line is a usage error.

use lorentz_optics::lens_cavity::OpticalElement;
use num_complex::Complex64;

pub fn finite(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("`{s}` is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

pub fn finite_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',').map(finite).collect()
}

fn fixed<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let v = finite_list(s)?;
    v.try_into()
        .map_err(|v: Vec<f64>| format!("expected {N} comma-separated values, got {}", v.len()))
}

/// Row-major `a,b,c,d`.
pub fn matrix2(s: &str) -> Result<[f64; 4], String> {
    fixed::<4>(s)
}

pub fn quad(s: &str) -> Result<[f64; 4], String> {
    fixed::<4>(s)
}

pub fn pair(s: &str) -> Result<[f64; 2], String> {
    fixed::<2>(s)
}

pub fn complex(s: &str) -> Result<Complex64, String> {
    let [re, im] = fixed::<2>(s)?;
    Ok(Complex64::new(re, im))
}

/// `start:stop:count`, inclusive at both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Grid {
    pub fn single(v: f64) -> Self {
        Self {
            start: v,
            stop: v,
            count: 1,
        }
    }

    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.stop
                } else {
                    self.start + step * i as f64
                }
            })
            .collect()
    }
}

pub fn grid(s: &str) -> Result<Grid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [start, stop, count] = parts[..] else {
        return Err(format!("`{s}`: expected start:stop:count"));
    };
    let count: usize = count
        .trim()
        .parse()
        .map_err(|_| format!("`{count}` is not a point count"))?;
    if count == 0 {
        return Err("grid needs at least one point".into());
    }
    Ok(Grid {
        start: finite(start)?,
        stop: finite(stop)?,
        count,
    })
}

/// `lens:F` or `gap:Z`. Domain checks (zero focal length, negative gap)
/// are left to the library.
pub fn element(s: &str) -> Result<OpticalElement, String> {
    let (kind, value) = s
        .split_once(':')
        .ok_or_else(|| format!("`{s}`: expected lens:F or gap:Z"))?;
    let v = finite(value)?;
    match kind.trim() {
        "lens" => Ok(OpticalElement::Lens { f: v }),
        "gap" => Ok(OpticalElement::Gap { z: v }),
        other => Err(format!("unknown element kind `{other}`")),
    }
}
