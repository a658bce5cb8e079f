use super::vector::{axpy, norm};
use crate::engine::{Candidate, RngStream, SearchSpace};
use crate::error::{invalid, Result};

/// `center + sigma * z` with `z` standard normal per coordinate.
pub fn gaussian_sample(center: &[f64], sigma: f64, rng: &mut RngStream) -> Result<Vec<f64>> {
    if !(sigma >= 0.0) {
        return Err(invalid(format!("gaussian_sample: sigma {sigma} < 0")));
    }
    if sigma == 0.0 {
        return Ok(center.to_vec());
    }
    Ok(center.iter().map(|c| c + sigma * rng.normal()).collect())
}

/// Point drawn uniformly from the volume of the ball of `radius` around
/// `center`: uniform direction, radius scaled by `u^(1/dims)`.
pub fn hypersphere_sample(center: &[f64], radius: f64, rng: &mut RngStream) -> Result<Vec<f64>> {
    if !(radius >= 0.0) {
        return Err(invalid(format!("hypersphere_sample: radius {radius} < 0")));
    }
    if radius == 0.0 {
        return Ok(center.to_vec());
    }
    let dims = center.len();
    let dir = rng.unit_vector(dims);
    let r = radius * rng.uniform().powf(1.0 / dims as f64);
    let mut out = center.to_vec();
    axpy(&mut out, r, &dir);
    Ok(out)
}

/// Point in the axis-aligned cube of `half_width` around `center`. With
/// `edge_only` one randomly chosen coordinate is pushed to a face, so the
/// Chebyshev distance from `center` is exactly `half_width`.
pub fn hypercube_sample(
    center: &[f64],
    half_width: f64,
    edge_only: bool,
    rng: &mut RngStream,
) -> Result<Vec<f64>> {
    if !(half_width >= 0.0) {
        return Err(invalid(format!("hypercube_sample: half_width {half_width} < 0")));
    }
    if half_width == 0.0 {
        return Ok(center.to_vec());
    }
    let mut out: Vec<f64> = center
        .iter()
        .map(|c| c + rng.range(-half_width, half_width))
        .collect();
    if edge_only {
        let d = rng.index(center.len());
        let sign = if rng.bernoulli(0.5) { 1.0 } else { -1.0 };
        out[d] = center[d] + sign * half_width;
    }
    Ok(out)
}

/// Pulls `x` back onto the ball of `radius` around `center` if it lies
/// outside.
pub fn project_to_ball(x: &mut [f64], center: &[f64], radius: f64) {
    let d: f64 = x
        .iter()
        .zip(center)
        .map(|(a, c)| (a - c) * (a - c))
        .sum::<f64>()
        .sqrt();
    if d > radius && d > 0.0 {
        let k = radius / d;
        for (a, c) in x.iter_mut().zip(center) {
            *a = c + k * (*a - c);
        }
    }
}

/// A fresh uniform point of the space, left for the caller to evaluate.
pub fn restart(space: &SearchSpace, rng: &mut RngStream) -> Candidate {
    Candidate::unevaluated(crate::engine::uniform_point(space, rng))
}

/// Unit direction within `max_angle` radians of `heading`.
///
/// The turn angle is uniform on `[0, max_angle]` and the turn plane is
/// spanned by `heading` and a uniformly random perpendicular direction.
pub fn cone_direction(heading: &[f64], max_angle: f64, rng: &mut RngStream) -> Result<Vec<f64>> {
    let dims = heading.len();
    let h_norm = norm(heading);
    if h_norm == 0.0 || !h_norm.is_finite() {
        return Ok(rng.unit_vector(dims));
    }
    if !(max_angle >= 0.0) {
        return Err(invalid(format!("cone_direction: max_angle {max_angle} < 0")));
    }
    let h: Vec<f64> = heading.iter().map(|x| x / h_norm).collect();
    let theta = rng.range(0.0, max_angle.min(std::f64::consts::PI));
    if dims == 1 {
        let s = if theta > std::f64::consts::FRAC_PI_2 {
            -1.0
        } else {
            1.0
        };
        return Ok(vec![s * h[0]]);
    }
    let perp = loop {
        let u = rng.unit_vector(dims);
        let dot: f64 = u.iter().zip(&h).map(|(a, b)| a * b).sum();
        let mut w = u.clone();
        axpy(&mut w, -dot, &h);
        let n = norm(&w);
        if n > 1e-9 {
            break w.into_iter().map(|x| x / n).collect::<Vec<_>>();
        }
    };
    Ok(h.iter()
        .zip(&perp)
        .map(|(a, b)| theta.cos() * a + theta.sin() * b)
        .collect())
}
