use std::f64::consts::PI;

use super::vector::axpy;
use crate::engine::{RngStream, SearchSpace};
use crate::error::{check_len, invalid, Result};

/// Lanczos approximation (g = 7, nine terms) of the gamma function for
/// positive arguments.
fn gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    let x = x - 1.0;
    let mut a = COEF[0];
    let t = x + G + 0.5;
    for (i, c) in COEF.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * a
}

/// Standard deviation of the numerator normal in Mantegna's construction.
pub fn mantegna_sigma(tail_index: f64) -> f64 {
    let b = tail_index;
    let num = gamma(1.0 + b) * (PI * b / 2.0).sin();
    let den = gamma((1.0 + b) / 2.0) * b * 2f64.powf((b - 1.0) / 2.0);
    (num / den).powf(1.0 / b)
}

/// Heavy-tailed random step: uniform direction times a Mantegna step length
/// `scale · |u| / |v|^(1/tail_index)` with `u ~ N(0, σ²)`, `v ~ N(0, 1)`.
///
/// The length's survival function decays like `s^(-tail_index)`.
pub fn levy_step(dims: usize, scale: f64, tail_index: f64, rng: &mut RngStream) -> Result<Vec<f64>> {
    if !(tail_index > 0.0 && tail_index < 2.0) {
        return Err(invalid(format!(
            "levy_step: tail index {tail_index} outside (0, 2)"
        )));
    }
    if !(scale > 0.0) {
        return Err(invalid(format!("levy_step: scale {scale} must be positive")));
    }
    if dims == 0 {
        return Err(invalid("levy_step: zero dimensions"));
    }
    let sigma = mantegna_sigma(tail_index);
    let u = sigma * rng.normal();
    let v = rng.normal();
    let length = scale * u.abs() / v.abs().powf(1.0 / tail_index);
    let dir = rng.unit_vector(dims);
    Ok(dir.into_iter().map(|d| d * length).collect())
}

/// Random walk from `start`, each position clamped into `space`. Returns
/// `n_steps + 1` points including `start`.
pub fn random_walk<F>(
    start: &[f64],
    n_steps: usize,
    space: &SearchSpace,
    step_sampler: F,
    rng: &mut RngStream,
) -> Result<Vec<Vec<f64>>>
where
    F: FnMut(&mut RngStream) -> Result<Vec<f64>>,
{
    check_len("random_walk", space.dims(), start.len())?;
    random_walk_within(start, n_steps, |p| space.clamp_in_place(p), step_sampler, rng)
}

/// Random walk with a caller-supplied projection applied after every step.
pub fn random_walk_within<P, F>(
    start: &[f64],
    n_steps: usize,
    project: P,
    mut step_sampler: F,
    rng: &mut RngStream,
) -> Result<Vec<Vec<f64>>>
where
    P: Fn(&mut [f64]),
    F: FnMut(&mut RngStream) -> Result<Vec<f64>>,
{
    let mut path = Vec::with_capacity(n_steps + 1);
    let mut cur = start.to_vec();
    path.push(cur.clone());
    for _ in 0..n_steps {
        let step = step_sampler(rng)?;
        check_len("random_walk step", cur.len(), step.len())?;
        axpy(&mut cur, 1.0, &step);
        project(&mut cur);
        path.push(cur.clone());
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::super::vector::norm;
    use super::*;

    #[test]
    fn gamma_known_values() {
        assert!((gamma(1.0) - 1.0).abs() < 1e-12);
        assert!((gamma(5.0) - 24.0).abs() < 1e-10);
        assert!((gamma(0.5) - PI.sqrt()).abs() < 1e-12);
        assert!((gamma(2.5) - 1.329_340_388_179_137).abs() < 1e-12);
    }

    #[test]
    fn mantegna_sigma_for_default_tail() {
        // Reference value for tail index 1.5 from the closed form.
        assert!((mantegna_sigma(1.5) - 0.696_574_502_557_696_7).abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_tail_index() {
        let mut rng = RngStream::new(0);
        assert!(levy_step(2, 1.0, 0.0, &mut rng).is_err());
        assert!(levy_step(2, 1.0, 2.0, &mut rng).is_err());
        assert!(levy_step(2, 0.0, 1.5, &mut rng).is_err());
    }

    fn median(mut v: Vec<f64>) -> f64 {
        v.sort_by(f64::total_cmp);
        v[v.len() / 2]
    }

    #[test]
    fn scale_doubles_step_lengths() {
        let n = 100_000;
        let mut a = RngStream::new(31);
        let mut b = RngStream::new(32);
        let one: Vec<f64> = (0..n)
            .map(|_| norm(&levy_step(2, 1.0, 1.5, &mut a).unwrap()))
            .collect();
        let two: Vec<f64> = (0..n)
            .map(|_| norm(&levy_step(2, 2.0, 1.5, &mut b).unwrap()))
            .collect();
        let ratio = median(two) / median(one);
        assert!((ratio - 2.0).abs() < 0.05, "{ratio}");
    }

    #[test]
    fn directions_are_isotropic() {
        let n = 100_000;
        let mut rng = RngStream::new(33);
        let mut mean = [0.0; 3];
        for _ in 0..n {
            let s = levy_step(3, 1.0, 1.5, &mut rng).unwrap();
            let l = norm(&s);
            for d in 0..3 {
                mean[d] += s[d] / l / n as f64;
            }
        }
        // Each unit-vector component has variance 1/3.
        let se = (1.0 / 3.0 / n as f64).sqrt();
        for m in mean {
            assert!(m.abs() < 4.0 * se, "{m}");
        }
    }

    #[test]
    fn walk_lengths_and_zero_steps() {
        let space = SearchSpace::cube(2, -10.0, 10.0).unwrap();
        let mut rng = RngStream::new(0);
        let path = random_walk(&[1.0, 2.0], 0, &space, |_| Ok(vec![1.0, 1.0]), &mut rng).unwrap();
        assert_eq!(path, vec![vec![1.0, 2.0]]);
        let flat = random_walk(&[1.0, 2.0], 5, &space, |_| Ok(vec![0.0, 0.0]), &mut rng).unwrap();
        assert_eq!(flat.len(), 6);
        assert!(flat.iter().all(|p| p == &vec![1.0, 2.0]));
    }

    #[test]
    fn walk_is_clamped() {
        let space = SearchSpace::cube(1, -1.0, 1.0).unwrap();
        let mut rng = RngStream::new(0);
        let path = random_walk(&[0.0], 4, &space, |_| Ok(vec![0.6]), &mut rng).unwrap();
        assert_eq!(path.last().unwrap(), &vec![1.0]);
    }

    #[test]
    fn walk_diffuses_like_sqrt_n() {
        // Unit-variance Gaussian steps: E[x_n] = 0, E[x_n^2] = n.
        let space = SearchSpace::cube(1, -1e9, 1e9).unwrap();
        let mut rng = RngStream::new(44);
        let reps = 4000;
        for n in [16usize, 64] {
            let ends: Vec<f64> = (0..reps)
                .map(|_| {
                    let p = random_walk(&[0.0], n, &space, |r| Ok(vec![r.normal()]), &mut rng).unwrap();
                    p[n][0]
                })
                .collect();
            let mean = ends.iter().sum::<f64>() / reps as f64;
            let ms = ends.iter().map(|x| x * x).sum::<f64>() / reps as f64;
            let sd = (n as f64).sqrt();
            assert!(mean.abs() < 4.0 * sd / (reps as f64).sqrt(), "n={n} mean={mean}");
            // Var of x^2 for N(0, n) is 2n^2.
            let se = (2.0f64).sqrt() * n as f64 / (reps as f64).sqrt();
            assert!((ms - n as f64).abs() < 4.0 * se, "n={n} ms={ms}");
        }
    }
}
