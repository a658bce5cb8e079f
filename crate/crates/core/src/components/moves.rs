use std::f64::consts::PI;

use super::select::fitness_weights;
use super::vector::{axpy, squared_distance, sub};
use crate::engine::{Candidate, RngStream};
use crate::error::{check_len, invalid, Result};

/// Softening added to squared distances in [`inverse_square_weights`].
pub const INVERSE_SQUARE_EPS: f64 = 1e-9;

/// Radial contraction rate of [`spiral_move`].
const SPIRAL_CONTRACTION: f64 = 2.0;

/// `x + fraction * (target - x) + jitter * u`, `u` uniform on `[-1, 1]` per
/// coordinate. No random draws are made when `jitter` is zero.
pub fn move_toward(
    x: &[f64],
    target: &[f64],
    fraction: f64,
    jitter: f64,
    rng: &mut RngStream,
) -> Result<Vec<f64>> {
    check_len("move_toward", x.len(), target.len())?;
    if !(fraction >= 0.0) {
        return Err(invalid(format!("move_toward: fraction {fraction} < 0")));
    }
    let mut out: Vec<f64> = x
        .iter()
        .zip(target)
        .map(|(a, b)| a + fraction * (b - a))
        .collect();
    if jitter != 0.0 {
        for v in &mut out {
            *v += jitter * rng.range(-1.0, 1.0);
        }
    }
    Ok(out)
}

/// `x + factors ⊙ (target - x)`: a move toward `target` with a separate
/// step factor per coordinate (for example a Lévy step).
pub fn scaled_move_toward(x: &[f64], target: &[f64], factors: &[f64]) -> Result<Vec<f64>> {
    check_len("scaled_move_toward", x.len(), target.len())?;
    check_len("scaled_move_toward", x.len(), factors.len())?;
    Ok(x.iter()
        .zip(target)
        .zip(factors)
        .map(|((a, b), f)| a + f * (b - a))
        .collect())
}

/// `Σ wᵢ·pᵢ / Σ wᵢ`.
pub fn weighted_mean<P: AsRef<[f64]>>(positions: &[P], weights: &[f64]) -> Result<Vec<f64>> {
    if positions.is_empty() {
        return Err(invalid("weighted_mean: no positions"));
    }
    check_len("weighted_mean", positions.len(), weights.len())?;
    let dims = positions[0].as_ref().len();
    let total: f64 = weights.iter().sum();
    if !(total > 0.0) {
        return Err(invalid("weighted_mean: weights must have a positive sum"));
    }
    let mut m = vec![0.0; dims];
    for (p, w) in positions.iter().zip(weights) {
        check_len("weighted_mean", dims, p.as_ref().len())?;
        axpy(&mut m, *w, p.as_ref());
    }
    m.iter_mut().for_each(|v| *v /= total);
    Ok(m)
}

/// Value-weighted average position, weights from
/// [`fitness_weights`](super::fitness_weights).
pub fn weighted_centroid(members: &[Candidate]) -> Result<Vec<f64>> {
    if members.is_empty() {
        return Err(invalid("weighted_centroid: empty population"));
    }
    let values: Vec<f64> = members.iter().map(Candidate::cost).collect();
    let positions: Vec<&[f64]> = members.iter().map(|c| c.position.as_slice()).collect();
    weighted_mean(&positions, &fitness_weights(&values))
}

/// Attraction weight of each of `others` on `x`:
/// `fitness(j) / (d(x, j)^2 + eps)`, with fitness from
/// [`fitness_weights`](super::fitness_weights) rescaled so the largest is 1.
pub fn inverse_square_weights<P: AsRef<[f64]>>(x: &[f64], others: &[P], values: &[f64]) -> Result<Vec<f64>> {
    if others.is_empty() {
        return Err(invalid("inverse_square_weights: no other points"));
    }
    check_len("inverse_square_weights", others.len(), values.len())?;
    let fit = fitness_weights(values);
    let top = fit.iter().copied().fold(0.0, f64::max);
    others
        .iter()
        .zip(&fit)
        .map(|(p, f)| {
            check_len("inverse_square_weights", x.len(), p.as_ref().len())?;
            Ok((f / top) / (squared_distance(x, p.as_ref()) + INVERSE_SQUARE_EPS))
        })
        .collect()
}

/// Point on a contracting logarithmic spiral from `x` (at `t = 0`) into
/// `target` (at `t = 1`).
///
/// The displacement `x - target` is rotated by `2π·turns·t` in each
/// coordinate plane `(0,1), (2,3), …` and shrunk by
/// `(e^{-κt} - e^{-κ}) / (1 - e^{-κ})`, which falls strictly from 1 to 0.
pub fn spiral_move(x: &[f64], target: &[f64], turns: f64, t: f64) -> Result<Vec<f64>> {
    check_len("spiral_move", x.len(), target.len())?;
    if !(0.0..=1.0).contains(&t) {
        return Err(invalid(format!("spiral_move: t = {t} outside [0, 1]")));
    }
    let k = SPIRAL_CONTRACTION;
    let shrink = ((-k * t).exp() - (-k).exp()) / (1.0 - (-k).exp());
    if t == 1.0 || shrink <= 0.0 {
        return Ok(target.to_vec());
    }
    let (s, c) = (2.0 * PI * turns * t).sin_cos();
    let d = sub(x, target);
    let mut rotated = d.clone();
    for pair in 0..d.len() / 2 {
        let (i, j) = (2 * pair, 2 * pair + 1);
        rotated[i] = c * d[i] - s * d[j];
        rotated[j] = s * d[i] + c * d[j];
    }
    Ok(target
        .iter()
        .zip(&rotated)
        .map(|(tg, r)| tg + shrink * r)
        .collect())
}

/// Uniform crossover: each coordinate copied from `a` or `b` with equal
/// probability.
pub fn recombine(a: &[f64], b: &[f64], rng: &mut RngStream) -> Result<Vec<f64>> {
    check_len("recombine", a.len(), b.len())?;
    Ok(a.iter()
        .zip(b)
        .map(|(x, y)| if rng.bernoulli(0.5) { *x } else { *y })
        .collect())
}

/// Inertia-weighted velocity update:
/// `inertia·v + c1·r1⊙(personal_best - x) + c2·r2⊙(informant_best - x)`.
///
/// `r1` and `r2` are uniform on `[0, 1)`, drawn as an `(r1, r2)` pair per
/// coordinate in coordinate order.
#[allow(clippy::too_many_arguments)]
pub fn velocity_update(
    v: &[f64],
    x: &[f64],
    personal_best: &[f64],
    informant_best: &[f64],
    inertia: f64,
    c1: f64,
    c2: f64,
    rng: &mut RngStream,
) -> Result<Vec<f64>> {
    let n = v.len();
    check_len("velocity_update", n, x.len())?;
    check_len("velocity_update", n, personal_best.len())?;
    check_len("velocity_update", n, informant_best.len())?;
    if !(inertia >= 0.0 && c1 >= 0.0 && c2 >= 0.0) {
        return Err(invalid("velocity_update: coefficients must be non-negative"));
    }
    Ok((0..n)
        .map(|i| {
            let r1 = rng.uniform();
            let r2 = rng.uniform();
            inertia * v[i] + c1 * r1 * (personal_best[i] - x[i]) + c2 * r2 * (informant_best[i] - x[i])
        })
        .collect())
}

/// Parameters of the Gaussian crowding kernel: an attractive well plus a
/// narrower repulsive bump around every other search point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrowdingKernel {
    pub attract_depth: f64,
    pub attract_width: f64,
    pub repel_height: f64,
    pub repel_width: f64,
}

/// Crowding adjustment to add to an objective value at `x`:
/// `Σⱼ -depth·exp(-wₐ‖x-xⱼ‖²) + height·exp(-wᵣ‖x-xⱼ‖²)`.
pub fn crowding_term<P: AsRef<[f64]>>(x: &[f64], others: &[P], kernel: &CrowdingKernel) -> f64 {
    others
        .iter()
        .map(|p| {
            let d2 = squared_distance(x, p.as_ref());
            -kernel.attract_depth * (-kernel.attract_width * d2).exp()
                + kernel.repel_height * (-kernel.repel_width * d2).exp()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::super::vector::distance;
    use super::*;

    #[test]
    fn move_toward_examples() {
        let mut rng = RngStream::new(0);
        assert_eq!(
            move_toward(&[1.0, 2.0], &[5.0, 5.0], 0.0, 0.0, &mut rng).unwrap(),
            vec![1.0, 2.0]
        );
        assert_eq!(
            move_toward(&[1.0, 2.0], &[5.0, 5.0], 1.0, 0.0, &mut rng).unwrap(),
            vec![5.0, 5.0]
        );
        assert_eq!(
            move_toward(&[0.0, 0.0], &[2.0, 2.0], 0.5, 0.0, &mut rng).unwrap(),
            vec![1.0, 1.0]
        );
        assert!(move_toward(&[0.0], &[1.0, 2.0], 0.5, 0.0, &mut rng).is_err());
        assert!(move_toward(&[0.0], &[1.0], -0.5, 0.0, &mut rng).is_err());
    }

    #[test]
    fn move_toward_jitter_is_bounded() {
        let mut rng = RngStream::new(1);
        for _ in 0..1000 {
            let p = move_toward(&[0.0, 0.0], &[2.0, 2.0], 0.5, 0.1, &mut rng).unwrap();
            assert!((p[0] - 1.0).abs() <= 0.1 && (p[1] - 1.0).abs() <= 0.1);
        }
    }

    #[test]
    fn weighted_mean_hand_example() {
        // Weights 3:1 on (0,0) and (4,0): (3*0 + 1*4) / 4 = 1.
        let m = weighted_mean(&[vec![0.0, 0.0], vec![4.0, 0.0]], &[3.0, 1.0]).unwrap();
        assert_eq!(m, vec![1.0, 0.0]);
    }

    #[test]
    fn weighted_centroid_through_transform() {
        // Values (0, 2, 3) give weights (3+e, 1+e, e), e = 3e-12; the third
        // point contributes at the 1e-12 level only.
        let members = vec![
            Candidate::evaluated(vec![0.0, 0.0], 0.0),
            Candidate::evaluated(vec![4.0, 0.0], 2.0),
            Candidate::evaluated(vec![100.0, 100.0], 3.0),
        ];
        let m = weighted_centroid(&members).unwrap();
        assert!((m[0] - 1.0).abs() < 1e-9 && m[1].abs() < 1e-9, "{m:?}");
    }

    #[test]
    fn weighted_centroid_degenerate_cases() {
        let single = vec![Candidate::evaluated(vec![3.0, -1.0], 7.0)];
        assert_eq!(weighted_centroid(&single).unwrap(), vec![3.0, -1.0]);
        let equal = vec![
            Candidate::evaluated(vec![0.0, 0.0], 1.0),
            Candidate::evaluated(vec![2.0, 4.0], 1.0),
        ];
        assert_eq!(weighted_centroid(&equal).unwrap(), vec![1.0, 2.0]);
        assert!(weighted_centroid(&[]).is_err());
    }

    #[test]
    fn inverse_square_examples() {
        let x = [0.0, 0.0];
        let w = inverse_square_weights(&x, &[vec![1.0, 0.0], vec![0.0, -1.0]], &[2.0, 2.0]).unwrap();
        assert_eq!(w[0], w[1]);

        let near = inverse_square_weights(&x, &[vec![1.0, 0.0]], &[1.0]).unwrap()[0];
        let far = inverse_square_weights(&x, &[vec![2.0, 0.0]], &[1.0]).unwrap()[0];
        assert!((near / far - 4.0).abs() < 1e-6);

        let at = inverse_square_weights(&x, &[vec![0.0, 0.0]], &[1.0]).unwrap()[0];
        assert!(at.is_finite());
        assert_eq!(at, 1.0 / INVERSE_SQUARE_EPS);

        assert!(inverse_square_weights::<Vec<f64>>(&x, &[], &[]).is_err());
    }

    #[test]
    fn spiral_endpoints() {
        let x = [3.0, -1.0, 2.0];
        let target = [0.5, 0.5, 0.5];
        assert_eq!(spiral_move(&x, &target, 1.3, 1.0).unwrap(), target.to_vec());
        for t in [0.0, 0.2, 0.7] {
            assert_eq!(spiral_move(&target, &target, 2.0, t).unwrap(), target.to_vec());
        }
        let start = spiral_move(&x, &target, 0.0, 0.0).unwrap();
        for (a, b) in start.iter().zip(&x) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!(spiral_move(&x, &target, 1.0, 1.5).is_err());
        assert!(spiral_move(&x, &target[..2], 1.0, 0.5).is_err());
    }

    #[test]
    fn spiral_contracts_monotonically() {
        let mut rng = RngStream::new(12);
        for _ in 0..500 {
            let dims = 1 + rng.index(5);
            let x: Vec<f64> = (0..dims).map(|_| rng.range(-5.0, 5.0)).collect();
            let target: Vec<f64> = (0..dims).map(|_| rng.range(-5.0, 5.0)).collect();
            let turns = rng.range(0.0, 3.0);
            let t1 = rng.range(0.0, 0.99);
            let t2 = rng.range(t1 + 1e-3, 1.0);
            let d1 = distance(&spiral_move(&x, &target, turns, t1).unwrap(), &target);
            let d2 = distance(&spiral_move(&x, &target, turns, t2).unwrap(), &target);
            assert!(d2 < d1, "t1={t1} t2={t2} d1={d1} d2={d2}");
        }
    }

    #[test]
    fn recombine_properties() {
        let mut rng = RngStream::new(2);
        let a = vec![1.0, 2.0, 3.0];
        assert_eq!(recombine(&a, &a, &mut rng).unwrap(), a);
        let b = vec![-1.0, -2.0, -3.0];
        let n = 10_000;
        let mut from_a = [0usize; 3];
        for _ in 0..n {
            let c = recombine(&a, &b, &mut rng).unwrap();
            for i in 0..3 {
                assert!(c[i] == a[i] || c[i] == b[i]);
                if c[i] == a[i] {
                    from_a[i] += 1;
                }
            }
        }
        for k in from_a {
            assert!((k as f64 / n as f64 - 0.5).abs() <= 0.02);
        }
        assert!(recombine(&a, &b[..2], &mut rng).is_err());
    }

    #[test]
    fn velocity_degenerate_cases() {
        let mut rng = RngStream::new(3);
        let v = vec![0.3, -0.2];
        let x = vec![1.0, 1.0];
        assert_eq!(
            velocity_update(&v, &x, &x, &x, 1.0, 1.4, 1.4, &mut rng).unwrap(),
            v
        );
        assert_eq!(
            velocity_update(&v, &x, &[0.0, 0.0], &[2.0, 2.0], 0.0, 0.0, 0.0, &mut rng).unwrap(),
            vec![0.0, 0.0]
        );
        assert!(velocity_update(&v, &x, &x, &x, -1.0, 1.0, 1.0, &mut rng).is_err());
        assert!(velocity_update(&v, &x[..1], &x, &x, 1.0, 1.0, 1.0, &mut rng).is_err());
    }

    #[test]
    fn velocity_matches_hand_unrolled_step() {
        let v = [0.5, -1.0];
        let x = [1.0, 2.0];
        let pb = [0.0, 3.0];
        let ib = [-1.0, 0.0];
        let mut draws = RngStream::new(99);
        let mut expected = Vec::new();
        for i in 0..2 {
            let r1 = draws.uniform();
            let r2 = draws.uniform();
            expected.push(0.7 * v[i] + 1.4 * r1 * (pb[i] - x[i]) + 1.4 * r2 * (ib[i] - x[i]));
        }
        let mut rng = RngStream::new(99);
        let got = velocity_update(&v, &x, &pb, &ib, 0.7, 1.4, 1.4, &mut rng).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn crowding_kernel_shape() {
        let k = CrowdingKernel {
            attract_depth: 0.1,
            attract_width: 0.2,
            repel_height: 0.1,
            repel_width: 10.0,
        };
        // On top of another point both kernels cancel; at moderate range
        // attraction dominates.
        assert!(crowding_term(&[0.0], &[vec![0.0]], &k).abs() < 1e-15);
        assert!(crowding_term(&[1.0], &[vec![0.0]], &k) < 0.0);
    }
}
