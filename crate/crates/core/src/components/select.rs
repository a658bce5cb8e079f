use crate::engine::{Candidate, RngStream};
use crate::error::{invalid, Result};

/// Positive weights for minimization: `(worst - v) + eps`, where `eps` is
/// `1e-12` times the value range, or `1` when all values are equal.
///
/// Every operator that needs weights "proportional to objective value" goes
/// through this transform.
pub fn fitness_weights(values: &[f64]) -> Vec<f64> {
    let worst = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let best = values.iter().copied().fold(f64::INFINITY, f64::min);
    let range = worst - best;
    let eps = if range > 0.0 && range.is_finite() {
        1e-12 * range
    } else {
        1.0
    };
    values
        .iter()
        .map(|v| {
            let w = (worst - v) + eps;
            if w.is_finite() && w > 0.0 {
                w
            } else {
                eps
            }
        })
        .collect()
}

/// Indices of the `k` lowest-valued members, best first; ties go to the
/// lower index.
pub fn truncation_select(members: &[Candidate], k: usize) -> Result<Vec<usize>> {
    if k == 0 || k > members.len() {
        return Err(invalid(format!(
            "truncation_select: k = {k} must lie in 1..={}",
            members.len()
        )));
    }
    let mut idx: Vec<usize> = (0..members.len()).collect();
    idx.sort_by(|&a, &b| members[a].cost().total_cmp(&members[b].cost()).then(a.cmp(&b)));
    idx.truncate(k);
    Ok(idx)
}

/// Roulette-wheel draw over non-negative weights. Falls back to a uniform
/// draw when all weights are zero.
pub fn roulette(weights: &[f64], rng: &mut RngStream) -> Result<usize> {
    if weights.is_empty() {
        return Err(invalid("roulette: no weights"));
    }
    let total: f64 = weights.iter().sum();
    if !(total > 0.0) || !total.is_finite() {
        return Ok(rng.index(weights.len()));
    }
    let mut target = rng.uniform() * total;
    for (i, w) in weights.iter().enumerate() {
        if target < *w {
            return Ok(i);
        }
        target -= w;
    }
    // Rounding left a sliver past the last bucket.
    Ok(weights
        .iter()
        .rposition(|w| *w > 0.0)
        .unwrap_or(weights.len() - 1))
}

/// Index drawn with probability proportional to [`fitness_weights`].
pub fn proportional_select(members: &[Candidate], rng: &mut RngStream) -> Result<usize> {
    if members.is_empty() {
        return Err(invalid("proportional_select: empty population"));
    }
    let values: Vec<f64> = members.iter().map(Candidate::cost).collect();
    roulette(&fitness_weights(&values), rng)
}

/// Draws `count` distinct indices, each draw proportional to the remaining
/// weights.
pub fn weighted_sample_distinct(weights: &[f64], count: usize, rng: &mut RngStream) -> Result<Vec<usize>> {
    if count > weights.len() {
        return Err(invalid(format!(
            "weighted_sample_distinct: cannot draw {count} of {}",
            weights.len()
        )));
    }
    let mut w = weights.to_vec();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let i = loop {
            let i = roulette(&w, rng)?;
            // The uniform fallback can hit an already-drawn index.
            if !out.contains(&i) {
                break i;
            }
        };
        w[i] = 0.0;
        out.push(i);
    }
    Ok(out)
}
