use super::{coord_scale, standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{inverse_square_weights, move_toward, weighted_mean};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Firefly: every member moves toward all brighter members, weighted by an inverse-square law, plus jitter.",
    population: 40,
    min_population: 1,
    population_doc: "all-pairs weighting is quadratic in the population",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::real("attraction", 1.0, 0.0, 4.0, "largest move fraction, reached when attraction is strong"),
        ParamSpec::real("sharpness", 10.0, 1e-6, 1e6, "multiplies squared normalized distances in the attraction law"),
        ParamSpec::real("jitter", 0.2, 0.0, 10.0, "jitter amplitude as a fraction of the population spread"),
    ],
    check: None,
};

pub(super) fn init(p: &AlgorithmParams, budget: &Budget<'_>, rng: &mut RngStream) -> Result<AlgorithmState> {
    standard_init(&PROFILE, p, budget, rng)
}

pub(super) fn step(
    p: &AlgorithmParams,
    s: &mut AlgorithmState,
    budget: &Budget<'_>,
    rng: &mut RngStream,
) -> Result<StepOutcome, StepError> {
    let space = budget.space();
    let snapshot = s.population.members.clone();
    let k = p.get("sharpness").sqrt();
    let scaled: Vec<Vec<f64>> = snapshot
        .iter()
        .map(|c| space.normalize(&c.position).into_iter().map(|v| v * k).collect())
        .collect();
    let jitter = p.get("jitter") * coord_scale(&s.population, budget);

    for i in 0..snapshot.len() {
        let x = &snapshot[i].position;
        let brighter: Vec<usize> = (0..snapshot.len())
            .filter(|&j| snapshot[j].cost() < snapshot[i].cost())
            .collect();
        let cand = if brighter.is_empty() {
            move_toward(x, x, 0.0, jitter, rng)?
        } else {
            let others: Vec<&[f64]> = brighter.iter().map(|&j| scaled[j].as_slice()).collect();
            let values: Vec<f64> = brighter.iter().map(|&j| snapshot[j].cost()).collect();
            let w = inverse_square_weights(&scaled[i], &others, &values)?;
            let total: f64 = w.iter().sum();
            let positions: Vec<&[f64]> = brighter
                .iter()
                .map(|&j| snapshot[j].position.as_slice())
                .collect();
            let target = weighted_mean(&positions, &w)?;
            move_toward(
                x,
                &target,
                p.get("attraction") * total / (1.0 + total),
                jitter,
                rng,
            )?
        };
        s.population.members[i] = budget.evaluate(&mut s.population, cand)?;
    }
    Ok(StepOutcome::Continue)
}
