use super::{standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::vector::{mean_position, sub};
use crate::components::{greedy_accept, scaled_move_toward};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Teaching-learning: shift by a random fraction of best minus mean, then learn from a random partner; both phases greedy.",
    population: 30,
    min_population: 2,
    population_doc: "each member costs two evaluations per iteration",
    layout: StateLayout::NONE,
    params: &[ParamSpec::real("teaching_factor", 1.0, 1.0, 2.0, "weight on the mean; 1 subtracts the plain mean")],
    check: None,
};

pub(super) fn init(p: &AlgorithmParams, budget: &Budget<'_>, rng: &mut RngStream) -> Result<AlgorithmState> {
    standard_init(&PROFILE, p, budget, rng)
}

fn fractions(dims: usize, rng: &mut RngStream) -> Vec<f64> {
    (0..dims).map(|_| rng.uniform()).collect()
}

pub(super) fn step(
    p: &AlgorithmParams,
    s: &mut AlgorithmState,
    budget: &Budget<'_>,
    rng: &mut RngStream,
) -> Result<StepOutcome, StepError> {
    let n = s.population.len();
    let dims = budget.space().dims();
    let best = s.population.members[s.population.best_index()].position.clone();
    let mean = mean_position(&s.population.positions());
    let shift: Vec<f64> = best
        .iter()
        .zip(&mean)
        .map(|(b, m)| b - p.get("teaching_factor") * m)
        .collect();

    for i in 0..n {
        let old = s.population.members[i].clone();
        let target: Vec<f64> = old.position.iter().zip(&shift).map(|(x, d)| x + d).collect();
        let y = scaled_move_toward(&old.position, &target, &fractions(dims, rng))?;
        let cand = budget.evaluate(&mut s.population, y)?;
        s.population.members[i] = greedy_accept(old, cand)?;
    }

    let learners = s.population.members.clone();
    for i in 0..n {
        let j = rng.index_except(n, i);
        let x = &learners[i].position;
        let partner = &learners[j].position;
        let target = if learners[j].cost() < learners[i].cost() {
            partner.clone()
        } else {
            // Mirror image of the partner: a move away from it.
            let away = sub(x, partner);
            x.iter().zip(&away).map(|(a, d)| a + d).collect()
        };
        let y = scaled_move_toward(x, &target, &fractions(dims, rng))?;
        let cand = budget.evaluate(&mut s.population, y)?;
        let old = s.population.members[i].clone();
        s.population.members[i] = greedy_accept(old, cand)?;
    }
    Ok(StepOutcome::Continue)
}
