use super::{coord_scale, standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{gaussian_sample, move_toward, probabilistic_accept};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Bat algorithm: randomized moves toward the best, local jumps near the best, improvement-dependent acceptance.",
    population: 50,
    min_population: 1,
    population_doc: "common baseline size",
    layout: StateLayout {
        counters: true,
        ..StateLayout::NONE
    },
    params: &[
        ParamSpec::real("max_fraction", 1.5, 0.0, 4.0, "move fraction toward the best drawn from [0, this]"),
        ParamSpec::real("jump_prob", 0.5, 0.0, 1.0, "local jump chance for a member that has never improved"),
        ParamSpec::real("jump_decay", 0.1, 0.0, 10.0, "jump chance shrinks by exp(-decay) per improvement"),
        ParamSpec::real("jump_scale", 0.5, 0.0, 10.0, "jump standard deviation as a fraction of the population spread"),
        ParamSpec::real("accept_max", 0.5, 0.0, 1.0, "limit of the worsening-move acceptance chance"),
        ParamSpec::real("accept_growth", 0.1, 0.0, 10.0, "acceptance chance grows by this rate per improvement"),
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
    let best = s.population.members[s.population.best_index()].position.clone();
    let sigma = p.get("jump_scale") * coord_scale(&s.population, budget);

    for i in 0..s.population.len() {
        let old = s.population.members[i].clone();
        let improvements = s.counters_mut()[i].improvements as f64;
        let p_jump = p.get("jump_prob") * (-p.get("jump_decay") * improvements).exp();
        let x = if rng.bernoulli(p_jump) {
            gaussian_sample(&best, sigma, rng)?
        } else {
            move_toward(
                &old.position,
                &best,
                rng.range(0.0, p.get("max_fraction")),
                0.0,
                rng,
            )?
        };
        let cand = budget.evaluate(&mut s.population, x)?;
        if cand.cost() < old.cost() {
            s.counters_mut()[i].improvements += 1;
        }
        let p_accept = p.get("accept_max") * (1.0 - (-p.get("accept_growth") * improvements).exp());
        s.population.members[i] = probabilistic_accept(old, cand, p_accept, rng)?;
    }
    Ok(StepOutcome::Continue)
}
