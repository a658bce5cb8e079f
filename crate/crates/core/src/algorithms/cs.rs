use super::{coord_scale, standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::vector::add;
use crate::components::{levy_step, restart};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Cuckoo search: small population; the worst member is replaced by a restart or a Levy flight from another member.",
    population: 15,
    min_population: 2,
    population_doc: "a small population, as the method prescribes",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::real("abandon_prob", 0.25, 0.0, 1.0, "chance the replacement is a uniform restart"),
        ParamSpec::real("levy_scale", 0.5, 1e-9, 100.0, "flight scale as a fraction of the population spread"),
        ParamSpec::real("tail_index", 1.5, 0.1, 1.99, "customary Levy exponent"),
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
    let n = s.population.len();
    let worst = s.population.worst_index();
    let x = if rng.bernoulli(p.get("abandon_prob")) {
        restart(budget.space(), rng).position
    } else {
        let j = rng.index_except(n, worst);
        let dims = budget.space().dims();
        let scale = p.get("levy_scale") * coord_scale(&s.population, budget) * (dims as f64).sqrt();
        add(
            &s.population.members[j].position,
            &levy_step(dims, scale, p.get("tail_index"), rng)?,
        )
    };
    s.population.members[worst] = budget.evaluate(&mut s.population, x)?;
    Ok(StepOutcome::Continue)
}
