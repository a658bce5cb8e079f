use super::{coord_scale, standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{gaussian_sample, probabilistic_accept, recombine};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Chemical reaction: local moves until stagnation triggers a disruptive recombination; acceptance tightens with accepted losses.",
    population: 50,
    min_population: 2,
    population_doc: "common baseline size",
    layout: StateLayout {
        counters: true,
        ..StateLayout::NONE
    },
    params: &[
        ParamSpec::int("stagnation_limit", 10.0, 0.0, 10000.0, "failed local moves before a global move"),
        ParamSpec::real("local_scale", 0.3, 0.0, 10.0, "local move deviation as a fraction of the population spread"),
        ParamSpec::real("global_scale", 1.0, 0.0, 10.0, "jitter after recombination as a fraction of the population spread"),
        ParamSpec::real("accept_base", 0.2, 0.0, 1.0, "worsening-move acceptance chance before any has been accepted"),
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
    let snapshot = s.population.members.clone();
    let scale = coord_scale(&s.population, budget);

    for i in 0..n {
        let old = snapshot[i].clone();
        let counters = s.counters_mut()[i];
        let x = if counters.stagnation > p.count("stagnation_limit") {
            s.counters_mut()[i].stagnation = 0;
            let j = rng.index_except(n, i);
            let mixed = recombine(&old.position, &snapshot[j].position, rng)?;
            gaussian_sample(&mixed, p.get("global_scale") * scale, rng)?
        } else {
            gaussian_sample(&old.position, p.get("local_scale") * scale, rng)?
        };
        let cand = budget.evaluate(&mut s.population, x)?;
        let improved = cand.cost() < old.cost();
        let p_accept = p.get("accept_base") / (1.0 + counters.accepted_worse as f64);
        let kept = probabilistic_accept(old.clone(), cand, p_accept, rng)?;
        let c = &mut s.counters_mut()[i];
        if improved {
            c.stagnation = 0;
        } else {
            c.stagnation += 1;
            if kept != old {
                c.accepted_worse += 1;
            }
        }
        s.population.members[i] = kept;
    }
    Ok(StepOutcome::Continue)
}
