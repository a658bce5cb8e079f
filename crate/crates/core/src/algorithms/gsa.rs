use super::{css::attraction, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::vector::{add, axpy};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary:
        "Gravitational search: velocities accelerated toward better members under an inverse-square law.",
    population: 50,
    min_population: 1,
    population_doc: "common baseline size",
    layout: StateLayout {
        velocities: true,
        ..StateLayout::NONE
    },
    params: &[
        ParamSpec::real("gravity", 1.0, 0.0, 10.0, "acceleration gain"),
        ParamSpec::real(
            "sharpness",
            10.0,
            1e-6,
            1e6,
            "multiplies squared normalized distances in the attraction law",
        ),
    ],
    check: None,
};

pub(super) fn init(p: &AlgorithmParams, budget: &Budget<'_>, rng: &mut RngStream) -> Result<AlgorithmState> {
    AlgorithmState::standard(&PROFILE.layout, p.population_size, budget, rng)
}

pub(super) fn step(
    p: &AlgorithmParams,
    s: &mut AlgorithmState,
    budget: &Budget<'_>,
    rng: &mut RngStream,
) -> Result<StepOutcome, StepError> {
    let n = s.population.len();
    let pulls: Vec<Vec<f64>> = (0..n)
        .map(|i| attraction(i, s, budget, p.get("sharpness")))
        .collect::<Result<_>>()?;
    for i in 0..n {
        let keep = rng.uniform();
        let mut v: Vec<f64> = s.velocities_mut()[i].iter().map(|vd| keep * vd).collect();
        axpy(&mut v, p.get("gravity") * rng.uniform(), &pulls[i]);
        let x = add(&s.population.members[i].position, &v);
        s.population.members[i] = budget.evaluate(&mut s.population, x)?;
        s.velocities_mut()[i] = v;
    }
    Ok(StepOutcome::Continue)
}
