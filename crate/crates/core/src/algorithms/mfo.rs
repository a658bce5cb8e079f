use super::{AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{spiral_move, DecaySchedule};
use crate::engine::{Budget, Population, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary:
        "Moth-flame: members sorted by value spiral toward sorted historical bests; fewer flames over time.",
    population: 30,
    min_population: 1,
    population_doc: "customary size for this method",
    layout: StateLayout {
        historical_bests: true,
        ..StateLayout::NONE
    },
    params: &[ParamSpec::real(
        "turns",
        1.0,
        0.0,
        10.0,
        "spiral revolutions between a moth and its flame",
    )],
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
    let hist = s
        .historical_bests
        .clone()
        .expect("layout declares historical bests");
    let flames = Population::from_members(hist.clone()).ranking();
    let count = DecaySchedule::linear(n as f64, 1.0)
        .at(budget.progress(&s.population))
        .round()
        .max(1.0) as usize;
    let moths = s.population.ranking();

    for (rank, &i) in moths.iter().enumerate() {
        let x = s.population.members[i].position.clone();
        let mut f = rank.min(count - 1);
        // A moth sitting on its flame would not move; it follows a neighbour flame.
        if hist[flames[f]].position == x && count > 1 {
            f = if f + 1 < count { f + 1 } else { f - 1 };
        }
        let flame = &hist[flames[f]].position;
        let y = spiral_move(&x, flame, p.get("turns"), rng.uniform())?;
        let cand = budget.evaluate(&mut s.population, y)?;
        s.remember(i, &cand);
        s.population.members[i] = cand;
    }
    Ok(StepOutcome::Continue)
}
