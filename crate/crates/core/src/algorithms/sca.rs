use super::{coord_scale, standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{greedy_accept, kmeans, move_toward};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

// Constraint handling from the original method is out of scope; the
// library is unconstrained and box-bounded.
pub(super) const PROFILE: Profile = Profile {
    summary: "Society and civilisation: cluster, followers move toward their cluster leaders, then lagging leaders move toward the best leaders.",
    population: 50,
    min_population: 2,
    population_doc: "common baseline size",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::int("clusters", 5.0, 1.0, 1000.0, "number of societies"),
        ParamSpec::real("leader_fraction", 0.3, 0.0, 1.0, "share of each society acting as leaders (at least one)"),
        ParamSpec::real("jitter", 0.2, 0.0, 10.0, "jitter as a fraction of the population spread"),
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
    let jitter = p.get("jitter") * coord_scale(&s.population, budget);
    let clusters = kmeans(&s.population.positions(), p.count("clusters").min(n), rng)?;
    let snapshot = s.population.members.clone();
    let by_value = |a: &usize, b: &usize| snapshot[*a].cost().total_cmp(&snapshot[*b].cost()).then(a.cmp(b));

    let mut leaders = Vec::new();
    for c in &clusters {
        let mut m = c.members.clone();
        m.sort_by(by_value);
        let k = ((p.get("leader_fraction") * m.len() as f64).ceil() as usize).clamp(1, m.len());
        for &i in &m[k..] {
            let target = &snapshot[m[rng.index(k)]].position;
            let y = move_toward(&snapshot[i].position, target, rng.uniform(), jitter, rng)?;
            s.population.members[i] = budget.evaluate(&mut s.population, y)?;
        }
        leaders.extend_from_slice(&m[..k]);
    }

    leaders.sort_by(by_value);
    let top = leaders.len().div_ceil(2);
    for &i in &leaders[top..] {
        let target = &snapshot[leaders[rng.index(top)]].position;
        let y = move_toward(&snapshot[i].position, target, rng.uniform(), jitter, rng)?;
        let cand = budget.evaluate(&mut s.population, y)?;
        s.population.members[i] = greedy_accept(snapshot[i].clone(), cand)?;
    }
    Ok(StepOutcome::Continue)
}
