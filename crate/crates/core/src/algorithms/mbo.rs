use super::{coord_scale, AlgorithmParams, AlgorithmState, OperatorStats, ParamSpec, Profile, StateLayout};
use crate::components::{
    gaussian_sample, greedy_accept, random_walk, recombine, roulette, truncation_select, DecaySchedule,
};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Marriage in honey bees: queens walk with decaying steps and mate with value-dependent probability; broods get adaptive local search.",
    population: 20,
    min_population: 1,
    population_doc: "walks and broods multiply evaluations, so a smaller population",
    layout: StateLayout {
        operator_stats: true,
        ..StateLayout::NONE
    },
    params: &[
        ParamSpec::int("queens", 3.0, 1.0, 1000.0, "best members that walk and mate"),
        ParamSpec::int("walk_length", 6.0, 1.0, 1000.0, "walk steps per queen"),
        ParamSpec::real("step_start", 0.2, 1e-9, 2.0, "walk step deviation of width at the start"),
        ParamSpec::real("step_end", 1e-7, 1e-12, 2.0, "walk step deviation of width at the end"),
        ParamSpec::real("walk_decay", 0.8, 0.0, 1.0, "step and temperature shrink per walk step"),
        ParamSpec::real("temperature", 1.0, 1e-9, 100.0, "mating temperature in units of the population's value deviation"),
        ParamSpec::real("small_jitter", 0.1, 0.0, 10.0, "small local-search deviation, in population spreads"),
        ParamSpec::real("large_jitter", 1.0, 0.0, 10.0, "large local-search deviation, in population spreads"),
    ],
    check: Some(|p| {
        if p.count("queens") <= p.population_size {
            Ok(())
        } else {
            Err("more queens than members".into())
        }
    }),
};

const OPERATORS: usize = 3;

pub(super) fn init(p: &AlgorithmParams, budget: &Budget<'_>, rng: &mut RngStream) -> Result<AlgorithmState> {
    let mut s = AlgorithmState::standard(&PROFILE.layout, p.population_size, budget, rng)?;
    s.operator_stats = Some(vec![OperatorStats::default(); OPERATORS]);
    Ok(s)
}

pub(super) fn step(
    p: &AlgorithmParams,
    s: &mut AlgorithmState,
    budget: &Budget<'_>,
    rng: &mut RngStream,
) -> Result<StepOutcome, StepError> {
    let space = budget.space();
    let n = s.population.len();
    let order = s.population.ranking();
    let queens: Vec<_> = order[..p.count("queens")]
        .iter()
        .map(|&i| s.population.members[i].clone())
        .collect();
    let (_, value_sd) = s.population.value_stats();
    let scale = coord_scale(&s.population, budget);
    let mut sigma0 = DecaySchedule::exponential(p.get("step_start"), p.get("step_end"))?
        .at(budget.progress(&s.population))
        * space.mean_width();
    sigma0 = sigma0.max(1e-12 * space.mean_width());
    let decay = p.get("walk_decay");

    let mut broods = Vec::new();
    for queen in &queens {
        let mut temp = p.get("temperature") * value_sd.max(1e-300);
        let mut sigma = sigma0;
        let mut pos = queen.position.clone();
        for _ in 0..p.count("walk_length") {
            let dims = pos.len();
            pos = random_walk(
                &pos,
                1,
                space,
                |r| gaussian_sample(&vec![0.0; dims], sigma, r),
                rng,
            )?
            .remove(1);
            let drone = budget.evaluate(&mut s.population, pos.clone())?;
            let gap = (drone.cost() - queen.cost()).max(0.0);
            if rng.bernoulli((-gap / temp).exp()) {
                let child = recombine(&queen.position, &drone.position, rng)?;
                broods.push(budget.evaluate(&mut s.population, child)?);
            }
            sigma *= decay;
            temp *= decay;
        }
    }

    for b in broods.iter_mut() {
        let stats = s.operator_stats.as_ref().expect("layout declares operator stats");
        let rates: Vec<f64> = stats.iter().map(OperatorStats::rate).collect();
        let op = roulette(&rates, rng)?;
        let y = match op {
            0 => gaussian_sample(&b.position, p.get("small_jitter") * scale, rng)?,
            1 => gaussian_sample(&b.position, p.get("large_jitter") * scale, rng)?,
            _ => {
                let mut y = b.position.clone();
                let d = rng.index(y.len());
                y[d] = rng.range(space.lower()[d], space.upper()[d]);
                y
            }
        };
        let cand = budget.evaluate(&mut s.population, y)?;
        let success = cand.cost() < b.cost();
        let st = &mut s.operator_stats.as_mut().expect("layout declares operator stats")[op];
        st.trials += 1;
        st.successes += usize::from(success);
        *b = greedy_accept(b.clone(), cand)?;
    }

    let mut merged = s.population.members.clone();
    merged.extend(broods);
    let keep = truncation_select(&merged, n)?;
    s.population.members = keep.into_iter().map(|i| merged[i].clone()).collect();
    Ok(StepOutcome::Continue)
}
