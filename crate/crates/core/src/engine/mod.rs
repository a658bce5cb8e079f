//! Search-space and population primitives, the seeded random stream, and the
//! synchronous iteration loop every optimizer runs under.
//!
//! All optimizers minimize. Evaluations are counted against a fixed budget and
//! every evaluated point is projected into the search box first, so the
//! population never leaves the space.

mod population;
mod rng;
mod run;
mod space;
mod trace;

pub(crate) use population::uniform_point;
pub use population::{init_population, Budget, BudgetExhausted, Candidate, Objective, Population};
pub use rng::RngStream;
pub use run::{run, Optimizer, RunResult, StepError, StepOutcome};
pub use space::{clamp, SearchSpace};
pub use trace::{RunTrace, TraceRecord};
