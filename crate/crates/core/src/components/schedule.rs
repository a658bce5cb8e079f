use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScheduleKind {
    /// `start + (end - start)·τ`
    Linear,
    /// `start·(end/start)^τ`; `start` and `end` must share a sign and be
    /// non-zero.
    Exponential,
    /// `end + (start - end)·(1 - τ)^exponent`
    Power,
}

/// A parameter that moves monotonically from `start` to `end` over a
/// horizon, with `τ = t / T` the elapsed fraction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecaySchedule {
    pub kind: ScheduleKind,
    pub start: f64,
    pub end: f64,
    pub exponent: f64,
}

impl DecaySchedule {
    pub fn linear(start: f64, end: f64) -> Self {
        Self {
            kind: ScheduleKind::Linear,
            start,
            end,
            exponent: 1.0,
        }
    }

    pub fn exponential(start: f64, end: f64) -> Result<Self> {
        if start == 0.0 || end == 0.0 || start.signum() != end.signum() {
            return Err(invalid(format!(
                "exponential schedule needs non-zero endpoints of one sign, got {start} -> {end}"
            )));
        }
        Ok(Self {
            kind: ScheduleKind::Exponential,
            start,
            end,
            exponent: 1.0,
        })
    }

    pub fn power(start: f64, end: f64, exponent: f64) -> Result<Self> {
        if !(exponent > 0.0) {
            return Err(invalid(format!(
                "power schedule exponent {exponent} must be positive"
            )));
        }
        Ok(Self {
            kind: ScheduleKind::Power,
            start,
            end,
            exponent,
        })
    }

    /// Value at elapsed fraction `tau`, clamped to `[0, 1]`. Endpoints are
    /// returned exactly.
    pub fn at(&self, tau: f64) -> f64 {
        let tau = tau.clamp(0.0, 1.0);
        if tau == 0.0 {
            return self.start;
        }
        if tau == 1.0 {
            return self.end;
        }
        match self.kind {
            ScheduleKind::Linear => self.start + (self.end - self.start) * tau,
            ScheduleKind::Exponential => self.start * (self.end / self.start).powf(tau),
            ScheduleKind::Power => self.end + (self.start - self.end) * (1.0 - tau).powf(self.exponent),
        }
    }
}

/// Value of `schedule` at iteration `t` of a horizon of `horizon` iterations.
pub fn schedule_value(schedule: &DecaySchedule, t: usize, horizon: usize) -> Result<f64> {
    if horizon == 0 {
        return Err(invalid("schedule horizon must be at least 1"));
    }
    if t > horizon {
        return Err(invalid(format!("schedule time {t} beyond horizon {horizon}")));
    }
    Ok(schedule.at(t as f64 / horizon as f64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_and_midpoint() {
        let lin = DecaySchedule::linear(1.0, 0.0);
        assert_eq!(schedule_value(&lin, 5, 10).unwrap(), 0.5);
        assert_eq!(schedule_value(&lin, 0, 10).unwrap(), 1.0);
        assert_eq!(schedule_value(&lin, 10, 10).unwrap(), 0.0);

        let exp = DecaySchedule::exponential(1.0, 0.01).unwrap();
        assert_eq!(schedule_value(&exp, 0, 7).unwrap(), 1.0);
        assert_eq!(schedule_value(&exp, 7, 7).unwrap(), 0.01);
        assert!((schedule_value(&exp, 1, 2).unwrap() - 0.1).abs() < 1e-15);

        let pow = DecaySchedule::power(3.0, 0.5, 2.0).unwrap();
        assert_eq!(schedule_value(&pow, 0, 4).unwrap(), 3.0);
        assert_eq!(schedule_value(&pow, 4, 4).unwrap(), 0.5);
        assert_eq!(schedule_value(&pow, 2, 4).unwrap(), 0.5 + 2.5 * 0.25);
    }

    #[test]
    fn errors() {
        let lin = DecaySchedule::linear(1.0, 0.0);
        assert!(schedule_value(&lin, 11, 10).is_err());
        assert!(schedule_value(&lin, 0, 0).is_err());
        assert!(DecaySchedule::exponential(1.0, 0.0).is_err());
        assert!(DecaySchedule::exponential(-1.0, 1.0).is_err());
        assert!(DecaySchedule::power(1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn schedules_are_monotone() {
        let all = [
            DecaySchedule::linear(2.0, 0.0),
            DecaySchedule::linear(0.1, 0.9),
            DecaySchedule::exponential(0.5, 1e-6).unwrap(),
            DecaySchedule::power(1.0, 0.01, 3.0).unwrap(),
        ];
        for s in all {
            let vals: Vec<f64> = (0..=100).map(|t| schedule_value(&s, t, 100).unwrap()).collect();
            let up = vals.windows(2).all(|w| w[1] >= w[0]);
            let down = vals.windows(2).all(|w| w[1] <= w[0]);
            assert!(up || down, "{s:?}");
        }
    }
}
