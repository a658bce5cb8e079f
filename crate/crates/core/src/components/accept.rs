use crate::engine::{Candidate, RngStream};
use crate::error::{invalid, Result};

fn both_evaluated(old: &Candidate, new: &Candidate) -> Result<()> {
    if old.is_evaluated() && new.is_evaluated() {
        Ok(())
    } else {
        Err(invalid("acceptance requires evaluated candidates"))
    }
}

/// Keeps whichever candidate has the lower value; a tie keeps `old`.
pub fn greedy_accept(old: Candidate, new: Candidate) -> Result<Candidate> {
    both_evaluated(&old, &new)?;
    Ok(if new.cost() < old.cost() { new } else { old })
}

/// Always accepts an improvement; accepts a worsening `new` with probability
/// `acceptance`. A draw is consumed only for worsening moves with
/// `0 < acceptance < 1`.
pub fn probabilistic_accept(
    old: Candidate,
    new: Candidate,
    acceptance: f64,
    rng: &mut RngStream,
) -> Result<Candidate> {
    both_evaluated(&old, &new)?;
    if !(0.0..=1.0).contains(&acceptance) {
        return Err(invalid(format!(
            "acceptance probability {acceptance} outside [0, 1]"
        )));
    }
    if new.cost() < old.cost() {
        return Ok(new);
    }
    let take = if acceptance == 0.0 {
        false
    } else if acceptance == 1.0 {
        true
    } else {
        rng.bernoulli(acceptance)
    };
    Ok(if take { new } else { old })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: f64) -> Candidate {
        Candidate::evaluated(vec![v], v)
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_accept(c(3.0), c(2.0)).unwrap(), c(2.0));
        assert_eq!(greedy_accept(c(2.0), c(3.0)).unwrap(), c(2.0));
        let old = Candidate::evaluated(vec![0.0], 2.0);
        let new = Candidate::evaluated(vec![1.0], 2.0);
        assert_eq!(greedy_accept(old.clone(), new).unwrap(), old);
    }

    #[test]
    fn unevaluated_is_rejected() {
        let u = Candidate::unevaluated(vec![0.0]);
        assert!(greedy_accept(u.clone(), c(1.0)).is_err());
        let mut rng = RngStream::new(0);
        assert!(probabilistic_accept(c(1.0), u, 0.5, &mut rng).is_err());
    }

    #[test]
    fn probabilistic_extremes() {
        let mut rng = RngStream::new(0);
        assert_eq!(
            probabilistic_accept(c(2.0), c(3.0), 0.0, &mut rng).unwrap(),
            c(2.0)
        );
        assert_eq!(
            probabilistic_accept(c(2.0), c(3.0), 1.0, &mut rng).unwrap(),
            c(3.0)
        );
        assert_eq!(
            probabilistic_accept(c(3.0), c(2.0), 0.0, &mut rng).unwrap(),
            c(2.0)
        );
        assert!(probabilistic_accept(c(2.0), c(3.0), 1.5, &mut rng).is_err());
        assert!(probabilistic_accept(c(2.0), c(3.0), -0.1, &mut rng).is_err());
    }

    #[test]
    fn probabilistic_frequency() {
        let mut rng = RngStream::new(21);
        let n = 10_000;
        let taken = (0..n)
            .filter(|_| {
                probabilistic_accept(c(1.0), c(2.0), 0.3, &mut rng)
                    .unwrap()
                    .cost()
                    == 2.0
            })
            .count();
        let f = taken as f64 / n as f64;
        assert!((f - 0.3).abs() <= 0.02, "{f}");
    }
}
