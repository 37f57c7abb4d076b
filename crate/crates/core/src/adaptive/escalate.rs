use crate::error::{Error, Result};
use crate::mp::MIN_DIGITS;

/// Double-precision spacing `2^-52`.
pub const EPSILON: f64 = f64::EPSILON;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepMode {
    /// `k, k+1, k+2, …`
    Fine,
    /// Probe `(k, k+1)` every `s` digits, then scan the last gap one digit at a time.
    Coarse(u32),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EscalationConfig {
    pub floor: u32,
    pub ceiling: u32,
    pub epsilon: f64,
    pub step: StepMode,
}

impl Default for EscalationConfig {
    fn default() -> Self {
        Self {
            floor: MIN_DIGITS,
            ceiling: 2500,
            epsilon: EPSILON,
            step: StepMode::Fine,
        }
    }
}

impl EscalationConfig {
    pub fn coarse(mut self, step: u32) -> Self {
        self.step = StepMode::Coarse(step.max(1));
        self
    }
}

/// Outcome of a successful escalation.
#[derive(Clone, Debug)]
pub struct Escalation<T> {
    /// Accepted digit count `k`.
    pub digits: u32,
    /// Result at `k` digits.
    pub accepted: T,
    /// Result at `k + 1` digits.
    pub next: T,
    /// Number of evaluations performed.
    pub evaluations: u32,
}

/// Smallest `k >= start` (scanned per `cfg.step`) with
/// `converged(eval(k), eval(k + 1))`.
pub fn escalate<T, E, C>(start: u32, cfg: &EscalationConfig, mut eval: E, mut converged: C) -> Result<Escalation<T>>
where
    E: FnMut(u32) -> Result<T>,
    C: FnMut(&T, &T) -> bool,
{
    let start = start.max(cfg.floor).max(MIN_DIGITS);
    let ceiling_error = Error::EscalationCeiling { ceiling: cfg.ceiling };
    if start + 1 > cfg.ceiling {
        return Err(ceiling_error);
    }
    let mut evaluations = 0;
    let mut fine = |from: u32, to: u32, evaluations: &mut u32, eval: &mut E| -> Result<Option<Escalation<T>>> {
        let mut k = from;
        let mut cur = eval(k)?;
        *evaluations += 1;
        while k < to {
            let next = eval(k + 1)?;
            *evaluations += 1;
            if converged(&cur, &next) {
                return Ok(Some(Escalation {
                    digits: k,
                    accepted: cur,
                    next,
                    evaluations: *evaluations,
                }));
            }
            cur = next;
            k += 1;
        }
        Ok(None)
    };
    match cfg.step {
        StepMode::Fine => fine(start, cfg.ceiling, &mut evaluations, &mut eval)?.ok_or(ceiling_error),
        StepMode::Coarse(s) => {
            let mut lo = start;
            // probes at lo, lo + s, …; each probe is a fine scan of one step
            loop {
                if let Some(hit) = fine(lo, lo + 1, &mut evaluations, &mut eval)? {
                    // the previous probe at lo - s failed; rescan the gap above it
                    let refined = if lo > start {
                        fine(lo - s + 1, lo, &mut evaluations, &mut eval)?
                    } else {
                        None
                    };
                    let mut e = refined.unwrap_or(hit);
                    e.evaluations = evaluations;
                    return Ok(e);
                }
                if lo + s + 1 > cfg.ceiling {
                    break;
                }
                lo += s;
            }
            // the last partial gap below the ceiling
            fine(lo + 1, cfg.ceiling, &mut evaluations, &mut eval)?.ok_or(ceiling_error)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Converges from digit `t` on: values agree when both are at least `t`.
    fn run(t: u32, start: u32, cfg: EscalationConfig) -> Result<Escalation<u32>> {
        escalate(start, &cfg, |k| Ok(k.min(t)), |a, b| a == b)
    }

    #[test]
    fn fine_finds_first() {
        let e = run(40, 16, EscalationConfig::default()).unwrap();
        assert_eq!((e.digits, e.accepted, e.next), (40, 40, 40));
        assert_eq!(e.evaluations, 26);
    }

    #[test]
    fn floor_is_respected() {
        let e = run(3, 2, EscalationConfig::default()).unwrap();
        assert_eq!(e.digits, 16);
        let e = run(3, 30, EscalationConfig::default()).unwrap();
        assert_eq!(e.digits, 30);
    }

    #[test]
    fn ceiling_is_an_error() {
        let cfg = EscalationConfig {
            ceiling: 50,
            ..Default::default()
        };
        assert_eq!(run(60, 16, cfg).unwrap_err(), Error::EscalationCeiling { ceiling: 50 });
        assert_eq!(run(49, 16, cfg).unwrap().digits, 49);
        assert!(run(50, 16, cfg).is_err());
        assert!(run(60, 16, cfg.coarse(8)).is_err());
    }

    #[test]
    fn coarse_matches_fine() {
        for t in 16..120 {
            for s in [1, 3, 8] {
                let fine = run(t, 16, EscalationConfig::default()).unwrap();
                let coarse = run(t, 16, EscalationConfig::default().coarse(s)).unwrap();
                assert_eq!(fine.digits, coarse.digits, "t={t} s={s}");
            }
        }
        let fine = run(150, 16, EscalationConfig::default()).unwrap();
        let coarse = run(150, 16, EscalationConfig::default().coarse(8)).unwrap();
        assert!(coarse.evaluations < fine.evaluations / 2);
    }

    #[test]
    fn coarse_near_ceiling() {
        let cfg = EscalationConfig {
            ceiling: 45,
            ..Default::default()
        }
        .coarse(8);
        for t in 16..45 {
            assert_eq!(run(t, 16, cfg).unwrap().digits, t, "t={t}");
        }
    }
}
