use std::collections::HashSet;

use crate::algebra::{Chain, ChainElement};
use crate::error::CheckError;

use super::source::{self, ValuationSource, TUPLE_BUDGET};
use super::{check_equation, probe, Config, Equation, Verdict};

/// Limits for [`find_counterexample`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest grid denominator reached by deepening.
    pub max_denom: u32,
    /// Largest Chang index reached by deepening.
    pub max_chang: u64,
    /// Random valuations tried after deepening.
    pub samples: u64,
    pub seed: u64,
}

impl Budget {
    pub fn from_config(config: &Config) -> Budget {
        Budget {
            max_denom: config.denominator_bound.max(1),
            max_chang: config.chang_index_bound,
            samples: config.sample_count,
            seed: config.seed,
        }
    }
}

/// Searches for a violation of `e`.
///
/// Finite chains are enumerated exhaustively. Otherwise the point set grows
/// level by level (all fractions with denominator `<= level + 1`, Chang
/// indices `<= level`) and only tuples touching a new point are tried, so the
/// first witness has the smallest denominators / indices possible, ties
/// broken lexicographically in variable order. Deepening stops at the budget
/// or when the next level would exceed [`TUPLE_BUDGET`] tuples; seeded
/// random valuations follow.
pub fn find_counterexample(e: &Equation, chain: &Chain, budget: &Budget) -> Result<Verdict, CheckError> {
    e.require_bounds(chain)?;
    if chain.is_finite() {
        return check_equation(e, chain, &ValuationSource::Exhaustive);
    }
    let arity = e.vars.len();
    let mut probe = probe(e, chain);
    let mut checked = 0u64;
    let mut seen: HashSet<ChainElement> = HashSet::new();
    let mut points: Vec<ChainElement> = Vec::new();
    let (mut reached_d, mut reached_n) = (0u32, 0u64);
    for level in 1u64.. {
        let d = (level + 1).min(budget.max_denom as u64) as u32;
        let n = level.min(budget.max_chang);
        let mut next = points.clone();
        next.extend(source::points(chain, &ValuationSource::Grid(d))?);
        next.extend(source::points(chain, &ValuationSource::ChangIndices(n))?);
        source::sort_dedup(chain, &mut next)?;
        if next.len() > points.len() {
            let fits = next.len().checked_pow(arity as u32).is_some_and(|t| t <= TUPLE_BUDGET);
            if !fits {
                break;
            }
            if let Some(v) = source::enumerate(&e.vars, &next, Some(&seen), &mut probe, &mut checked)? {
                return Ok(v);
            }
            seen.extend(next.iter().cloned());
            points = next;
            (reached_d, reached_n) = (d, n);
        }
        if d == budget.max_denom && n == budget.max_chang {
            break;
        }
    }
    let random = [(budget.samples, budget.seed, budget.max_denom)];
    if let Some(v) = source::sample(chain, &e.vars, &random, &mut probe, &mut checked)? {
        return Ok(v);
    }
    Ok(Verdict::Holds {
        checked,
        source: format!(
            "deepening(d<={reached_d},chang<={reached_n})+random({},seed={:#x},d={})",
            budget.samples, budget.seed, budget.max_denom
        ),
        decided: false,
    })
}
