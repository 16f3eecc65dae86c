//! Valuation sources: where the tuples of elements tested by a check come from.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Chain, ChainElement, PointBounds};
use crate::error::CheckError;
use crate::valuation::Valuation;

use super::{Config, Verdict};

/// Highest `omega*` component index visited by grids and random draws.
pub const OMEGA_COMPONENTS: usize = 5;

/// Cap on enumerated tuples for the default sources; grids shrink to fit.
pub const TUPLE_BUDGET: usize = 32_768;

/// Deterministic generator of valuations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValuationSource {
    /// Every tuple over a finite carrier.
    Exhaustive,
    /// Every tuple over the uniform grid `{i/d}` of each rational component.
    Grid(u32),
    /// `count` tuples drawn with a seeded generator; rational denominators
    /// (and Chang indices) are bounded by `denom`.
    Random { count: u64, seed: u64, denom: u32 },
    /// Every tuple over `a_n`, `b_n` with `n <= N` in each Chang component.
    ChangIndices(u64),
    /// The enumerable parts are merged into one point set (so tuples cross
    /// components); random parts follow in order. Inapplicable parts are
    /// skipped.
    Mixed(Vec<ValuationSource>),
}

impl fmt::Display for ValuationSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValuationSource::Exhaustive => write!(f, "exhaustive"),
            ValuationSource::Grid(d) => write!(f, "grid({d})"),
            ValuationSource::Random { count, seed, denom } => {
                write!(f, "random({count},seed={seed:#x},d={denom})")
            }
            ValuationSource::ChangIndices(n) => write!(f, "chang({n})"),
            ValuationSource::Mixed(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug)]
struct Plan {
    points: Vec<ChainElement>,
    random: Vec<(u64, u64, u32)>,
    description: String,
}

fn bounds(denom: Option<u32>, chang: Option<u64>) -> PointBounds {
    PointBounds {
        denom,
        chang,
        components: OMEGA_COMPONENTS,
    }
}

fn plan(src: &ValuationSource, chain: &Chain) -> Result<Plan, CheckError> {
    let enumerated = |points: Vec<ChainElement>, what: &str| {
        if points.is_empty() {
            Err(CheckError::Strategy(format!("{what} does not apply to {chain}")))
        } else {
            Ok(Plan {
                points,
                random: vec![],
                description: src.to_string(),
            })
        }
    };
    match src {
        ValuationSource::Exhaustive => match chain.carrier() {
            Some(points) => enumerated(points, "exhaustive"),
            None => Err(CheckError::Strategy(format!(
                "exhaustive enumeration needs a finite chain, {chain} is infinite"
            ))),
        },
        ValuationSource::Grid(d) => {
            if *d == 0 {
                return Err(CheckError::Strategy("grid(0) is empty".into()));
            }
            enumerated(chain.sample_points(&bounds(Some(*d), None)), &src.to_string())
        }
        ValuationSource::ChangIndices(n) => enumerated(chain.sample_points(&bounds(None, Some(*n))), &src.to_string()),
        ValuationSource::Random { count, seed, denom } => Ok(Plan {
            points: vec![],
            random: vec![(*count, *seed, *denom)],
            description: src.to_string(),
        }),
        ValuationSource::Mixed(parts) => {
            let mut points = Vec::new();
            let mut random = Vec::new();
            let mut used = Vec::new();
            for p in parts {
                match plan(p, chain) {
                    Ok(sub) => {
                        points.extend(sub.points);
                        random.extend(sub.random);
                        used.push(sub.description);
                    }
                    Err(CheckError::Strategy(_)) => {}
                    Err(e) => return Err(e),
                }
            }
            if used.is_empty() {
                return Err(CheckError::Strategy(format!("no part of {src} applies to {chain}")));
            }
            sort_dedup(chain, &mut points)?;
            Ok(Plan {
                points,
                random,
                description: used.join("+"),
            })
        }
    }
}

pub(crate) fn sort_dedup(chain: &Chain, points: &mut Vec<ChainElement>) -> Result<(), CheckError> {
    let mut err = None;
    points.sort_by(|a, b| {
        chain.cmp(a, b).unwrap_or_else(|e| {
            err.get_or_insert(e);
            Ordering::Equal
        })
    });
    if let Some(e) = err {
        return Err(e.into());
    }
    points.dedup();
    Ok(())
}

/// Outcome of testing one valuation: `Some((lhs, rhs))` on a violation.
pub(crate) type Probe<'a> = dyn FnMut(&[ChainElement]) -> Result<Option<(ChainElement, ChainElement)>, CheckError> + 'a;

/// Feeds every valuation of `vars` generated by `src` to `probe`, stopping
/// at the first violation. Enumerated tuples come first, in lexicographic
/// order of the variable list over ascending points; random tuples follow.
pub(crate) fn run(
    chain: &Chain,
    vars: &[String],
    src: &ValuationSource,
    probe: &mut Probe<'_>,
) -> Result<Verdict, CheckError> {
    let plan = plan(src, chain)?;
    let mut checked = 0u64;
    if let Some(v) = enumerate(vars, &plan.points, None, probe, &mut checked)? {
        return Ok(v);
    }
    if let Some(v) = sample(chain, vars, &plan.random, probe, &mut checked)? {
        return Ok(v);
    }
    let decided = plan.random.is_empty() && chain.size().is_some_and(|s| s == plan.points.len());
    Ok(Verdict::Holds {
        checked,
        source: plan.description,
        decided,
    })
}

/// Ascending enumerable points of `src` (empty when none apply).
pub(crate) fn points(chain: &Chain, src: &ValuationSource) -> Result<Vec<ChainElement>, CheckError> {
    match plan(src, chain) {
        Ok(p) => Ok(p.points),
        Err(CheckError::Strategy(_)) => Ok(vec![]),
        Err(e) => Err(e),
    }
}

fn fail(vars: &[String], tuple: &[ChainElement], (lhs, rhs): (ChainElement, ChainElement)) -> Verdict {
    Verdict::Fails {
        valuation: Valuation::from_parts(vars, tuple),
        lhs,
        rhs,
    }
}

/// Lexicographic enumeration of `points^vars`, last variable fastest.
/// Tuples lying entirely inside `skip` are passed over.
pub(crate) fn enumerate(
    vars: &[String],
    points: &[ChainElement],
    skip: Option<&HashSet<ChainElement>>,
    probe: &mut Probe<'_>,
    checked: &mut u64,
) -> Result<Option<Verdict>, CheckError> {
    let n = points.len();
    if n == 0 {
        return Ok(None);
    }
    let arity = vars.len();
    let fresh: Vec<bool> = points.iter().map(|p| skip.is_none_or(|s| !s.contains(p))).collect();
    let mut idx = vec![0usize; arity];
    let mut tuple: Vec<ChainElement> = vec![points[0].clone(); arity];
    loop {
        let new = skip.is_none() || idx.iter().any(|&i| fresh[i]);
        if new {
            *checked += 1;
            if let Some(v) = probe(&tuple)? {
                return Ok(Some(fail(vars, &tuple, v)));
            }
        }
        let mut k = arity;
        loop {
            if k == 0 {
                return Ok(None);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < n {
                tuple[k] = points[idx[k]].clone();
                break;
            }
            idx[k] = 0;
            tuple[k] = points[0].clone();
        }
    }
}

/// Seeded random tuples; one draw suffices for closed terms.
pub(crate) fn sample(
    chain: &Chain,
    vars: &[String],
    random: &[(u64, u64, u32)],
    probe: &mut Probe<'_>,
    checked: &mut u64,
) -> Result<Option<Verdict>, CheckError> {
    let arity = vars.len();
    for &(count, seed, denom) in random {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let count = if arity == 0 { count.min(1) } else { count };
        for _ in 0..count {
            let tuple: Vec<ChainElement> = (0..arity)
                .map(|_| chain.random_element(&mut rng, denom, OMEGA_COMPONENTS))
                .collect();
            *checked += 1;
            if let Some(v) = probe(&tuple)? {
                return Ok(Some(fail(vars, &tuple, v)));
            }
        }
    }
    Ok(None)
}

/// The configured default for `arity`-variable checks on `chain`:
/// exhaustive on finite chains; otherwise the grid and Chang indices of the
/// config, shrunk until the enumerated tuples fit [`TUPLE_BUDGET`], plus the
/// configured random samples.
pub fn default_source(chain: &Chain, config: &Config, arity: usize) -> ValuationSource {
    if chain.is_finite() {
        return ValuationSource::Exhaustive;
    }
    let (mut d, mut n) = (config.denominator_bound.max(1), config.chang_index_bound);
    loop {
        let pts = chain.sample_points(&bounds(Some(d), Some(n))).len();
        let fits = pts.checked_pow(arity as u32).is_some_and(|t| t <= TUPLE_BUDGET);
        if fits || (d == 1 && n == 0) {
            break;
        }
        d = d.saturating_sub((d / 8).max(1)).max(1);
        n = n.saturating_sub((n / 8).max(1));
    }
    ValuationSource::Mixed(vec![
        ValuationSource::Grid(d),
        ValuationSource::ChangIndices(n),
        ValuationSource::Random {
            count: config.sample_count,
            seed: config.seed,
            denom: config.denominator_bound.max(1),
        },
    ])
}
