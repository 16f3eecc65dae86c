//! Identity checking over chains, counterexample search, and the claims
//! suite.

mod catalog;
mod enumerate;
mod search;
pub(crate) mod source;
mod suite;
mod term;

use std::fmt;

use crate::algebra::{Chain, ChainElement};
use crate::error::CheckError;
use crate::valuation::Valuation;

pub use catalog::{equation, equation_names, resolve};
pub use enumerate::enumerate_finite_sums;
pub use search::{find_counterexample, Budget};
pub use source::{default_source, ValuationSource, OMEGA_COMPONENTS, TUPLE_BUDGET};
pub use suite::{verify_claims_suite, ClaimRecord, Outcome, SuiteReport};
pub use term::{eval_term, Equation, Term};

/// How reports are printed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputMode {
    #[default]
    Human,
    /// One JSON object per line.
    Machine,
}

/// Run configuration; every result is determined by it and the arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    pub sample_count: u64,
    pub denominator_bound: u32,
    pub chang_index_bound: u64,
    pub output_mode: OutputMode,
    /// Record wall-clock times. Off by default so machine output is
    /// reproducible byte for byte.
    pub timing: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0xB1C,
            sample_count: 10_000,
            denominator_bound: 64,
            chang_index_bound: 50,
            output_mode: OutputMode::Human,
            timing: false,
        }
    }
}

/// Result of a check. Only `decided` holds (exhaustive over a finite
/// carrier) are proofs; the others hold up to the stated source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds {
        checked: u64,
        source: String,
        decided: bool,
    },
    Fails {
        valuation: Valuation,
        lhs: ChainElement,
        rhs: ChainElement,
    },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. })
    }

    pub fn fails(&self) -> bool {
        !self.holds()
    }

    pub fn witness(&self) -> Option<&Valuation> {
        match self {
            Verdict::Fails { valuation, .. } => Some(valuation),
            Verdict::Holds { .. } => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds {
                checked,
                source,
                decided: true,
            } => write!(f, "holds (decided: {checked} valuations, {source})"),
            Verdict::Holds { checked, source, .. } => {
                write!(f, "holds up to {source} ({checked} valuations)")
            }
            Verdict::Fails { valuation, lhs, rhs } => {
                write!(f, "fails at {{{valuation}}}: lhs {lhs}, rhs {rhs}")
            }
        }
    }
}

/// Compares both sides exactly at every valuation of `src`, returning the
/// first failure in enumeration order.
pub fn check_equation(e: &Equation, chain: &Chain, src: &ValuationSource) -> Result<Verdict, CheckError> {
    e.require_bounds(chain)?;
    source::run(chain, &e.vars, src, &mut probe(e, chain))
}

pub(crate) fn probe<'a>(
    e: &'a Equation,
    chain: &'a Chain,
) -> impl FnMut(&[ChainElement]) -> Result<Option<(ChainElement, ChainElement)>, CheckError> + 'a {
    move |tuple| {
        let lookup = |name: &str| e.vars.iter().position(|v| v == name).map(|i| &tuple[i]);
        let l = term::eval_raw(&e.lhs, chain, &lookup)?;
        let r = term::eval_raw(&e.rhs, chain, &lookup)?;
        Ok((l != r).then_some((l, r)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cha_on_lukasiewicz_grid() {
        let c = Chain::parse("LukStd").unwrap();
        let cha = equation("cha").unwrap();
        match check_equation(&cha, &c, &ValuationSource::Grid(5)).unwrap() {
            Verdict::Fails { valuation, lhs, rhs } => {
                assert_eq!(valuation.to_string(), "x=2/5");
                assert_eq!(lhs, ChainElement::rat(3, 5));
                assert_eq!(rhs, ChainElement::rat(0, 1));
            }
            other => panic!("{other}"),
        }
        // the uniform grid of tenths meets 3/10 first
        let v = check_equation(&cha, &c, &ValuationSource::Grid(10)).unwrap();
        assert_eq!(v.witness().unwrap().to_string(), "x=3/10");
    }

    #[test]
    fn cha_on_chang_indices() {
        let c = Chain::parse("C").unwrap();
        let v = check_equation(&equation("cha").unwrap(), &c, &ValuationSource::ChangIndices(50)).unwrap();
        assert!(
            matches!(
                v,
                Verdict::Holds {
                    checked: 102,
                    decided: false,
                    ..
                }
            ),
            "{v}"
        );
    }

    #[test]
    fn syntactic_identity_holds() {
        let e = Equation::parse("refl", "x & (y -> x) = x & (y -> x)").unwrap();
        for c in ["LukStd", "C", "V", "Canc", "omega*V", "G(4)"] {
            let c = Chain::parse(c).unwrap();
            let src = default_source(&c, &Config::default(), e.vars.len());
            assert!(check_equation(&e, &c, &src).unwrap().holds());
        }
    }

    #[test]
    fn witnesses_replay() {
        let c = Chain::parse("C ++ LukStd").unwrap();
        let e = equation("cha").unwrap();
        let v = check_equation(&e, &c, &default_source(&c, &Config::default(), 1)).unwrap();
        let Verdict::Fails { valuation, lhs, rhs } = v else {
            panic!("{v}")
        };
        assert_eq!(eval_term(&e.lhs, &c, &valuation).unwrap(), lhs);
        assert_eq!(eval_term(&e.rhs, &c, &valuation).unwrap(), rhs);
    }

    #[test]
    fn bounded_terms_on_hoops() {
        let c = Chain::parse("Canc").unwrap();
        let e = equation("cha-mv").unwrap();
        assert!(matches!(
            check_equation(&e, &c, &ValuationSource::Grid(4)),
            Err(CheckError::Algebra(_))
        ));
    }
}
