use crate::algebra::{Chain, ChainElement};
use crate::checker::{source, ValuationSource, Verdict};
use crate::error::{AlgebraError, CheckError, EvalError};
use crate::valuation::Valuation;

use super::Formula;

fn require_bounded(chain: &Chain) -> Result<(), AlgebraError> {
    if chain.is_bounded() {
        Ok(())
    } else {
        Err(AlgebraError::Unsupported {
            op: "formula evaluation",
            chain: chain.to_string(),
        })
    }
}

/// Truth value of `f` in `chain` under `v`.
///
/// Derived connectives are computed with the corresponding chain operation;
/// they agree with their expansions on every BL-chain.
pub fn evaluate(f: &Formula, chain: &Chain, v: &Valuation) -> Result<ChainElement, EvalError> {
    require_bounded(chain)?;
    for name in f.free_vars() {
        match v.get(&name) {
            Some(x) => chain.validate(x)?,
            None => return Err(EvalError::Unassigned(name)),
        }
    }
    eval_raw(f, chain, &|name| v.get(name))
}

/// Evaluation with the operands assumed valid for `chain`.
pub(crate) fn eval_raw<'a>(
    f: &Formula,
    chain: &Chain,
    lookup: &dyn Fn(&str) -> Option<&'a ChainElement>,
) -> Result<ChainElement, EvalError> {
    let ev = |g: &Formula| eval_raw(g, chain, lookup);
    Ok(match f {
        Formula::Var(name) => lookup(name)
            .cloned()
            .ok_or_else(|| EvalError::Unassigned(name.clone()))?,
        Formula::Bottom => chain.bottom().ok_or_else(|| AlgebraError::Unsupported {
            op: "0",
            chain: chain.to_string(),
        })?,
        Formula::Top => chain.top(),
        Formula::Conj(a, b) => chain.raw_mul(&ev(a)?, &ev(b)?)?,
        Formula::Impl(a, b) => chain.raw_imp(&ev(a)?, &ev(b)?)?,
        Formula::Neg(a) => chain.raw_neg(&ev(a)?)?,
        Formula::Meet(a, b) => chain.raw_meet(&ev(a)?, &ev(b)?)?,
        Formula::Join(a, b) => chain.raw_join(&ev(a)?, &ev(b)?)?,
        Formula::StrongDisj(a, b) => chain.raw_oplus(&ev(a)?, &ev(b)?)?,
        Formula::VeeBar(a, b) => chain.raw_uplus(&ev(a)?, &ev(b)?)?,
        Formula::Iff(a, b) => {
            let (x, y) = (ev(a)?, ev(b)?);
            chain.raw_meet(&chain.raw_imp(&x, &y)?, &chain.raw_imp(&y, &x)?)?
        }
        Formula::Power(a, n) => chain.raw_power(&ev(a)?, *n as u64)?,
        Formula::NSum(n, a) => chain.raw_nfold_oplus(&ev(a)?, *n as u64)?,
        Formula::NUplus(n, a) => chain.raw_nfold_uplus(&ev(a)?, *n as u64)?,
    })
}

/// Checks that `f` evaluates to the top element under every valuation of
/// `src`. A failure reports the value of `f` as `lhs` and the top as `rhs`.
pub fn is_tautology(f: &Formula, chain: &Chain, src: &ValuationSource) -> Result<Verdict, CheckError> {
    require_bounded(chain)?;
    let vars = f.free_vars();
    let top = chain.top();
    source::run(chain, &vars, src, &mut |tuple| {
        let value = eval_raw(f, chain, &|name| vars.iter().position(|v| v == name).map(|i| &tuple[i]))?;
        Ok((value != top).then(|| (value, top.clone())))
    })
}
