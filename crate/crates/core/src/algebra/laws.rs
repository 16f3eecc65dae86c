//! Pointwise checks of the identities every chain must satisfy.
//!
//! Each function returns the name of the first violated law, or `None`.

use std::cmp::Ordering;

use super::{Chain, ChainElement};
use crate::error::AlgebraError;

type Res<T> = Result<T, AlgebraError>;

/// Residuation, divisibility, prelinearity, monoid and lattice laws on one
/// triple. Valid for bounded chains and for totally ordered hoops.
pub fn bl_law_violation(
    chain: &Chain,
    z: &ChainElement,
    x: &ChainElement,
    y: &ChainElement,
) -> Res<Option<&'static str>> {
    for e in [z, x, y] {
        chain.validate(e)?;
    }
    let top = chain.top();
    let le = |a: &ChainElement, b: &ChainElement| -> Res<bool> { Ok(chain.raw_cmp(a, b)? != Ordering::Greater) };

    let x_imp_y = chain.raw_imp(x, y)?;
    let y_imp_x = chain.raw_imp(y, x)?;
    if le(&chain.raw_mul(z, x)?, y)? != le(z, &x_imp_y)? {
        return Ok(Some("residuation"));
    }
    if !le(&chain.raw_mul(&x_imp_y, x)?, y)? {
        return Ok(Some("modus ponens inequality"));
    }
    if (x_imp_y == top) != le(x, y)? {
        return Ok(Some("implication order"));
    }
    let meet = chain.raw_meet(x, y)?;
    let join = chain.raw_join(x, y)?;
    if meet != chain.raw_mul(x, &x_imp_y)? {
        return Ok(Some("divisibility"));
    }
    if chain.raw_join(&x_imp_y, &y_imp_x)? != top {
        return Ok(Some("prelinearity"));
    }
    if chain.raw_mul(&chain.raw_mul(z, x)?, y)? != chain.raw_mul(z, &chain.raw_mul(x, y)?)? {
        return Ok(Some("associativity"));
    }
    if chain.raw_mul(x, y)? != chain.raw_mul(y, x)? {
        return Ok(Some("commutativity"));
    }
    if chain.raw_mul(&top, x)? != *x {
        return Ok(Some("identity"));
    }
    if !le(x, &top)? {
        return Ok(Some("integrality"));
    }
    if let Some(bottom) = chain.bottom() {
        if !le(&bottom, x)? {
            return Ok(Some("bottom"));
        }
    }
    if !(le(&meet, x)? && le(&meet, y)? && (meet == *x || meet == *y)) {
        return Ok(Some("meet"));
    }
    if !(le(x, &join)? && le(y, &join)? && (join == *x || join == *y)) {
        return Ok(Some("join"));
    }
    if chain.raw_meet(x, &chain.raw_join(x, y)?)? != *x || chain.raw_join(x, &meet)? != *x {
        return Ok(Some("absorption"));
    }
    Ok(None)
}

/// `∼∼x = x`.
pub fn involution_violation(chain: &Chain, x: &ChainElement) -> Res<Option<&'static str>> {
    let nn = chain.neg(&chain.neg(x)?)?;
    Ok((nn != *x).then_some("involution"))
}

/// `(x ⇒ y) ⇒ y = (y ⇒ x) ⇒ x`.
pub fn wajsberg_violation(chain: &Chain, x: &ChainElement, y: &ChainElement) -> Res<Option<&'static str>> {
    let l = chain.imp(&chain.imp(x, y)?, y)?;
    let r = chain.imp(&chain.imp(y, x)?, x)?;
    Ok((l != r).then_some("wajsberg"))
}

/// `x = y ⇒ (x * y)`.
pub fn cancellativity_violation(chain: &Chain, x: &ChainElement, y: &ChainElement) -> Res<Option<&'static str>> {
    let r = chain.imp(y, &chain.mul(x, y)?)?;
    Ok((r != *x).then_some("cancellativity"))
}

/// The hoop axiom `x ⇒ (y ⇒ z) = (x * y) ⇒ z`.
pub fn currying_violation(
    chain: &Chain,
    x: &ChainElement,
    y: &ChainElement,
    z: &ChainElement,
) -> Res<Option<&'static str>> {
    let l = chain.imp(x, &chain.imp(y, z)?)?;
    let r = chain.imp(&chain.mul(x, y)?, z)?;
    Ok((l != r).then_some("currying"))
}
