//! Totally ordered BL-algebras and hoops with exact operations.

use std::cmp::Ordering;
use std::fmt;

use super::descriptor::Descriptor;
use super::element::{parse_element_syntax, ChainElement, ChangElement, ChangSide, RotationElement, Sign, SumElement};
use super::rational::Rational;
use crate::error::AlgebraError;

type Res<T> = Result<T, AlgebraError>;

/// Result of an order computation: the least `n` with `x^n = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    /// Decided exactly: no power reaches the bottom.
    Infinite,
    /// No power up to the cutoff reached the bottom; undecided beyond it.
    InfiniteUpTo(u64),
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

#[derive(Clone, Debug)]
pub(crate) enum Kind {
    /// Gödel t-norm on `[0,1]` (`None`) or on the `k`-element grid.
    Godel(Option<usize>),
    /// Łukasiewicz t-norm on `[0,1]` (`None`) or on the `k`-element grid.
    Lukasiewicz(Option<usize>),
    Cancellative,
    Chang,
    Rotation(Box<Chain>),
    Sum(Vec<Chain>),
    Omega(Box<Chain>),
}

/// A concrete chain: a totally ordered BL-algebra, or a totally ordered hoop
/// when unbounded. Cheap to clone; all operations are pure.
#[derive(Clone, Debug)]
pub struct Chain {
    descriptor: Descriptor,
    pub(crate) kind: Kind,
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor)
    }
}

impl std::str::FromStr for Chain {
    type Err = crate::error::CheckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let d: Descriptor = s.parse()?;
        Ok(Chain::new(d)?)
    }
}

/// Builds the chain named by `descriptor`.
pub fn make_chain(descriptor: Descriptor) -> Res<Chain> {
    Chain::new(descriptor)
}

impl Chain {
    pub fn new(descriptor: Descriptor) -> Res<Chain> {
        let kind = match &descriptor {
            Descriptor::FiniteGodel(k) | Descriptor::FiniteMV(k) if *k < 2 => {
                return Err(AlgebraError::Construction(format!(
                    "finite chains need at least 2 elements, got {k}"
                )))
            }
            Descriptor::FiniteGodel(k) => Kind::Godel(Some(*k)),
            Descriptor::FiniteMV(k) => Kind::Lukasiewicz(Some(*k)),
            Descriptor::StandardMV => Kind::Lukasiewicz(None),
            Descriptor::StandardGodel => Kind::Godel(None),
            Descriptor::StandardCancellativeHoop => Kind::Cancellative,
            Descriptor::Chang => Kind::Chang,
            Descriptor::StandardProduct => Kind::Sum(vec![
                Chain::new(Descriptor::FiniteGodel(2))?,
                Chain::new(Descriptor::StandardCancellativeHoop)?,
            ]),
            Descriptor::Rotation(inner) => {
                let inner = Chain::new((**inner).clone())?;
                if !matches!(inner.kind, Kind::Cancellative) {
                    return Err(AlgebraError::Construction(format!(
                        "disconnected rotation needs a cancellative hoop, got {inner}"
                    )));
                }
                Kind::Rotation(Box::new(inner))
            }
            Descriptor::OrdinalSum(parts) => {
                if parts.is_empty() {
                    return Err(AlgebraError::Construction("empty ordinal sum".into()));
                }
                let mut comps = Vec::with_capacity(parts.len());
                for p in parts {
                    match p {
                        Descriptor::StandardProduct => {
                            comps.push(Chain::new(Descriptor::FiniteGodel(2))?);
                            comps.push(Chain::new(Descriptor::StandardCancellativeHoop)?);
                        }
                        Descriptor::OrdinalSum(_) | Descriptor::OmegaSum(_) => {
                            return Err(AlgebraError::Construction(format!(
                                "nested sum `{p}` is not a valid summand"
                            )))
                        }
                        _ => comps.push(Chain::new(p.clone())?),
                    }
                }
                if !comps[0].is_bounded() {
                    return Err(AlgebraError::Construction(format!(
                        "first summand {} of an ordinal sum must be bounded",
                        comps[0]
                    )));
                }
                Kind::Sum(comps)
            }
            Descriptor::OmegaSum(inner) => {
                if inner.is_sum() {
                    return Err(AlgebraError::Construction(format!(
                        "nested sum `{inner}` is not a valid summand"
                    )));
                }
                let inner = Chain::new((**inner).clone())?;
                if !inner.is_bounded() {
                    return Err(AlgebraError::Construction(format!(
                        "first summand {inner} of an ordinal sum must be bounded"
                    )));
                }
                Kind::Omega(Box::new(inner))
            }
        };
        Ok(Chain { descriptor, kind })
    }

    pub fn parse(text: &str) -> Result<Chain, crate::error::CheckError> {
        text.parse()
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.descriptor
    }

    pub fn is_bounded(&self) -> bool {
        !matches!(self.kind, Kind::Cancellative)
    }

    pub fn is_finite(&self) -> bool {
        self.size().is_some()
    }

    /// Number of elements for finite chains.
    pub fn size(&self) -> Option<usize> {
        match &self.kind {
            Kind::Godel(Some(k)) | Kind::Lukasiewicz(Some(k)) => Some(*k),
            Kind::Sum(comps) => comps
                .iter()
                .map(|c| c.size().map(|n| n - 1))
                .sum::<Option<usize>>()
                .map(|n| n + 1),
            _ => None,
        }
    }

    /// True for the chains whose 0-free reduct is a Wajsberg hoop with
    /// involutive negation, i.e. MV-chains (bounded) and cancellative hoops.
    pub fn is_mv(&self) -> bool {
        match &self.kind {
            Kind::Lukasiewicz(_) | Kind::Chang | Kind::Rotation(_) => true,
            Kind::Godel(Some(2)) => true,
            Kind::Sum(c) if c.len() == 1 => c[0].is_mv(),
            _ => false,
        }
    }

    /// Ordinal-sum components, if this chain is a finite sum.
    pub fn components(&self) -> Option<&[Chain]> {
        match &self.kind {
            Kind::Sum(c) => Some(c),
            _ => None,
        }
    }

    /// The chain that hosts component `i` of an ordinal sum.
    pub fn component(&self, i: usize) -> Option<&Chain> {
        match &self.kind {
            Kind::Sum(c) => c.get(i),
            Kind::Omega(inner) => Some(inner),
            _ => None,
        }
    }

    pub fn is_sum(&self) -> bool {
        matches!(self.kind, Kind::Sum(_) | Kind::Omega(_))
    }

    pub fn top(&self) -> ChainElement {
        match &self.kind {
            Kind::Godel(_) | Kind::Lukasiewicz(_) | Kind::Cancellative => ChainElement::Rat(Rational::one()),
            Kind::Chang => ChainElement::chang_a(0),
            Kind::Rotation(_) => ChainElement::pos(Rational::one()),
            Kind::Sum(_) | Kind::Omega(_) => ChainElement::sum_top(),
        }
    }

    pub fn bottom(&self) -> Option<ChainElement> {
        match &self.kind {
            Kind::Godel(_) | Kind::Lukasiewicz(_) => Some(ChainElement::Rat(Rational::zero())),
            Kind::Cancellative => None,
            Kind::Chang => Some(ChainElement::chang_b(0)),
            Kind::Rotation(_) => Some(ChainElement::neg(Rational::one())),
            Kind::Sum(c) => Some(ChainElement::sum(0, c[0].bottom()?)),
            Kind::Omega(inner) => Some(ChainElement::sum(0, inner.bottom()?)),
        }
    }

    fn require_bottom(&self, op: &'static str) -> Res<ChainElement> {
        self.bottom().ok_or_else(|| AlgebraError::Unsupported {
            op,
            chain: self.to_string(),
        })
    }

    fn encoding(&self, x: &ChainElement) -> AlgebraError {
        AlgebraError::Encoding {
            chain: self.to_string(),
            element: x.to_string(),
        }
    }

    /// Checks that `x` is a canonical element of this chain.
    pub fn validate(&self, x: &ChainElement) -> Res<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(self.encoding(x))
        }
    }

    pub fn contains(&self, x: &ChainElement) -> bool {
        match (&self.kind, x) {
            (Kind::Godel(k) | Kind::Lukasiewicz(k), ChainElement::Rat(q)) => {
                q.in_unit_interval()
                    && match k {
                        None => true,
                        Some(k) => q.mul(&Rational::from_integer(*k as i64 - 1)).is_integer(),
                    }
            }
            (Kind::Cancellative, ChainElement::Rat(q)) => !q.is_zero() && q.in_unit_interval(),
            (Kind::Chang, ChainElement::Chang(_)) => true,
            (Kind::Rotation(inner), ChainElement::Rot(r)) => inner.contains(&ChainElement::Rat(r.value.clone())),
            (Kind::Sum(_) | Kind::Omega(_), ChainElement::Sum(SumElement::Top)) => true,
            (Kind::Sum(_) | Kind::Omega(_), ChainElement::Sum(SumElement::At { component, payload })) => {
                match self.component(*component) {
                    Some(c) => c.contains(payload) && **payload != c.top(),
                    None => false,
                }
            }
            _ => false,
        }
    }

    /// Parses an element in the element syntax and checks membership.
    /// `0` and `1` always denote the bottom and top.
    pub fn parse_element(&self, text: &str) -> Res<ChainElement> {
        let t = text.trim();
        let bad = || AlgebraError::Encoding {
            chain: self.to_string(),
            element: t.to_string(),
        };
        let e = match t {
            "1" => self.top(),
            "0" => self.bottom().ok_or_else(bad)?,
            _ => parse_element_syntax(t).ok_or_else(bad)?,
        };
        self.validate(&e)?;
        Ok(e)
    }

    /// All elements in ascending order, for finite chains.
    pub fn carrier(&self) -> Option<Vec<ChainElement>> {
        match &self.kind {
            Kind::Godel(Some(k)) | Kind::Lukasiewicz(Some(k)) => {
                Some((0..*k).map(|i| ChainElement::rat(i as i64, *k as i64 - 1)).collect())
            }
            Kind::Sum(comps) => {
                let mut out = Vec::new();
                for (i, c) in comps.iter().enumerate() {
                    let local = c.carrier()?;
                    out.extend(local[..local.len() - 1].iter().map(|e| ChainElement::sum(i, e.clone())));
                }
                out.push(ChainElement::sum_top());
                Some(out)
            }
            _ => None,
        }
    }

    fn checked2(&self, x: &ChainElement, y: &ChainElement) -> Res<()> {
        self.validate(x)?;
        self.validate(y)
    }

    // ---- public, validating operations ----

    pub fn cmp(&self, x: &ChainElement, y: &ChainElement) -> Res<Ordering> {
        self.checked2(x, y)?;
        self.raw_cmp(x, y)
    }

    pub fn le(&self, x: &ChainElement, y: &ChainElement) -> Res<bool> {
        Ok(self.cmp(x, y)? != Ordering::Greater)
    }

    pub fn mul(&self, x: &ChainElement, y: &ChainElement) -> Res<ChainElement> {
        self.checked2(x, y)?;
        self.raw_mul(x, y)
    }

    pub fn imp(&self, x: &ChainElement, y: &ChainElement) -> Res<ChainElement> {
        self.checked2(x, y)?;
        self.raw_imp(x, y)
    }

    pub fn meet(&self, x: &ChainElement, y: &ChainElement) -> Res<ChainElement> {
        self.checked2(x, y)?;
        self.raw_meet(x, y)
    }

    pub fn join(&self, x: &ChainElement, y: &ChainElement) -> Res<ChainElement> {
        self.checked2(x, y)?;
        self.raw_join(x, y)
    }

    /// `x ⇒ 0`.
    pub fn neg(&self, x: &ChainElement) -> Res<ChainElement> {
        self.validate(x)?;
        self.raw_neg(x)
    }

    /// `∼(∼x * ∼y)`, relative to the global bottom.
    pub fn oplus(&self, x: &ChainElement, y: &ChainElement) -> Res<ChainElement> {
        self.checked2(x, y)?;
        self.raw_oplus(x, y)
    }

    /// The operation of the `⊻` connective:
    /// `((x ⇒ x*y) ⇒ y) ⊓ ((y ⇒ x*y) ⇒ x)`. Needs no bottom.
    pub fn uplus(&self, x: &ChainElement, y: &ChainElement) -> Res<ChainElement> {
        self.checked2(x, y)?;
        self.raw_uplus(x, y)
    }

    /// `x * ... * x` (`n` factors).
    pub fn power(&self, x: &ChainElement, n: u64) -> Res<ChainElement> {
        self.validate(x)?;
        self.raw_power(x, n)
    }

    /// `x ⊕ ... ⊕ x` (`n` summands).
    pub fn nfold_oplus(&self, x: &ChainElement, n: u64) -> Res<ChainElement> {
        self.validate(x)?;
        self.raw_nfold_oplus(x, n)
    }

    /// `x ⊎ ... ⊎ x` (`n` summands).
    pub fn nfold_uplus(&self, x: &ChainElement, n: u64) -> Res<ChainElement> {
        self.validate(x)?;
        self.raw_nfold_uplus(x, n)
    }

    /// Least `n` with `x^n = 0`.
    ///
    /// Chang and rotation elements (and their copies inside ordinal sums) are
    /// decided exactly from their side; elsewhere powers are iterated up to
    /// `cutoff`, reporting [`Order::Infinite`] early if they become idempotent.
    pub fn ord(&self, x: &ChainElement, cutoff: u64) -> Res<Order> {
        self.validate(x)?;
        self.raw_ord(x, cutoff)
    }

    /// Exactly one of `ord(x)`, `ord(∼x)` is finite.
    pub fn perfect_condition(&self, x: &ChainElement, cutoff: u64) -> Res<bool> {
        self.validate(x)?;
        let n = self.raw_neg(x)?;
        Ok(self.raw_ord(x, cutoff)?.is_finite() != self.raw_ord(&n, cutoff)?.is_finite())
    }

    /// Membership in `A⁺ = {x : x > x ⇒ 0}`.
    pub fn positive_part(&self, x: &ChainElement) -> Res<bool> {
        self.validate(x)?;
        let n = self.raw_neg(x)?;
        Ok(self.raw_cmp(x, &n)? == Ordering::Greater)
    }

    // ---- raw operations: arguments are assumed canonical ----

    pub(crate) fn raw_cmp(&self, x: &ChainElement, y: &ChainElement) -> Res<Ordering> {
        use ChainElement as E;
        match (&self.kind, x, y) {
            (Kind::Godel(_) | Kind::Lukasiewicz(_) | Kind::Cancellative, E::Rat(a), E::Rat(b)) => Ok(a.cmp(b)),
            (Kind::Chang, E::Chang(a), E::Chang(b)) => Ok(chang_cmp(a, b)),
            (Kind::Rotation(inner), E::Rot(a), E::Rot(b)) => match (a.sign, b.sign) {
                (Sign::Neg, Sign::Pos) => Ok(Ordering::Less),
                (Sign::Pos, Sign::Neg) => Ok(Ordering::Greater),
                (Sign::Pos, Sign::Pos) => inner.raw_cmp(&rat(&a.value), &rat(&b.value)),
                (Sign::Neg, Sign::Neg) => Ok(inner.raw_cmp(&rat(&a.value), &rat(&b.value))?.reverse()),
            },
            (Kind::Sum(_) | Kind::Omega(_), E::Sum(a), E::Sum(b)) => match (a, b) {
                (SumElement::Top, SumElement::Top) => Ok(Ordering::Equal),
                (SumElement::Top, _) => Ok(Ordering::Greater),
                (_, SumElement::Top) => Ok(Ordering::Less),
                (
                    SumElement::At {
                        component: i,
                        payload: p,
                    },
                    SumElement::At {
                        component: j,
                        payload: q,
                    },
                ) => match i.cmp(j) {
                    Ordering::Equal => self.comp(*i)?.raw_cmp(p, q),
                    o => Ok(o),
                },
            },
            _ => Err(self.encoding(if self.contains(x) { y } else { x })),
        }
    }

    pub(crate) fn raw_mul(&self, x: &ChainElement, y: &ChainElement) -> Res<ChainElement> {
        use ChainElement as E;
        match (&self.kind, x, y) {
            (Kind::Godel(_), E::Rat(a), E::Rat(b)) => Ok(E::Rat(a.clone().min(b.clone()))),
            (Kind::Lukasiewicz(_), E::Rat(a), E::Rat(b)) => {
                Ok(E::Rat(a.add(b).sub(&Rational::one()).max(Rational::zero())))
            }
            (Kind::Cancellative, E::Rat(a), E::Rat(b)) => Ok(E::Rat(a.mul(b))),
            (Kind::Chang, E::Chang(a), E::Chang(b)) => Ok(E::Chang(chang_mul(a, b)?)),
            (Kind::Rotation(inner), E::Rot(a), E::Rot(b)) => {
                let (va, vb) = (rat(&a.value), rat(&b.value));
                let r = match (a.sign, b.sign) {
                    (Sign::Pos, Sign::Pos) => RotationElement::pos(unrat(inner.raw_mul(&va, &vb)?)),
                    // a * b' = ∼(a ⇒ b)
                    (Sign::Pos, Sign::Neg) => RotationElement::neg(unrat(inner.raw_imp(&va, &vb)?)),
                    (Sign::Neg, Sign::Pos) => RotationElement::neg(unrat(inner.raw_imp(&vb, &va)?)),
                    (Sign::Neg, Sign::Neg) => RotationElement::neg(Rational::one()),
                };
                Ok(E::Rot(r))
            }
            (Kind::Sum(_) | Kind::Omega(_), E::Sum(a), E::Sum(b)) => match (a, b) {
                (SumElement::Top, _) => Ok(y.clone()),
                (_, SumElement::Top) => Ok(x.clone()),
                (
                    SumElement::At {
                        component: i,
                        payload: p,
                    },
                    SumElement::At {
                        component: j,
                        payload: q,
                    },
                ) => match i.cmp(j) {
                    Ordering::Equal => self.wrap(*i, self.comp(*i)?.raw_mul(p, q)?),
                    Ordering::Less => Ok(x.clone()),
                    Ordering::Greater => Ok(y.clone()),
                },
            },
            _ => Err(self.encoding(if self.contains(x) { y } else { x })),
        }
    }

    pub(crate) fn raw_imp(&self, x: &ChainElement, y: &ChainElement) -> Res<ChainElement> {
        use ChainElement as E;
        match (&self.kind, x, y) {
            (Kind::Godel(_), E::Rat(a), E::Rat(b)) => Ok(E::Rat(if a <= b { Rational::one() } else { b.clone() })),
            (Kind::Lukasiewicz(_), E::Rat(a), E::Rat(b)) => {
                Ok(E::Rat(Rational::one().sub(a).add(b).min(Rational::one())))
            }
            (Kind::Cancellative, E::Rat(a), E::Rat(b)) => Ok(E::Rat(b.div(a).min(Rational::one()))),
            (Kind::Chang, E::Chang(a), E::Chang(b)) => Ok(E::Chang(chang_imp(a, b)?)),
            (Kind::Rotation(inner), E::Rot(a), E::Rot(b)) => {
                let (va, vb) = (rat(&a.value), rat(&b.value));
                let r = match (a.sign, b.sign) {
                    (Sign::Pos, Sign::Pos) => RotationElement::pos(unrat(inner.raw_imp(&va, &vb)?)),
                    // a ⇒ b' = ∼(a * b)
                    (Sign::Pos, Sign::Neg) => RotationElement::neg(unrat(inner.raw_mul(&va, &vb)?)),
                    (Sign::Neg, Sign::Pos) => RotationElement::pos(Rational::one()),
                    // a' ⇒ b' = b ⇒ a
                    (Sign::Neg, Sign::Neg) => RotationElement::pos(unrat(inner.raw_imp(&vb, &va)?)),
                };
                Ok(E::Rot(r))
            }
            (Kind::Sum(_) | Kind::Omega(_), E::Sum(a), E::Sum(b)) => match (a, b) {
                (SumElement::Top, _) => Ok(y.clone()),
                (_, SumElement::Top) => Ok(E::sum_top()),
                (
                    SumElement::At {
                        component: i,
                        payload: p,
                    },
                    SumElement::At {
                        component: j,
                        payload: q,
                    },
                ) => match i.cmp(j) {
                    Ordering::Equal => self.wrap(*i, self.comp(*i)?.raw_imp(p, q)?),
                    Ordering::Greater => Ok(y.clone()),
                    Ordering::Less => Ok(E::sum_top()),
                },
            },
            _ => Err(self.encoding(if self.contains(x) { y } else { x })),
        }
    }

    pub(crate) fn raw_meet(&self, x: &ChainElement, y: &ChainElement) -> Res<ChainElement> {
        Ok(if self.raw_cmp(x, y)? == Ordering::Greater {
            y.clone()
        } else {
            x.clone()
        })
    }

    pub(crate) fn raw_join(&self, x: &ChainElement, y: &ChainElement) -> Res<ChainElement> {
        Ok(if self.raw_cmp(x, y)? == Ordering::Less {
            y.clone()
        } else {
            x.clone()
        })
    }

    pub(crate) fn raw_neg(&self, x: &ChainElement) -> Res<ChainElement> {
        let bottom = self.require_bottom("negation")?;
        self.raw_imp(x, &bottom)
    }

    pub(crate) fn raw_oplus(&self, x: &ChainElement, y: &ChainElement) -> Res<ChainElement> {
        if !self.is_bounded() {
            return Err(AlgebraError::Unsupported {
                op: "oplus",
                chain: self.to_string(),
            });
        }
        let p = self.raw_mul(&self.raw_neg(x)?, &self.raw_neg(y)?)?;
        self.raw_neg(&p)
    }

    pub(crate) fn raw_uplus(&self, x: &ChainElement, y: &ChainElement) -> Res<ChainElement> {
        let xy = self.raw_mul(x, y)?;
        let left = self.raw_imp(&self.raw_imp(x, &xy)?, y)?;
        let right = self.raw_imp(&self.raw_imp(y, &xy)?, x)?;
        self.raw_meet(&left, &right)
    }

    fn fold(
        &self,
        x: &ChainElement,
        n: u64,
        op: impl Fn(&Self, &ChainElement, &ChainElement) -> Res<ChainElement>,
    ) -> Res<ChainElement> {
        if n == 0 {
            return Err(AlgebraError::Argument("n-fold operations need n >= 1".into()));
        }
        let mut acc = x.clone();
        for _ in 1..n {
            acc = op(self, &acc, x)?;
        }
        Ok(acc)
    }

    pub(crate) fn raw_power(&self, x: &ChainElement, n: u64) -> Res<ChainElement> {
        self.fold(x, n, Self::raw_mul)
    }

    pub(crate) fn raw_nfold_oplus(&self, x: &ChainElement, n: u64) -> Res<ChainElement> {
        if !self.is_bounded() {
            return Err(AlgebraError::Unsupported {
                op: "oplus",
                chain: self.to_string(),
            });
        }
        self.fold(x, n, Self::raw_oplus)
    }

    pub(crate) fn raw_nfold_uplus(&self, x: &ChainElement, n: u64) -> Res<ChainElement> {
        self.fold(x, n, Self::raw_uplus)
    }

    pub(crate) fn raw_ord(&self, x: &ChainElement, cutoff: u64) -> Res<Order> {
        let bottom = self.require_bottom("ord")?;
        if cutoff == 0 {
            return Err(AlgebraError::Argument("ord cutoff must be >= 1".into()));
        }
        if *x == bottom {
            return Ok(Order::Finite(1));
        }
        if *x == self.top() {
            return Ok(Order::Infinite);
        }
        match (&self.kind, x) {
            (Kind::Chang, ChainElement::Chang(c)) => {
                return Ok(match c.side {
                    ChangSide::B => Order::Finite(2),
                    ChangSide::A => Order::Infinite,
                })
            }
            (Kind::Rotation(_), ChainElement::Rot(r)) => {
                return Ok(match r.sign {
                    Sign::Neg => Order::Finite(2),
                    Sign::Pos => Order::Infinite,
                })
            }
            (Kind::Sum(_) | Kind::Omega(_), ChainElement::Sum(SumElement::At { component, payload })) => {
                // Powers never leave the component; only component 0 reaches the bottom.
                return if *component == 0 {
                    self.comp(0)?.raw_ord(payload, cutoff)
                } else {
                    Ok(Order::Infinite)
                };
            }
            _ => {}
        }
        let mut prev = x.clone();
        for n in 2..=cutoff {
            let next = self.raw_mul(&prev, x)?;
            if next == bottom {
                return Ok(Order::Finite(n));
            }
            if next == prev {
                return Ok(Order::Infinite);
            }
            prev = next;
        }
        Ok(Order::InfiniteUpTo(cutoff))
    }

    fn comp(&self, i: usize) -> Res<&Chain> {
        self.component(i).ok_or_else(|| AlgebraError::Encoding {
            chain: self.to_string(),
            element: format!("component {i}"),
        })
    }

    /// Lifts a component-local result, identifying local tops with the top.
    fn wrap(&self, i: usize, local: ChainElement) -> Res<ChainElement> {
        if local == self.comp(i)?.top() {
            Ok(ChainElement::sum_top())
        } else {
            Ok(ChainElement::sum(i, local))
        }
    }
}

fn rat(q: &Rational) -> ChainElement {
    ChainElement::Rat(q.clone())
}

fn unrat(e: ChainElement) -> Rational {
    match e {
        ChainElement::Rat(q) => q,
        other => unreachable!("cancellative hoop produced {other}"),
    }
}

fn chang_cmp(a: &ChangElement, b: &ChangElement) -> Ordering {
    match (a.side, b.side) {
        (ChangSide::B, ChangSide::A) => Ordering::Less,
        (ChangSide::A, ChangSide::B) => Ordering::Greater,
        (ChangSide::B, ChangSide::B) => a.index.cmp(&b.index),
        (ChangSide::A, ChangSide::A) => b.index.cmp(&a.index),
    }
}

fn chang_add(n: u64, m: u64) -> Res<u64> {
    n.checked_add(m).ok_or(AlgebraError::Overflow("Chang index"))
}

fn chang_mul(x: &ChangElement, y: &ChangElement) -> Res<ChangElement> {
    use ChangSide::*;
    Ok(match (x.side, y.side) {
        (B, B) => ChangElement::b(0),
        (B, A) => ChangElement::b(x.index.saturating_sub(y.index)),
        (A, B) => ChangElement::b(y.index.saturating_sub(x.index)),
        (A, A) => ChangElement::a(chang_add(x.index, y.index)?),
    })
}

fn chang_imp(x: &ChangElement, y: &ChangElement) -> Res<ChangElement> {
    use ChangSide::*;
    Ok(match (x.side, y.side) {
        (A, A) => ChangElement::a(y.index.saturating_sub(x.index)),
        (B, B) => ChangElement::a(x.index.saturating_sub(y.index)),
        (A, B) => ChangElement::b(chang_add(x.index, y.index)?),
        (B, A) => ChangElement::a(0),
    })
}
