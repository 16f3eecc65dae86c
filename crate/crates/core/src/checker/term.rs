use std::fmt;

use crate::algebra::{Chain, ChainElement};
use crate::error::{AlgebraError, CheckError, EvalError, ParseError};
use crate::formula::{self, Formula};
use crate::valuation::Valuation;

/// A term over element variables and the chain operations. Unlike formula
/// evaluation, terms without `Zero`/`Neg`/`Oplus`/`NOplus` are meaningful on
/// unbounded hoops.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    EVar(String),
    Zero,
    One,
    Mul(Box<Term>, Box<Term>),
    Imp(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Neg(Box<Term>),
    Oplus(Box<Term>, Box<Term>),
    Uplus(Box<Term>, Box<Term>),
    Pow(Box<Term>, u32),
    NOplus(u32, Box<Term>),
    NUplus(u32, Box<Term>),
}

fn b(t: Term) -> Box<Term> {
    Box::new(t)
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::EVar(name.to_string())
    }

    /// Reads a term written in the formula grammar (`&` is `*`, `->` is `⇒`,
    /// `!` is `∼`, `nsum` is the n-fold `⊕`). `<->` becomes the meet of the
    /// two residua.
    pub fn parse(text: &str) -> Result<Term, ParseError> {
        Ok(Term::from_formula(&formula::parse(text)?))
    }

    pub fn from_formula(f: &Formula) -> Term {
        use Formula as F;
        let t = Term::from_formula;
        match f {
            F::Var(v) => Term::EVar(v.clone()),
            F::Bottom => Term::Zero,
            F::Top => Term::One,
            F::Conj(x, y) => Term::Mul(b(t(x)), b(t(y))),
            F::Impl(x, y) => Term::Imp(b(t(x)), b(t(y))),
            F::Neg(x) => Term::Neg(b(t(x))),
            F::Meet(x, y) => Term::Meet(b(t(x)), b(t(y))),
            F::Join(x, y) => Term::Join(b(t(x)), b(t(y))),
            F::StrongDisj(x, y) => Term::Oplus(b(t(x)), b(t(y))),
            F::VeeBar(x, y) => Term::Uplus(b(t(x)), b(t(y))),
            F::Iff(x, y) => {
                let (x, y) = (t(x), t(y));
                Term::Meet(b(Term::Imp(b(x.clone()), b(y.clone()))), b(Term::Imp(b(y), b(x))))
            }
            F::Power(x, n) => Term::Pow(b(t(x)), *n),
            F::NSum(n, x) => Term::NOplus(*n, b(t(x))),
            F::NUplus(n, x) => Term::NUplus(*n, b(t(x))),
        }
    }

    pub fn to_formula(&self) -> Formula {
        use Term as T;
        let f = |t: &Term| t.to_formula();
        match self {
            T::EVar(v) => Formula::Var(v.clone()),
            T::Zero => Formula::Bottom,
            T::One => Formula::Top,
            T::Mul(x, y) => Formula::conj(f(x), f(y)),
            T::Imp(x, y) => Formula::imp(f(x), f(y)),
            T::Meet(x, y) => Formula::meet(f(x), f(y)),
            T::Join(x, y) => Formula::join(f(x), f(y)),
            T::Neg(x) => Formula::negation(f(x)),
            T::Oplus(x, y) => Formula::strong_disj(f(x), f(y)),
            T::Uplus(x, y) => Formula::vee_bar(f(x), f(y)),
            T::Pow(x, n) => Formula::power(f(x), *n),
            T::NOplus(n, x) => Formula::nsum(*n, f(x)),
            T::NUplus(n, x) => Formula::nuplus(*n, f(x)),
        }
    }

    /// Uses an operation that needs the bottom element.
    pub fn needs_bottom(&self) -> bool {
        use Term as T;
        match self {
            T::Zero | T::Neg(_) | T::Oplus(..) | T::NOplus(..) => true,
            T::EVar(_) | T::One => false,
            T::Pow(x, _) | T::NUplus(_, x) => x.needs_bottom(),
            T::Mul(x, y) | T::Imp(x, y) | T::Meet(x, y) | T::Join(x, y) | T::Uplus(x, y) => {
                x.needs_bottom() || y.needs_bottom()
            }
        }
    }

    /// Sorted, deduplicated variable names.
    pub fn vars(&self) -> Vec<String> {
        self.to_formula().free_vars()
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_formula().fmt(f)
    }
}

fn require_bounds(t: &Term, chain: &Chain) -> Result<(), AlgebraError> {
    if !chain.is_bounded() && t.needs_bottom() {
        return Err(AlgebraError::Unsupported {
            op: "0, ∼ and ⊕",
            chain: chain.to_string(),
        });
    }
    Ok(())
}

/// Value of `t` in `chain` under `v`.
pub fn eval_term(t: &Term, chain: &Chain, v: &Valuation) -> Result<ChainElement, EvalError> {
    require_bounds(t, chain)?;
    for name in t.vars() {
        match v.get(&name) {
            Some(x) => chain.validate(x)?,
            None => return Err(EvalError::Unassigned(name)),
        }
    }
    eval_raw(t, chain, &|name| v.get(name))
}

pub(crate) fn eval_raw<'a>(
    t: &Term,
    chain: &Chain,
    lookup: &dyn Fn(&str) -> Option<&'a ChainElement>,
) -> Result<ChainElement, EvalError> {
    use Term as T;
    let ev = |s: &Term| eval_raw(s, chain, lookup);
    Ok(match t {
        T::EVar(name) => lookup(name)
            .cloned()
            .ok_or_else(|| EvalError::Unassigned(name.clone()))?,
        T::Zero => chain.bottom().ok_or_else(|| AlgebraError::Unsupported {
            op: "0",
            chain: chain.to_string(),
        })?,
        T::One => chain.top(),
        T::Mul(x, y) => chain.raw_mul(&ev(x)?, &ev(y)?)?,
        T::Imp(x, y) => chain.raw_imp(&ev(x)?, &ev(y)?)?,
        T::Meet(x, y) => chain.raw_meet(&ev(x)?, &ev(y)?)?,
        T::Join(x, y) => chain.raw_join(&ev(x)?, &ev(y)?)?,
        T::Neg(x) => chain.raw_neg(&ev(x)?)?,
        T::Oplus(x, y) => chain.raw_oplus(&ev(x)?, &ev(y)?)?,
        T::Uplus(x, y) => chain.raw_uplus(&ev(x)?, &ev(y)?)?,
        T::Pow(x, n) => chain.raw_power(&ev(x)?, *n as u64)?,
        T::NOplus(n, x) => chain.raw_nfold_oplus(&ev(x)?, *n as u64)?,
        T::NUplus(n, x) => chain.raw_nfold_uplus(&ev(x)?, *n as u64)?,
    })
}

/// A named identity `lhs = rhs` over a declared variable list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub name: String,
    pub vars: Vec<String>,
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    /// Declares the variables of both sides, sorted.
    pub fn new(name: impl Into<String>, lhs: Term, rhs: Term) -> Equation {
        let mut vars = lhs.vars();
        vars.extend(rhs.vars());
        vars.sort();
        vars.dedup();
        Equation {
            name: name.into(),
            vars,
            lhs,
            rhs,
        }
    }

    /// Explicit variable list; both sides must draw from it.
    pub fn with_vars(name: impl Into<String>, vars: &[&str], lhs: Term, rhs: Term) -> Result<Equation, CheckError> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        for v in lhs.vars().into_iter().chain(rhs.vars()) {
            if !vars.contains(&v) {
                return Err(CheckError::Equation(format!("variable `{v}` is not declared")));
            }
        }
        Ok(Equation {
            name: name.into(),
            vars,
            lhs,
            rhs,
        })
    }

    /// Parses `lhs = rhs`.
    pub fn parse(name: impl Into<String>, text: &str) -> Result<Equation, CheckError> {
        let mut parts = text.split('=');
        match (parts.next(), parts.next(), parts.next()) {
            (Some(l), Some(r), None) => {
                let lhs = Term::parse(l)?;
                let rhs = Term::parse(r).map_err(|mut e| {
                    e.position += l.len() + 1;
                    e
                })?;
                Ok(Equation::new(name, lhs, rhs))
            }
            _ => Err(CheckError::Equation(format!("expected exactly one `=` in `{text}`"))),
        }
    }

    pub(crate) fn require_bounds(&self, chain: &Chain) -> Result<(), AlgebraError> {
        require_bounds(&self.lhs, chain)?;
        require_bounds(&self.rhs, chain)
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}
