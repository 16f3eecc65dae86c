use std::collections::BTreeSet;
use std::fmt;

/// A propositional BL formula over `&`, `→`, `⊥`, with derived connectives
/// kept as their own nodes so they print the way they were written.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(String),
    Bottom,
    /// `¬⊥`
    Top,
    Conj(Box<Formula>, Box<Formula>),
    Impl(Box<Formula>, Box<Formula>),
    /// `φ → ⊥`
    Neg(Box<Formula>),
    /// `φ & (φ → ψ)`
    Meet(Box<Formula>, Box<Formula>),
    /// `((φ → ψ) → ψ) ∧ ((ψ → φ) → φ)`
    Join(Box<Formula>, Box<Formula>),
    /// `¬(¬φ & ¬ψ)`
    StrongDisj(Box<Formula>, Box<Formula>),
    /// `((φ → (φ & ψ)) → ψ) ∧ ((ψ → (φ & ψ)) → φ)`
    VeeBar(Box<Formula>, Box<Formula>),
    /// `(φ → ψ) ∧ (ψ → φ)`
    Iff(Box<Formula>, Box<Formula>),
    /// `φ & ... & φ`
    Power(Box<Formula>, u32),
    /// `φ ⋎ ... ⋎ φ`
    NSum(u32, Box<Formula>),
    /// `φ ⊻ ... ⊻ φ`
    NUplus(u32, Box<Formula>),
}

fn b(f: Formula) -> Box<Formula> {
    Box::new(f)
}

impl Formula {
    pub fn var(name: &str) -> Formula {
        Formula::Var(name.to_string())
    }

    pub fn conj(f: Formula, g: Formula) -> Formula {
        Formula::Conj(b(f), b(g))
    }

    pub fn imp(f: Formula, g: Formula) -> Formula {
        Formula::Impl(b(f), b(g))
    }

    pub fn negation(f: Formula) -> Formula {
        Formula::Neg(b(f))
    }

    pub fn meet(f: Formula, g: Formula) -> Formula {
        Formula::Meet(b(f), b(g))
    }

    pub fn join(f: Formula, g: Formula) -> Formula {
        Formula::Join(b(f), b(g))
    }

    pub fn strong_disj(f: Formula, g: Formula) -> Formula {
        Formula::StrongDisj(b(f), b(g))
    }

    pub fn vee_bar(f: Formula, g: Formula) -> Formula {
        Formula::VeeBar(b(f), b(g))
    }

    pub fn iff(f: Formula, g: Formula) -> Formula {
        Formula::Iff(b(f), b(g))
    }

    pub fn power(f: Formula, n: u32) -> Formula {
        Formula::Power(b(f), n)
    }

    pub fn nsum(n: u32, f: Formula) -> Formula {
        Formula::NSum(n, b(f))
    }

    pub fn nuplus(n: u32, f: Formula) -> Formula {
        Formula::NUplus(n, b(f))
    }

    /// Rewrites every derived connective into `{Var, ⊥, &, →}`.
    pub fn expand(&self) -> Formula {
        use Formula::*;
        match self {
            Var(_) | Bottom => self.clone(),
            Top => Formula::imp(Bottom, Bottom),
            Conj(f, g) => Formula::conj(f.expand(), g.expand()),
            Impl(f, g) => Formula::imp(f.expand(), g.expand()),
            Neg(f) => Formula::imp(f.expand(), Bottom),
            Meet(f, g) => expand_meet(f.expand(), g.expand()),
            Join(f, g) => {
                let (f, g) = (f.expand(), g.expand());
                expand_meet(
                    Formula::imp(Formula::imp(f.clone(), g.clone()), g.clone()),
                    Formula::imp(Formula::imp(g, f.clone()), f),
                )
            }
            StrongDisj(f, g) => expand_strong_disj(f.expand(), g.expand()),
            VeeBar(f, g) => expand_vee_bar(f.expand(), g.expand()),
            Iff(f, g) => {
                let (f, g) = (f.expand(), g.expand());
                expand_meet(Formula::imp(f.clone(), g.clone()), Formula::imp(g, f))
            }
            Power(f, n) => fold(f.expand(), *n, Formula::conj),
            NSum(n, f) => fold(f.expand(), *n, expand_strong_disj),
            NUplus(n, f) => fold(f.expand(), *n, expand_vee_bar),
        }
    }

    /// True iff the formula uses only `{Var, ⊥, &, →}`.
    pub fn is_primitive(&self) -> bool {
        use Formula::*;
        match self {
            Var(_) | Bottom => true,
            Conj(f, g) | Impl(f, g) => f.is_primitive() && g.is_primitive(),
            _ => false,
        }
    }

    /// Variable names, sorted.
    pub fn free_vars(&self) -> Vec<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out.into_iter().collect()
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<String>) {
        use Formula::*;
        match self {
            Var(v) => {
                out.insert(v.clone());
            }
            Bottom | Top => {}
            Neg(f) | Power(f, _) | NSum(_, f) | NUplus(_, f) => f.collect_vars(out),
            Conj(f, g) | Impl(f, g) | Meet(f, g) | Join(f, g) | StrongDisj(f, g) | VeeBar(f, g) | Iff(f, g) => {
                f.collect_vars(out);
                g.collect_vars(out);
            }
        }
    }

    /// Replaces variables for which `subst` returns a formula.
    pub fn substitute(&self, subst: &dyn Fn(&str) -> Option<Formula>) -> Formula {
        use Formula::*;
        let s = |f: &Formula| b(f.substitute(subst));
        match self {
            Var(v) => subst(v).unwrap_or_else(|| self.clone()),
            Bottom | Top => self.clone(),
            Neg(f) => Neg(s(f)),
            Power(f, n) => Power(s(f), *n),
            NSum(n, f) => NSum(*n, s(f)),
            NUplus(n, f) => NUplus(*n, s(f)),
            Conj(f, g) => Conj(s(f), s(g)),
            Impl(f, g) => Impl(s(f), s(g)),
            Meet(f, g) => Meet(s(f), s(g)),
            Join(f, g) => Join(s(f), s(g)),
            StrongDisj(f, g) => StrongDisj(s(f), s(g)),
            VeeBar(f, g) => VeeBar(s(f), s(g)),
            Iff(f, g) => Iff(s(f), s(g)),
        }
    }

    fn precedence(&self) -> u8 {
        use Formula::*;
        match self {
            Iff(..) => 1,
            Impl(..) => 2,
            Join(..) => 3,
            Meet(..) => 4,
            Conj(..) => 5,
            Neg(_) => 6,
            _ => 7,
        }
    }

    fn render(&self, min: u8, out: &mut String) {
        use Formula::*;
        let paren = self.precedence() < min;
        if paren {
            out.push('(');
        }
        let bin = |f: &Formula, op: &str, g: &Formula, lp: u8, rp: u8, out: &mut String| {
            f.render(lp, out);
            out.push(' ');
            out.push_str(op);
            out.push(' ');
            g.render(rp, out);
        };
        let call = |name: &str, a: &dyn Fn(&mut String), c: &dyn Fn(&mut String), out: &mut String| {
            out.push_str(name);
            out.push('(');
            a(out);
            out.push_str(", ");
            c(out);
            out.push(')');
        };
        match self {
            Var(v) => out.push_str(v),
            Bottom => out.push('0'),
            Top => out.push('1'),
            Iff(f, g) => bin(f, "<->", g, 1, 2, out),
            Impl(f, g) => bin(f, "->", g, 3, 2, out),
            Join(f, g) => bin(f, "\\/", g, 3, 4, out),
            Meet(f, g) => bin(f, "/\\", g, 4, 5, out),
            Conj(f, g) => bin(f, "&", g, 5, 6, out),
            Neg(f) => {
                out.push('!');
                f.render(6, out);
            }
            StrongDisj(f, g) => call("oplus", &|o| f.render(0, o), &|o| g.render(0, o), out),
            VeeBar(f, g) => call("uplus", &|o| f.render(0, o), &|o| g.render(0, o), out),
            Power(f, n) => call("pow", &|o| f.render(0, o), &|o| o.push_str(&n.to_string()), out),
            NSum(n, f) => call("nsum", &|o| o.push_str(&n.to_string()), &|o| f.render(0, o), out),
            NUplus(n, f) => call("nuplus", &|o| o.push_str(&n.to_string()), &|o| f.render(0, o), out),
        }
        if paren {
            out.push(')');
        }
    }
}

fn expand_meet(f: Formula, g: Formula) -> Formula {
    Formula::conj(f.clone(), Formula::imp(f, g))
}

fn expand_neg(f: Formula) -> Formula {
    Formula::imp(f, Formula::Bottom)
}

fn expand_strong_disj(f: Formula, g: Formula) -> Formula {
    expand_neg(Formula::conj(expand_neg(f), expand_neg(g)))
}

fn expand_vee_bar(f: Formula, g: Formula) -> Formula {
    let fg = Formula::conj(f.clone(), g.clone());
    expand_meet(
        Formula::imp(Formula::imp(f.clone(), fg.clone()), g.clone()),
        Formula::imp(Formula::imp(g, fg), f),
    )
}

fn fold(f: Formula, n: u32, op: fn(Formula, Formula) -> Formula) -> Formula {
    let mut acc = f.clone();
    for _ in 1..n.max(1) {
        acc = op(acc, f.clone());
    }
    acc
}

/// Renders in the parser's grammar with minimal parentheses.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(0, &mut s);
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::var("p")
    }

    fn q() -> Formula {
        Formula::var("q")
    }

    #[test]
    fn strong_disjunction_expansion() {
        let by_hand = Formula::imp(
            Formula::conj(Formula::imp(p(), Formula::Bottom), Formula::imp(q(), Formula::Bottom)),
            Formula::Bottom,
        );
        assert_eq!(Formula::strong_disj(p(), q()).expand(), by_hand);
    }

    #[test]
    fn vee_bar_expansion() {
        let pq = Formula::conj(p(), q());
        let left = Formula::imp(Formula::imp(p(), pq.clone()), q());
        let right = Formula::imp(Formula::imp(q(), pq), p());
        let by_hand = Formula::conj(left.clone(), Formula::imp(left, right));
        assert_eq!(Formula::vee_bar(p(), q()).expand(), by_hand);
    }

    #[test]
    fn expansion_is_idempotent_and_primitive() {
        let f = Formula::iff(
            Formula::power(Formula::nuplus(2, p()), 2),
            Formula::nuplus(2, Formula::power(p(), 2)),
        );
        let e = f.expand();
        assert!(e.is_primitive());
        assert_eq!(e.expand(), e);
        assert_eq!(Formula::Top.expand(), Formula::imp(Formula::Bottom, Formula::Bottom));
        assert_eq!(
            Formula::power(p(), 3).expand(),
            Formula::conj(Formula::conj(p(), p()), p())
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(Formula::imp(p(), p()).to_string(), "p -> p");
        assert_eq!(Formula::imp(Formula::imp(p(), q()), p()).to_string(), "(p -> q) -> p");
        assert_eq!(Formula::imp(p(), Formula::imp(q(), p())).to_string(), "p -> q -> p");
        assert_eq!(Formula::negation(Formula::conj(p(), q())).to_string(), "!(p & q)");
        assert_eq!(Formula::power(Formula::negation(p()), 2).to_string(), "pow(!p, 2)");
        assert_eq!(Formula::nuplus(2, p()).to_string(), "nuplus(2, p)");
    }

    #[test]
    fn free_vars_and_substitution() {
        let f = Formula::imp(Formula::var("r"), Formula::conj(p(), Formula::var("r")));
        assert_eq!(f.free_vars(), vec!["p".to_string(), "r".to_string()]);
        let g = f.substitute(&|v| (v == "r").then(|| Formula::negation(q())));
        assert_eq!(g.to_string(), "!q -> p & !q");
    }
}
