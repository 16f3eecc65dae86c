#![allow(dead_code)]

use blchang_core::formula::Formula;
use blchang_core::{Chain, ChainElement, Descriptor, Rational};
use proptest::prelude::*;

pub fn chain(s: &str) -> Chain {
    Chain::parse(s).expect("descriptor parses")
}

/// Raw coordinates, shaped into an element of a given chain by [`element`].
#[derive(Clone, Debug)]
pub struct Raw {
    num: u32,
    den: u32,
    side: bool,
    comp: usize,
}

pub fn raw() -> impl Strategy<Value = Raw> {
    (0u32..200, 1u32..=24, any::<bool>(), 0usize..4).prop_map(|(num, den, side, comp)| Raw { num, den, side, comp })
}

fn cancellative(r: &Raw) -> Rational {
    Rational::new((r.num % r.den) as i64 + 1, r.den as i64)
}

/// Builds an element of `c` from `r`, by cases on the descriptor.
pub fn element(c: &Chain, r: &Raw) -> ChainElement {
    let sum_part = |i: usize, comp: &Chain| {
        let e = element(comp, r);
        if e == comp.top() {
            ChainElement::sum_top()
        } else {
            ChainElement::sum(i, e)
        }
    };
    if let Some(cs) = c.components() {
        let i = r.comp % cs.len();
        return sum_part(i, &cs[i]);
    }
    match c.descriptor() {
        Descriptor::FiniteGodel(k) | Descriptor::FiniteMV(k) => {
            let k = *k as u32;
            ChainElement::rat((r.num % k) as i64, (k - 1) as i64)
        }
        Descriptor::StandardMV | Descriptor::StandardGodel => {
            ChainElement::rat((r.num % (r.den + 1)) as i64, r.den as i64)
        }
        Descriptor::StandardCancellativeHoop => ChainElement::Rat(cancellative(r)),
        Descriptor::Chang => {
            let n = (r.num % 40) as u64;
            if r.side {
                ChainElement::chang_a(n)
            } else {
                ChainElement::chang_b(n)
            }
        }
        Descriptor::Rotation(_) => {
            if r.side {
                ChainElement::pos(cancellative(r))
            } else {
                ChainElement::neg(cancellative(r))
            }
        }
        Descriptor::OmegaSum(_) => sum_part(r.comp, c.component(r.comp).unwrap()),
        other => panic!("no element builder for {other}"),
    }
}

pub const BOUNDED: &[&str] = &[
    "G(2)",
    "G(4)",
    "MV(5)",
    "MV(8)",
    "MV(2) ++ MV(3)",
    "LukStd",
    "GodStd",
    "ProdStd",
    "C",
    "V",
    "omega*V",
    "C ++ LukStd",
];

pub const MV_CHAINS: &[&str] = &["MV(2)", "MV(3)", "MV(6)", "LukStd", "C", "V"];

/// Formulas over `p, q, r` using every connective.
pub fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        4 => prop::sample::select(vec!["p", "q", "r"]).prop_map(Formula::var),
        1 => Just(Formula::Bottom),
        1 => Just(Formula::Top),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        let pair = || (inner.clone(), inner.clone());
        prop_oneof![
            pair().prop_map(|(f, g)| Formula::conj(f, g)),
            pair().prop_map(|(f, g)| Formula::imp(f, g)),
            inner.clone().prop_map(Formula::negation),
            pair().prop_map(|(f, g)| Formula::meet(f, g)),
            pair().prop_map(|(f, g)| Formula::join(f, g)),
            pair().prop_map(|(f, g)| Formula::strong_disj(f, g)),
            pair().prop_map(|(f, g)| Formula::vee_bar(f, g)),
            pair().prop_map(|(f, g)| Formula::iff(f, g)),
            (inner.clone(), 1u32..=3).prop_map(|(f, n)| Formula::power(f, n)),
            (inner.clone(), 1u32..=3).prop_map(|(f, n)| Formula::nsum(n, f)),
            (inner.clone(), 1u32..=3).prop_map(|(f, n)| Formula::nuplus(n, f)),
        ]
    })
}
