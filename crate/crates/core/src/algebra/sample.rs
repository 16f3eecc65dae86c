//! Deterministic point sets and random draws over a chain's encoding.

use rand::Rng;

use super::chain::Kind;
use super::{Chain, ChainElement, Rational};

/// Bounds for enumerating points of an infinite chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointBounds {
    /// Rational chains contribute the uniform grid `{i/denom}`.
    pub denom: Option<u32>,
    /// Chang chains contribute `a_n`, `b_n` for `n <= chang`.
    pub chang: Option<u64>,
    /// Highest component index visited in an `omega*` sum.
    pub components: usize,
}

impl Chain {
    /// The points selected by `bounds`, in ascending order. Finite chains
    /// always contribute their whole carrier. May be empty when no bound
    /// applies to this chain.
    pub fn sample_points(&self, bounds: &PointBounds) -> Vec<ChainElement> {
        if let Some(all) = self.carrier() {
            return all;
        }
        match &self.kind {
            Kind::Godel(_) | Kind::Lukasiewicz(_) => match bounds.denom {
                Some(d) => (0..=d).map(|i| ChainElement::rat(i as i64, d as i64)).collect(),
                None => vec![],
            },
            Kind::Cancellative => match bounds.denom {
                Some(d) => (1..=d).map(|i| ChainElement::rat(i as i64, d as i64)).collect(),
                None => vec![],
            },
            Kind::Chang => match bounds.chang {
                Some(n) => (0..=n)
                    .map(ChainElement::chang_b)
                    .chain((0..=n).rev().map(ChainElement::chang_a))
                    .collect(),
                None => vec![],
            },
            Kind::Rotation(_) => match bounds.denom {
                Some(d) => {
                    let d = d as i64;
                    (1..=d)
                        .rev()
                        .map(|i| ChainElement::neg(Rational::new(i, d)))
                        .chain((1..=d).map(|i| ChainElement::pos(Rational::new(i, d))))
                        .collect()
                }
                None => vec![],
            },
            Kind::Sum(_) | Kind::Omega(_) => {
                let count = match &self.kind {
                    Kind::Sum(c) => c.len(),
                    _ => bounds.components + 1,
                };
                let mut out = Vec::new();
                for i in 0..count {
                    let comp = self.component(i).expect("component in range");
                    let top = comp.top();
                    out.extend(
                        comp.sample_points(bounds)
                            .into_iter()
                            .filter(|e| *e != top)
                            .map(|e| ChainElement::sum(i, e)),
                    );
                }
                if !out.is_empty() {
                    out.push(ChainElement::sum_top());
                }
                out
            }
        }
    }

    /// A random element. Rational values have denominators at most `denom`;
    /// Chang indices are at most `denom`; `omega*` components at most
    /// `components`.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R, denom: u32, components: usize) -> ChainElement {
        let denom = denom.max(1) as i64;
        match &self.kind {
            Kind::Godel(Some(k)) | Kind::Lukasiewicz(Some(k)) => {
                let k = *k as i64;
                ChainElement::rat(rng.gen_range(0..k), k - 1)
            }
            Kind::Godel(None) | Kind::Lukasiewicz(None) => {
                let d = rng.gen_range(1..=denom);
                ChainElement::rat(rng.gen_range(0..=d), d)
            }
            Kind::Cancellative => {
                let d = rng.gen_range(1..=denom);
                ChainElement::rat(rng.gen_range(1..=d), d)
            }
            Kind::Chang => {
                let n = rng.gen_range(0..=denom as u64);
                if rng.gen_bool(0.5) {
                    ChainElement::chang_a(n)
                } else {
                    ChainElement::chang_b(n)
                }
            }
            Kind::Rotation(inner) => {
                let v = match inner.random_element(rng, denom as u32, components) {
                    ChainElement::Rat(q) => q,
                    other => unreachable!("cancellative hoop produced {other}"),
                };
                if rng.gen_bool(0.5) {
                    ChainElement::pos(v)
                } else {
                    ChainElement::neg(v)
                }
            }
            Kind::Sum(_) | Kind::Omega(_) => {
                if rng.gen_ratio(1, 32) {
                    return ChainElement::sum_top();
                }
                let count = match &self.kind {
                    Kind::Sum(c) => c.len(),
                    _ => components + 1,
                };
                let i = rng.gen_range(0..count);
                let comp = self.component(i).expect("component in range");
                let top = comp.top();
                loop {
                    let e = comp.random_element(rng, denom as u32, components);
                    if e != top {
                        return ChainElement::sum(i, e);
                    }
                }
            }
        }
    }
}
