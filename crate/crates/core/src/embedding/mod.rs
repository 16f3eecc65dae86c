//! Finite partial subalgebras of chains and partial embeddings between them.
//!
//! A partial subalgebra keeps the `*` and `⇒` entries whose true result lies
//! in the carrier; the other entries are undefined. An embedding must be
//! injective, order preserving, preserve every defined entry, and send a
//! flagged bottom/top to the bottom/top of the target.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::algebra::{Chain, ChainElement, PointBounds, Rational};
use crate::error::AlgebraError;

type Res<T> = Result<T, AlgebraError>;

/// The partial operation tables of a finite subset of a chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialAlgebra {
    source: String,
    carrier: Vec<ChainElement>,
    mul: Vec<Vec<Option<usize>>>,
    imp: Vec<Vec<Option<usize>>>,
    has_bottom: bool,
    has_top: bool,
}

/// Restricts the operations of `chain` to `elements`.
pub fn partial_subalgebra(chain: &Chain, elements: &[ChainElement]) -> Res<PartialAlgebra> {
    for x in elements {
        chain.validate(x)?;
    }
    let mut carrier = elements.to_vec();
    let mut err = None;
    carrier.sort_by(|a, b| {
        chain.raw_cmp(a, b).unwrap_or_else(|e| {
            err.get_or_insert(e);
            Ordering::Equal
        })
    });
    if let Some(e) = err {
        return Err(e);
    }
    if let Some(w) = carrier.windows(2).find(|w| w[0] == w[1]) {
        return Err(AlgebraError::Argument(format!("element {} listed twice", w[0])));
    }
    let index: HashMap<&ChainElement, usize> = carrier.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let n = carrier.len();
    let mut mul = vec![vec![None; n]; n];
    let mut imp = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            mul[i][j] = index.get(&chain.raw_mul(&carrier[i], &carrier[j])?).copied();
            imp[i][j] = index.get(&chain.raw_imp(&carrier[i], &carrier[j])?).copied();
        }
    }
    let has_bottom = chain.bottom().is_some_and(|b| index.contains_key(&b));
    let has_top = index.contains_key(&chain.top());
    Ok(PartialAlgebra {
        source: chain.to_string(),
        carrier,
        mul,
        imp,
        has_bottom,
        has_top,
    })
}

/// Closes `elements` under `∼` and `⊕` of a bounded chain, giving up once
/// the set exceeds `limit` elements.
pub fn close_under_neg_oplus(chain: &Chain, elements: &[ChainElement], limit: usize) -> Res<Vec<ChainElement>> {
    let mut set: Vec<ChainElement> = Vec::new();
    let mut frontier: Vec<ChainElement> = elements.to_vec();
    while let Some(x) = frontier.pop() {
        if set.contains(&x) {
            continue;
        }
        chain.validate(&x)?;
        if set.len() >= limit {
            return Err(AlgebraError::Argument(format!("closure exceeds {limit} elements")));
        }
        frontier.push(chain.raw_neg(&x)?);
        for y in set.iter().chain(std::iter::once(&x)) {
            frontier.push(chain.raw_oplus(&x, y)?);
        }
        set.push(x);
    }
    Ok(set)
}

impl PartialAlgebra {
    /// Descriptor of the chain the fragment was cut from.
    pub fn source(&self) -> &str {
        &self.source
    }

    /// The elements in ascending order.
    pub fn carrier(&self) -> &[ChainElement] {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn has_bottom(&self) -> bool {
        self.has_bottom
    }

    pub fn has_top(&self) -> bool {
        self.has_top
    }

    fn position(&self, x: &ChainElement) -> Option<usize> {
        self.carrier.iter().position(|c| c == x)
    }

    /// `x * y` if both are in the carrier and the product is too.
    pub fn mul(&self, x: &ChainElement, y: &ChainElement) -> Option<&ChainElement> {
        let k = self.mul[self.position(x)?][self.position(y)?]?;
        Some(&self.carrier[k])
    }

    /// `x ⇒ y` if both are in the carrier and the residuum is too.
    pub fn imp(&self, x: &ChainElement, y: &ChainElement) -> Option<&ChainElement> {
        let k = self.imp[self.position(x)?][self.position(y)?]?;
        Some(&self.carrier[k])
    }

    /// Number of defined `(*, ⇒)` entries.
    pub fn defined_entries(&self) -> (usize, usize) {
        let count = |t: &Vec<Vec<Option<usize>>>| t.iter().flatten().filter(|e| e.is_some()).count();
        (count(&self.mul), count(&self.imp))
    }

    /// Every entry is defined.
    pub fn is_closed(&self) -> bool {
        let n = self.len();
        self.defined_entries() == (n * n, n * n)
    }

    fn entries(&self) -> impl Iterator<Item = (Op, usize, usize, usize)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |i| {
            (0..n).flat_map(move |j| {
                let m = self.mul[i][j].map(|k| (Op::Mul, i, j, k));
                let r = self.imp[i][j].map(|k| (Op::Imp, i, j, k));
                m.into_iter().chain(r)
            })
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Mul,
    Imp,
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Op::Mul => "*",
            Op::Imp => "=>",
        })
    }
}

fn apply(target: &Chain, op: Op, x: &ChainElement, y: &ChainElement) -> Res<ChainElement> {
    match op {
        Op::Mul => target.raw_mul(x, y),
        Op::Imp => target.raw_imp(x, y),
    }
}

/// A map from a fragment's carrier into a target chain, listed in carrier
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingMap {
    pub pairs: Vec<(ChainElement, ChainElement)>,
}

impl EmbeddingMap {
    pub fn get(&self, x: &ChainElement) -> Option<&ChainElement> {
        self.pairs.iter().find(|(a, _)| a == x).map(|(_, b)| b)
    }
}

/// `{a0 -> pos 1, b0 -> neg 1}`
impl fmt::Display for EmbeddingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a} -> {b}")?;
        }
        write!(f, "}}")
    }
}

/// One reason a map is not an embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Unmapped(ChainElement),
    NotInTarget(ChainElement, ChainElement),
    NotInjective(ChainElement, ChainElement),
    Order(ChainElement, ChainElement),
    Operation {
        op: Op,
        x: ChainElement,
        y: ChainElement,
        expected: ChainElement,
        got: ChainElement,
    },
    Bottom,
    Top,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Unmapped(x) => write!(f, "{x} has no image"),
            Violation::NotInTarget(x, y) => write!(f, "image {y} of {x} is not in the target"),
            Violation::NotInjective(x, y) => write!(f, "{x} and {y} have the same image"),
            Violation::Order(x, y) => write!(f, "{x} < {y} but their images are reversed"),
            Violation::Operation {
                op,
                x,
                y,
                expected,
                got,
            } => write!(
                f,
                "{x} {op} {y}: image of the result is {expected}, operation on images gives {got}"
            ),
            Violation::Bottom => write!(f, "bottom is not sent to bottom"),
            Violation::Top => write!(f, "top is not sent to top"),
        }
    }
}

/// Outcome of [`check_embedding`]: empty `violations` means success.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EmbeddingCheck {
    pub violations: Vec<Violation>,
}

impl EmbeddingCheck {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies injectivity, order and every defined table entry.
pub fn check_embedding(m: &EmbeddingMap, p: &PartialAlgebra, target: &Chain) -> Res<EmbeddingCheck> {
    let mut v = Vec::new();
    let mut image = Vec::with_capacity(p.len());
    for x in &p.carrier {
        match m.get(x) {
            Some(y) if target.contains(y) => image.push(Some(y.clone())),
            Some(y) => {
                v.push(Violation::NotInTarget(x.clone(), y.clone()));
                image.push(None);
            }
            None => {
                v.push(Violation::Unmapped(x.clone()));
                image.push(None);
            }
        }
    }
    if !v.is_empty() {
        return Ok(EmbeddingCheck { violations: v });
    }
    let image: Vec<ChainElement> = image.into_iter().map(Option::unwrap).collect();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            match target.raw_cmp(&image[i], &image[j])? {
                Ordering::Less => {}
                Ordering::Equal => v.push(Violation::NotInjective(p.carrier[i].clone(), p.carrier[j].clone())),
                Ordering::Greater => v.push(Violation::Order(p.carrier[i].clone(), p.carrier[j].clone())),
            }
        }
    }
    for (op, i, j, k) in p.entries() {
        let got = apply(target, op, &image[i], &image[j])?;
        if got != image[k] {
            v.push(Violation::Operation {
                op,
                x: p.carrier[i].clone(),
                y: p.carrier[j].clone(),
                expected: image[k].clone(),
                got,
            });
        }
    }
    if p.has_bottom && target.bottom().as_ref() != image.first() {
        v.push(Violation::Bottom);
    }
    if p.has_top && Some(&target.top()) != image.last() {
        v.push(Violation::Top);
    }
    Ok(EmbeddingCheck { violations: v })
}

/// Candidate images for [`find_embedding`] on infinite targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub denom: u32,
    pub chang: u64,
    /// Highest `omega*` component used.
    pub components: usize,
    /// Search nodes visited before giving up.
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            denom: 16,
            chang: 16,
            components: 3,
            max_nodes: 1_000_000,
        }
    }
}

/// Result of [`find_embedding`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(EmbeddingMap),
    /// No map among the candidates. `exhausted` is false when the node
    /// limit cut the search short; `decided` when the candidates were the
    /// whole finite target and the search ran to completion.
    NotFoundUpToBudget {
        candidates: usize,
        nodes: u64,
        exhausted: bool,
        decided: bool,
    },
}

struct Search<'a> {
    p: &'a PartialAlgebra,
    target: &'a Chain,
    candidates: Vec<ChainElement>,
    nodes: u64,
    max_nodes: u64,
    aborted: bool,
}

impl Search<'_> {
    /// Fills forced images from defined entries; false on a conflict.
    fn propagate(&self, assign: &mut [Option<ChainElement>]) -> Res<bool> {
        loop {
            let mut changed = false;
            for (op, i, j, k) in self.p.entries() {
                let (Some(x), Some(y)) = (&assign[i], &assign[j]) else {
                    continue;
                };
                let z = apply(self.target, op, x, y)?;
                match &assign[k] {
                    Some(w) if *w != z => return Ok(false),
                    Some(_) => {}
                    None => {
                        assign[k] = Some(z);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut last: Option<&ChainElement> = None;
        for y in assign.iter().flatten() {
            if let Some(l) = last {
                if self.target.raw_cmp(l, y)? != Ordering::Less {
                    return Ok(false);
                }
            }
            last = Some(y);
        }
        Ok(true)
    }

    fn solve(&mut self, assign: Vec<Option<ChainElement>>) -> Res<Option<Vec<ChainElement>>> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.aborted = true;
            return Ok(None);
        }
        let Some(next) = assign.iter().position(Option::is_none) else {
            return Ok(Some(assign.into_iter().map(Option::unwrap).collect()));
        };
        let lo = assign[..next].iter().rev().flatten().next().cloned();
        let hi = assign[next + 1..].iter().flatten().next().cloned();
        for c in self.candidates.clone() {
            if let Some(l) = &lo {
                if self.target.raw_cmp(&c, l)? != Ordering::Greater {
                    continue;
                }
            }
            if let Some(h) = &hi {
                if self.target.raw_cmp(&c, h)? != Ordering::Less {
                    break;
                }
            }
            let mut a = assign.clone();
            a[next] = Some(c);
            if self.propagate(&mut a)? {
                if let Some(done) = self.solve(a)? {
                    return Ok(Some(done));
                }
            }
            if self.aborted {
                return Ok(None);
            }
        }
        Ok(None)
    }
}

/// Backtracking search for an embedding of `p` into `target`.
///
/// Carrier elements are assigned in ascending order, each to the least
/// candidate above the previous image; after every choice the defined
/// table entries force further images, which need not be candidates
/// themselves. Candidates are the whole carrier of a finite target, and the
/// budget's grid otherwise.
pub fn find_embedding(p: &PartialAlgebra, target: &Chain, budget: &SearchBudget) -> Res<SearchOutcome> {
    let candidates = match target.carrier() {
        Some(all) => all,
        None => target.sample_points(&PointBounds {
            denom: Some(budget.denom),
            chang: Some(budget.chang),
            components: budget.components,
        }),
    };
    let finite = target.is_finite();
    let mut search = Search {
        p,
        target,
        candidates,
        nodes: 0,
        max_nodes: budget.max_nodes,
        aborted: false,
    };
    let not_found = |s: &Search| SearchOutcome::NotFoundUpToBudget {
        candidates: s.candidates.len(),
        nodes: s.nodes,
        exhausted: !s.aborted,
        decided: finite && !s.aborted,
    };
    let mut assign: Vec<Option<ChainElement>> = vec![None; p.len()];
    if p.has_bottom {
        match target.bottom() {
            Some(b) => assign[0] = Some(b),
            None => return Ok(not_found(&search)),
        }
    }
    if p.has_top {
        assign[p.len() - 1] = Some(target.top());
    }
    if !search.propagate(&mut assign)? {
        return Ok(not_found(&search));
    }
    match search.solve(assign)? {
        Some(images) => {
            let m = EmbeddingMap {
                pairs: p.carrier.iter().cloned().zip(images).collect(),
            };
            debug_assert!(check_embedding(&m, p, target)?.is_ok());
            Ok(SearchOutcome::Found(m))
        }
        None => Ok(not_found(&search)),
    }
}

/// `{a_0, ..., a_n, b_0, ..., b_n}` as a fragment of Chang's algebra.
pub fn chang_fragment(n_max: u64) -> Res<PartialAlgebra> {
    let chain = Chain::new(crate::algebra::Descriptor::Chang)?;
    let elements: Vec<ChainElement> = (0..=n_max)
        .map(ChainElement::chang_a)
        .chain((0..=n_max).map(ChainElement::chang_b))
        .collect();
    partial_subalgebra(&chain, &elements)
}

/// `a_n ↦ pos(ratioⁿ)`, `b_n ↦ neg(ratioⁿ)` for `n <= n_max`, an embedding
/// of the Chang fragment into the rotation of the cancellative hoop.
pub fn chang_into_rotation(n_max: u64, ratio: &Rational) -> Res<EmbeddingMap> {
    if ratio.is_negative() || ratio.is_zero() || *ratio >= Rational::one() {
        return Err(AlgebraError::Argument(format!("ratio {ratio} is not in (0, 1)")));
    }
    let n_max = u32::try_from(n_max).map_err(|_| AlgebraError::Argument(format!("n_max {n_max} too large")))?;
    let mut pairs: Vec<(ChainElement, ChainElement)> = Vec::new();
    let mut negs = Vec::new();
    for n in 0..=n_max {
        let q = ratio.pow(n);
        negs.push((ChainElement::chang_b(n as u64), ChainElement::neg(q.clone())));
        pairs.push((ChainElement::chang_a(n as u64), ChainElement::pos(q)));
    }
    // carrier order: b_0 < ... < b_n < a_n < ... < a_0
    pairs.reverse();
    negs.extend(pairs);
    Ok(EmbeddingMap { pairs: negs })
}
