use std::fmt;

use super::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChangSide {
    /// Infinitesimals `b_n`, all below every `a_m`.
    B,
    /// Co-infinitesimals `a_n`.
    A,
}

/// An element `a_n` or `b_n` of Chang's MV-algebra.
///
/// `a_0` is the top and `b_0` the bottom. The `a` side is ordered
/// decreasingly in the index, the `b` side increasingly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChangElement {
    pub side: ChangSide,
    pub index: u64,
}

impl ChangElement {
    pub fn a(index: u64) -> Self {
        ChangElement {
            side: ChangSide::A,
            index,
        }
    }

    pub fn b(index: u64) -> Self {
        ChangElement {
            side: ChangSide::B,
            index,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    /// The inverted copy `a'`, entirely below the original hoop.
    Neg,
    Pos,
}

/// An element of a disconnected rotation: `pos(q)` is `q` in the rotated
/// cancellative hoop, `neg(q)` its primed copy. `q` ranges over `(0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotationElement {
    pub sign: Sign,
    pub value: Rational,
}

impl RotationElement {
    pub fn pos(value: Rational) -> Self {
        RotationElement { sign: Sign::Pos, value }
    }

    pub fn neg(value: Rational) -> Self {
        RotationElement { sign: Sign::Neg, value }
    }
}

/// An element of an ordinal sum. Canonical: `payload` is never the local top
/// of its component; those values are all identified with [`SumElement::Top`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SumElement {
    Top,
    At {
        component: usize,
        payload: Box<ChainElement>,
    },
}

impl SumElement {
    pub fn at(component: usize, payload: ChainElement) -> Self {
        SumElement::At {
            component,
            payload: Box::new(payload),
        }
    }

    pub fn component(&self) -> Option<usize> {
        match self {
            SumElement::Top => None,
            SumElement::At { component, .. } => Some(*component),
        }
    }
}

/// A value of one concrete chain. Which variants are legal depends on the
/// chain; see [`crate::algebra::Chain::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ChainElement {
    Rat(Rational),
    Chang(ChangElement),
    Rot(RotationElement),
    Sum(SumElement),
}

impl ChainElement {
    pub fn rat(num: i64, den: i64) -> Self {
        ChainElement::Rat(Rational::new(num, den))
    }

    pub fn chang_a(index: u64) -> Self {
        ChainElement::Chang(ChangElement::a(index))
    }

    pub fn chang_b(index: u64) -> Self {
        ChainElement::Chang(ChangElement::b(index))
    }

    pub fn pos(value: Rational) -> Self {
        ChainElement::Rot(RotationElement::pos(value))
    }

    pub fn neg(value: Rational) -> Self {
        ChainElement::Rot(RotationElement::neg(value))
    }

    pub fn sum(component: usize, payload: ChainElement) -> Self {
        ChainElement::Sum(SumElement::at(component, payload))
    }

    pub fn sum_top() -> Self {
        ChainElement::Sum(SumElement::Top)
    }

    /// Component index for ordinal-sum elements; `None` for the top and for
    /// elements of non-sum chains.
    pub fn component(&self) -> Option<usize> {
        match self {
            ChainElement::Sum(s) => s.component(),
            _ => None,
        }
    }
}

impl fmt::Display for ChainElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainElement::Rat(q) => write!(f, "{q}"),
            ChainElement::Chang(c) => match c.side {
                ChangSide::A => write!(f, "a{}", c.index),
                ChangSide::B => write!(f, "b{}", c.index),
            },
            ChainElement::Rot(r) => match r.sign {
                Sign::Pos => write!(f, "pos {}", r.value),
                Sign::Neg => write!(f, "neg {}", r.value),
            },
            ChainElement::Sum(SumElement::Top) => write!(f, "1"),
            ChainElement::Sum(SumElement::At { component, payload }) => {
                write!(f, "c{component}:{payload}")
            }
        }
    }
}

/// Parses the chain-independent element syntax: rationals `3/5`, Chang
/// elements `a3`/`b3`, rotation elements `pos 1/8`/`neg 1/8`, and sum
/// elements `c2:3/5`. No membership check is made here.
pub fn parse_element_syntax(text: &str) -> Option<ChainElement> {
    let t = text.trim();
    if t.is_empty() {
        return None;
    }
    if let Some(rest) = t.strip_prefix('c') {
        let (idx, payload) = rest.split_once(':')?;
        let component = idx.trim().parse().ok()?;
        return Some(ChainElement::sum(component, parse_element_syntax(payload)?));
    }
    if let Some(rest) = t.strip_prefix("pos") {
        return rest.trim().parse().ok().map(ChainElement::pos);
    }
    if let Some(rest) = t.strip_prefix("neg") {
        return rest.trim().parse().ok().map(ChainElement::neg);
    }
    if let Some(rest) = t.strip_prefix('a') {
        return rest.parse().ok().map(ChainElement::chang_a);
    }
    if let Some(rest) = t.strip_prefix('b') {
        return rest.parse().ok().map(ChainElement::chang_b);
    }
    t.parse().ok().map(ChainElement::Rat)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_syntax() {
        assert_eq!(ChainElement::chang_a(3).to_string(), "a3");
        assert_eq!(ChainElement::chang_b(0).to_string(), "b0");
        assert_eq!(ChainElement::neg(Rational::new(1, 8)).to_string(), "neg 1/8");
        assert_eq!(ChainElement::sum(2, ChainElement::rat(3, 5)).to_string(), "c2:3/5");
        assert_eq!(ChainElement::sum_top().to_string(), "1");
    }

    #[test]
    fn parse_syntax() {
        for text in ["a3", "b12", "pos 1/8", "neg 1", "c2:3/5", "c0:b4", "c1:neg 1/2", "2/5"] {
            let e = parse_element_syntax(text).unwrap();
            assert_eq!(e.to_string(), text);
        }
        assert_eq!(
            parse_element_syntax("pos1/8"),
            Some(ChainElement::pos(Rational::new(1, 8)))
        );
        assert!(parse_element_syntax("q7").is_none());
        assert!(parse_element_syntax("c:1").is_none());
        assert!(parse_element_syntax("").is_none());
    }
}
