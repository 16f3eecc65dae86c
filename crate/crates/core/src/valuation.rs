use std::fmt;

use crate::algebra::ChainElement;

/// Assignment of chain elements to variable names, kept in insertion order
/// so witnesses print in the declared variable order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Valuation {
    entries: Vec<(String, ChainElement)>,
}

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets `name`, replacing any earlier assignment.
    pub fn set(&mut self, name: impl Into<String>, value: ChainElement) {
        let name = name.into();
        match self.entries.iter_mut().find(|(n, _)| *n == name) {
            Some(slot) => slot.1 = value,
            None => self.entries.push((name, value)),
        }
    }

    pub fn with(mut self, name: impl Into<String>, value: ChainElement) -> Self {
        self.set(name, value);
        self
    }

    pub fn get(&self, name: &str) -> Option<&ChainElement> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &ChainElement)> {
        self.entries.iter().map(|(n, v)| (n.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub(crate) fn from_parts(names: &[String], values: &[ChainElement]) -> Self {
        Valuation {
            entries: names.iter().cloned().zip(values.iter().cloned()).collect(),
        }
    }
}

/// `x=2/5, y=pos 1/8`
impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (n, v)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n}={v}")?;
        }
        Ok(())
    }
}
