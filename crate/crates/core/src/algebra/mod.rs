//! Chains and hoops from the BL catalogue: finite and standard Gödel and
//! Łukasiewicz chains, the standard cancellative hoop, Chang's MV-algebra,
//! disconnected rotations, and ordinal sums (finite and `omega*`).

mod chain;
mod descriptor;
mod element;
pub mod laws;
mod rational;
mod sample;

pub use chain::{make_chain, Chain, Order};
pub use descriptor::Descriptor;
pub use element::{parse_element_syntax, ChainElement, ChangElement, ChangSide, RotationElement, Sign, SumElement};
pub use rational::{ParseRationalError, Rational};
pub use sample::PointBounds;
