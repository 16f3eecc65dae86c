//! Exact workbench for BL-chains.
//!
//! * [`algebra`]: chains (Chang's algebra, standard chains, cancellative
//!   hoops, disconnected rotations, ordinal sums) with exact operations.
//! * [`formula`]: propositional BL formulas, their parser and evaluator, and
//!   the axiom schemas.
//! * [`checker`]: identity checking in a term language, counterexample
//!   search, and the regression suite of claims about these chains.
//! * [`embedding`]: finite partial subalgebras and partial-embedding search.

pub mod algebra;
pub mod checker;
pub mod embedding;
mod error;
pub mod formula;
mod valuation;

pub use algebra::{make_chain, Chain, ChainElement, Descriptor, Order, Rational};
pub use error::{AlgebraError, CheckError, EvalError, ParseError};
pub use valuation::Valuation;
