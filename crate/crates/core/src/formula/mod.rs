//! Propositional BL formulas: syntax tree, parser, evaluator and schemas.

mod ast;
mod eval;
mod parser;
mod schema;

pub use ast::Formula;
pub use eval::{evaluate, is_tautology};
pub use parser::parse;
pub use schema::{schema, schemas, Schema, METAVARIABLES};
