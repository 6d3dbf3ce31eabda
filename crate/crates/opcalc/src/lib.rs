//! opcalc: a decidable calculus of unbounded diagonal-shift operators on
//! ℓ² sequence spaces.
//!
//! The model class is monomial operators `(Tx)_n = a_n·x_{n−k}` with exact
//! symbolic coefficients and explicit domains.  Adjoints, compositions,
//! closures, polar decompositions, extension comparisons, range/inverse
//! state classification and relative boundedness are all decidable, which
//! makes the classical adjoint–closure calculus for unbounded products
//! mechanically checkable on concrete witnesses.  A rulebook of those
//! results drives a forward-chaining inference engine with provenance, and a
//! witness catalog replays each result in-model.

pub mod scalar;
pub mod symbol;
pub mod growth;
pub mod domain;
pub mod operator;
pub mod term;
pub mod engine;
pub mod rulebook;
pub mod state;
pub mod sample;
pub mod catalog;
pub mod oracle;
pub mod parse;
pub mod cli;
