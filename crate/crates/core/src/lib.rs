//! Toolkit for the three-variable, equality-free logic of one ternary atom
//! `P(x,y,z)` and its neighbors: proof checkers for four equivalent
//! presentations, finite-model and Kripke-frame backends, a rank-bounded
//! hereditarily-finite-set oracle, the pairing-based simulation formulas, and
//! the end-to-end translation of first-order set theory into the P-language.

pub mod error;
pub mod gen;
pub mod pairing;
pub mod pipeline;
pub mod proofs;
pub mod semantics;
pub mod syntax;
