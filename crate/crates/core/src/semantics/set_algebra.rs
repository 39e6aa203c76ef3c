//! Diagonal-free set algebras of dimension three over `U^3`.
//!
//! The carrier is the full power set of the cube; `+` is union, `-` is
//! complement, and the three unary operations are cylindrifications along
//! coordinates 0, 1 and 2.

use std::collections::BTreeMap;

use crate::error::SemanticsError;
use crate::semantics::bitset::TripleSet;
use crate::syntax::{EqTerm, TermView, UnOp};

/// A set algebra with an assignment of generator subsets to term variables.
#[derive(Debug, Clone)]
pub struct SetAlgebra3 {
    n: usize,
    gens: BTreeMap<u32, TripleSet>,
}

impl SetAlgebra3 {
    pub fn new(n: usize) -> SetAlgebra3 {
        SetAlgebra3 {
            n,
            gens: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn assign(mut self, var: u32, set: TripleSet) -> SetAlgebra3 {
        assert_eq!(set.n(), self.n);
        self.gens.insert(var, set);
        self
    }
}

/// Recursive evaluation of an equational term to a subset of the cube.
pub fn set_algebra_eval(alg: &SetAlgebra3, t: EqTerm) -> Result<TripleSet, SemanticsError> {
    match t.view() {
        TermView::Var(i) => alg
            .gens
            .get(&i)
            .cloned()
            .ok_or(SemanticsError::UnboundTermVariable(i)),
        TermView::Plus(a, b) => Ok(set_algebra_eval(alg, a)?.union(&set_algebra_eval(alg, b)?)),
        TermView::Apply(op, a) => {
            let s = set_algebra_eval(alg, a)?;
            Ok(match op {
                UnOp::Minus => s.complement(),
                UnOp::F => s.cylindrify(0),
                UnOp::G => s.cylindrify(1),
                UnOp::H => s.cylindrify(2),
            })
        }
    }
}
