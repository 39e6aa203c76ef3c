//! Truncation-aware verdicts over rank-bounded set universes.
//!
//! Models of the pairing apparatus are necessarily infinite; any finite level
//! cuts pairs off at the top ranks. The oracle therefore evaluates a formula
//! over two adjacent truncations and compares the truth table of *every*
//! subformula on assignments into a still lower level (the margin). A verdict
//! is only `TRUE_STABLE`/`FALSE_STABLE` when no subformula changed between
//! the truncations on the protected assignments; otherwise the formula's
//! value is a truncation artifact and the answer is `UNSTABLE`.

use crate::error::SemanticsError;
use crate::semantics::hf::{level_size, HfLevel};
use crate::semantics::model::Structure;
use crate::semantics::tables::DagIndex;
use crate::syntax::{Formula, Lang};

/// Oracle verdict. `UNSTABLE` is a first-class answer and is never coerced
/// to a boolean.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriState {
    TrueStable,
    FalseStable,
    Unstable,
}

impl std::fmt::Display for TriState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TriState::TrueStable => "TRUE_STABLE",
            TriState::FalseStable => "FALSE_STABLE",
            TriState::Unstable => "UNSTABLE",
        })
    }
}

/// Compare a formula over a structure and a sub-structure.
///
/// `small` must be an induced substructure of `big` on the first
/// `small.size()` elements, and `restrict <= small.size()`. Every distinct
/// subformula must agree between the two on assignments valued below
/// `restrict`; the verdict then reports whether the formula holds on all
/// restricted assignments (for sentences: its truth value).
pub fn stability_eval<B: Structure, S: Structure>(
    f: Formula,
    big: &B,
    small: &S,
    restrict: usize,
) -> Result<TriState, SemanticsError> {
    assert!(restrict <= small.size());
    assert!(small.size() <= big.size());
    let idx = DagIndex::new(&[f]);
    let tb = idx.eval(big)?;
    let ts = idx.eval(small)?;
    for node in 0..idx.node_count() as u32 {
        if !tb.agree_restricted(node, &ts, node, restrict) {
            return Ok(TriState::Unstable);
        }
    }
    let root = idx.root(0);
    if tb.valid_restricted(root, restrict) {
        Ok(TriState::TrueStable)
    } else {
        Ok(TriState::FalseStable)
    }
}

/// Evaluate over `V_rank` against `V_{rank-1}`, protecting assignments into
/// `V_{rank-1-margin}`. Demands `2 <= rank <= 5` and `margin <= rank - 2`.
///
/// Membership formulas are evaluated over real membership; formulas in the
/// P-language see the induced relation `P(a,b,c) <=> a=b=c or a in b`.
pub fn hf_oracle(f: Formula, rank: u32, margin: u32) -> Result<TriState, SemanticsError> {
    if !(2..=5).contains(&rank) {
        return Err(SemanticsError::RankTooLarge { rank, bound: 5 });
    }
    if margin > rank - 2 {
        return Err(SemanticsError::RankTooLarge {
            rank: rank - 1 - margin,
            bound: rank,
        });
    }
    if f.lang() == Lang::Modal {
        return Err(SemanticsError::WrongLanguage {
            lang: Lang::Modal,
            message: "the set-theoretic oracle has no modal semantics".into(),
        });
    }
    let big = HfLevel::new(rank)?;
    let small = HfLevel::new(rank - 1)?;
    let restrict = level_size(rank - 1 - margin).unwrap() as usize;
    stability_eval(f, &big, &small, restrict)
}
