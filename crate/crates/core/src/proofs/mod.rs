//! Proof objects and checkers for the four presentations: the Hilbert-style
//! system of the P-language (with either complementation axiom), the
//! equality-free restricted system, the trimodal system, and equational
//! logic over the diagonal-free axioms. Checking is certificate-like: axiom
//! lines carry explicit metavariable bindings and are re-instantiated.

mod check;
mod format;
mod library;
mod schema;
mod tautology;

pub use check::{check_proof, match_axiom};
pub use format::{parse_hypotheses, parse_proof, render_proof};
pub use library::proof_library;
pub use schema::{schema_ids, Bindings, BindingValue};
pub use tautology::is_tautology;

use std::collections::BTreeMap;

use crate::syntax::{Ast, EqTerm, Lang, Var3};

/// The four checkable presentations (the first in two axiomatizations).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProofSystem {
    /// Axioms ((1))-((7)).
    Hilbert3,
    /// Axioms ((1))-((5)), ((7)), ((8)); the complementation axiom ((6)) is
    /// replaced by the intersection form.
    Hilbert3Alt8,
    /// Equality-free restricted system, axioms ((V1))-((V4)).
    ReEqFree,
    /// Three commuting S5 modalities, axioms ((B)), ((K)), ((S5)), ((C1)),
    /// ((C2)).
    Modal,
    /// Equational logic over ((B1))-((B3)), ((D1))-((D5)).
    Equational,
}

impl ProofSystem {
    pub const ALL: [ProofSystem; 5] = [
        ProofSystem::Hilbert3,
        ProofSystem::Hilbert3Alt8,
        ProofSystem::ReEqFree,
        ProofSystem::Modal,
        ProofSystem::Equational,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ProofSystem::Hilbert3 => "hilbert3",
            ProofSystem::Hilbert3Alt8 => "hilbert3-alt8",
            ProofSystem::ReEqFree => "re",
            ProofSystem::Modal => "modal",
            ProofSystem::Equational => "eq",
        }
    }

    pub fn from_tag(s: &str) -> Option<ProofSystem> {
        Self::ALL.into_iter().find(|p| p.tag() == s)
    }

    /// Language of statements; `None` for the equational system.
    pub fn lang(self) -> Option<Lang> {
        match self {
            ProofSystem::Hilbert3 | ProofSystem::Hilbert3Alt8 | ProofSystem::ReEqFree => {
                Some(Lang::Fmd3)
            }
            ProofSystem::Modal => Some(Lang::Modal),
            ProofSystem::Equational => None,
        }
    }
}

/// Generalization target: a quantifier variable or a modal index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenVar {
    Var(Var3),
    Modal(u8),
}

/// Equational inference rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqRule {
    Refl,
    Sym,
    Trans,
    CongPlus,
    CongMinus,
    CongF,
    CongG,
    CongH,
    /// Rule of invariance: simultaneous substitution of terms for variables.
    Invariance,
}

impl EqRule {
    pub const ALL: [EqRule; 9] = [
        EqRule::Refl,
        EqRule::Sym,
        EqRule::Trans,
        EqRule::CongPlus,
        EqRule::CongMinus,
        EqRule::CongF,
        EqRule::CongG,
        EqRule::CongH,
        EqRule::Invariance,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            EqRule::Refl => "refl",
            EqRule::Sym => "sym",
            EqRule::Trans => "trans",
            EqRule::CongPlus => "cong+",
            EqRule::CongMinus => "cong-",
            EqRule::CongF => "congf",
            EqRule::CongG => "congg",
            EqRule::CongH => "congh",
            EqRule::Invariance => "inv",
        }
    }

    pub fn from_tag(s: &str) -> Option<EqRule> {
        Self::ALL.into_iter().find(|r| r.tag() == s)
    }

    pub fn premise_count(self) -> usize {
        match self {
            EqRule::Refl => 0,
            EqRule::Trans | EqRule::CongPlus => 2,
            _ => 1,
        }
    }
}

/// How a proof line is justified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Hyp(String),
    Axiom {
        schema: String,
        bindings: Bindings,
    },
    /// Modus ponens: `minor` is the antecedent line, `major` the implication.
    Mp {
        minor: usize,
        major: usize,
    },
    Gen {
        var: GenVar,
        premise: usize,
    },
    Eq {
        rule: EqRule,
        premises: Vec<usize>,
        subst: Option<BTreeMap<u32, EqTerm>>,
    },
}

/// One numbered line of a proof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofLine {
    pub index: usize,
    pub statement: Ast,
    pub justification: Justification,
}

/// A Hilbert-style proof: a non-empty numbered sequence of justified lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    pub system: ProofSystem,
    pub lines: Vec<ProofLine>,
}

impl Proof {
    pub fn conclusion(&self) -> Ast {
        self.lines.last().expect("proofs are non-empty").statement
    }
}

/// Outcome of checking: accepted, or the first failing line with a reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub accepted: bool,
    pub first_failure: Option<(usize, String)>,
}

impl Verdict {
    pub fn accept() -> Verdict {
        Verdict {
            accepted: true,
            first_failure: None,
        }
    }

    pub fn reject(line: usize, reason: impl Into<String>) -> Verdict {
        Verdict {
            accepted: false,
            first_failure: Some((line, reason.into())),
        }
    }
}

/// Named hypothesis set.
pub type Hypotheses = BTreeMap<String, Ast>;

#[cfg(test)]
mod tests;
