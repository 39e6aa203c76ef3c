//! Error types shared across the crate.

use thiserror::Error;

use crate::syntax::Lang;

/// Errors raised while reading or constructing syntax.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SyntaxError {
    #[error("syntax error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("language violation in {lang}: {message}")]
    LanguageViolation { lang: Lang, message: String },
}

impl SyntaxError {
    pub fn parse(position: usize, message: impl Into<String>) -> SyntaxError {
        SyntaxError::Parse {
            position,
            message: message.into(),
        }
    }

    pub fn language_violation(lang: Lang, message: impl Into<String>) -> SyntaxError {
        SyntaxError::LanguageViolation {
            lang,
            message: message.into(),
        }
    }
}

/// Errors raised by the proof checkers.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ProofError {
    #[error("line {line}: premise index {premise} out of range")]
    MalformedLine { line: usize, premise: usize },
    #[error("line {line}: statement language does not match proof system")]
    LanguageMismatch { line: usize },
    #[error("tautology check abstracted {letters} letters; the cap is {cap}")]
    TooManyLetters { letters: usize, cap: usize },
    #[error("{0}")]
    Format(String),
}

/// Errors raised by the model-theoretic backends.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SemanticsError {
    #[error("model does not interpret the relation {relation}")]
    MissingRelation { relation: &'static str },
    #[error("assignment does not cover free variable index {var}")]
    PartialAssignment { var: u32 },
    #[error("universe size {n} exceeds the exhaustive bound {bound}")]
    SizeTooLarge { n: usize, bound: usize },
    #[error("rank {rank} exceeds the oracle bound {bound}")]
    RankTooLarge { rank: u32, bound: u32 },
    #[error("evaluation table for this formula needs {need} bits; the budget is {budget}")]
    EvaluationTooLarge { need: u128, budget: u128 },
    #[error("term variable X{0} has no generator assignment")]
    UnboundTermVariable(u32),
    #[error("not an equivalence relation: {0}")]
    NotEquivalence(&'static str),
    #[error("accessibility relations {0} and {1} do not commute")]
    NonCommuting(u8, u8),
    #[error("formula language {lang} cannot be evaluated here: {message}")]
    WrongLanguage { lang: Lang, message: String },
}

/// Errors raised by the formula builders of the pairing machinery.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("free variables of the argument must be contained in {{{expected}}}")]
    FreeVarViolation { expected: String },
    #[error("operation {op} expects {expected} arguments, got {got}")]
    ArityMismatch {
        op: String,
        expected: usize,
        got: usize,
    },
    #[error("expected a formula of {expected}, got {got}")]
    LanguageViolation { expected: Lang, got: Lang },
    #[error("expected a sentence; free variables remain")]
    NotASentence,
}
