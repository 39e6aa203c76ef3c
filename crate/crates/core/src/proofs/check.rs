//! Line-by-line proof checking.

use crate::error::ProofError;
use crate::proofs::schema::{self, Bindings};
use crate::proofs::{EqRule, GenVar, Hypotheses, Justification, Proof, ProofSystem, Verdict};
use crate::syntax::{Ast, EqTerm, Equation, Formula, UnOp};

/// Find the first schema of the system matching the statement, in the order
/// the presentation lists them, together with discovered bindings.
pub fn match_axiom(
    system: ProofSystem,
    stmt: Ast,
) -> Result<Option<(String, Bindings)>, ProofError> {
    for id in schema::schema_ids(system) {
        if let Some(b) = schema::try_match(system, id, stmt)? {
            return Ok(Some((id.to_string(), b)));
        }
    }
    Ok(None)
}

fn check_lang(system: ProofSystem, line_no: usize, stmt: Ast) -> Result<(), ProofError> {
    match (system.lang(), stmt) {
        (Some(lang), Ast::Formula(f)) if f.lang() == lang => Ok(()),
        (None, Ast::Equation(_)) => Ok(()),
        _ => Err(ProofError::LanguageMismatch { line: line_no }),
    }
}

fn apply_subst(e: Equation, map: &std::collections::BTreeMap<u32, EqTerm>) -> Equation {
    let m: std::collections::HashMap<u32, EqTerm> = map.iter().map(|(k, v)| (*k, *v)).collect();
    Equation::new(e.lhs.substitute(&m), e.rhs.substitute(&m))
}

/// Check a proof against a named hypothesis set. Structural malformations
/// (dangling premise indices, statements of the wrong language) are hard
/// errors; logical failures produce a rejecting verdict with the first
/// failing line.
pub fn check_proof(proof: &Proof, hypotheses: &Hypotheses) -> Result<Verdict, ProofError> {
    if proof.lines.is_empty() {
        return Err(ProofError::Format("empty proof".into()));
    }
    for (pos, line) in proof.lines.iter().enumerate() {
        let no = pos + 1;
        check_lang(proof.system, no, line.statement)?;
        let premise = |ix: usize| -> Result<Ast, ProofError> {
            if ix == 0 || ix > pos {
                return Err(ProofError::MalformedLine {
                    line: no,
                    premise: ix,
                });
            }
            Ok(proof.lines[ix - 1].statement)
        };
        let failure: Option<String> = match &line.justification {
            Justification::Hyp(name) => match hypotheses.get(name) {
                Some(h) if *h == line.statement => None,
                Some(_) => Some(format!("statement differs from hypothesis '{name}'")),
                None => Some(format!("unknown hypothesis '{name}'")),
            },
            Justification::Axiom { schema, bindings } => {
                match schema::instantiate(proof.system, schema, bindings) {
                    Ok(inst) => {
                        if inst != line.statement {
                            Some(format!("statement is not the (({schema})) instance given by the bindings"))
                        } else if matches!(schema.as_str(), "1" | "V1" | "B") {
                            let f = line.statement.formula().expect("checked formula system");
                            if crate::proofs::is_tautology(f)? {
                                None
                            } else {
                                Some("not a propositional tautology".into())
                            }
                        } else {
                            None
                        }
                    }
                    Err(e) => Some(e),
                }
            }
            Justification::Mp { minor, major } => {
                let a = premise(*minor)?;
                let i = premise(*major)?;
                match (a, i, line.statement) {
                    (Ast::Formula(a), Ast::Formula(i), Ast::Formula(c)) => {
                        if i == Formula::implies(a, c) {
                            None
                        } else {
                            Some("major premise is not (minor -> conclusion)".into())
                        }
                    }
                    _ => Some("modus ponens applies to formulas".into()),
                }
            }
            Justification::Gen { var, premise: p } => {
                let prem = premise(*p)?;
                match (proof.system, var, prem, line.statement) {
                    (ProofSystem::Equational, ..) => {
                        Some("no generalization rule in equational logic".into())
                    }
                    (ProofSystem::Modal, GenVar::Modal(i), Ast::Formula(a), Ast::Formula(c)) => {
                        if (1..=3).contains(i) && c == Formula::box_(*i, a) {
                            None
                        } else {
                            Some("conclusion is not the necessitation of the premise".into())
                        }
                    }
                    (ProofSystem::Modal, GenVar::Var(_), ..) => {
                        Some("modal generalization takes a modality index".into())
                    }
                    (_, GenVar::Var(v), Ast::Formula(a), Ast::Formula(c)) => {
                        if c == Formula::forall(v.index(), a) {
                            None
                        } else {
                            Some("conclusion is not the generalization of the premise".into())
                        }
                    }
                    _ => Some("generalization applies to formulas".into()),
                }
            }
            Justification::Eq {
                rule,
                premises,
                subst,
            } => {
                if proof.system != ProofSystem::Equational {
                    Some("equational rules apply only in the equational system".into())
                } else if premises.len() != rule.premise_count() {
                    Some(format!(
                        "rule {} takes {} premises",
                        rule.tag(),
                        rule.premise_count()
                    ))
                } else {
                    let stmt = line.statement.equation().expect("checked equation system");
                    let mut prems = Vec::new();
                    for &ix in premises {
                        match premise(ix)? {
                            Ast::Equation(e) => prems.push(e),
                            _ => unreachable!("language checked"),
                        }
                    }
                    check_eq_rule(*rule, &prems, subst.as_ref(), stmt)
                }
            }
        };
        if let Some(reason) = failure {
            return Ok(Verdict::reject(no, reason));
        }
    }
    Ok(Verdict::accept())
}

fn check_eq_rule(
    rule: EqRule,
    prems: &[Equation],
    subst: Option<&std::collections::BTreeMap<u32, EqTerm>>,
    stmt: Equation,
) -> Option<String> {
    let cong1 = |op: UnOp, p: Equation, stmt: Equation| -> Option<String> {
        if stmt.lhs == EqTerm::apply(op, p.lhs) && stmt.rhs == EqTerm::apply(op, p.rhs) {
            None
        } else {
            Some(format!("not the {}-congruence of the premise", op.name()))
        }
    };
    match rule {
        EqRule::Refl => {
            if stmt.lhs == stmt.rhs {
                None
            } else {
                Some("sides of a reflexivity line must be identical".into())
            }
        }
        EqRule::Sym => {
            let p = prems[0];
            if stmt.lhs == p.rhs && stmt.rhs == p.lhs {
                None
            } else {
                Some("not the symmetric form of the premise".into())
            }
        }
        EqRule::Trans => {
            let (p, q) = (prems[0], prems[1]);
            if p.rhs == q.lhs && stmt.lhs == p.lhs && stmt.rhs == q.rhs {
                None
            } else {
                Some("premises do not chain to the statement".into())
            }
        }
        EqRule::CongPlus => {
            let (p, q) = (prems[0], prems[1]);
            if stmt.lhs == EqTerm::plus(p.lhs, q.lhs) && stmt.rhs == EqTerm::plus(p.rhs, q.rhs) {
                None
            } else {
                Some("not the +-congruence of the premises".into())
            }
        }
        EqRule::CongMinus => cong1(UnOp::Minus, prems[0], stmt),
        EqRule::CongF => cong1(UnOp::F, prems[0], stmt),
        EqRule::CongG => cong1(UnOp::G, prems[0], stmt),
        EqRule::CongH => cong1(UnOp::H, prems[0], stmt),
        EqRule::Invariance => {
            let map = match subst {
                Some(m) => m,
                None => return Some("invariance requires a substitution".into()),
            };
            if apply_subst(prems[0], map) == stmt {
                None
            } else {
                Some("statement is not the substituted premise".into())
            }
        }
    }
}

